//! Algebraic curvature tensors and their classification.
//!
//! A curvature tensor is a symmetric `(2,2)` double form `R` satisfying the
//! first Bianchi identity `𝔖R = 0`. Its Ricci tensor is `cR`, its scalar
//! curvature `c²R`, and it splits as `R = W + g·s` into the trace-free Weyl part
//! and the Schouten tensor.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::double::DoubleForm;
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::linalg::{basis_keys, operator_rows, SparseSystem};
use crate::rational::{factorial_q, int, Rational};

/// A validated algebraic curvature tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor(DoubleForm);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylDecomposition {
    pub weyl: DoubleForm,
    pub schouten: DoubleForm,
    pub ricci: DoubleForm,
    pub scalar: Rational,
}

/// `h_{4k} = ★R^{2k}`: a number when `n = 4k`, otherwise a double form of
/// bidegree `(n − 4k, n − 4k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaussBonnet {
    Scalar(Rational),
    Form(DoubleForm),
}

impl GaussBonnet {
    pub fn as_scalar(&self) -> Option<&Rational> {
        match self {
            GaussBonnet::Scalar(v) => Some(v),
            GaussBonnet::Form(_) => None,
        }
    }
}

/// Outcome of fitting `cR^q = λ g^{2q−1}`.
///
/// `lambda` is the orthogonal-projection fit `⟨cR^q, g^{2q−1}⟩ / ‖g^{2q−1}‖²`;
/// the condition holds iff the residual `cR^q − λ g^{2q−1}` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperEinstein {
    pub q: usize,
    pub holds: bool,
    pub lambda: Rational,
    pub residual: DoubleForm,
}

/// Outcome of the exact solve of `g·H = R^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisibility {
    pub k: usize,
    /// A symmetric solution `H`, when one exists.
    pub witness: Option<DoubleForm>,
    /// Whether the witness also satisfies `𝔖H = 0`.
    pub witness_bianchi: Option<bool>,
}

impl Divisibility {
    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub einstein: Option<HyperEinstein>,
    /// Keyed by `q`, for `0 < 2q < n`.
    pub hyper_einstein: BTreeMap<usize, HyperEinstein>,
    /// `(k, ★R^k = R^k)` when `n = 4k`.
    pub thorpe: Option<(usize, bool)>,
    /// Keyed by `k`, for `4k ≤ n`.
    pub conformally_flat: BTreeMap<usize, Divisibility>,
    /// Keyed by `k`, for `2k ≤ n`.
    pub k_flat: BTreeMap<usize, bool>,
    /// Keyed by `k`, for `4k ≤ n`.
    pub gauss_bonnet: BTreeMap<usize, GaussBonnet>,
}

fn degree_bound(msg: String) -> Error {
    Error::DegreeBound(msg)
}

impl CurvatureTensor {
    /// Checks symmetry and the first Bianchi identity.
    pub fn validate(r: DoubleForm) -> Result<Self> {
        if r.bidegree() != (2, 2) {
            return Err(Error::BidegreeMismatch {
                expected: (2, 2),
                found: r.bidegree(),
            });
        }
        if let Some((i, j)) = r.asymmetry_witness() {
            return Err(Error::NotSymmetric { i, j });
        }
        if let Some((i, j, v)) = r.bianchi_sum().terms().next() {
            return Err(Error::BianchiViolation {
                i,
                j,
                value: v.to_string(),
            });
        }
        Ok(CurvatureTensor(r))
    }

    /// Wraps a `(2,2)` form without checking symmetry or the Bianchi identity.
    /// Meant for algebraic experiments on forms that are deliberately not curvature tensors.
    pub fn new_unchecked(r: DoubleForm) -> Self {
        assert_eq!(r.bidegree(), (2, 2), "curvature tensors have bidegree (2,2)");
        CurvatureTensor(r)
    }

    pub fn form(&self) -> &DoubleForm {
        &self.0
    }

    pub fn into_form(self) -> DoubleForm {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `R^k` under the exterior product.
    pub fn power(&self, k: usize) -> DoubleForm {
        self.0.power(k)
    }

    pub fn ricci(&self) -> DoubleForm {
        self.0.contract()
    }

    pub fn scalar_curvature(&self) -> Rational {
        self.0.contract_times(2).as_scalar().expect("(0,0) after two contractions")
    }

    /// `R = W + g·s` with `s = (ric − scal/(2(n−1)) g)/(n−2)`.
    pub fn weyl_decompose(&self) -> Result<WeylDecomposition> {
        let n = self.dim();
        if n < 3 {
            return Err(Error::UnsupportedDimension(n));
        }
        let ricci = self.ricci();
        let scalar = ricci.contract().as_scalar().expect("(0,0)");
        let g = DoubleForm::metric(n);
        let trace_part = g.scale(&(&scalar / int(2 * (n as i64 - 1))));
        let schouten = (&ricci - &trace_part).scale(&Rational::new(1.into(), (n - 2).into()));
        let weyl = &self.0 - &(&g * &schouten);
        Ok(WeylDecomposition {
            weyl,
            schouten,
            ricci,
            scalar,
        })
    }

    /// The Weyl part as a curvature tensor in its own right.
    pub fn weyl(&self) -> Result<CurvatureTensor> {
        Ok(CurvatureTensor(self.weyl_decompose()?.weyl))
    }

    /// `h_{4k} = ★(R^{2k})`, for `4k ≤ n`.
    pub fn gauss_bonnet(&self, k: usize) -> Result<GaussBonnet> {
        let n = self.dim();
        if k == 0 || 4 * k > n {
            return Err(degree_bound(format!("Gauss-Bonnet curvature h_{} needs 0 < 4k <= n = {n}", 4 * k)));
        }
        let star = self.power(2 * k).double_hodge_star();
        Ok(match star.as_scalar() {
            Some(v) => GaussBonnet::Scalar(v),
            None => GaussBonnet::Form(star),
        })
    }

    /// `h_{4k} = ⟨★R^k, R^k⟩`, the second formula, for `n = 4k`.
    pub fn gauss_bonnet_by_pairing(&self, k: usize) -> Result<Rational> {
        self.require_middle(k, "Gauss-Bonnet pairing")?;
        let rk = self.power(k);
        Ok(rk.double_hodge_star().inner(&rk))
    }

    pub(crate) fn require_middle(&self, k: usize, what: &str) -> Result<()> {
        let n = self.dim();
        if k == 0 || n != 4 * k {
            return Err(degree_bound(format!("{what} needs n = 4k with k > 0, got n = {n}, k = {k}")));
        }
        Ok(())
    }

    /// Thorpe condition `★R^k = R^k`, for `n = 4k`.
    pub fn is_thorpe(&self, k: usize) -> Result<bool> {
        self.require_middle(k, "Thorpe condition")?;
        let rk = self.power(k);
        Ok(rk.double_hodge_star() == rk)
    }

    /// Hyper `(2q)`-Einstein condition `cR^q = λ g^{2q−1}`, for `0 < 2q < n`.
    pub fn is_hyper_einstein(&self, q: usize) -> Result<HyperEinstein> {
        let n = self.dim();
        if q == 0 || 2 * q >= n {
            return Err(degree_bound(format!("hyper-Einstein condition needs 0 < 2q < n = {n}, got q = {q}")));
        }
        let crq = self.power(q).contract();
        let gp = DoubleForm::metric(n).power(2 * q - 1);
        let lambda = crq.inner(&gp) / gp.norm_sq();
        let residual = &crq - &gp.scale(&lambda);
        Ok(HyperEinstein {
            q,
            holds: residual.is_zero(),
            lambda,
            residual,
        })
    }

    /// Einstein condition `cR = λ g`.
    pub fn is_einstein(&self) -> Result<HyperEinstein> {
        self.is_hyper_einstein(1)
    }

    /// Decides whether `R^k = g·H` for some `(2k−1, 2k−1)` double form `H` by an exact linear solve.
    pub fn is_k_conformally_flat(&self, k: usize) -> Result<Divisibility> {
        let n = self.dim();
        if k == 0 || 4 * k > n {
            return Err(degree_bound(format!("k-conformal flatness needs 0 < 4k <= n = {n}, got k = {k}")));
        }
        let target = self.power(k);
        let witness = divide_by_metric(&target).map(|h| {
            // g· commutes with transposition, so the symmetric part also solves.
            (&h + &h.transpose()).scale(&Rational::new(1.into(), 2.into()))
        });
        let witness_bianchi = witness.as_ref().map(|h| h.bianchi_sum().is_zero());
        Ok(Divisibility {
            k,
            witness,
            witness_bianchi,
        })
    }

    /// `R^k = 0`, for `2k ≤ n`.
    pub fn is_k_flat(&self, k: usize) -> Result<bool> {
        let n = self.dim();
        if k == 0 || 2 * k > n {
            return Err(degree_bound(format!("k-flatness needs 0 < 2k <= n = {n}, got k = {k}")));
        }
        Ok(self.power(k).is_zero())
    }

    /// Every predicate at every admissible degree.
    pub fn classify(&self) -> ClassificationReport {
        let n = self.dim();
        let hyper_einstein: BTreeMap<_, _> = (1..)
            .take_while(|q| 2 * q < n)
            .map(|q| (q, self.is_hyper_einstein(q).expect("in range")))
            .collect();
        let middle = (1..).take_while(|k| 4 * k <= n);
        ClassificationReport {
            n,
            einstein: hyper_einstein.get(&1).cloned(),
            thorpe: (n > 0 && n.is_multiple_of(4)).then(|| (n / 4, self.is_thorpe(n / 4).expect("n = 4k"))),
            conformally_flat: middle
                .clone()
                .map(|k| (k, self.is_k_conformally_flat(k).expect("in range")))
                .collect(),
            k_flat: (1..)
                .take_while(|k| 2 * k <= n)
                .map(|k| (k, self.is_k_flat(k).expect("in range")))
                .collect(),
            gauss_bonnet: middle.map(|k| (k, self.gauss_bonnet(k).expect("in range"))).collect(),
            hyper_einstein,
        }
    }
}

/// Solves `g·H = ω` exactly; `None` when `ω` is not divisible by the metric.
pub fn divide_by_metric(omega: &DoubleForm) -> Option<DoubleForm> {
    let n = omega.dim();
    let (p, q) = omega.bidegree();
    if p == 0 || q == 0 {
        return omega.is_zero().then(|| DoubleForm::zero(n, p.saturating_sub(1), q.saturating_sub(1)));
    }
    let columns = basis_keys(n, p - 1, q - 1);
    let rows = operator_rows(n, &columns, DoubleForm::mul_metric);
    if omega.terms().any(|(i, j, _)| !rows.contains_key(&(i, j))) {
        return None;
    }
    let mut system = SparseSystem::new(columns.len());
    for ((i, j), row) in rows {
        system.push_row(row, omega.coeff(i, j));
    }
    let x = system.solve()?;
    let terms = columns.into_iter().zip(x).filter(|(_, v)| !v.is_zero());
    Some(DoubleForm::from_terms(n, p - 1, q - 1, terms).expect("in range"))
}

/// The metric power `g^k / k!`, the identity for the composition product on `(k, ·)` forms.
pub fn normalized_metric_power(n: usize, k: usize) -> DoubleForm {
    DoubleForm::metric(n).power(k).scale(&(Rational::one() / factorial_q(k)))
}

/// Block metric `Σ_{i ∈ block} e_i ⊗ e_i`.
pub fn block_metric(n: usize, block: MultiIndex) -> DoubleForm {
    DoubleForm::from_terms(
        n,
        1,
        1,
        block
            .indices()
            .map(|i| ((MultiIndex::singleton(i), MultiIndex::singleton(i)), Rational::one())),
    )
    .expect("block inside the ambient space")
}
