//! Pontrjagin forms and Pontrjagin-Chern scalars of curvature tensors.
//!
//! The `k`-th Pontrjagin form is
//!
//! ```text
//! P_k(R) = Alt(R^k ∘ R^k) / ((k!)² (2π)^{2k})
//! ```
//!
//! and in dimension `n = 4k` the Pontrjagin-Chern scalar is
//! `p_k(R) = ⟨R^k ∘ R^k, ω_g⟩ / ((k!)² (2π)^{2k})`. Several independent routes
//! are provided so that they can be checked against each other exactly:
//! full contraction, a sum over ordered multi-indices, and the classical
//! Chern-Weil sum `Σ_I Ω_I ∧ Ω_I`.
//!
//! Powers of π are never evaluated: [`PiScalar`] and [`PiForm`] carry them as
//! integer exponents.
//!
//! With determinant-convention wedges, the top form is
//! `P_k = p_k / C(4k, 2k) · e_{1…n}`; the scalar is recovered from the form by
//! pairing it, viewed as a `(2k, 2k)` double form, with `ω_g`
//! ([`PiForm::volume_pairing`]).

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::curvature::CurvatureTensor;
use crate::double::DoubleForm;
use crate::error::{Error, Result};
use crate::exterior::{Form, Orientation};
use crate::index::MultiIndex;
use crate::rational::{binomial, factorial, factorial_q, int, parse, Rational};

/// An exact number `coeff · π^pi_pow`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiScalar {
    coeff: Rational,
    pi_pow: i32,
}

impl PiScalar {
    /// Zero is normalized to `π^0`.
    pub fn new(coeff: Rational, pi_pow: i32) -> Self {
        let pi_pow = if coeff.is_zero() { 0 } else { pi_pow };
        PiScalar { coeff, pi_pow }
    }

    pub fn rational(coeff: Rational) -> Self {
        PiScalar::new(coeff, 0)
    }

    pub fn zero() -> Self {
        PiScalar::new(Rational::zero(), 0)
    }

    pub fn one() -> Self {
        PiScalar::new(Rational::one(), 0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_pow(&self) -> i32 {
        self.pi_pow
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn abs(&self) -> PiScalar {
        PiScalar::new(self.coeff.abs(), self.pi_pow)
    }

    /// Sum; defined when the π powers agree or one side is zero.
    pub fn checked_add(&self, other: &PiScalar) -> Result<PiScalar> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_pow != other.pi_pow {
            return Err(Error::PiPowerMismatch(self.pi_pow, other.pi_pow));
        }
        Ok(PiScalar::new(&self.coeff + &other.coeff, self.pi_pow))
    }

    /// Order comparison, exact because π > 0 and both sides carry the same power of it.
    pub fn checked_cmp(&self, other: &PiScalar) -> Result<Ordering> {
        if self.is_zero() || other.is_zero() || self.pi_pow == other.pi_pow {
            Ok(self.coeff.cmp(&other.coeff))
        } else {
            Err(Error::PiPowerMismatch(self.pi_pow, other.pi_pow))
        }
    }

    /// The integer value, when the π power is zero and the coefficient integral.
    pub fn as_integer(&self) -> Option<num::BigInt> {
        (self.pi_pow == 0 && self.coeff.is_integer()).then(|| self.coeff.to_integer())
    }
}

impl Mul for &PiScalar {
    type Output = PiScalar;

    fn mul(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(&self.coeff * &rhs.coeff, self.pi_pow + rhs.pi_pow)
    }
}

/// `8/3*pi^2`, `-1*pi`, `2*pi`, `1/4*pi^-2`, `5`.
impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}*pi", self.coeff),
            e => write!(f, "{}*pi^{e}", self.coeff),
        }
    }
}

/// Parses `RATIONAL`, `RATIONAL*pi`, `RATIONAL*pi^INT`, `pi^INT` and `-pi^INT`.
impl FromStr for PiScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<PiScalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational multiple of a power of pi: {s:?}"));
        let Some((head, tail)) = s.split_once("pi") else {
            return Ok(PiScalar::rational(parse(s)?));
        };
        let head = head.trim();
        let coeff = match head.strip_suffix('*').map(str::trim) {
            Some(c) => parse(c)?,
            None if head.is_empty() => Rational::one(),
            None if head == "-" => -Rational::one(),
            None => return Err(bad()),
        };
        let tail = tail.trim();
        let pi_pow = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('^')
                .and_then(|e| e.trim().parse::<i32>().ok())
                .ok_or_else(bad)?
        };
        Ok(PiScalar::new(coeff, pi_pow))
    }
}

/// A form whose coefficients all carry the same power of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiForm {
    form: Form,
    pi_pow: i32,
}

impl PiForm {
    pub fn new(form: Form, pi_pow: i32) -> Self {
        let pi_pow = if form.is_zero() { 0 } else { pi_pow };
        PiForm { form, pi_pow }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn pi_pow(&self) -> i32 {
        self.pi_pow
    }

    pub fn degree(&self) -> usize {
        self.form.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn coeff(&self, index: MultiIndex) -> PiScalar {
        PiScalar::new(self.form.coeff(index), self.pi_pow)
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, PiScalar)> + '_ {
        self.form.terms().map(|(i, c)| (i, PiScalar::new(c.clone(), self.pi_pow)))
    }

    pub fn scale(&self, c: &PiScalar) -> PiForm {
        PiForm::new(self.form.scale(c.coeff()), self.pi_pow + c.pi_pow())
    }

    pub fn wedge(&self, other: &PiForm) -> Result<PiForm> {
        Ok(PiForm::new(self.form.wedge(&other.form)?, self.pi_pow + other.pi_pow))
    }

    /// Coefficient of `e_{1…n}`; requires a top-degree form.
    pub fn volume_coefficient(&self) -> Result<PiScalar> {
        let n = self.form.dim();
        if self.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: self.degree(),
            });
        }
        Ok(self.coeff(MultiIndex::full(n)))
    }

    /// `⟨P, ω_g⟩` with `P` embedded as an `(n/2, n/2)` double form; requires a
    /// top-degree form in even dimension. Equals `C(n, n/2)` times the volume coefficient.
    pub fn volume_pairing(&self, orientation: Orientation) -> Result<PiScalar> {
        let n = self.form.dim();
        self.volume_coefficient()?;
        if !n.is_multiple_of(2) {
            return Err(Error::DegreeBound(format!("volume pairing needs even n, got {n}")));
        }
        let embedded = DoubleForm::embed_form(&self.form, n / 2, n / 2)?;
        let omega = DoubleForm::volume_double_form_oriented(n, n / 2, n / 2, orientation)?;
        Ok(PiScalar::new(embedded.inner(&omega), self.pi_pow))
    }
}

impl fmt::Display for PiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_pow {
            _ if self.is_zero() => f.write_str("0"),
            0 => write!(f, "{}", self.form),
            e => write!(f, "({}) pi^{e}", self.form),
        }
    }
}

/// `1 / ((k!)² 4^k)`, the rational part of `1/((k!)²(2π)^{2k})`.
fn normalization(k: usize) -> Rational {
    let k_fact = factorial(k);
    let four_k = num::BigInt::from(4).pow(k as u32);
    Rational::new(1.into(), &k_fact * &k_fact * four_k)
}

fn check_form_degree(r: &CurvatureTensor, k: usize) -> Result<()> {
    let n = r.dim();
    if 4 * k > n {
        return Err(Error::DegreeBound(format!("Pontrjagin form P_{k} needs 4k <= n = {n}")));
    }
    Ok(())
}

/// `R^k ∘ R^k`, the `(2k, 2k)` double form under every Pontrjagin formula.
pub fn composed_square(r: &CurvatureTensor, k: usize) -> DoubleForm {
    let rk = r.power(k);
    rk.comp_mul(&rk)
}

/// `P_k(R) = Alt(R^k ∘ R^k) / ((k!)² (2π)^{2k})`, for `4k ≤ n`.
pub fn pontrjagin_form(r: &CurvatureTensor, k: usize) -> Result<PiForm> {
    check_form_degree(r, k)?;
    let alt = composed_square(r, k).alt();
    Ok(PiForm::new(alt.scale(&normalization(k)), -2 * k as i32))
}

/// `p_k(R) = ⟨R^k ∘ R^k, ω_g⟩ / ((k!)² (2π)^{2k})`, for `n = 4k`.
pub fn pontrjagin_scalar(r: &CurvatureTensor, k: usize, orientation: Orientation) -> Result<PiScalar> {
    r.require_middle(k, "Pontrjagin-Chern scalar")?;
    let n = r.dim();
    let omega = DoubleForm::volume_double_form_oriented(n, n / 2, n / 2, orientation)?;
    let pairing = composed_square(r, k).inner(&omega);
    Ok(PiScalar::new(pairing * normalization(k), -2 * k as i32))
}

/// `p_k(R) = c^{2k}(R^k ∘ R^k ∘ ω_g) / ((k!)² (2π)^{2k} (2k)!)`, for `n = 4k`.
pub fn pontrjagin_scalar_by_contraction(
    r: &CurvatureTensor,
    k: usize,
    orientation: Orientation,
) -> Result<PiScalar> {
    r.require_middle(k, "Pontrjagin-Chern scalar")?;
    let n = r.dim();
    let omega = DoubleForm::volume_double_form_oriented(n, n / 2, n / 2, orientation)?;
    let full = composed_square(r, k).comp_mul(&omega).contract_times(2 * k);
    let value = full.as_scalar().expect("(0,0) after a full contraction") / factorial_q(2 * k);
    Ok(PiScalar::new(value * normalization(k), -2 * k as i32))
}

/// `Σ_{i_1,…,i_m} ψ(e_{i_1}∧…∧e_{i_m}, ★(e_{i_1}∧…∧e_{i_m}))` over all ordered
/// tuples, for a `(m, n−m)` double form `ψ` read as a bilinear form.
pub fn ordered_index_sum(psi: &DoubleForm, orientation: Orientation) -> Rational {
    let n = psi.dim();
    let (m, _) = psi.bidegree();
    let mut total = Rational::zero();
    let mut tuple = vec![1usize; m];
    if m > n {
        return total;
    }
    loop {
        // e_tuple = ±e_set and ★ is linear, so the two signs cancel.
        if let Some((set, _)) = MultiIndex::from_unordered(&tuple).expect("indices in range") {
            let star = Form::basis(n, set).hodge_star_oriented(orientation);
            for (j, c) in star.terms() {
                total += psi.coeff(set, j) * c;
            }
        }
        // odometer over {1..n}^m
        let mut pos = m;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            if tuple[pos] < n {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
        }
    }
}

/// `p_k` through the ordered multi-index sum of `R^k ∘ R^k` against `★`.
pub fn pontrjagin_scalar_by_index_sum(
    r: &CurvatureTensor,
    k: usize,
    orientation: Orientation,
) -> Result<PiScalar> {
    r.require_middle(k, "Pontrjagin-Chern scalar")?;
    let sum = ordered_index_sum(&composed_square(r, k), orientation) / factorial_q(2 * k);
    Ok(PiScalar::new(sum * normalization(k), -2 * k as i32))
}

/// The curvature 2k-forms `Ω_I = 2^k Σ_J R^k(e_J, e_I) e_J`, one per increasing `I` with `|I| = 2k`.
pub fn chern_curvature_forms(r: &CurvatureTensor, k: usize) -> Vec<(MultiIndex, Form)> {
    let n = r.dim();
    let rk = r.power(k);
    let two_k = int(1 << k);
    MultiIndex::subsets(n, 2 * k)
        .map(|i| {
            let terms = rk
                .terms()
                .filter(|(_, col, _)| *col == i)
                .map(|(row, _, c)| (row, c * &two_k));
            (i, Form::from_terms(n, 2 * k, terms).expect("degree 2k"))
        })
        .collect()
}

/// Chern-Weil route: `[(2k)!]² / ((4k)! (2π)^{2k} (2^k k!)²) · Σ_I Ω_I ∧ Ω_I`.
pub fn chern_form_oracle(r: &CurvatureTensor, k: usize) -> Result<PiForm> {
    check_form_degree(r, k)?;
    let n = r.dim();
    let mut total = Form::zero(n, 4 * k);
    for (_, omega) in chern_curvature_forms(r, k) {
        if !omega.is_zero() {
            total = &total + &omega.wedge(&omega)?;
        }
    }
    let two_k_fact = factorial(2 * k);
    let scale = Rational::new(
        &two_k_fact * &two_k_fact,
        factorial(4 * k) * num::BigInt::from(4).pow(k as u32) * (num::BigInt::from(1u64 << k) * factorial(k)).pow(2),
    );
    Ok(PiForm::new(total.scale(&scale), -2 * k as i32))
}

/// Multiplicities `(k_1, …, k_m)` of a mixed Pontrjagin monomial `P_1^{k_1} ⋯ P_m^{k_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        let p = Partition(counts);
        if p.weight() == 0 {
            return Err(Error::InvalidPartition {
                parts: p.0,
                sum: 0,
                expected: 1,
            });
        }
        Ok(p)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// `k = k_1 + 2 k_2 + … + m k_m`.
    pub fn weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, c)| (i + 1) * c).sum()
    }

    /// Checks `Σ i k_i = k`.
    pub fn check_weight(&self, k: usize) -> Result<()> {
        if self.weight() != k {
            return Err(Error::InvalidPartition {
                parts: self.0.clone(),
                sum: self.weight(),
                expected: k,
            });
        }
        Ok(())
    }

    fn factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().map(|(i, c)| (i + 1, *c)).filter(|(_, c)| *c > 0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated multiplicities, e.g. `0,1`.
    fn from_str(s: &str) -> Result<Partition> {
        let counts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(counts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(4k)! / [(2k)!]² · Π_i ([(2i)!]² / ((i!)² (4i)!))^{k_i}`, the rational part of the
/// mixed coefficient (the full coefficient also carries `(2π)^{−2k}`).
pub fn mixed_coefficient(partition: &Partition) -> Rational {
    let k = partition.weight();
    let mut c = Rational::new(factorial(4 * k), factorial(2 * k).pow(2));
    for (i, ki) in partition.factors() {
        let f = Rational::new(factorial(2 * i).pow(2), factorial(i).pow(2) * factorial(4 * i));
        c *= f.pow(ki as i32);
    }
    c
}

/// The coefficient exactly as printed in the source statement of the mixed
/// formula, `(4k)!/[(2k)!]² · Π_i [(2i)!]² / ((i!)^{2k_i} (4i)!)`; it differs from
/// [`mixed_coefficient`] whenever some `k_i > 1` or a factor with `i > 1` appears.
pub fn printed_mixed_coefficient(partition: &Partition) -> Rational {
    let k = partition.weight();
    let mut c = Rational::new(factorial(4 * k), factorial(2 * k).pow(2));
    for (i, ki) in partition.factors() {
        c *= Rational::new(
            factorial(2 * i).pow(2),
            factorial(i).pow(2 * ki as u32) * factorial(4 * i),
        );
    }
    c
}

/// `Alt[(R∘R)^{k_1} (R²∘R²)^{k_2} ⋯]` without any coefficient.
pub fn mixed_alt(r: &CurvatureTensor, partition: &Partition) -> Result<Form> {
    let n = r.dim();
    let k = partition.weight();
    if 4 * k > n {
        return Err(Error::DegreeBound(format!("mixed Pontrjagin form of weight {k} needs 4k <= n = {n}")));
    }
    let mut product = DoubleForm::scalar(n, Rational::one());
    for (i, ki) in partition.factors() {
        let sq = composed_square(r, i);
        for _ in 0..ki {
            product = &product * &sq;
        }
    }
    Ok(product.alt())
}

/// `P_1^{k_1} ⋯ P_m^{k_m}` by the closed formula with coefficient `c`.
pub fn mixed_pontrjagin_form_with(r: &CurvatureTensor, partition: &Partition, c: &Rational) -> Result<PiForm> {
    let k = partition.weight();
    let alt = mixed_alt(r, partition)?;
    let c = c * Rational::new(1.into(), num::BigInt::from(4).pow(k as u32));
    Ok(PiForm::new(alt.scale(&c), -2 * k as i32))
}

/// `P_1^{k_1} ⋯ P_m^{k_m}` by the closed formula.
pub fn mixed_pontrjagin_form(r: &CurvatureTensor, partition: &Partition) -> Result<PiForm> {
    mixed_pontrjagin_form_with(r, partition, &mixed_coefficient(partition))
}

/// `P_1^{k_1} ⋯ P_m^{k_m}` as the wedge product of the individual Pontrjagin forms.
pub fn mixed_pontrjagin_by_wedge(r: &CurvatureTensor, partition: &Partition) -> Result<PiForm> {
    let n = r.dim();
    let k = partition.weight();
    if 4 * k > n {
        return Err(Error::DegreeBound(format!("mixed Pontrjagin form of weight {k} needs 4k <= n = {n}")));
    }
    let mut out = PiForm::new(Form::scalar(n, Rational::one()), 0);
    for (i, ki) in partition.factors() {
        let pi = pontrjagin_form(r, i)?;
        for _ in 0..ki {
            out = out.wedge(&pi)?;
        }
    }
    Ok(out)
}

/// Pointwise density of the mixed Pontrjagin number at `n = 4k`:
/// `Π_i C(4i, 2i)^{k_i}` times the volume coefficient of the mixed form, so that a
/// single factor reproduces `p_k`.
pub fn mixed_number_density(r: &CurvatureTensor, partition: &Partition) -> Result<PiScalar> {
    r.require_middle(partition.weight(), "mixed Pontrjagin number")?;
    let form = mixed_pontrjagin_form(r, partition)?;
    let mut c = Rational::one();
    for (i, ki) in partition.factors() {
        c *= Rational::from_integer(binomial(4 * i, 2 * i).pow(ki as u32));
    }
    Ok(&form.volume_coefficient()? * &PiScalar::rational(c))
}

/// Both sides of `|p_k(R)| ≤ ‖R^k‖² / ((k!)² (2π)^{2k})`, with the data needed
/// for the equality clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThorpeBound {
    pub k: usize,
    pub p_k: PiScalar,
    pub bound: PiScalar,
    pub equality: bool,
    /// `𝔖R = 0`.
    pub bianchi: bool,
    /// `c R^k`.
    pub contraction: DoubleForm,
}

impl ThorpeBound {
    pub fn inequality_holds(&self) -> bool {
        self.p_k.abs().checked_cmp(&self.bound).map(|o| o != Ordering::Greater).unwrap_or(false)
    }

    /// Equality together with `𝔖R = 0` forces `c R^k = 0`.
    pub fn equality_clause_holds(&self) -> bool {
        !(self.equality && self.bianchi) || self.contraction.is_zero()
    }
}

/// Evaluates the algebraic Thorpe inequality at `n = 4k`.
pub fn thorpe_bound(r: &CurvatureTensor, k: usize) -> Result<ThorpeBound> {
    let p_k = pontrjagin_scalar(r, k, Orientation::Standard)?;
    let rk = r.power(k);
    let bound = PiScalar::new(rk.norm_sq() * normalization(k), -2 * k as i32);
    let equality = p_k.abs() == bound;
    Ok(ThorpeBound {
        k,
        p_k,
        bound,
        equality,
        bianchi: r.form().bianchi_sum().is_zero(),
        contraction: rk.contract(),
    })
}

/// `‖W^k‖² / ((k!)² (2π)^{2k})`, the Weyl-part bound on `|p_k|`.
pub fn weyl_bound(r: &CurvatureTensor, k: usize) -> Result<PiScalar> {
    r.require_middle(k, "Weyl bound")?;
    let w = r.weyl()?;
    Ok(PiScalar::new(w.power(k).norm_sq() * normalization(k), -2 * k as i32))
}

/// `P_k(R) = P_k(W)`, exactly.
pub fn weyl_invariance_check(r: &CurvatureTensor, k: usize) -> Result<bool> {
    let w = r.weyl()?;
    Ok(pontrjagin_form(r, k)? == pontrjagin_form(&w, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::ModelSpec;
    use crate::rational::ratio;

    fn mi(v: &[usize]) -> MultiIndex {
        MultiIndex::from_indices(v).unwrap()
    }

    fn self_dual_example() -> CurvatureTensor {
        let a = &Form::basis(4, mi(&[1, 2])) + &Form::basis(4, mi(&[3, 4]));
        CurvatureTensor::new_unchecked(DoubleForm::tensor(&a, &a).unwrap())
    }

    #[test]
    fn pi_scalar_arithmetic_and_text() {
        let a: PiScalar = "8/3*pi^2".parse().unwrap();
        assert_eq!(a, PiScalar::new(ratio(8, 3), 2));
        assert_eq!(a.to_string(), "8/3*pi^2");
        assert_eq!("-pi".parse::<PiScalar>().unwrap(), PiScalar::new(int(-1), 1));
        assert_eq!("pi^-2".parse::<PiScalar>().unwrap(), PiScalar::new(int(1), -2));
        assert_eq!("3".parse::<PiScalar>().unwrap(), PiScalar::rational(int(3)));
        assert_eq!("0*pi^4".parse::<PiScalar>().unwrap().pi_pow(), 0);
        assert!("3*pie".parse::<PiScalar>().is_err());
        assert!("x*pi".parse::<PiScalar>().is_err());
        let b = PiScalar::new(int(3), -2);
        assert_eq!(&a * &b, PiScalar::new(int(8), 0));
        assert!(a.checked_add(&b).is_err());
        assert_eq!(a.checked_add(&PiScalar::zero()).unwrap(), a);
        for s in ["8/3*pi^2", "-1*pi", "2*pi", "1/4*pi^-2", "5", "0"] {
            assert_eq!(s.parse::<PiScalar>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn sphere_has_no_pontrjagin_form() {
        let s = ModelSpec::ConstantCurvature { n: 4, kappa: int(1) }.build().unwrap();
        assert!(pontrjagin_form(&s, 1).unwrap().is_zero());
        assert!(pontrjagin_scalar(&s, 1, Orientation::Standard).unwrap().is_zero());
        let p = ModelSpec::ProductOfSpaceForms {
            dims: vec![2, 2],
            kappas: vec![int(1), int(1)],
        }
        .build()
        .unwrap();
        assert!(pontrjagin_form(&p, 1).unwrap().is_zero());
    }

    #[test]
    fn self_dual_example_scalar() {
        let r = self_dual_example();
        let p = pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap();
        assert_eq!(p, PiScalar::new(int(1), -2));
        assert_eq!(pontrjagin_scalar_by_contraction(&r, 1, Orientation::Standard).unwrap(), p);
        assert_eq!(pontrjagin_scalar_by_index_sum(&r, 1, Orientation::Standard).unwrap(), p);
        let flipped = pontrjagin_scalar(&r, 1, Orientation::Reversed).unwrap();
        assert_eq!(flipped, PiScalar::new(int(-1), -2));
    }

    #[test]
    fn fubini_study_plane() {
        let spec = ModelSpec::FubiniStudy { m: 2, c: int(4) };
        let r = spec.build().unwrap();
        let form = pontrjagin_form(&r, 1).unwrap();
        let vc = form.volume_coefficient().unwrap();
        assert!(vc.coeff().is_positive());
        assert_eq!(form, chern_form_oracle(&r, 1).unwrap());
        let p1 = pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap();
        assert_eq!(form.volume_pairing(Orientation::Standard).unwrap(), p1);
        let number = &p1 * &spec.reference_volume().unwrap();
        assert_eq!(number, PiScalar::rational(int(3)));
    }

    #[test]
    fn zero_tensor_gives_zero_everywhere() {
        let r = CurvatureTensor::validate(DoubleForm::zero(4, 2, 2)).unwrap();
        assert!(pontrjagin_form(&r, 1).unwrap().is_zero());
        assert!(chern_form_oracle(&r, 1).unwrap().is_zero());
        assert!(pontrjagin_scalar_by_contraction(&r, 1, Orientation::Standard).unwrap().is_zero());
        let tb = thorpe_bound(&r, 1).unwrap();
        assert!(tb.equality && tb.contraction.is_zero());
    }

    #[test]
    fn partitions() {
        let p: Partition = "0,1".parse().unwrap();
        assert_eq!(p.weight(), 2);
        assert!(p.check_weight(3).is_err());
        assert!("0,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p.to_string(), "(0,1)");
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(mixed_coefficient(&one), int(1));
        assert_eq!(printed_mixed_coefficient(&one), int(1));
    }

    #[test]
    fn mixed_single_factor_is_p1() {
        let r = ModelSpec::RandomAlgebraic { n: 4, seed: 11 }.build().unwrap();
        let one = Partition::new(vec![1]).unwrap();
        let p1 = pontrjagin_form(&r, 1).unwrap();
        assert_eq!(mixed_pontrjagin_form(&r, &one).unwrap(), p1);
        assert_eq!(mixed_pontrjagin_by_wedge(&r, &one).unwrap(), p1);
        assert_eq!(
            mixed_number_density(&r, &one).unwrap(),
            pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap()
        );
    }

    #[test]
    fn thorpe_bound_examples() {
        let s = ModelSpec::ConstantCurvature { n: 4, kappa: int(1) }.build().unwrap();
        let tb = thorpe_bound(&s, 1).unwrap();
        assert!(tb.p_k.is_zero() && !tb.equality && tb.inequality_holds());
        assert_eq!(tb.bound, PiScalar::new(ratio(6, 4), -2));
        let sd = thorpe_bound(&self_dual_example(), 1).unwrap();
        assert!(sd.equality && !sd.bianchi);
        assert_eq!(sd.contraction, DoubleForm::metric(4));
    }
}
