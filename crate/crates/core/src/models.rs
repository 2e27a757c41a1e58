//! Standard curvature tensors used as fixtures.
//!
//! All models live in an orthonormal frame at a point:
//!
//! * constant curvature `κ`: `R = κ g²/2`;
//! * a product of space forms: `Σ κ_i g_i²/2` with `g_i` the metric of the
//!   `i`-th block of consecutive coordinates;
//! * complex projective space with the Fubini-Study metric of holomorphic
//!   sectional curvature `c`, in a unitary frame with `J e_{2a−1} = e_{2a}`:
//!   `R(a,b,c,d) = c/4 (δ_ac δ_bd − δ_ad δ_bc + J_ac J_bd − J_ad J_bc + 2 J_ab J_cd)`;
//! * a conformally flat tensor `g·h` for a symmetric `(1,1)` form `h`;
//! * a seeded random algebraic curvature tensor.

use std::fmt;

use num::{One, Signed, Zero};

use crate::curvature::{block_metric, CurvatureTensor};
use crate::double::DoubleForm;
use crate::error::{Error, Result};
use crate::index::{MultiIndex, MAX_DIM};
use crate::pontrjagin::PiScalar;
use crate::random;
use crate::rational::{factorial, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec {
    ConstantCurvature { n: usize, kappa: Rational },
    ProductOfSpaceForms { dims: Vec<usize>, kappas: Vec<Rational> },
    FubiniStudy { m: usize, c: Rational },
    ConformallyFlat { n: usize, h: DoubleForm },
    RandomAlgebraic { n: usize, seed: u64 },
}

/// Catalog entry: model name and a one-line description.
pub const CATALOG: &[(&str, &str)] = &[
    ("constant_curvature", "space form of curvature kappa: R = kappa g^2/2 (parameters: n, kappa)"),
    (
        "product_of_space_forms",
        "Riemannian product of space forms on consecutive coordinate blocks (parameters: dims, kappas)",
    ),
    (
        "fubini_study",
        "complex projective m-space, holomorphic sectional curvature c, real dimension 2m (parameters: m, c = 4)",
    ),
    ("conformally_flat", "R = g h for a symmetric (1,1) form h (parameters: n, h)"),
    ("random_algebraic", "seeded random algebraic curvature tensor (parameters: n, seed)"),
];

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedModel(msg.into())
}

fn check_n(n: usize) -> Result<()> {
    if (2..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(malformed(format!("dimension must lie in 2..={MAX_DIM}, got {n}")))
    }
}

fn j_entry(a: usize, b: usize) -> i64 {
    // J e_{2t-1} = e_{2t}, so <e_{2t}, J e_{2t-1}> = 1 and <e_{2t-1}, J e_{2t}> = -1.
    if a.is_multiple_of(2) && b + 1 == a {
        1
    } else if a % 2 == 1 && a + 1 == b {
        -1
    } else {
        0
    }
}

fn fubini_study(m: usize, c: &Rational) -> DoubleForm {
    let n = 2 * m;
    let d = |a: usize, b: usize| i64::from(a == b);
    let j = j_entry;
    let pairs: Vec<MultiIndex> = MultiIndex::subsets(n, 2).collect();
    let quarter = c / int(4);
    let mut terms = vec![];
    for ab in &pairs {
        let [a, b]: [usize; 2] = ab.indices().collect::<Vec<_>>().try_into().expect("pair");
        for cd in &pairs {
            let [x, y]: [usize; 2] = cd.indices().collect::<Vec<_>>().try_into().expect("pair");
            let v = d(a, x) * d(b, y) - d(a, y) * d(b, x) + j(a, x) * j(b, y) - j(a, y) * j(b, x)
                + 2 * j(a, b) * j(x, y);
            if v != 0 {
                terms.push(((*ab, *cd), int(v) * &quarter));
            }
        }
    }
    DoubleForm::from_terms(n, 2, 2, terms).expect("pairs in range")
}

/// Volume of the unit-curvature round sphere `S^{2m}`: `2^{m+1} π^m / (2m−1)!!`.
fn even_sphere_volume(m: usize) -> PiScalar {
    let double_factorial = (1..=m).fold(num::BigInt::one(), |acc, t| acc * num::BigInt::from(2 * t - 1));
    let coeff = Rational::new(num::BigInt::from(2).pow(m as u32 + 1), double_factorial);
    PiScalar::new(coeff, m as i32)
}

impl ModelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::ConstantCurvature { .. } => "constant_curvature",
            ModelSpec::ProductOfSpaceForms { .. } => "product_of_space_forms",
            ModelSpec::FubiniStudy { .. } => "fubini_study",
            ModelSpec::ConformallyFlat { .. } => "conformally_flat",
            ModelSpec::RandomAlgebraic { .. } => "random_algebraic",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ModelSpec::ConstantCurvature { n, .. }
            | ModelSpec::ConformallyFlat { n, .. }
            | ModelSpec::RandomAlgebraic { n, .. } => *n,
            ModelSpec::ProductOfSpaceForms { dims, .. } => dims.iter().sum(),
            ModelSpec::FubiniStudy { m, .. } => 2 * m,
        }
    }

    /// Builds and validates the curvature tensor.
    pub fn build(&self) -> Result<CurvatureTensor> {
        let r = match self {
            ModelSpec::ConstantCurvature { n, kappa } => {
                check_n(*n)?;
                DoubleForm::metric(*n).power(2).scale(&(kappa / int(2)))
            }
            ModelSpec::ProductOfSpaceForms { dims, kappas } => {
                if dims.len() != kappas.len() || dims.is_empty() {
                    return Err(malformed(format!(
                        "need one curvature per factor, got {} dims and {} kappas",
                        dims.len(),
                        kappas.len()
                    )));
                }
                if dims.contains(&0) {
                    return Err(malformed("factor dimensions must be positive"));
                }
                let n = self.dim();
                check_n(n)?;
                let mut r = DoubleForm::zero(n, 2, 2);
                let mut start = 1;
                for (d, kappa) in dims.iter().zip(kappas) {
                    let block = MultiIndex::from_indices(&(start..start + d).collect::<Vec<_>>())?;
                    let gi = block_metric(n, block);
                    r = &r + &(&gi * &gi).scale(&(kappa / int(2)));
                    start += d;
                }
                r
            }
            ModelSpec::FubiniStudy { m, c } => {
                check_n(2 * m)?;
                fubini_study(*m, c)
            }
            ModelSpec::ConformallyFlat { n, h } => {
                check_n(*n)?;
                if h.dim() != *n || h.bidegree() != (1, 1) || !h.is_symmetric() {
                    return Err(malformed("h must be a symmetric (1,1) double form in the model dimension"));
                }
                &DoubleForm::metric(*n) * h
            }
            ModelSpec::RandomAlgebraic { n, seed } => {
                check_n(*n)?;
                random::curvature(&mut random::rng(*seed), *n)
            }
        };
        CurvatureTensor::validate(r)
    }

    /// Total volume of the compact homogeneous model, when it has a closed form:
    /// even-dimensional round spheres and their products, and complex projective
    /// spaces (`π^m/m!` at `c = 4`).
    pub fn reference_volume(&self) -> Option<PiScalar> {
        match self {
            ModelSpec::ConstantCurvature { n, kappa } => sphere_volume(*n, kappa),
            ModelSpec::ProductOfSpaceForms { dims, kappas } => dims
                .iter()
                .zip(kappas)
                .map(|(d, k)| sphere_volume(*d, k))
                .try_fold(PiScalar::one(), |acc, v| v.map(|v| &acc * &v)),
            ModelSpec::FubiniStudy { m, c } => {
                if !c.is_positive() {
                    return None;
                }
                let scale = (int(4) / c).pow(*m as i32);
                Some(PiScalar::new(scale / Rational::from_integer(factorial(*m)), *m as i32))
            }
            ModelSpec::ConformallyFlat { .. } | ModelSpec::RandomAlgebraic { .. } => None,
        }
    }
}

fn sphere_volume(n: usize, kappa: &Rational) -> Option<PiScalar> {
    if !n.is_multiple_of(2) || n == 0 || !kappa.is_positive() {
        return None;
    }
    let m = n / 2;
    let base = even_sphere_volume(m);
    let scale = (Rational::one() / kappa).pow(m as i32);
    Some(PiScalar::new(base.coeff().clone() * scale, base.pi_pow()))
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::ConstantCurvature { n, kappa } => write!(f, "constant_curvature(n={n}, kappa={kappa})"),
            ModelSpec::ProductOfSpaceForms { dims, kappas } => {
                let ks: Vec<String> = kappas.iter().map(ToString::to_string).collect();
                write!(f, "product_of_space_forms(dims={dims:?}, kappas=[{}])", ks.join(", "))
            }
            ModelSpec::FubiniStudy { m, c } => write!(f, "fubini_study(m={m}, c={c})"),
            ModelSpec::ConformallyFlat { n, h } => write!(f, "conformally_flat(n={n}, h={h})"),
            ModelSpec::RandomAlgebraic { n, seed } => write!(f, "random_algebraic(n={n}, seed={seed})"),
        }
    }
}

impl ModelSpec {
    /// `true` when the model's curvature is identically zero by construction.
    pub fn is_trivially_flat(&self) -> bool {
        match self {
            ModelSpec::ConstantCurvature { kappa, .. } => kappa.is_zero(),
            ModelSpec::ProductOfSpaceForms { kappas, .. } => kappas.iter().all(Zero::is_zero),
            ModelSpec::FubiniStudy { c, .. } => c.is_zero(),
            ModelSpec::ConformallyFlat { h, .. } => h.is_zero(),
            ModelSpec::RandomAlgebraic { .. } => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn sphere_and_product_ricci() {
        let s = ModelSpec::ConstantCurvature { n: 4, kappa: int(1) }.build().unwrap();
        assert_eq!(s.ricci(), DoubleForm::metric(4).scale(&int(3)));
        let p = ModelSpec::ProductOfSpaceForms {
            dims: vec![2, 2],
            kappas: vec![int(1), int(1)],
        }
        .build()
        .unwrap();
        assert_eq!(p.ricci(), DoubleForm::metric(4));
    }

    #[test]
    fn random_models_validate() {
        for seed in 0..100 {
            let r = ModelSpec::RandomAlgebraic { n: 4, seed }.build().unwrap();
            assert!(r.form().is_symmetric() && r.form().bianchi_sum().is_zero());
        }
    }

    #[test]
    fn fubini_study_is_einstein_and_bianchi() {
        for m in 1..=4 {
            let spec = ModelSpec::FubiniStudy { m, c: int(4) };
            let r = spec.build().unwrap();
            let e = r.is_einstein();
            if m >= 2 {
                let e = e.unwrap();
                assert!(e.holds);
                assert_eq!(e.lambda, int(2 * m as i64 + 2));
            }
        }
        let half = ModelSpec::FubiniStudy { m: 2, c: int(2) }.build().unwrap();
        assert_eq!(half.is_einstein().unwrap().lambda, int(3));
    }

    #[test]
    fn malformed_specs_are_rejected() {
        let bad = ModelSpec::ProductOfSpaceForms {
            dims: vec![2, 2],
            kappas: vec![int(1)],
        };
        assert!(matches!(bad.build(), Err(Error::MalformedModel(_))));
        assert!(ModelSpec::ConstantCurvature { n: 1, kappa: int(1) }.build().is_err());
        let h = DoubleForm::basis(4, MultiIndex::singleton(1), MultiIndex::singleton(2));
        assert!(ModelSpec::ConformallyFlat { n: 4, h }.build().is_err());
    }

    #[test]
    fn reference_volumes() {
        let s4 = ModelSpec::ConstantCurvature { n: 4, kappa: int(1) };
        assert_eq!(s4.reference_volume(), Some(PiScalar::new(ratio(8, 3), 2)));
        let s2 = ModelSpec::ConstantCurvature { n: 2, kappa: int(1) };
        assert_eq!(s2.reference_volume(), Some(PiScalar::new(int(4), 1)));
        let s2s2 = ModelSpec::ProductOfSpaceForms {
            dims: vec![2, 2],
            kappas: vec![int(1), int(1)],
        };
        assert_eq!(s2s2.reference_volume(), Some(PiScalar::new(int(16), 2)));
        let cp2 = ModelSpec::FubiniStudy { m: 2, c: int(4) };
        assert_eq!(cp2.reference_volume(), Some(PiScalar::new(ratio(1, 2), 2)));
        assert_eq!(ModelSpec::RandomAlgebraic { n: 4, seed: 0 }.reference_volume(), None);
    }
}
