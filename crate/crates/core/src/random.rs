//! Seeded generators of random forms, double forms and curvature tensors.
//!
//! Every generator takes an explicit `ChaCha8Rng` so that a seed fully
//! determines the output on every platform. Coefficients are small integers,
//! which keeps exact arithmetic cheap while still exercising signs and
//! cancellations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::double::DoubleForm;
use crate::exterior::Form;
use crate::index::MultiIndex;
use crate::linalg::{basis_keys, operator_rows, SparseSystem};
use crate::rational::{int, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coefficient(rng: &mut TestRng) -> Rational {
    loop {
        let v: i64 = rng.random_range(-3..=3);
        if v != 0 {
            return int(v);
        }
    }
}

/// Random `p`-form; each basis coefficient is nonzero with probability `density`.
pub fn form(rng: &mut TestRng, n: usize, p: usize, density: f64) -> Form {
    let terms: Vec<_> = MultiIndex::subsets(n, p)
        .filter_map(|i| rng.random_bool(density).then(|| (i, coefficient(rng))))
        .collect();
    Form::from_terms(n, p, terms).expect("generated in range")
}

/// Random `(p, q)` double form; each basis coefficient is nonzero with probability `density`.
pub fn double_form(rng: &mut TestRng, n: usize, p: usize, q: usize, density: f64) -> DoubleForm {
    let terms: Vec<_> = basis_keys(n, p, q)
        .into_iter()
        .filter_map(|k| rng.random_bool(density).then(|| (k, coefficient(rng))))
        .collect();
    DoubleForm::from_terms(n, p, q, terms).expect("generated in range")
}

/// Random `(1,1)` double form, possibly degenerate; used as the `h` of a basic map.
pub fn one_one(rng: &mut TestRng, n: usize) -> DoubleForm {
    double_form(rng, n, 1, 1, 0.6)
}

/// Random symmetric `(p, p)` double form.
pub fn symmetric(rng: &mut TestRng, n: usize, p: usize, density: f64) -> DoubleForm {
    let mut terms = vec![];
    let keys: Vec<MultiIndex> = MultiIndex::subsets(n, p).collect();
    for (a, i) in keys.iter().enumerate() {
        for j in &keys[a..] {
            if rng.random_bool(density) {
                let c = coefficient(rng);
                terms.push(((*i, *j), c.clone()));
                if i != j {
                    terms.push(((*j, *i), c));
                }
            }
        }
    }
    DoubleForm::from_terms(n, p, p, terms).expect("generated in range")
}

/// Random `(p, q)` double form with `𝔖ω = 0` (and `ω = ω^t` when `symmetric`),
/// drawn as a random integer combination of an exact kernel basis.
pub fn bianchi_closed(rng: &mut TestRng, n: usize, p: usize, q: usize, symmetric: bool) -> DoubleForm {
    assert!(!symmetric || p == q, "symmetric forms need p = q");
    let columns = basis_keys(n, p, q);
    let index: std::collections::BTreeMap<_, _> =
        columns.iter().enumerate().map(|(c, k)| (*k, c)).collect();
    let mut system = SparseSystem::new(columns.len());
    for (_, row) in operator_rows(n, &columns, DoubleForm::bianchi_sum) {
        system.push_row(row, int(0));
    }
    if symmetric {
        for (c, (i, j)) in columns.iter().enumerate() {
            if i < j {
                system.push_row([(c, int(1)), (index[&(*j, *i)], int(-1))], int(0));
            }
        }
    }
    let mut out = DoubleForm::zero(n, p, q);
    for v in system.nullspace() {
        if rng.random_bool(0.5) {
            let c = coefficient(rng);
            let w = DoubleForm::from_terms(n, p, q, v.into_iter().map(|(col, x)| (columns[col], x * &c)))
                .expect("kernel vector in range");
            out = &out + &w;
        }
    }
    out
}

/// Random algebraic curvature tensor: a random symmetric `(2,2)` form with its
/// `Λ^4` component removed, which is the orthogonal projection onto `ker 𝔖`.
pub fn curvature(rng: &mut TestRng, n: usize) -> DoubleForm {
    let r = symmetric(rng, n, 2, 0.5);
    project_to_bianchi(&r)
}

/// Orthogonal projection of a symmetric `(2,2)` form onto the kernel of `𝔖`:
/// `R − Σ_{|K|=4} ⟨R, E_K⟩/6 · E_K` with `E_K` the embedded basis 4-form.
pub fn project_to_bianchi(r: &DoubleForm) -> DoubleForm {
    let n = r.dim();
    let mut out = r.clone();
    for k in MultiIndex::subsets(n, 4) {
        let e = DoubleForm::embed_form(&Form::basis(n, k), 2, 2).expect("degree 4 into (2,2)");
        let c = r.inner(&e) / int(6);
        if c != int(0) {
            out = &out - &e.scale(&c);
        }
    }
    out
}
