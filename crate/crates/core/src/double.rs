//! The bigraded algebra `D(V*) = ⊕ Λ^p V* ⊗ Λ^q V*` of double forms.
//!
//! A [`DoubleForm`] of bidegree `(p, q)` is stored sparsely in the basis
//! `e_I^* ⊗ e_J^*` with `|I| = p`, `|J| = q`. On simple elements
//!
//! * the exterior product is `(θ1⊗θ2)(θ3⊗θ4) = (θ1∧θ3) ⊗ (θ2∧θ4)`,
//! * the composition product is `(θ1⊗θ2)∘(θ3⊗θ4) = ⟨θ1, θ4⟩ θ3⊗θ2`,
//!   which vanishes unless the left operand's first degree equals the right
//!   operand's second degree,
//! * the transpose swaps the factors.
//!
//! The four basic maps `L_h^{a,b}` act on each factor by exterior
//! multiplication (`a = +1`) or interior multiplication (`a = -1`) with the
//! components of a `(1,1)` form `h`. With `h = g` they are the multiplication by
//! the metric, the contraction `c`, the first Bianchi sum `𝔖` and its adjoint
//! `𝔖̃`.
//!
//! Forms are identified with double forms of bidegree `(m, 0)` through
//! `e_K^* ↔ e_K^* ⊗ 1` (see [`DoubleForm::from_form`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{accumulate, basis_label, check_dim, same_dim, write_term, Form, Orientation};
use crate::index::MultiIndex;
use crate::rational::{factorial, Rational};

type Key = (MultiIndex, MultiIndex);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DoubleForm {
    n: usize,
    p: usize,
    q: usize,
    coeffs: BTreeMap<Key, Rational>,
}

/// How a basic map acts on one tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    /// Exterior multiplication by `e_i^*` (the `+1` slot).
    Exterior,
    /// Interior multiplication by `e_i` (the `-1` slot).
    Interior,
}

impl Action {
    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Action::Exterior),
            -1 => Some(Action::Interior),
            _ => None,
        }
    }

    /// Image of `e_idx` under this action with `e_i`: new index and whether the sign flips.
    fn apply(self, i: usize, idx: MultiIndex) -> Option<(MultiIndex, bool)> {
        let single = MultiIndex::singleton(i);
        match self {
            Action::Exterior => match single.wedge_sign(idx) {
                0 => None,
                s => Some((idx.union(single), s < 0)),
            },
            Action::Interior => idx
                .position(i)
                .map(|pos| (idx.difference(single), pos % 2 == 0)),
        }
    }

    fn shift(self, degree: usize) -> Option<usize> {
        match self {
            Action::Exterior => Some(degree + 1),
            Action::Interior => degree.checked_sub(1),
        }
    }
}

/// Reported when a composition pairs incompatible degrees and silently yields zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositionMismatch {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

fn hash_accumulate(map: &mut HashMap<Key, Rational>, key: Key, value: Rational) {
    map.entry(key)
        .and_modify(|v| *v += &value)
        .or_insert(value);
}

impl DoubleForm {
    pub fn zero(n: usize, p: usize, q: usize) -> Self {
        DoubleForm {
            n,
            p,
            q,
            coeffs: BTreeMap::new(),
        }
    }

    /// The `(0,0)` double form `c`.
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut w = DoubleForm::zero(n, 0, 0);
        accumulate(&mut w.coeffs, (MultiIndex::EMPTY, MultiIndex::EMPTY), c);
        w
    }

    /// `e_I^* ⊗ e_J^*`.
    pub fn basis(n: usize, i: MultiIndex, j: MultiIndex) -> Self {
        debug_assert!(i.max_index() <= n && j.max_index() <= n);
        let mut w = DoubleForm::zero(n, i.len(), j.len());
        w.coeffs.insert((i, j), Rational::one());
        w
    }

    /// `θ1 ⊗ θ2`.
    pub fn tensor(left: &Form, right: &Form) -> Result<Self> {
        same_dim(left.dim(), right.dim())?;
        let mut w = DoubleForm::zero(left.dim(), left.degree(), right.degree());
        for (i, x) in left.terms() {
            for (j, y) in right.terms() {
                w.coeffs.insert((i, j), x * y);
            }
        }
        Ok(w)
    }

    /// The metric `g = Σ_i e_i^* ⊗ e_i^*` as a `(1,1)` double form.
    pub fn metric(n: usize) -> Self {
        let mut w = DoubleForm::zero(n, 1, 1);
        for i in 1..=n {
            let e = MultiIndex::singleton(i);
            w.coeffs.insert((e, e), Rational::one());
        }
        w
    }

    /// Builds a double form from `((I, J), coefficient)` pairs, summing repeated keys.
    pub fn from_terms<T>(n: usize, p: usize, q: usize, terms: T) -> Result<Self>
    where
        T: IntoIterator<Item = (Key, Rational)>,
    {
        check_dim(n)?;
        let mut w = DoubleForm::zero(n, p, q);
        for ((i, j), c) in terms {
            if i.len() != p || j.len() != q {
                return Err(Error::BidegreeMismatch {
                    expected: (p, q),
                    found: (i.len(), j.len()),
                });
            }
            let top = i.max_index().max(j.max_index());
            if top > n {
                return Err(Error::IndexOutOfRange { index: top, n });
            }
            accumulate(&mut w.coeffs, (i, j), c);
        }
        Ok(w)
    }

    fn from_hash(n: usize, p: usize, q: usize, map: HashMap<Key, Rational>) -> Self {
        DoubleForm {
            n,
            p,
            q,
            coeffs: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: MultiIndex, j: MultiIndex) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, MultiIndex, &Rational)> {
        self.coeffs.iter().map(|((i, j), v)| (*i, *j, v))
    }

    /// The value of a `(0,0)` double form, or `None` for any other bidegree.
    pub fn as_scalar(&self) -> Option<Rational> {
        (self.p == 0 && self.q == 0).then(|| self.coeff(MultiIndex::EMPTY, MultiIndex::EMPTY))
    }

    pub fn is_symmetric(&self) -> bool {
        self.p == self.q && self.coeffs.iter().all(|((i, j), v)| self.coeffs.get(&(*j, *i)) == Some(v))
    }

    /// First `(I, J)` at which `ω(I, J) ≠ ω(J, I)`, if any.
    pub fn asymmetry_witness(&self) -> Option<(MultiIndex, MultiIndex)> {
        if self.p != self.q {
            return self.coeffs.keys().next().copied();
        }
        self.coeffs
            .iter()
            .find(|((i, j), v)| self.coeffs.get(&(*j, *i)) != Some(*v))
            .map(|(k, _)| *k)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return DoubleForm::zero(self.n, self.p, self.q);
        }
        DoubleForm {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
            ..*self.shape()
        }
    }

    fn shape(&self) -> Box<DoubleForm> {
        Box::new(DoubleForm::zero(self.n, self.p, self.q))
    }

    pub fn checked_add(&self, other: &DoubleForm) -> Result<DoubleForm> {
        same_dim(self.n, other.n)?;
        if self.bidegree() != other.bidegree() {
            return Err(Error::BidegreeMismatch {
                expected: self.bidegree(),
                found: other.bidegree(),
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            accumulate(&mut out.coeffs, *k, v.clone());
        }
        Ok(out)
    }

    /// `ω^t`: bidegree `(q, p)`, `ω^t(J, I) = ω(I, J)`.
    pub fn transpose(&self) -> Self {
        DoubleForm {
            n: self.n,
            p: self.q,
            q: self.p,
            coeffs: self.coeffs.iter().map(|((i, j), v)| ((*j, *i), v.clone())).collect(),
        }
    }

    /// Exterior product of double forms, bidegree `(p + r, q + s)`.
    pub fn ext_mul(&self, other: &DoubleForm) -> Result<DoubleForm> {
        same_dim(self.n, other.n)?;
        let (p, q) = (self.p + other.p, self.q + other.q);
        if p > self.n || q > self.n {
            return Ok(DoubleForm::zero(self.n, p, q));
        }
        let mut acc: HashMap<Key, Rational> = HashMap::new();
        for ((a, b), x) in &self.coeffs {
            for ((c, d), y) in &other.coeffs {
                let s1 = a.wedge_sign(*c);
                if s1 == 0 {
                    continue;
                }
                let s2 = b.wedge_sign(*d);
                if s2 == 0 {
                    continue;
                }
                let v = x * y;
                let v = if s1 * s2 > 0 { v } else { -v };
                hash_accumulate(&mut acc, (a.union(*c), b.union(*d)), v);
            }
        }
        Ok(DoubleForm::from_hash(self.n, p, q, acc))
    }

    /// `ω^k` under the exterior product; `ω^0` is the scalar 1.
    pub fn power(&self, k: usize) -> DoubleForm {
        let mut out = DoubleForm::scalar(self.n, Rational::one());
        for _ in 0..k {
            out = out.ext_mul(self).expect("same dimension");
        }
        out
    }

    /// Composition product. For `self` of bidegree `(p, q)` and `other` of
    /// bidegree `(r, s)` the result has bidegree `(r, q)` and is zero unless `p = s`.
    ///
    /// In matrix terms (rows = first index), `self ∘ other` is `other · self`.
    ///
    /// # Panics
    ///
    /// Panics if the ambient dimensions differ.
    pub fn comp_mul(&self, other: &DoubleForm) -> DoubleForm {
        self.comp_mul_reporting(other).0
    }

    /// [`comp_mul`](Self::comp_mul), also reporting when the degrees are
    /// incompatible and the zero result is forced.
    pub fn comp_mul_reporting(&self, other: &DoubleForm) -> (DoubleForm, Option<CompositionMismatch>) {
        assert_eq!(self.n, other.n, "composition across dimensions");
        let (r, q) = (other.p, self.q);
        if self.p != other.q {
            let note = CompositionMismatch {
                left: self.bidegree(),
                right: other.bidegree(),
            };
            return (DoubleForm::zero(self.n, r, q), Some(note));
        }
        let mut by_second: HashMap<MultiIndex, Vec<(MultiIndex, &Rational)>> = HashMap::new();
        for ((c, d), y) in &other.coeffs {
            by_second.entry(*d).or_default().push((*c, y));
        }
        let mut acc: HashMap<Key, Rational> = HashMap::new();
        for ((a, b), x) in &self.coeffs {
            if let Some(col) = by_second.get(a) {
                for (c, y) in col {
                    hash_accumulate(&mut acc, (*c, *b), x * *y);
                }
            }
        }
        (DoubleForm::from_hash(self.n, r, q, acc), None)
    }

    /// Canonical inner product, orthonormal on `e_I^* ⊗ e_J^*`; zero across bidegrees.
    ///
    /// # Panics
    ///
    /// Panics if the ambient dimensions differ.
    pub fn inner(&self, other: &DoubleForm) -> Rational {
        assert_eq!(self.n, other.n, "inner product across dimensions");
        if self.bidegree() != other.bidegree() {
            return Rational::zero();
        }
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .coeffs
            .iter()
            .filter_map(|(k, v)| large.coeffs.get(k).map(|w| v * w))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    /// The basic map `L_h^{a,b}` for a `(1,1)` double form `h`.
    pub fn basic_map(&self, h: &DoubleForm, left: Action, right: Action) -> Result<DoubleForm> {
        same_dim(self.n, h.n)?;
        if h.bidegree() != (1, 1) {
            return Err(Error::BidegreeMismatch {
                expected: (1, 1),
                found: h.bidegree(),
            });
        }
        let terms: Vec<(usize, usize, &Rational)> = h
            .terms()
            .map(|(i, j, c)| (i.max_index(), j.max_index(), c))
            .collect();
        Ok(self.apply_basic(&terms, left, right))
    }

    fn apply_basic(&self, h: &[(usize, usize, &Rational)], left: Action, right: Action) -> DoubleForm {
        let (Some(p), Some(q)) = (left.shift(self.p), right.shift(self.q)) else {
            // contraction or Bianchi sum out of an empty slot
            let p = left.shift(self.p).unwrap_or(0);
            let q = right.shift(self.q).unwrap_or(0);
            return DoubleForm::zero(self.n, p, q);
        };
        let mut acc: HashMap<Key, Rational> = HashMap::new();
        if p <= self.n && q <= self.n {
            for ((a, b), x) in &self.coeffs {
                for &(i, j, hc) in h {
                    let Some((a2, f1)) = left.apply(i, *a) else { continue };
                    let Some((b2, f2)) = right.apply(j, *b) else { continue };
                    let v = x * hc;
                    let v = if f1 != f2 { -v } else { v };
                    hash_accumulate(&mut acc, (a2, b2), v);
                }
            }
        }
        DoubleForm::from_hash(self.n, p, q, acc)
    }

    fn metric_terms(&self) -> Vec<(usize, usize, Rational)> {
        (1..=self.n).map(|i| (i, i, Rational::one())).collect()
    }

    fn apply_metric(&self, left: Action, right: Action) -> DoubleForm {
        let owned = self.metric_terms();
        let terms: Vec<(usize, usize, &Rational)> = owned.iter().map(|(i, j, c)| (*i, *j, c)).collect();
        self.apply_basic(&terms, left, right)
    }

    /// `g ω = L_g^{1,1} ω`.
    pub fn mul_metric(&self) -> DoubleForm {
        self.apply_metric(Action::Exterior, Action::Exterior)
    }

    /// Contraction `c = L_g^{-1,-1}`, bidegree `(p-1, q-1)`.
    pub fn contract(&self) -> DoubleForm {
        self.apply_metric(Action::Interior, Action::Interior)
    }

    /// `c^k`.
    pub fn contract_times(&self, k: usize) -> DoubleForm {
        (0..k).fold(self.clone(), |w, _| w.contract())
    }

    /// First Bianchi sum `𝔖 = L_g^{1,-1}`, bidegree `(p+1, q-1)`.
    pub fn bianchi_sum(&self) -> DoubleForm {
        self.apply_metric(Action::Exterior, Action::Interior)
    }

    /// Adjoint first Bianchi sum `𝔖̃ = L_g^{-1,1}`, bidegree `(p-1, q+1)`.
    pub fn adjoint_bianchi_sum(&self) -> DoubleForm {
        self.apply_metric(Action::Interior, Action::Exterior)
    }

    /// The alternating operator `D^{p,q} → Λ^{p+q}`:
    /// `Alt(e_I ⊗ e_J) = p! q! / (p+q)! · e_I ∧ e_J`.
    pub fn alt(&self) -> Form {
        let m = self.p + self.q;
        let mut out = Form::zero(self.n, m);
        if m > self.n {
            return out;
        }
        let factor = Rational::new(factorial(self.p) * factorial(self.q), factorial(m));
        let coeffs = out.coeffs_mut();
        for ((a, b), x) in &self.coeffs {
            match a.wedge_sign(*b) {
                0 => {}
                s => {
                    let v = x * &factor;
                    accumulate(coeffs, a.union(*b), if s > 0 { v } else { -v });
                }
            }
        }
        out
    }

    /// Double Hodge star, `★(θ1⊗θ2) = ★θ1 ⊗ ★θ2`, bidegree `(n-p, n-q)`.
    ///
    /// Independent of the orientation, since both factors change sign together.
    pub fn double_hodge_star(&self) -> DoubleForm {
        let n = self.n;
        let mut out = DoubleForm::zero(n, n - self.p, n - self.q);
        for ((a, b), x) in &self.coeffs {
            let (ac, bc) = (a.complement(n), b.complement(n));
            let s = a.wedge_sign(ac) * b.wedge_sign(bc);
            out.coeffs.insert((ac, bc), if s > 0 { x.clone() } else { -x.clone() });
        }
        out
    }

    /// The image of a `m`-form under `Λ^m ⊂ D^{p,q}` (`p + q = m`):
    /// `e_K ↦ Σ_{I ⊔ J = K, |I| = p} ε(I, J) e_I ⊗ e_J`.
    pub fn embed_form(form: &Form, p: usize, q: usize) -> Result<DoubleForm> {
        if p + q != form.degree() {
            return Err(Error::DegreeMismatch {
                expected: form.degree(),
                found: p + q,
            });
        }
        let mut out = DoubleForm::zero(form.dim(), p, q);
        for (k, x) in form.terms() {
            for i in k.subsets_of(p) {
                let j = k.difference(i);
                let v = if i.wedge_sign(j) > 0 { x.clone() } else { -x.clone() };
                accumulate(&mut out.coeffs, (i, j), v);
            }
        }
        Ok(out)
    }

    /// The volume double form: the volume `n`-form seen in `D^{a,b}`, `a + b = n`.
    /// At `(n/2, n/2)` it equals `Σ_I e_I ⊗ ★e_I`.
    pub fn volume_double_form(n: usize, a: usize, b: usize) -> Result<DoubleForm> {
        DoubleForm::volume_double_form_oriented(n, a, b, Orientation::Standard)
    }

    pub fn volume_double_form_oriented(
        n: usize,
        a: usize,
        b: usize,
        orientation: Orientation,
    ) -> Result<DoubleForm> {
        check_dim(n)?;
        if a + b != n {
            return Err(Error::DegreeMismatch { expected: n, found: a + b });
        }
        DoubleForm::embed_form(&Form::volume(n, orientation), a, b)
    }

    /// `ω_g` at the middle bidegree `(n/2, n/2)`; `n` must be even.
    pub fn volume_middle(n: usize) -> Result<DoubleForm> {
        if !n.is_multiple_of(2) {
            return Err(Error::DegreeBound(format!("middle volume double form needs even n, got {n}")));
        }
        DoubleForm::volume_double_form(n, n / 2, n / 2)
    }

    /// A form `a ∈ Λ^m` as the `(m, 0)` double form `a ⊗ 1`.
    pub fn from_form(form: &Form) -> DoubleForm {
        let mut out = DoubleForm::zero(form.dim(), form.degree(), 0);
        for (k, x) in form.terms() {
            out.coeffs.insert((k, MultiIndex::EMPTY), x.clone());
        }
        out
    }

    /// Inverse of [`from_form`](Self::from_form); only defined on bidegree `(m, 0)`.
    pub fn to_form(&self) -> Result<Form> {
        if self.q != 0 {
            return Err(Error::BidegreeMismatch {
                expected: (self.p, 0),
                found: self.bidegree(),
            });
        }
        Form::from_terms(self.n, self.p, self.coeffs.iter().map(|((i, _), v)| (*i, v.clone())))
    }
}

/// Decomposability test: `α` is decomposable iff `𝔖(α ⊗ α) = 0`.
pub fn is_decomposable(alpha: &Form) -> bool {
    DoubleForm::tensor(alpha, alpha)
        .expect("same form")
        .bianchi_sum()
        .is_zero()
}

impl Add for &DoubleForm {
    type Output = DoubleForm;

    fn add(self, rhs: &DoubleForm) -> DoubleForm {
        self.checked_add(rhs).expect("adding incompatible double forms")
    }
}

impl Sub for &DoubleForm {
    type Output = DoubleForm;

    fn sub(self, rhs: &DoubleForm) -> DoubleForm {
        self.checked_add(&-rhs).expect("subtracting incompatible double forms")
    }
}

impl Neg for &DoubleForm {
    type Output = DoubleForm;

    fn neg(self) -> DoubleForm {
        DoubleForm {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v.clone())).collect(),
            ..*self.shape()
        }
    }
}

/// Exterior product.
///
/// # Panics
///
/// Panics if the ambient dimensions differ; use [`DoubleForm::ext_mul`] to get an error instead.
impl Mul for &DoubleForm {
    type Output = DoubleForm;

    fn mul(self, rhs: &DoubleForm) -> DoubleForm {
        self.ext_mul(rhs).expect("exterior product across dimensions")
    }
}

/// `2 e12⊗e34 - e1⊗1`; the zero double form prints as `0`.
impl fmt::Display for DoubleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.coeffs.iter().enumerate() {
            let body = if i.is_empty() && j.is_empty() {
                String::new()
            } else {
                format!("{}⊗{}", basis_label(*i), basis_label(*j))
            };
            write_term(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DoubleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleForm[n={}, ({}, {})]({})", self.n, self.p, self.q, self)
    }
}
