//! The exterior algebra `Λ(V*)` of an oriented orthonormal `n`-space.
//!
//! Basis products follow the determinant convention:
//! `e_I ∧ e_J = ε(I, J) e_{I∪J}` with the shuffle sign `ε` and no factorial
//! normalization. The metric is the identity in the working basis, so
//! `⟨e_I, e_J⟩ = δ_IJ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{MultiIndex, MAX_DIM};
use crate::rational::Rational;

/// Orientation of the ambient space. `Standard` has volume form `e_1 ∧ … ∧ e_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Standard => 1,
            Orientation::Reversed => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(Orientation::Standard),
            -1 => Some(Orientation::Reversed),
            _ => None,
        }
    }
}

/// A homogeneous `p`-form with exact coefficients in the basis `e_I^*`.
///
/// Zero coefficients are never stored, so structural equality is equality of forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::UnsupportedDimension(n))
    } else {
        Ok(())
    }
}

pub(crate) fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, value: Rational) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Form {
    pub fn zero(n: usize, degree: usize) -> Self {
        Form {
            n,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The 0-form `c`.
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut f = Form::zero(n, 0);
        accumulate(&mut f.coeffs, MultiIndex::EMPTY, c);
        f
    }

    /// `e_I^*`.
    pub fn basis(n: usize, index: MultiIndex) -> Self {
        debug_assert!(index.max_index() <= n);
        let mut f = Form::zero(n, index.len());
        f.coeffs.insert(index, Rational::one());
        f
    }

    /// The coframe element `e_i^*`.
    pub fn covector(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Form::basis(n, MultiIndex::singleton(i)))
    }

    /// `e_1^* ∧ … ∧ e_n^*` for the given orientation.
    pub fn volume(n: usize, orientation: Orientation) -> Self {
        Form::basis(n, MultiIndex::full(n)).scale(&Rational::from_integer(orientation.sign().into()))
    }

    /// Builds a form from `(index, coefficient)` pairs, summing repeated keys.
    pub fn from_terms<I>(n: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        check_dim(n)?;
        let mut f = Form::zero(n, degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: idx.len(),
                });
            }
            if idx.max_index() > n {
                return Err(Error::IndexOutOfRange {
                    index: idx.max_index(),
                    n,
                });
            }
            accumulate(&mut f.coeffs, idx, c);
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, index: MultiIndex) -> Rational {
        self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Rational)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Form::zero(self.n, self.degree);
        }
        Form {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Form) -> Result<Form> {
        same_dim(self.n, other.n)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            accumulate(&mut out.coeffs, *k, v.clone());
        }
        Ok(out)
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        same_dim(self.n, other.n)?;
        let degree = self.degree + other.degree;
        let mut out = Form::zero(self.n, degree);
        if degree > self.n {
            return Ok(out);
        }
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                match a.wedge_sign(*b) {
                    0 => {}
                    1 => accumulate(&mut out.coeffs, a.union(*b), x * y),
                    _ => accumulate(&mut out.coeffs, a.union(*b), -(x * y)),
                }
            }
        }
        Ok(out)
    }

    /// Interior product `i_{e_i}` with the unit vector `e_i`:
    /// `i_{e_i} e_I^* = (-1)^{pos(i, I) - 1} e_{I∖i}^*`.
    pub fn interior(&self, i: usize) -> Result<Form> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Form::zero(self.n, self.degree.saturating_sub(1));
        let single = MultiIndex::singleton(i);
        for (idx, c) in &self.coeffs {
            if let Some(pos) = idx.position(i) {
                let v = if pos % 2 == 1 { c.clone() } else { -c.clone() };
                accumulate(&mut out.coeffs, idx.difference(single), v);
            }
        }
        Ok(out)
    }

    /// Inner product induced by the orthonormal coframe; zero across degrees.
    ///
    /// # Panics
    ///
    /// Panics if the ambient dimensions differ.
    pub fn inner(&self, other: &Form) -> Rational {
        assert_eq!(self.n, other.n, "inner product across dimensions");
        if self.degree != other.degree {
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

    /// Hodge star for the standard orientation: `★e_I = ε(I, I^c) e_{I^c}`,
    /// equivalently `b ∧ ★a = ⟨a, b⟩ e_{1…n}` for all `b`.
    pub fn hodge_star(&self) -> Form {
        self.hodge_star_oriented(Orientation::Standard)
    }

    pub fn hodge_star_oriented(&self, orientation: Orientation) -> Form {
        let n = self.n;
        let mut out = Form::zero(n, n - self.degree.min(n));
        if self.degree > n {
            return out;
        }
        for (idx, c) in &self.coeffs {
            let comp = idx.complement(n);
            let s = idx.wedge_sign(comp) * orientation.sign();
            let v = if s > 0 { c.clone() } else { -c.clone() };
            out.coeffs.insert(comp, v);
        }
        out
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut BTreeMap<MultiIndex, Rational> {
        &mut self.coeffs
    }
}

impl Add for &Form {
    type Output = Form;

    fn add(self, rhs: &Form) -> Form {
        self.checked_add(rhs).expect("adding incompatible forms")
    }
}

impl Sub for &Form {
    type Output = Form;

    fn sub(self, rhs: &Form) -> Form {
        self.checked_add(&-rhs).expect("subtracting incompatible forms")
    }
}

impl Neg for &Form {
    type Output = Form;

    fn neg(self) -> Form {
        Form {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: &str,
) -> fmt::Result {
    use num::Signed;
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{mag} {body}")
    }
}

pub(crate) fn basis_label(idx: MultiIndex) -> String {
    if idx.is_empty() {
        return "1".into();
    }
    let sep = if idx.max_index() >= 10 { "," } else { "" };
    let parts: Vec<String> = idx.indices().map(|i| i.to_string()).collect();
    format!("e{}", parts.join(sep))
}

/// `3/2 e12 - e34`; the zero form prints as `0`.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in self.coeffs.iter().enumerate() {
            let body = if idx.is_empty() { String::new() } else { basis_label(*idx) };
            write_term(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}, p={}]({})", self.n, self.degree, self)
    }
}
