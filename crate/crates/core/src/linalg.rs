//! Exact sparse linear systems over the rationals.
//!
//! The systems that appear here (divisibility by the metric, Bianchi kernels)
//! split into many small independent blocks: `g·` preserves the pair of
//! differences `(I∖J, J∖I)` and `𝔖` preserves the multiset `I + J`. The solver
//! finds connected components of the row/column incidence graph and runs dense
//! Gauss-Jordan elimination on each.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::double::DoubleForm;
use crate::index::MultiIndex;
use crate::rational::Rational;

/// Basis keys `(I, J)` of `D^{p,q}` in dimension `n`, in storage order.
pub fn basis_keys(n: usize, p: usize, q: usize) -> Vec<(MultiIndex, MultiIndex)> {
    MultiIndex::subsets(n, p)
        .flat_map(|i| MultiIndex::subsets(n, q).map(move |j| (i, j)))
        .collect()
}

/// Matrix of a linear map on `D^{p,q}`, given on the listed basis keys,
/// as rows keyed by output basis element.
pub fn operator_rows<F>(
    n: usize,
    columns: &[(MultiIndex, MultiIndex)],
    op: F,
) -> BTreeMap<(MultiIndex, MultiIndex), Vec<(usize, Rational)>>
where
    F: Fn(&DoubleForm) -> DoubleForm,
{
    let mut rows: BTreeMap<_, Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, (i, j)) in columns.iter().enumerate() {
        for (a, b, v) in op(&DoubleForm::basis(n, *i, *j)).terms() {
            rows.entry((a, b)).or_default().push((col, v.clone()));
        }
    }
    rows
}

#[derive(Debug, Clone, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
}

struct Block {
    cols: Vec<usize>,
    rows: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem {
            ncols,
            ..Default::default()
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Adds the equation `Σ coeff · x[col] = rhs`. Repeated columns are summed.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>, rhs: Rational) {
        let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range");
            *merged.entry(c).or_insert_with(Rational::zero) += v;
        }
        self.rows
            .push(merged.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        self.rhs.push(rhs);
    }

    fn blocks(&self) -> (Vec<Block>, Vec<usize>) {
        let mut parent: Vec<usize> = (0..self.ncols).collect();
        for row in &self.rows {
            if let Some(&(first, _)) = row.first() {
                for &(c, _) in &row[1..] {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut by_root: BTreeMap<usize, Block> = BTreeMap::new();
        for c in 0..self.ncols {
            let r = find(&mut parent, c);
            by_root
                .entry(r)
                .or_insert_with(|| Block { cols: vec![], rows: vec![] })
                .cols
                .push(c);
        }
        let mut empty_rows = vec![];
        for (i, row) in self.rows.iter().enumerate() {
            match row.first() {
                Some(&(c, _)) => {
                    let r = find(&mut parent, c);
                    by_root.get_mut(&r).expect("root exists").rows.push(i);
                }
                None => empty_rows.push(i),
            }
        }
        (by_root.into_values().collect(), empty_rows)
    }

    /// Reduced row echelon form of one block, augmented with the right-hand side.
    /// Returns the reduced matrix and the pivot column of each nonzero row.
    fn reduce(&self, block: &Block) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let width = block.cols.len();
        let local: BTreeMap<usize, usize> = block.cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let mut m: Vec<Vec<Rational>> = block
            .rows
            .iter()
            .map(|&i| {
                let mut dense = vec![Rational::zero(); width + 1];
                for (c, v) in &self.rows[i] {
                    dense[local[c]] = v.clone();
                }
                dense[width] = self.rhs[i].clone();
                dense
            })
            .collect();
        let mut pivots = vec![];
        let mut r = 0;
        for col in 0..=width {
            let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = Rational::one() / &m[r][col];
            for v in m[r].iter_mut().skip(col) {
                *v *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                        *v -= &f * pv;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (m, pivots)
    }

    /// One exact solution (free variables set to zero), or `None` when inconsistent.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let (blocks, empty) = self.blocks();
        if empty.iter().any(|&i| !self.rhs[i].is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for block in &blocks {
            if block.rows.is_empty() {
                continue;
            }
            let width = block.cols.len();
            let (m, pivots) = self.reduce(block);
            for (row, &pc) in m.iter().zip(&pivots) {
                if pc == width {
                    return None;
                }
                x[block.cols[pc]] = row[width].clone();
            }
        }
        Some(x)
    }

    /// A basis of the solution space of the homogeneous system, as sparse vectors.
    pub fn nullspace(&self) -> Vec<Vec<(usize, Rational)>> {
        let (blocks, _) = self.blocks();
        let mut basis = vec![];
        for block in &blocks {
            let width = block.cols.len();
            let (m, pivots) = if block.rows.is_empty() {
                (vec![], vec![])
            } else {
                self.reduce(block)
            };
            let pivot_cols: Vec<usize> = pivots.iter().copied().filter(|&c| c < width).collect();
            for free in (0..width).filter(|c| !pivot_cols.contains(c)) {
                let mut v = vec![(block.cols[free], Rational::one())];
                for (row, &pc) in m.iter().zip(&pivot_cols) {
                    if !row[free].is_zero() {
                        v.push((block.cols[pc], -row[free].clone()));
                    }
                }
                v.sort_by_key(|(c, _)| *c);
                basis.push(v);
            }
        }
        basis
    }

    /// `A x - b` for a candidate `x`.
    pub fn residual(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| row.iter().fold(-b.clone(), |acc, (c, v)| acc + v * &x[*c]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn solves_block_diagonal_systems() {
        let mut s = SparseSystem::new(4);
        s.push_row([(0, int(1)), (1, int(1))], int(3));
        s.push_row([(0, int(1)), (1, int(-1))], int(1));
        s.push_row([(2, int(2))], int(5));
        let x = s.solve().unwrap();
        assert_eq!(x, vec![int(2), int(1), crate::rational::ratio(5, 2), int(0)]);
        assert!(s.residual(&x).iter().all(Zero::is_zero));
        assert_eq!(s.nullspace(), vec![vec![(3, int(1))]]);
    }

    #[test]
    fn detects_inconsistency() {
        let mut s = SparseSystem::new(2);
        s.push_row([(0, int(1)), (1, int(1))], int(1));
        s.push_row([(0, int(2)), (1, int(2))], int(3));
        assert!(s.solve().is_none());
        let mut t = SparseSystem::new(1);
        t.push_row([(0, int(1)), (0, int(-1))], int(1));
        assert!(t.solve().is_none());
    }

    #[test]
    fn nullspace_vectors_are_solutions() {
        let mut s = SparseSystem::new(5);
        s.push_row([(0, int(1)), (1, int(2)), (2, int(3))], int(0));
        s.push_row([(1, int(1)), (2, int(1))], int(0));
        s.push_row([(3, int(1)), (4, int(-1))], int(0));
        let basis = s.nullspace();
        assert_eq!(basis.len(), 2);
        for v in basis {
            let mut x = vec![int(0); 5];
            for (c, q) in v {
                x[c] = q;
            }
            assert!(s.residual(&x).iter().all(Zero::is_zero));
        }
    }
}
