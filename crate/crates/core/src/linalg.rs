//! Exact matrix rank for sparse integer matrices.
//!
//! The boundary matrices of simplicial complexes have entries `±1` and stay
//! very sparse, so elimination is done row by row into an echelon basis
//! keyed by leading column. Integer elimination is fraction-free: a new row
//! is combined with a pivot row by cross-multiplying leading coefficients and
//! then divided by its content, which keeps entries small in practice.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::scalar::{ExactInteger, Field};

/// A sparse matrix stored by rows; each row lists `(column, value)` pairs
/// with strictly increasing columns and nonzero values.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given in any column order; zero entries are dropped and
    /// repeated columns are summed.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range");
            *acc.entry(c).or_insert(0) += v;
        }
        self.rows
            .push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0; self.ncols];
                for &(c, v) in r {
                    d[c] = v;
                }
                d
            })
            .collect()
    }
}

type Row<T> = Vec<(usize, T)>;

/// `a*x - b*y` on sparse rows, dropping zeros. `None` on overflow.
fn combine<T: ExactInteger>(a: &T, x: &Row<T>, b: &T, y: &Row<T>) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let v = a.checked_mul(&x[i].1)?;
            i += 1;
            (x[i - 1].0, v)
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = T::zero().checked_sub(&b.checked_mul(&y[j].1)?)?;
            j += 1;
            (y[j - 1].0, v)
        } else {
            let v = a
                .checked_mul(&x[i].1)?
                .checked_sub(&b.checked_mul(&y[j].1)?)?;
            i += 1;
            j += 1;
            (x[i - 1].0, v)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn make_primitive<T: ExactInteger>(row: &mut Row<T>) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

/// Fraction-free rank over `T`; `None` if an intermediate value overflows.
pub fn try_integer_rank<T: ExactInteger>(m: &SparseMatrix) -> Option<usize> {
    let mut pivots: BTreeMap<usize, Row<T>> = BTreeMap::new();
    // Shorter rows first: they make sparser pivots.
    let mut order: Vec<usize> = (0..m.rows.len()).collect();
    order.sort_by_key(|&r| m.rows[r].len());
    for r in order {
        let mut row: Row<T> = m.rows[r].iter().map(|&(c, v)| (c, T::from(v))).collect();
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                None => {
                    make_primitive(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
                Some(p) => {
                    let a = p[0].1.clone();
                    let b = row[0].1.clone();
                    let g = a.gcd(&b);
                    let (a, b) = (a.div_floor(&g), b.div_floor(&g));
                    row = combine(&a, &row, &b, p)?;
                    make_primitive(&mut row);
                }
            }
        }
    }
    Some(pivots.len())
}

/// Exact rank over the rationals. Tries machine integers first and falls
/// back to arbitrary precision when an entry would overflow.
pub fn rational_rank(m: &SparseMatrix) -> usize {
    try_integer_rank::<i64>(m)
        .or_else(|| try_integer_rank::<BigInt>(m))
        .expect("arbitrary precision elimination cannot overflow")
}

/// Rank over an exact field by sparse elimination with unit pivots.
pub fn field_rank<F: Field>(m: &SparseMatrix) -> usize {
    let mut pivots: BTreeMap<usize, Row<F>> = BTreeMap::new();
    for r in &m.rows {
        let mut row: Row<F> = r
            .iter()
            .map(|&(c, v)| (c, F::from_i64(v).expect("field admits integers")))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        while let Some((lead, lv)) = row.first().cloned() {
            match pivots.get(&lead) {
                None => {
                    let inv = F::one() / lv;
                    for (_, v) in row.iter_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    pivots.insert(lead, row);
                    break;
                }
                Some(p) => {
                    let mut out = Vec::with_capacity(row.len() + p.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < p.len() {
                        if j == p.len() || (i < row.len() && row[i].0 < p[j].0) {
                            out.push(row[i].clone());
                            i += 1;
                        } else if i == row.len() || p[j].0 < row[i].0 {
                            out.push((p[j].0, -(lv.clone() * p[j].1.clone())));
                            j += 1;
                        } else {
                            let v = row[i].1.clone() - lv.clone() * p[j].1.clone();
                            if !v.is_zero() {
                                out.push((row[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of a dense matrix by plain Gaussian elimination over `F`.
pub fn dense_rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone() / pivot.clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Converts an integer matrix into dense field entries.
pub fn dense_over<F: Field>(m: &SparseMatrix) -> Vec<Vec<F>> {
    m.to_dense()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| F::from_i64(v).expect("field admits integers"))
                .collect()
        })
        .collect()
}
