//! Exact rational matrices and fraction-free rank computation.
//!
//! Matrices are stored row-major with sparse rows, since every matrix in this
//! crate (representation generators, Koszul differentials) is overwhelmingly
//! zero. Rank is computed with Bareiss elimination on an integer copy of the
//! matrix: first with checked `i128` arithmetic, falling back to `BigInt` on
//! overflow.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(numer: i64, denom: i64) -> Q {
    Q::new(BigInt::from(numer), BigInt::from(denom))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Sparse row-major matrix over `Q`. Exact zeros are never stored.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Q>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Q) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            return;
        }
        let entry = self.data[i].entry(j).or_insert_with(Q::zero);
        *entry += v;
        if entry.is_zero() {
            self.data[i].remove(&j);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Q)> {
        self.data[i].iter().map(|(j, v)| (*j, v))
    }

    /// All nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.data[j].insert(i, v.clone());
        }
        t
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let mut out = self.clone();
        for row in &mut out.data {
            for v in row.values_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_to(i, j, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().fold(Q::zero(), |acc, (j, a)| acc + a * &v[*j]))
            .collect()
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (new, &old) in col_idx.iter().enumerate() {
            col_pos[old] = new;
        }
        let mut out = Self::zeros(row_idx.len(), col_idx.len());
        for (new_i, &old_i) in row_idx.iter().enumerate() {
            for (j, v) in &self.data[old_i] {
                let nj = col_pos[*j];
                if nj != usize::MAX {
                    out.data[new_i].insert(nj, v.clone());
                }
            }
        }
        out
    }

    /// Exact rank by Bareiss elimination.
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Scalars the Bareiss recurrence can run over. `None` signals overflow.
trait BareissScalar: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    /// `(pivot * x - factor * y) / prev`, where the division is exact.
    fn step(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self>;
}

impl BareissScalar for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn step(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self> {
        let a = pivot.checked_mul(*x)?;
        let b = factor.checked_mul(*y)?;
        let num = a.checked_sub(b)?;
        debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
        Some(num / prev)
    }
}

impl BareissScalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn step(pivot: &Self, x: &Self, factor: &Self, y: &Self, prev: &Self) -> Option<Self> {
        let num = pivot * x - factor * y;
        if num.is_zero() {
            return Some(num);
        }
        let (quot, rem) = num.div_rem(prev);
        debug_assert!(rem.is_zero(), "Bareiss division must be exact");
        Some(quot)
    }
}

#[allow(clippy::needless_range_loop)]
fn bareiss_rank<T: BareissScalar>(mut a: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev = T::unit();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_nil()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            if factor.is_nil() {
                // Only rescaling by pivot/prev; zeros stay zero.
                for j in col + 1..cols {
                    if !row[j].is_nil() {
                        row[j] = T::step(&pivot, &row[j], &T::nil(), &T::nil(), &prev)?;
                    }
                }
            } else {
                for j in col + 1..cols {
                    if row[j].is_nil() && pivot_row[j].is_nil() {
                        continue;
                    }
                    row[j] = T::step(&pivot, &row[j], &factor, &pivot_row[j], &prev)?;
                }
                row[col] = T::nil();
            }
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Clears denominators row by row, producing an integer matrix with the same rank.
fn integer_rows(m: &SparseMatrix) -> Vec<Vec<BigInt>> {
    m.data
        .iter()
        .filter(|row| !row.is_empty())
        .map(|row| {
            let lcm = row
                .values()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut dense = vec![BigInt::zero(); m.cols];
            for (j, v) in row {
                dense[*j] = v.numer() * (&lcm / v.denom());
            }
            dense
        })
        .collect()
}

/// Exact rank of a rational matrix.
pub fn rank(m: &SparseMatrix) -> usize {
    let big = integer_rows(m);
    if big.is_empty() {
        return 0;
    }
    let small: Option<Vec<Vec<i128>>> = big
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = bareiss_rank(small, m.cols) {
            return r;
        }
    }
    bareiss_rank(big, m.cols).expect("BigInt Bareiss cannot overflow")
}

/// Rank by plain rational Gauss-Jordan elimination. Slow; kept as an
/// independent cross-check for the Bareiss path.
#[allow(clippy::needless_range_loop)]
pub fn rank_rational_gauss(m: &SparseMatrix) -> usize {
    let mut a = m.to_dense();
    let rows = a.len();
    let mut r = 0;
    for col in 0..m.cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for j in 0..m.cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..m.cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into an exact rational.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn is_nonnegative(v: &Q) -> bool {
    !v.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(2, -1), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = SparseMatrix::from_dense(&[
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), qf(1, 2)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(SparseMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(SparseMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Entries near 2^100 make the i128 products overflow.
        let big = Q::from_integer(BigInt::from(2).pow(100u32));
        let m = SparseMatrix::from_dense(&[
            vec![big.clone(), q(1), q(0)],
            vec![q(1), big.clone(), q(1)],
            vec![q(0), q(1), big],
        ]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-2/6"), Some(qf(-1, 3)));
        assert_eq!(parse_q("5"), Some(q(5)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(fmt_q(&qf(4, 2)), "2");
        assert_eq!(fmt_q(&qf(-1, 3)), "-1/3");
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec((-3i64..4, 1i64..4), c), r)
                .prop_map(|rows| {
                    let dense: Vec<Vec<Q>> = rows
                        .into_iter()
                        .map(|row| row.into_iter().map(|(a, b)| qf(a, b)).collect())
                        .collect();
                    SparseMatrix::from_dense(&dense)
                })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_gauss(m in small_matrix()) {
            prop_assert_eq!(m.rank(), rank_rational_gauss(&m));
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn product_rank_bounded(a in small_matrix(), b in small_matrix()) {
            if a.cols() == b.rows() {
                let p = a.mul(&b);
                prop_assert!(p.rank() <= a.rank().min(b.rank()));
            }
        }
    }
}
