//! Dynkin labels, partitions and grading-element eigenvalues for sl(n+1)
//! and its Levi factor sl(n).
//!
//! Labels `[a_1..a_n]` name the sl(n+1)-module whose *lowest* weight is
//! `-[a_1..a_n]`; the highest weight is the reversed list. With this
//! orientation `[0,..,0,1]` is the standard representation.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinLabels {
    n: usize,
    labels: Vec<u32>,
}

impl DynkinLabels {
    pub fn new(n: usize, labels: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if labels.len() != n {
            return Err(Error::LabelCount {
                expected: n,
                got: labels.len(),
            });
        }
        Ok(DynkinLabels { n, labels })
    }

    /// Shorthand for `new(labels.len(), labels)`.
    pub fn from_slice(labels: &[u32]) -> Result<Self> {
        Self::new(labels.len(), labels.to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Labels of the dual module.
    pub fn reversed(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        DynkinLabels { n: self.n, labels }
    }

    /// Highest-weight labels, i.e. the reversed lowest-weight labels.
    pub fn highest_weight_labels(&self) -> Vec<u32> {
        self.reversed().labels
    }

    /// `a_1 + .. + a_r`.
    pub fn partial_sum(&self, r: usize) -> u64 {
        self.labels[..r].iter().map(|&a| a as u64).sum()
    }

    /// Grade `-c + k`.
    pub fn grade_at(&self, k: i64) -> Grade {
        Grade(-c_value(self).0 + Q::from_integer(BigInt::from(k)))
    }

    /// Enumerates all label vectors of length `n` with entry sum at most `max_sum`,
    /// in lexicographic order.
    pub fn enumerate(n: usize, max_sum: u32) -> Vec<DynkinLabels> {
        fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(n, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_sum, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|labels| DynkinLabels { n, labels })
            .collect()
    }
}

impl fmt::Display for DynkinLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, &self.labels)
    }
}

fn write_labels(f: &mut fmt::Formatter<'_>, labels: &[u32]) -> fmt::Result {
    write!(f, "[")?;
    for (i, a) in labels.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    write!(f, "]")
}

/// A Dynkin label for sl(m), stored as its `m - 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LeviLabels(pub Vec<u32>);

impl LeviLabels {
    /// Rank parameter m of sl(m).
    pub fn m(&self) -> usize {
        self.0.len() + 1
    }
}

impl fmt::Display for LeviLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, &self.0)
    }
}

/// An eigenvalue of the grading element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(pub Q);

impl Grade {
    pub fn value(&self) -> &Q {
        &self.0
    }

    /// The integer k with `self = base + k`, if there is one.
    pub fn offset_from(&self, base: &Grade) -> Option<i64> {
        let d = &self.0 - &base.0;
        if d.is_integer() {
            d.to_integer().to_i64()
        } else {
            None
        }
    }

    /// The reindexed grade k, where `self = -c + k` for the labels' constant c.
    pub fn integer_grade(&self, d: &DynkinLabels) -> Option<i64> {
        self.offset_from(&d.grade_at(0))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(&self.0))
    }
}

impl Serialize for Grade {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(&self.0))
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::linalg::parse_q(&s)
            .map(Grade)
            .ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Normalizes trailing zeros away. Errors if `parts` is not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count() as u32)
                .collect(),
        )
    }
}

/// `c = (n a_1 + (n-1) a_2 + .. + a_n) / (n+1)`; H acts by `-c` on the lowest grade.
pub fn c_value(d: &DynkinLabels) -> Grade {
    let n = d.n as i64;
    let num: i64 = d
        .labels
        .iter()
        .enumerate()
        .map(|(i, &a)| (n - i as i64) * a as i64)
        .sum();
    Grade(Q::new(BigInt::from(num), BigInt::from(n + 1)))
}

/// `c' = c_value(reverse(labels))`.
pub fn dual_c_value(d: &DynkinLabels) -> Grade {
    c_value(&d.reversed())
}

/// `N = a_1 + .. + a_n`, the number of grading steps.
pub fn filtration_length(d: &DynkinLabels) -> u64 {
    d.partial_sum(d.n)
}

/// Weyl dimension formula for sl(m), with `labels` of length `m - 1`:
/// `prod_{i<j} (b_i + .. + b_{j-1} + j - i) / (j - i)`.
pub fn weyl_dim(labels: &[u32]) -> BigUint {
    let m = labels.len() + 1;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..m {
        let mut run: u64 = 0;
        for j in i + 1..m {
            run += labels[j - 1] as u64;
            num *= BigUint::from(run + (j - i) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    let (quot, rem) = (&num / &den, &num % &den);
    assert!(rem.is_zero(), "Weyl dimension must be integral");
    quot
}

/// Weyl dimension as a machine integer, saturating at `u64::MAX`.
pub fn weyl_dim_u64(labels: &[u32]) -> u64 {
    weyl_dim(labels).to_u64().unwrap_or(u64::MAX)
}

/// Highest-weight partition of an sl(m) label: `lambda_i = b_i + .. + b_{m-1}`.
pub fn labels_to_partition(labels: &[u32]) -> Partition {
    let mut parts = vec![0u32; labels.len()];
    let mut run = 0;
    for i in (0..labels.len()).rev() {
        run += labels[i];
        parts[i] = run;
    }
    Partition::new(parts).expect("suffix sums are weakly decreasing")
}

/// Inverse of [`labels_to_partition`] for sl(m); full columns of height m
/// (determinant factors) disappear.
pub fn partition_to_labels(p: &Partition, m: usize) -> Result<LeviLabels> {
    if p.len() > m {
        return Err(Error::TooManyParts {
            parts: p.0.clone(),
            max: m,
        });
    }
    Ok(LeviLabels(
        (0..m.saturating_sub(1))
            .map(|i| p.part(i) - p.part(i + 1))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qf};

    fn dl(labels: &[u32]) -> DynkinLabels {
        DynkinLabels::from_slice(labels).unwrap()
    }

    #[test]
    fn c_values() {
        assert_eq!(c_value(&dl(&[0, 1])).0, qf(1, 3));
        assert_eq!(c_value(&dl(&[0, 0, 0])).0, q(0));
        assert_eq!(c_value(&dl(&[1, 0, 0])).0, qf(3, 4));
        assert_eq!(dual_c_value(&dl(&[0, 1])).0, qf(2, 3));
        assert_eq!(c_value(&dl(&[1, 1])), dual_c_value(&dl(&[1, 1])));
        assert_eq!(c_value(&dl(&[1, 1])).0, q(1));
    }

    #[test]
    fn filtration_lengths() {
        assert_eq!(filtration_length(&dl(&[0, 1])), 1);
        assert_eq!(filtration_length(&dl(&[0, 0, 0, 0])), 0);
        assert_eq!(filtration_length(&dl(&[1, 2, 0])), 3);
    }

    #[test]
    fn c_plus_dual_is_filtration_length() {
        for n in 1..=6 {
            for d in DynkinLabels::enumerate(n, 6) {
                let sum = c_value(&d).0 + dual_c_value(&d).0;
                assert_eq!(sum, q(filtration_length(&d) as i64), "{d}");
            }
        }
    }

    #[test]
    fn grade_denominators_divide_n_plus_one() {
        for n in 1..=5 {
            for d in DynkinLabels::enumerate(n, 4) {
                let c = c_value(&d).0;
                assert!(BigInt::from(n as i64 + 1) % c.denom() == BigInt::zero());
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim_u64(&[1]), 2);
        assert_eq!(weyl_dim_u64(&[2]), 3);
        assert_eq!(weyl_dim_u64(&[1, 1]), 8);
        assert_eq!(weyl_dim_u64(&[]), 1);
        assert_eq!(weyl_dim_u64(&[1, 0, 0, 1]), 24);
        assert_eq!(weyl_dim_u64(&[0, 1, 0]), 6);
    }

    #[test]
    fn weyl_dim_is_reversal_invariant() {
        for n in 1..=5 {
            for d in DynkinLabels::enumerate(n, 5) {
                assert_eq!(weyl_dim(d.labels()), weyl_dim(d.reversed().labels()), "{d}");
            }
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(labels_to_partition(&[2]).parts(), &[2]);
        assert_eq!(labels_to_partition(&[1, 1]).parts(), &[2, 1]);
        let p = Partition::new(vec![3, 3, 3]).unwrap();
        assert_eq!(partition_to_labels(&p, 3).unwrap(), LeviLabels(vec![0, 0]));
        let p = Partition::new(vec![1, 1, 1, 1]).unwrap();
        assert!(matches!(
            partition_to_labels(&p, 3),
            Err(Error::TooManyParts { .. })
        ));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().len(), 2);
        assert_eq!(
            Partition::new(vec![3, 1]).unwrap().conjugate().parts(),
            &[2, 1, 1]
        );
    }

    #[test]
    fn label_partition_round_trip() {
        for m in 1..=5 {
            for d in DynkinLabels::enumerate(m.max(1), 5) {
                let labels = &d.labels()[..m - 1];
                let p = labels_to_partition(labels);
                assert_eq!(partition_to_labels(&p, m).unwrap().0, labels);
            }
        }
    }

    #[test]
    fn grades_and_offsets() {
        let d = dl(&[0, 1]);
        let g = d.grade_at(3);
        assert_eq!(g.0, qf(8, 3));
        assert_eq!(g.integer_grade(&d), Some(3));
        assert_eq!(g.to_string(), "8/3");
        assert_eq!(Grade(qf(1, 2)).offset_from(&Grade(q(0))), None);
    }

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(DynkinLabels::new(0, vec![]), Err(Error::ZeroRank));
        assert!(matches!(
            DynkinLabels::new(2, vec![1]),
            Err(Error::LabelCount { .. })
        ));
    }
}
