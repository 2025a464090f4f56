//! Closed-form Lie algebra cohomology H^r(g_-, V) for the first-node
//! parabolic in sl(n+1), its placement on the E_1 page, BGG operator
//! orders, and the Pieri multiplicity check on operator symbols.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::binomial;
use crate::weights::{
    filtration_length, labels_to_partition, partition_to_labels, weyl_dim, DynkinLabels, Grade,
    LeviLabels, Partition,
};

/// One cohomology module: an sl(n) irreducible with its grading-element eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedIrrepDescriptor {
    pub levi: LeviLabels,
    pub grade: Grade,
    #[serde(with = "dim_serde")]
    pub dim: BigUint,
}

impl GradedIrrepDescriptor {
    pub fn new(levi: LeviLabels, grade: Grade) -> Self {
        let dim = weyl_dim(&levi.0);
        GradedIrrepDescriptor { levi, grade, dim }
    }

    pub fn dim_u64(&self) -> Option<u64> {
        self.dim.to_u64()
    }
}

/// `(r, p, q)`: H^r sits at E_1^{p,q}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct E1Position {
    pub r: usize,
    pub p: i64,
    pub q: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BggComplexData {
    pub labels: DynkinLabels,
    pub cohomology: Vec<GradedIrrepDescriptor>,
    pub positions: Vec<E1Position>,
    pub orders: Vec<u64>,
}

impl BggComplexData {
    pub fn new(d: &DynkinLabels) -> Self {
        BggComplexData {
            labels: d.clone(),
            cohomology: cohomology_table(d),
            positions: e1_positions(d),
            orders: operator_orders(d),
        }
    }

    pub fn n(&self) -> usize {
        self.labels.n()
    }
}

/// Kostant's table for the first-node parabolic, `n + 1` entries.
///
/// For `n = 1` the Levi factor is sl(1): both entries carry the empty label.
pub fn cohomology_table(d: &DynkinLabels) -> Vec<GradedIrrepDescriptor> {
    let n = d.n();
    let a = d.labels();
    (0..=n)
        .map(|r| {
            let levi: Vec<u32> = if n == 1 {
                Vec::new()
            } else if r == 0 {
                a[1..].to_vec()
            } else if r == n {
                a[..n - 1].to_vec()
            } else {
                let mut l = a[..r - 1].to_vec();
                l.push(a[r - 1] + a[r] + 1);
                l.extend_from_slice(&a[r + 1..]);
                l
            };
            let k = d.partial_sum(r) as i64 + r as i64;
            GradedIrrepDescriptor::new(LeviLabels(levi), d.grade_at(k))
        })
        .collect()
}

/// `(r, a_1+..+a_r + r, -(a_1+..+a_r))` for `r = 0..=n`.
pub fn e1_positions(d: &DynkinLabels) -> Vec<E1Position> {
    (0..=d.n())
        .map(|r| {
            let s = d.partial_sum(r) as i64;
            E1Position {
                r,
                p: s + r as i64,
                q: -s,
            }
        })
        .collect()
}

/// `s_r = a_{r+1} + 1` for the operator `H^r -> H^{r+1}`.
pub fn operator_orders(d: &DynkinLabels) -> Vec<u64> {
    d.labels().iter().map(|&a| a as u64 + 1).collect()
}

/// All partitions obtained from `lambda` by adding a horizontal strip of `s` boxes.
pub fn horizontal_strips(lambda: &Partition, s: u32) -> Vec<Partition> {
    // Row i may grow up to the old length of row i-1; row 0 is unbounded.
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn rec(i: usize, left: u32, lambda: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if left == 0 {
                let parts: Vec<u32> = cur
                    .iter()
                    .enumerate()
                    .map(|(j, add)| lambda.part(j) + add)
                    .collect();
                out.push(Partition::new(parts).expect("horizontal strip keeps the shape"));
            }
            return;
        }
        let cap = if i == 0 {
            left
        } else {
            (lambda.part(i - 1) - lambda.part(i)).min(left)
        };
        for add in 0..=cap {
            cur[i] = add;
            rec(i + 1, left - add, lambda, cur, out);
        }
    }
    rec(0, s, lambda, &mut cur, &mut out);
    out
}

/// Multiplicity of `target` in `Sym^s(std) (x) source` for sl(m), by the Pieri rule.
///
/// Both label vectors must have the same length `m - 1`. Strips that produce
/// more than `m` rows are impossible for label-derived partitions.
pub fn pieri_multiplicity(s: u32, source: &LeviLabels, target: &LeviLabels) -> Result<u32> {
    if source.0.len() != target.0.len() {
        return Err(Error::LabelCount {
            expected: source.0.len(),
            got: target.0.len(),
        });
    }
    let m = source.m();
    let lambda = labels_to_partition(&source.0);
    let mut count = 0;
    for mu in horizontal_strips(&lambda, s) {
        if mu.len() > m {
            continue;
        }
        if partition_to_labels(&mu, m)? == *target {
            count += 1;
        }
    }
    Ok(count)
}

/// Column Euler characteristic check on the E_0 page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnVerdict {
    pub p: i64,
    pub chi: i64,
    pub expected: i64,
    pub ok: bool,
}

/// For each column p, compares `sum_q (-1)^q C(n, p+q) dim V_{-q}` with the
/// signed dimension of the single E_1 entry predicted in that column (or 0).
pub fn graded_euler_check(
    d: &DynkinLabels,
    grade_dims: &BTreeMap<i64, u64>,
) -> Result<Vec<ColumnVerdict>> {
    let n = d.n() as i64;
    let big_n = filtration_length(d) as i64;
    for k in 0..=big_n {
        if !grade_dims.contains_key(&k) {
            return Err(Error::MissingGrade(k));
        }
    }
    let table = cohomology_table(d);
    let positions = e1_positions(d);
    let verdicts = (0..=big_n + n)
        .map(|p| {
            let chi: i64 = (0..=big_n)
                .map(|k| {
                    // q = -k
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binomial(n, p - k) * grade_dims[&k] as i64
                })
                .sum();
            let expected = positions
                .iter()
                .find(|pos| pos.p == p)
                .map(|pos| {
                    let sign = if pos.q % 2 == 0 { 1 } else { -1 };
                    sign * table[pos.r].dim_u64().expect("small dimension") as i64
                })
                .unwrap_or(0);
            ColumnVerdict {
                p,
                chi,
                expected,
                ok: chi == expected,
            }
        })
        .collect();
    Ok(verdicts)
}

/// Serializes dimensions as JSON numbers when they fit in `u64`, otherwise as decimal strings.
pub mod dim_serde {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(x) => s.serialize_u64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(BigUint::from(x)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
