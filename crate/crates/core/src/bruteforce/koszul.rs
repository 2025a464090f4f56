//! Cochain complexes `Hom(Λ^p g, V)` with the normalized Koszul differential.
//!
//! Cochains are indexed by `(S, i)` with `S` a p-subset of the basis of g
//! (lexicographic order) and `i` a basis index of V; the flat index is
//! `subset_index * dim_v + i`.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::irrep::{permutations, ConcreteRep};
use super::lie::LieAlgebraData;
use crate::error::{Error, Result};
use crate::linalg::{binomial, q, qf, SparseMatrix, Q};

/// p-subsets of `0..m` as bitmasks, lexicographic in their sorted elements.
fn subsets(m: usize, p: usize) -> Vec<u32> {
    fn rec(start: usize, m: usize, left: usize, mask: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for x in start..m {
            if m - x < left {
                break;
            }
            rec(x + 1, m, left - 1, mask | (1 << x), out);
        }
    }
    let mut out = Vec::new();
    rec(0, m, p, 0, &mut out);
    out
}

fn elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

struct SubsetIndex {
    index: Vec<HashMap<u32, usize>>,
}

impl SubsetIndex {
    fn new(m: usize) -> Self {
        let index = (0..=m)
            .map(|p| {
                subsets(m, p)
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        SubsetIndex { index }
    }

    fn of(&self, mask: u32) -> usize {
        self.index[mask.count_ones() as usize][&mask]
    }

    /// Subset index and sorting sign of an index tuple; `None` on repeats.
    fn tuple(&self, t: &[usize]) -> Option<(usize, i64)> {
        let mut mask = 0u32;
        let mut inversions = 0;
        for (k, &x) in t.iter().enumerate() {
            if mask & (1 << x) != 0 {
                return None;
            }
            mask |= 1 << x;
            inversions += t[..k].iter().filter(|&&y| y > x).count();
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((self.of(mask), sign))
    }
}

fn antisymmetric_part(g: &LieAlgebraData) -> Vec<Vec<Vec<Q>>> {
    let half = qf(1, 2);
    (0..g.dim)
        .map(|a| {
            (0..g.dim)
                .map(|b| {
                    (0..g.dim)
                        .map(|c| (&g.gamma[a][b][c] - &g.gamma[b][a][c]) * &half)
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// The differential `C^p -> C^{p+1}`, built by summing over subsets.
pub fn koszul_differential(g: &LieAlgebraData, p: usize) -> SparseMatrix {
    let m = g.dim;
    let dv = g.dim_v;
    let idx = SubsetIndex::new(m);
    let targets = subsets(m, p + 1);
    let mut out = SparseMatrix::zeros(
        targets.len() * dv,
        binomial(m as i64, p as i64) as usize * dv,
    );
    if p >= m {
        return out;
    }
    let norm = qf(1, p as i64 + 1);
    let anti = antisymmetric_part(g);
    for (ti, &tmask) in targets.iter().enumerate() {
        let t = elements(tmask);
        for (a, &ta) in t.iter().enumerate() {
            let si = idx.of(tmask & !(1 << ta));
            let sign = if a % 2 == 0 {
                norm.clone()
            } else {
                -norm.clone()
            };
            for (i, j, v) in g.rho[ta].entries() {
                out.add_to(ti * dv + i, si * dv + j, &(&sign * v));
            }
        }
        for a in 0..t.len() {
            for b in a + 1..t.len() {
                let rest = tmask & !(1 << t[a]) & !(1 << t[b]);
                let pair_sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                for (eps, coeff) in anti[t[a]][t[b]].iter().enumerate() {
                    if coeff.is_zero() || rest & (1 << eps) != 0 {
                        continue;
                    }
                    let below = (rest & ((1u32 << eps) - 1)).count_ones();
                    let sort_sign = if below.is_multiple_of(2) { 1 } else { -1 };
                    let si = idx.of(rest | (1 << eps));
                    let val = coeff * &norm * q(pair_sign * sort_sign);
                    for i in 0..dv {
                        out.add_to(ti * dv + i, si * dv + i, &val);
                    }
                }
            }
        }
    }
    out
}

/// The same differential, built literally from the antisymmetrized sum over
/// all orderings `σ` of each target subset, with the raw structure constants.
pub fn koszul_differential_tuples(g: &LieAlgebraData, p: usize) -> SparseMatrix {
    let m = g.dim;
    let dv = g.dim_v;
    let idx = SubsetIndex::new(m);
    let targets = subsets(m, p + 1);
    let mut out = SparseMatrix::zeros(
        targets.len() * dv,
        binomial(m as i64, p as i64) as usize * dv,
    );
    if p >= m {
        return out;
    }
    let factorial: i64 = (1..=p as i64 + 1).product();
    let perms = permutations(p + 1);
    let bracket_factor = qf(
        if p.is_multiple_of(2) {
            p as i64
        } else {
            -(p as i64)
        },
        2,
    );
    for (ti, &tmask) in targets.iter().enumerate() {
        let t = elements(tmask);
        for (perm, sgn) in &perms {
            let alpha: Vec<usize> = perm.iter().map(|&k| t[k]).collect();
            let coef = qf(*sgn as i64, factorial);
            if let Some((si, s)) = idx.tuple(&alpha[1..]) {
                let c = &coef * q(s);
                for (i, j, v) in g.rho[alpha[0]].entries() {
                    out.add_to(ti * dv + i, si * dv + j, &(&c * v));
                }
            }
            if p >= 1 {
                for (eps, gam) in g.gamma[alpha[0]][alpha[1]].iter().enumerate() {
                    if gam.is_zero() {
                        continue;
                    }
                    let mut tuple = alpha[2..].to_vec();
                    tuple.push(eps);
                    if let Some((si, s)) = idx.tuple(&tuple) {
                        let val = &coef * &bracket_factor * gam * q(s);
                        for i in 0..dv {
                            out.add_to(ti * dv + i, si * dv + i, &val);
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KoszulComplex {
    pub m: usize,
    pub dim_v: usize,
    /// `diffs[p]` maps `C^p` to `C^{p+1}`, for `p = 0..m`.
    pub diffs: Vec<SparseMatrix>,
    /// Optional grading: `grades[p][k]` is the grade of basis cochain `k` of `C^p`.
    pub grades: Option<Vec<Vec<Q>>>,
}

impl KoszulComplex {
    pub fn new(g: &LieAlgebraData) -> Self {
        let diffs = (0..g.dim)
            .into_par_iter()
            .map(|p| koszul_differential(g, p))
            .collect();
        KoszulComplex {
            m: g.dim,
            dim_v: g.dim_v,
            diffs,
            grades: None,
        }
    }

    /// The complex of the abelian nilradical acting on `V` through its
    /// grade-lowering generators, graded by `|S| + h_i`.
    pub fn projective(rep: &ConcreteRep) -> Result<Self> {
        let h = rep
            .h_diagonal()
            .ok_or_else(|| Error::Invariant("grading element is not diagonal".into()))?;
        let g = LieAlgebraData::abelian_with_rep(rep.gminus.clone());
        let mut complex = Self::new(&g);
        let grades = (0..=g.dim)
            .map(|p| {
                let count = subsets(g.dim, p).len();
                (0..count)
                    .flat_map(|_| h.iter().map(|x| x + q(p as i64)))
                    .collect()
            })
            .collect();
        complex.grades = Some(grades);
        Ok(complex)
    }

    pub fn cochain_dim(&self, p: usize) -> usize {
        binomial(self.m as i64, p as i64) as usize * self.dim_v
    }
}

/// Fails with `NotAComplex(p, p + 1)` at the first nonzero `d_{p+1} d_p`.
pub fn check_d_squared(c: &KoszulComplex) -> Result<()> {
    let bad = (0..c.diffs.len().saturating_sub(1))
        .into_par_iter()
        .find_first(|&p| !c.diffs[p + 1].mul(&c.diffs[p]).is_zero());
    match bad {
        Some(p) => Err(Error::NotAComplex(p, p + 1)),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyEntry {
    pub p: usize,
    pub grade: Option<Q>,
    pub dim: usize,
}

/// Nonzero cohomology, per grade when the complex is graded.
pub fn cohomology_dims(c: &KoszulComplex) -> Result<Vec<CohomologyEntry>> {
    check_d_squared(c)?;
    let Some(grades) = &c.grades else {
        let ranks: Vec<usize> = c.diffs.par_iter().map(SparseMatrix::rank).collect();
        return Ok((0..=c.m)
            .map(|p| {
                let out = if p < c.m { ranks[p] } else { 0 };
                let inc = if p > 0 { ranks[p - 1] } else { 0 };
                CohomologyEntry {
                    p,
                    grade: None,
                    dim: c.cochain_dim(p) - out - inc,
                }
            })
            .filter(|e| e.dim > 0)
            .collect());
    };

    for (p, d) in c.diffs.iter().enumerate() {
        if let Some((i, j, _)) = d
            .entries()
            .find(|(i, j, _)| grades[p + 1][*i] != grades[p][*j])
        {
            return Err(Error::Invariant(format!(
                "d_{p} mixes grades {} and {} (entry {i},{j})",
                grades[p][j],
                grades[p + 1][i]
            )));
        }
    }

    let block = |p: usize, g: &Q| -> Vec<usize> {
        grades[p]
            .iter()
            .enumerate()
            .filter(|(_, x)| *x == g)
            .map(|(k, _)| k)
            .collect()
    };
    let mut jobs: Vec<(usize, Q)> = Vec::new();
    for (p, gp) in grades.iter().enumerate() {
        let mut distinct: Vec<Q> = gp.clone();
        distinct.sort();
        distinct.dedup();
        jobs.extend(distinct.into_iter().map(|g| (p, g)));
    }
    let rank_of = |p: usize, g: &Q| -> usize {
        if p >= c.m {
            return 0;
        }
        let rows = block(p + 1, g);
        let cols = block(p, g);
        if rows.is_empty() || cols.is_empty() {
            return 0;
        }
        c.diffs[p].submatrix(&rows, &cols).rank()
    };
    let mut entries: Vec<CohomologyEntry> = jobs
        .par_iter()
        .map(|(p, g)| {
            let dim = block(*p, g).len();
            let out = rank_of(*p, g);
            let inc = if *p > 0 { rank_of(p - 1, g) } else { 0 };
            CohomologyEntry {
                p: *p,
                grade: Some(g.clone()),
                dim: dim - out - inc,
            }
        })
        .filter(|e| e.dim > 0)
        .collect();
    entries.sort_by(|a, b| a.p.cmp(&b.p).then_with(|| a.grade.cmp(&b.grade)));
    Ok(entries)
}

/// Total dimension of `H^p` for every `p = 0..=m`.
pub fn betti_numbers(c: &KoszulComplex) -> Result<Vec<usize>> {
    let mut betti = vec![0; c.m + 1];
    for e in cohomology_dims(c)? {
        betti[e.p] += e.dim;
    }
    Ok(betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce::irrep::build_irrep;
    use crate::weights::DynkinLabels;

    #[test]
    fn subsets_are_lexicographic() {
        let s: Vec<Vec<usize>> = subsets(4, 2).into_iter().map(elements).collect();
        assert_eq!(
            s,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn both_constructions_agree() {
        for g in [
            LieAlgebraData::heisenberg(),
            LieAlgebraData::sl2_trivial(),
            LieAlgebraData::sl2_adjoint(),
        ] {
            for p in 0..=g.dim {
                assert_eq!(
                    koszul_differential(&g, p),
                    koszul_differential_tuples(&g, p),
                    "{} p={p}",
                    g.name
                );
            }
        }
    }

    #[test]
    fn heisenberg_betti() {
        let c = KoszulComplex::new(&LieAlgebraData::heisenberg());
        assert_eq!(betti_numbers(&c).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn sl2_cohomology() {
        let c = KoszulComplex::new(&LieAlgebraData::sl2_trivial());
        assert_eq!(betti_numbers(&c).unwrap(), vec![1, 0, 0, 1]);
        let c = KoszulComplex::new(&LieAlgebraData::sl2_adjoint());
        assert_eq!(betti_numbers(&c).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn abelian_trivial_betti_are_binomial() {
        let c = KoszulComplex::new(&LieAlgebraData::abelian(4, 1));
        assert_eq!(betti_numbers(&c).unwrap(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn jacobi_violation_breaks_d_squared() {
        let mut g = LieAlgebraData::heisenberg();
        g.gamma[0][2][0] = q(1);
        g.gamma[2][0][0] = q(-1);
        let c = KoszulComplex::new(&g);
        assert!(matches!(check_d_squared(&c), Err(Error::NotAComplex(_, _))));
        assert!(matches!(cohomology_dims(&c), Err(Error::NotAComplex(_, _))));
    }

    #[test]
    fn projective_standard_rep() {
        let rep = build_irrep(&DynkinLabels::from_slice(&[0, 1]).unwrap()).unwrap();
        let c = KoszulComplex::projective(&rep).unwrap();
        let h = cohomology_dims(&c).unwrap();
        let got: Vec<(usize, Q, usize)> = h
            .into_iter()
            .map(|e| (e.p, e.grade.unwrap(), e.dim))
            .collect();
        assert_eq!(
            got,
            vec![(0, qf(-1, 3), 2), (1, qf(2, 3), 3), (2, qf(8, 3), 1)]
        );
    }
}
