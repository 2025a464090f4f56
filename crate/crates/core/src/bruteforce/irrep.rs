//! Irreducible sl(n+1)-modules realized inside tensor powers of the
//! standard module by Young symmetrizers.
//!
//! For a highest-weight partition `lambda` of size d, the symmetrizer
//! (symmetrize rows, then antisymmetrize columns) is applied to tensors
//! `e_T` read off semistandard fillings T. Every such vector is a weight
//! vector, so the basis extracted per weight space diagonalizes H.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, SparseMatrix, Q};
use crate::weights::{
    c_value, filtration_length, labels_to_partition, weyl_dim, weyl_dim_u64, DynkinLabels,
    Partition,
};

pub const DEFAULT_DEGREE_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Largest tensor degree the construction will attempt.
    pub degree_bound: usize,
    /// Also compute every `E_ij` (`i != j`), not just the g_- generators.
    pub full_generators: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            degree_bound: DEFAULT_DEGREE_BOUND,
            full_generators: false,
        }
    }
}

/// An explicit representation with exact-rational matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConcreteRep {
    pub labels: DynkinLabels,
    pub dim: usize,
    /// How the basis was produced.
    pub provenance: String,
    /// gl(n+1)-weight of each basis vector.
    pub weights: Vec<Vec<i64>>,
    pub h_matrix: SparseMatrix,
    /// Actions of `E_{α+1,1}`, α = 1..n.
    pub gminus: Vec<SparseMatrix>,
    /// `E_ij` for all `i != j` (0-based), when requested.
    pub generators: Option<BTreeMap<(usize, usize), SparseMatrix>>,
}

impl ConcreteRep {
    /// The one-dimensional trivial module of sl(n+1).
    pub fn trivial(n: usize) -> Self {
        let labels = DynkinLabels::new(n, vec![0; n]).expect("n > 0");
        ConcreteRep {
            labels,
            dim: 1,
            provenance: "trivial".into(),
            weights: vec![vec![0; n + 1]],
            h_matrix: SparseMatrix::zeros(1, 1),
            gminus: vec![SparseMatrix::zeros(1, 1); n],
            generators: None,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.n()
    }

    /// Diagonal of `h_matrix`, if it is diagonal.
    pub fn h_diagonal(&self) -> Option<Vec<Q>> {
        let diag_only = self.h_matrix.entries().all(|(i, j, _)| i == j);
        diag_only.then(|| (0..self.dim).map(|i| self.h_matrix.get(i, i)).collect())
    }

    /// The contragredient module: `X -> -X^T`, basis reversed so grades stay ascending.
    pub fn dual(&self) -> ConcreteRep {
        let dim = self.dim;
        let flip = |m: &SparseMatrix| {
            let mut out = SparseMatrix::zeros(dim, dim);
            for (i, j, v) in m.entries() {
                // (-m^T)[j][i], then reverse both indices
                out.set(dim - 1 - j, dim - 1 - i, -v.clone());
            }
            out
        };
        let mut weights: Vec<Vec<i64>> = self
            .weights
            .iter()
            .map(|w| w.iter().map(|x| -x).collect())
            .collect();
        weights.reverse();
        ConcreteRep {
            labels: self.labels.reversed(),
            dim,
            provenance: format!("dual of {}", self.provenance),
            weights,
            h_matrix: flip(&self.h_matrix),
            gminus: self.gminus.iter().map(flip).collect(),
            generators: self
                .generators
                .as_ref()
                .map(|g| g.iter().map(|(k, m)| (*k, flip(m))).collect()),
        }
    }
}

/// Tensor degree of the highest-weight partition for highest-weight labels `b`.
fn tensor_degree(b: &[u32]) -> usize {
    b.iter()
        .enumerate()
        .map(|(i, &x)| (i + 1) * x as usize)
        .sum()
}

pub fn build_irrep(d: &DynkinLabels) -> Result<ConcreteRep> {
    build_irrep_with(d, &BuildOptions::default())
}

/// Builds the module with lowest weight `-[a_1..a_n]`.
///
/// Whichever of V and V* has the smaller tensor degree is constructed
/// directly; the other is obtained by dualizing.
pub fn build_irrep_with(d: &DynkinLabels, opts: &BuildOptions) -> Result<ConcreteRep> {
    let direct = tensor_degree(&d.highest_weight_labels());
    let via_dual = tensor_degree(d.labels());
    let degree = direct.min(via_dual);
    if degree > opts.degree_bound {
        return Err(Error::TooLarge {
            degree,
            bound: opts.degree_bound,
            dim: weyl_dim_u64(d.labels()),
        });
    }
    if via_dual < direct {
        let rep = young_module(d.n(), d.labels(), opts)?;
        let mut v = rep.dual();
        v.labels = d.clone();
        Ok(v)
    } else {
        let mut v = young_module(d.n(), &d.highest_weight_labels(), opts)?;
        v.labels = d.clone();
        Ok(v)
    }
}

type Tensor = u64;
type SparseVec = HashMap<Tensor, Q>;

struct TensorShape {
    letters: u64,
    degree: usize,
}

impl TensorShape {
    fn encode(&self, idx: &[u8]) -> Tensor {
        idx.iter().fold(0, |acc, &x| acc * self.letters + x as u64)
    }

    fn decode(&self, mut t: Tensor) -> Vec<u8> {
        let mut out = vec![0u8; self.degree];
        for slot in out.iter_mut().rev() {
            *slot = (t % self.letters) as u8;
            t /= self.letters;
        }
        out
    }
}

/// Permutations of a set of positions together with their signs.
fn block_permutations(blocks: &[Vec<usize>], degree: usize) -> Vec<(Vec<usize>, i32)> {
    let mut perms: Vec<(Vec<usize>, i32)> = vec![((0..degree).collect(), 1)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let local = permutations(block.len());
        let mut next = Vec::with_capacity(perms.len() * local.len());
        for (p, s) in &perms {
            for (lp, ls) in &local {
                let mut q = p.clone();
                for (k, &src) in lp.iter().enumerate() {
                    q[block[k]] = p[block[src]];
                }
                next.push((q, s * ls));
            }
        }
        perms = next;
    }
    perms
}

/// All permutations of `0..k` with signs (Heap's algorithm would do; k is tiny).
pub(crate) fn permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        // insert k-1 at each position; moving it left past j elements flips sign j times
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let moves = (p.len() - pos) as i32;
            out.push((q, if moves % 2 == 0 { s } else { -s }));
        }
    }
    out
}

struct Symmetrizer {
    shape: TensorShape,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
    col_perms: Vec<(Vec<usize>, i32)>,
}

impl Symmetrizer {
    fn new(lambda: &Partition, letters: u64) -> Self {
        let degree = lambda.size();
        let mut rows = Vec::new();
        let mut offset = 0;
        for &len in lambda.parts() {
            rows.push((offset..offset + len as usize).collect::<Vec<_>>());
            offset += len as usize;
        }
        let cols: Vec<Vec<usize>> = (0..lambda.part(0) as usize)
            .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        let col_perms = block_permutations(&cols, degree);
        Symmetrizer {
            shape: TensorShape { letters, degree },
            rows,
            cols,
            col_perms,
        }
    }

    /// Column antisymmetrization of the row symmetrization of `e_idx`, up to a
    /// nonzero scalar.
    fn apply(&self, idx: &[u8]) -> SparseVec {
        // distinct rearrangements inside each row
        let mut fillings: Vec<Vec<u8>> = vec![idx.to_vec()];
        for row in &self.rows {
            let mut next = Vec::new();
            for f in &fillings {
                let content: Vec<u8> = row.iter().map(|&p| f[p]).collect();
                for arr in distinct_arrangements(&content) {
                    let mut g = f.clone();
                    for (k, &p) in row.iter().enumerate() {
                        g[p] = arr[k];
                    }
                    next.push(g);
                }
            }
            fillings = next;
        }
        let mut out: SparseVec = HashMap::new();
        for f in &fillings {
            let repeats = self.cols.iter().any(|col| {
                let mut seen = 0u64;
                col.iter().any(|&p| {
                    let bit = 1u64 << f[p];
                    let dup = seen & bit != 0;
                    seen |= bit;
                    dup
                })
            });
            if repeats {
                continue;
            }
            for (perm, sign) in &self.col_perms {
                let permuted: Vec<u8> = perm.iter().map(|&src| f[src]).collect();
                let key = self.shape.encode(&permuted);
                *out.entry(key).or_insert_with(Q::zero) += q(*sign as i64);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Distinct orderings of a multiset, in lexicographic order.
fn distinct_arrangements(content: &[u8]) -> Vec<Vec<u8>> {
    let mut sorted = content.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation loop
    while let Some(k) = (0..sorted.len().saturating_sub(1))
        .rev()
        .find(|&i| sorted[i] < sorted[i + 1])
    {
        let l = (k + 1..sorted.len())
            .rev()
            .find(|&j| sorted[k] < sorted[j])
            .expect("successor exists");
        sorted.swap(k, l);
        sorted[k + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Semistandard fillings of `lambda` with letters `0..letters`, row-major.
/// With `strict_columns = false` only rows are constrained (weakly increasing).
fn fillings(lambda: &Partition, letters: u8, strict_columns: bool) -> Vec<Vec<u8>> {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut boxes = Vec::new();
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            boxes.push((r, c));
        }
    }
    let offsets: Vec<usize> = shape
        .iter()
        .scan(0, |acc, &len| {
            let o = *acc;
            *acc += len;
            Some(o)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0u8; boxes.len()];
    fn rec(
        k: usize,
        boxes: &[(usize, usize)],
        offsets: &[usize],
        letters: u8,
        strict: bool,
        cur: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if k == boxes.len() {
            out.push(cur.clone());
            return;
        }
        let (r, c) = boxes[k];
        let mut lo = if c > 0 { cur[k - 1] } else { 0 };
        if strict && r > 0 {
            lo = lo.max(cur[offsets[r - 1] + c] + 1);
        }
        for x in lo..letters {
            cur[k] = x;
            rec(k + 1, boxes, offsets, letters, strict, cur, out);
        }
    }
    rec(
        0,
        &boxes,
        &offsets,
        letters,
        strict_columns,
        &mut cur,
        &mut out,
    );
    out
}

/// Incremental row echelon form of a weight space, tracking each reduced row
/// as a combination of the chosen basis vectors.
#[derive(Default)]
struct Echelon {
    basis: Vec<SparseVec>,
    rows: Vec<(Tensor, SparseVec, Vec<Q>)>,
}

impl Echelon {
    /// Returns `(coordinates in the basis, residual)`.
    fn reduce(&self, v: &SparseVec) -> (Vec<Q>, SparseVec) {
        let mut x = v.clone();
        let mut coords = vec![Q::zero(); self.basis.len()];
        for (pivot, row, combo) in &self.rows {
            let Some(c) = x.get(pivot).cloned() else {
                continue;
            };
            let f = c / &row[pivot];
            for (k, val) in row {
                let e = x.entry(*k).or_insert_with(Q::zero);
                *e -= &f * val;
                if e.is_zero() {
                    x.remove(k);
                }
            }
            for (i, t) in combo.iter().enumerate() {
                if !t.is_zero() {
                    coords[i] += &f * t;
                }
            }
        }
        (coords, x)
    }

    /// Adds `v` if it is independent of the current basis.
    fn insert(&mut self, v: SparseVec) -> bool {
        if v.is_empty() {
            return false;
        }
        let (coords, residual) = self.reduce(&v);
        if residual.is_empty() {
            return false;
        }
        let pivot = *residual.keys().min().expect("nonempty residual");
        let mut combo: Vec<Q> = coords.into_iter().map(|c| -c).collect();
        combo.push(q(1));
        for (_, _, c) in &mut self.rows {
            c.push(Q::zero());
        }
        self.basis.push(v);
        self.rows.push((pivot, residual, combo));
        true
    }
}

fn content_of(idx: &[u8], letters: usize) -> Vec<u8> {
    let mut c = vec![0u8; letters];
    for &x in idx {
        c[x as usize] += 1;
    }
    c
}

/// `E_{to,from}` acting as a derivation on a tensor vector.
fn apply_elementary(shape: &TensorShape, v: &SparseVec, to: u8, from: u8) -> SparseVec {
    let mut out: SparseVec = HashMap::new();
    for (t, c) in v {
        let idx = shape.decode(*t);
        for pos in 0..idx.len() {
            if idx[pos] == from {
                let mut j = idx.clone();
                j[pos] = to;
                let e = out.entry(shape.encode(&j)).or_insert_with(Q::zero);
                *e += c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The irreducible gl(n+1)-module with highest-weight labels `hw`, as a
/// ConcreteRep whose `labels` field is provisional (set by the caller).
fn young_module(n: usize, hw: &[u32], opts: &BuildOptions) -> Result<ConcreteRep> {
    let lambda = labels_to_partition(hw);
    let letters = n + 1;
    let degree = lambda.size();
    let expected = weyl_dim(hw).to_usize().expect("small dimension");
    if (letters as f64).powi(degree as i32) >= 2f64.powi(63) || letters > 64 {
        return Err(Error::TooLarge {
            degree,
            bound: opts.degree_bound,
            dim: expected as u64,
        });
    }
    let shape = TensorShape {
        letters: letters as u64,
        degree,
    };
    let sym = Symmetrizer::new(&lambda, letters as u64);

    let mut spaces: BTreeMap<Vec<u8>, Echelon> = BTreeMap::new();
    let mut total = 0;
    for strict in [true, false] {
        for filling in fillings(&lambda, letters as u8, strict) {
            let v = sym.apply(&filling);
            let ws = spaces.entry(content_of(&filling, letters)).or_default();
            if ws.insert(v) {
                total += 1;
            }
        }
        if total == expected {
            break;
        }
    }
    if total != expected {
        return Err(Error::Invariant(format!(
            "Young symmetrizer image has dimension {total}, expected {expected}"
        )));
    }

    // Order weight spaces by grade (content of letter 0), then content.
    let mut keys: Vec<Vec<u8>> = spaces.keys().cloned().collect();
    keys.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| a.cmp(b)));
    let mut offset: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut weights = Vec::with_capacity(expected);
    let mut acc = 0;
    for k in &keys {
        offset.insert(k.clone(), acc);
        let size = spaces[k].basis.len();
        for _ in 0..size {
            weights.push(k.iter().map(|&x| x as i64).collect::<Vec<i64>>());
        }
        acc += size;
    }

    let shift = Q::new(BigInt::from(degree as i64), BigInt::from(letters as i64));
    let h_diag: Vec<Q> = weights.iter().map(|w| q(w[0]) - &shift).collect();

    let action = |to: usize, from: usize| -> Result<SparseMatrix> {
        let mut m = SparseMatrix::zeros(expected, expected);
        for k in &keys {
            if k[from] == 0 {
                continue;
            }
            let mut target = k.clone();
            target[from] -= 1;
            target[to] += 1;
            let ts = spaces.get(&target);
            let src = &spaces[k];
            for (i, b) in src.basis.iter().enumerate() {
                let image = apply_elementary(&shape, b, to as u8, from as u8);
                if image.is_empty() {
                    continue;
                }
                let Some(ts) = ts else {
                    return Err(Error::Invariant(format!(
                        "E_{to}{from} leaves the module at weight {k:?}"
                    )));
                };
                let (coords, residual) = ts.reduce(&image);
                if !residual.is_empty() {
                    return Err(Error::Invariant(format!(
                        "image of E_{to}{from} not in the span at weight {target:?}"
                    )));
                }
                for (j, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(offset[&target] + j, offset[k] + i, c);
                    }
                }
            }
        }
        Ok(m)
    };

    let gminus = (1..letters)
        .map(|alpha| action(alpha, 0))
        .collect::<Result<Vec<_>>>()?;
    let generators = if opts.full_generators {
        let mut g = BTreeMap::new();
        for i in 0..letters {
            for j in 0..letters {
                if i != j {
                    g.insert((i, j), action(i, j)?);
                }
            }
        }
        Some(g)
    } else {
        None
    };

    Ok(ConcreteRep {
        labels: DynkinLabels::new(n, hw.iter().rev().copied().collect())?,
        dim: expected,
        provenance: format!("young symmetrizer, partition {:?}", lambda.parts()),
        weights,
        h_matrix: SparseMatrix::diagonal(&h_diag),
        gminus,
        generators,
    })
}

/// `dim V_k` for `k = 0..=N`, from kernels of `H - (-c + k)`.
pub fn grade_dimensions(rep: &ConcreteRep) -> Result<BTreeMap<i64, u64>> {
    let d = &rep.labels;
    let big_n = filtration_length(d) as i64;
    let c = c_value(d).0;
    let mut out = BTreeMap::new();
    let diag = rep.h_diagonal();
    for k in 0..=big_n {
        let eig = q(k) - &c;
        let dim = match &diag {
            Some(h) => h.iter().filter(|x| **x == eig).count(),
            None => {
                let shifted = rep
                    .h_matrix
                    .sub(&SparseMatrix::identity(rep.dim).scale(&eig));
                rep.dim - shifted.rank()
            }
        };
        out.insert(k, dim as u64);
    }
    let total: u64 = out.values().sum();
    if total != rep.dim as u64 {
        return Err(Error::Invariant(format!(
            "H eigenspaces for -c+k, k=0..{big_n}, span {total} of {} dimensions",
            rep.dim
        )));
    }
    if out[&0] == 0 || out[&big_n] == 0 {
        return Err(Error::Invariant(
            "extreme grades V_0 and V_N must be nonzero".into(),
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeLoweringVerdict {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Checks `[H, rho_α] = -rho_α` for every g_- generator.
pub fn check_grade_lowering(rep: &ConcreteRep) -> GradeLoweringVerdict {
    let mut failures = Vec::new();
    for (alpha, rho) in rep.gminus.iter().enumerate() {
        let comm = rep.h_matrix.commutator(rho);
        let defect = comm.add(rho);
        if !defect.is_zero() {
            let (i, j, _) = defect.entries().next().expect("nonzero defect");
            failures.push(format!(
                "rho_{} does not lower the grade by one (entry {i},{j})",
                alpha + 1
            ));
        }
    }
    GradeLoweringVerdict {
        ok: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qf;

    fn dl(labels: &[u32]) -> DynkinLabels {
        DynkinLabels::from_slice(labels).unwrap()
    }

    fn h_eigs(rep: &ConcreteRep) -> Vec<Q> {
        rep.h_diagonal().unwrap()
    }

    #[test]
    fn standard_representation() {
        let rep = build_irrep(&dl(&[0, 1])).unwrap();
        assert_eq!(rep.dim, 3);
        assert_eq!(h_eigs(&rep), vec![qf(-1, 3), qf(-1, 3), qf(2, 3)]);
        let gd = grade_dimensions(&rep).unwrap();
        assert_eq!(gd, BTreeMap::from([(0, 2), (1, 1)]));
        assert!(check_grade_lowering(&rep).ok);
    }

    #[test]
    fn dual_standard() {
        let rep = build_irrep(&dl(&[1, 0])).unwrap();
        assert_eq!(rep.dim, 3);
        assert_eq!(
            grade_dimensions(&rep).unwrap(),
            BTreeMap::from([(0, 1), (1, 2)])
        );
        assert!(check_grade_lowering(&rep).ok);
    }

    #[test]
    fn trivial_rep() {
        for n in 1..=4 {
            let rep = build_irrep(&DynkinLabels::new(n, vec![0; n]).unwrap()).unwrap();
            assert_eq!(rep.dim, 1);
            assert!(rep.h_matrix.is_zero());
            assert!(rep.gminus.iter().all(SparseMatrix::is_zero));
            assert_eq!(grade_dimensions(&rep).unwrap(), BTreeMap::from([(0, 1)]));
            assert!(check_grade_lowering(&rep).ok);
        }
    }

    #[test]
    fn adjoint_sl3() {
        let rep = build_irrep(&dl(&[1, 1])).unwrap();
        assert_eq!(rep.dim, 8);
        assert_eq!(
            grade_dimensions(&rep).unwrap(),
            BTreeMap::from([(0, 2), (1, 4), (2, 2)])
        );
    }

    #[test]
    fn transposed_generator_fails_grade_lowering() {
        let mut rep = build_irrep(&dl(&[0, 1])).unwrap();
        rep.gminus[0] = rep.gminus[0].transpose();
        let v = check_grade_lowering(&rep);
        assert!(!v.ok);
        assert_eq!(v.failures.len(), 1);
    }

    #[test]
    fn degree_bound_is_enforced() {
        let opts = BuildOptions {
            degree_bound: 2,
            ..Default::default()
        };
        let err = build_irrep_with(&dl(&[0, 3]), &opts).unwrap_err();
        assert!(matches!(
            err,
            Error::TooLarge {
                degree: 3,
                dim: 10,
                ..
            }
        ));
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, s)| *s == -1).count();
        assert_eq!(odd, 3);
        for (p, s) in &perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(*s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    /// Full sl(n+1) relations `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj` hold on the built basis.
    #[test]
    fn generators_satisfy_gl_relations() {
        for labels in [vec![1u32, 1], vec![0, 2], vec![2, 1], vec![1, 0, 1]] {
            let d = dl(&labels);
            let opts = BuildOptions {
                full_generators: true,
                ..Default::default()
            };
            let rep = build_irrep_with(&d, &opts).unwrap();
            let g = rep.generators.as_ref().unwrap();
            let letters = d.n() + 1;
            let diag = |i: usize| {
                let entries: Vec<Q> = rep.weights.iter().map(|w| q(w[i])).collect();
                SparseMatrix::diagonal(&entries)
            };
            let e = |i: usize, j: usize| if i == j { diag(i) } else { g[&(i, j)].clone() };
            for i in 0..letters {
                for j in 0..letters {
                    for k in 0..letters {
                        for l in 0..letters {
                            if i == j || k == l {
                                continue;
                            }
                            let lhs = e(i, j).commutator(&e(k, l));
                            let mut rhs = SparseMatrix::zeros(rep.dim, rep.dim);
                            if j == k {
                                rhs = rhs.add(&e(i, l));
                            }
                            if l == i {
                                rhs = rhs.sub(&e(k, j));
                            }
                            assert_eq!(lhs, rhs, "{d}: [E{i}{j}, E{k}{l}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for n in 1..=3 {
            for d in DynkinLabels::enumerate(n, 3) {
                let rep = build_irrep(&d).unwrap();
                assert_eq!(rep.dim as u64, weyl_dim_u64(d.labels()), "{d}");
                let gd = grade_dimensions(&rep).unwrap();
                let dual = grade_dimensions(&build_irrep(&d.reversed()).unwrap()).unwrap();
                let big_n = filtration_length(&d) as i64;
                for k in 0..=big_n {
                    assert_eq!(gd[&k], dual[&(big_n - k)], "{d} k={k}");
                }
                assert!(check_grade_lowering(&rep).ok, "{d}");
            }
        }
    }
}
