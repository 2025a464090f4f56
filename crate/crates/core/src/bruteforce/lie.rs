//! Finite-dimensional Lie algebras given by structure constants, together
//! with a representation, and consistency checks on that data.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{parse_q, q, SparseMatrix, Q};

/// Structure constants `gamma[α][β][γ]` with `[e_α, e_β] = Σ_γ gamma e_γ`,
/// plus matrices `rho[α]` acting on a module of dimension `dim_v`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LieAlgebraData {
    pub name: String,
    pub dim: usize,
    pub gamma: Vec<Vec<Vec<Q>>>,
    pub dim_v: usize,
    pub rho: Vec<SparseMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub failures: Vec<String>,
}

impl Verdict {
    fn from_failures(failures: Vec<String>) -> Self {
        Verdict {
            ok: failures.is_empty(),
            failures,
        }
    }
}

fn zero_gamma(m: usize) -> Vec<Vec<Vec<Q>>> {
    vec![vec![vec![Q::zero(); m]; m]; m]
}

impl LieAlgebraData {
    /// Abelian algebra of dimension `m` acting trivially on a `dim_v`-dimensional space.
    pub fn abelian(m: usize, dim_v: usize) -> Self {
        LieAlgebraData {
            name: format!("abelian{m}"),
            dim: m,
            gamma: zero_gamma(m),
            dim_v,
            rho: vec![SparseMatrix::zeros(dim_v, dim_v); m],
        }
    }

    /// Abelian algebra with given (pairwise commuting) action matrices.
    pub fn abelian_with_rep(rho: Vec<SparseMatrix>) -> Self {
        let m = rho.len();
        let dim_v = rho.first().map_or(1, SparseMatrix::rows);
        LieAlgebraData {
            name: format!("abelian{m}"),
            dim: m,
            gamma: zero_gamma(m),
            dim_v,
            rho,
        }
    }

    /// Heisenberg algebra `[x, y] = z` on the trivial module.
    pub fn heisenberg() -> Self {
        let mut gamma = zero_gamma(3);
        gamma[0][1][2] = q(1);
        gamma[1][0][2] = q(-1);
        LieAlgebraData {
            name: "heisenberg".into(),
            dim: 3,
            gamma,
            dim_v: 1,
            rho: vec![SparseMatrix::zeros(1, 1); 3],
        }
    }

    /// sl(2) in the basis e, h, f on the trivial module.
    pub fn sl2_trivial() -> Self {
        let mut gamma = zero_gamma(3);
        let (e, h, f) = (0, 1, 2);
        gamma[e][f][h] = q(1);
        gamma[f][e][h] = q(-1);
        gamma[h][e][e] = q(2);
        gamma[e][h][e] = q(-2);
        gamma[h][f][f] = q(-2);
        gamma[f][h][f] = q(2);
        LieAlgebraData {
            name: "sl2".into(),
            dim: 3,
            gamma,
            dim_v: 1,
            rho: vec![SparseMatrix::zeros(1, 1); 3],
        }
    }

    /// sl(2) acting on itself.
    pub fn sl2_adjoint() -> Self {
        let mut g = Self::sl2_trivial();
        g.name = "sl2-adjoint".into();
        g.rho = g.adjoint_matrices();
        g.dim_v = 3;
        g
    }

    /// `ad e_α` in the basis `e_γ`: entry `(γ, β)` is `gamma[α][β][γ]`.
    pub fn adjoint_matrices(&self) -> Vec<SparseMatrix> {
        (0..self.dim)
            .map(|a| {
                let mut m = SparseMatrix::zeros(self.dim, self.dim);
                for b in 0..self.dim {
                    for c in 0..self.dim {
                        let v = &self.gamma[a][b][c];
                        if !v.is_zero() {
                            m.set(c, b, v.clone());
                        }
                    }
                }
                m
            })
            .collect()
    }

    /// Parses the JSON algebra file format (see the README).
    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        file.into_data()
    }
}

/// On-disk description of an algebra and module.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dimension: usize,
    /// Entries `[α, β, γ, value]` meaning `gamma[α][β][γ] = value`.
    pub brackets: Vec<(usize, usize, usize, Scalar)>,
    pub representation: RepresentationSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn value(&self) -> Result<Q> {
        match self {
            Scalar::Int(n) => Ok(q(*n)),
            Scalar::Text(s) => {
                parse_q(s).ok_or_else(|| Error::Input(format!("not a rational number: {s:?}")))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepresentationSpec {
    /// `"trivial"` or `"adjoint"`.
    Named(String),
    Matrices {
        matrices: Vec<Vec<Vec<Scalar>>>,
    },
}

impl AlgebraFile {
    pub fn into_data(self) -> Result<LieAlgebraData> {
        let m = self.dimension;
        if m == 0 {
            return Err(Error::Input("dimension must be positive".into()));
        }
        let mut gamma = zero_gamma(m);
        for (a, b, c, v) in &self.brackets {
            if *a >= m || *b >= m || *c >= m {
                return Err(Error::Input(format!(
                    "bracket index out of range in [{a}, {b}, {c}] for dimension {m}"
                )));
            }
            gamma[*a][*b][*c] = v.value()?;
        }
        let mut data = LieAlgebraData {
            name: self.name,
            dim: m,
            gamma,
            dim_v: 1,
            rho: vec![SparseMatrix::zeros(1, 1); m],
        };
        match self.representation {
            RepresentationSpec::Named(s) if s == "trivial" => {}
            RepresentationSpec::Named(s) if s == "adjoint" => {
                data.rho = data.adjoint_matrices();
                data.dim_v = m;
            }
            RepresentationSpec::Named(s) => {
                return Err(Error::Input(format!(
                    "unknown representation {s:?}; expected \"trivial\", \"adjoint\" or matrices"
                )))
            }
            RepresentationSpec::Matrices { matrices } => {
                if matrices.len() != m {
                    return Err(Error::Input(format!(
                        "expected {m} representation matrices, got {}",
                        matrices.len()
                    )));
                }
                let dim_v = matrices[0].len();
                let mut rho = Vec::with_capacity(m);
                for mat in &matrices {
                    if mat.len() != dim_v || mat.iter().any(|r| r.len() != dim_v) {
                        return Err(Error::Input(format!(
                            "representation matrices must all be {dim_v}x{dim_v}"
                        )));
                    }
                    let dense = mat
                        .iter()
                        .map(|r| r.iter().map(Scalar::value).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?;
                    rho.push(SparseMatrix::from_dense(&dense));
                }
                if dim_v == 0 {
                    return Err(Error::Input("module dimension must be positive".into()));
                }
                data.rho = rho;
                data.dim_v = dim_v;
            }
        }
        Ok(data)
    }
}

/// Antisymmetry of the bracket and the Jacobi identity.
#[allow(clippy::needless_range_loop)]
pub fn check_jacobi(g: &LieAlgebraData) -> Verdict {
    let m = g.dim;
    let gm = &g.gamma;
    let mut failures = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if gm[a][b][c] != -gm[b][a][c].clone() {
                    failures.push(format!("[e{a}, e{b}] is not antisymmetric in e{c}"));
                }
            }
        }
    }
    // Σ_δ Γ_{ab}^δ Γ_{δc}^ε + cyclic = 0
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for e in 0..m {
                    let mut s = Q::zero();
                    for d in 0..m {
                        s += &gm[a][b][d] * &gm[d][c][e];
                        s += &gm[b][c][d] * &gm[d][a][e];
                        s += &gm[c][a][d] * &gm[d][b][e];
                    }
                    if !s.is_zero() {
                        failures.push(format!("Jacobi fails for (e{a}, e{b}, e{c}) in e{e}"));
                    }
                }
            }
        }
    }
    Verdict::from_failures(failures)
}

/// `[rho_α, rho_β] = Σ_γ Γ_{αβ}^γ rho_γ` for all pairs.
pub fn check_rep_property(g: &LieAlgebraData) -> Verdict {
    let mut failures = Vec::new();
    if g.rho.len() != g.dim {
        failures.push(format!(
            "{} matrices for a {}-dimensional algebra",
            g.rho.len(),
            g.dim
        ));
        return Verdict::from_failures(failures);
    }
    for a in 0..g.dim {
        for b in 0..g.dim {
            let lhs = g.rho[a].commutator(&g.rho[b]);
            let mut rhs = SparseMatrix::zeros(g.dim_v, g.dim_v);
            for c in 0..g.dim {
                if !g.gamma[a][b][c].is_zero() {
                    rhs = rhs.add(&g.rho[c].scale(&g.gamma[a][b][c]));
                }
            }
            if lhs != rhs {
                failures.push(format!("[rho{a}, rho{b}] does not match the bracket"));
            }
        }
    }
    Verdict::from_failures(failures)
}
