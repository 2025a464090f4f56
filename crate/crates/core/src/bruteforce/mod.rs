//! Brute-force oracle: explicit modules and Koszul complexes over Q.

mod irrep;
mod koszul;
mod lie;

pub use irrep::{
    build_irrep, build_irrep_with, check_grade_lowering, grade_dimensions, BuildOptions,
    ConcreteRep, GradeLoweringVerdict, DEFAULT_DEGREE_BOUND,
};
pub use koszul::{
    betti_numbers, check_d_squared, cohomology_dims, koszul_differential,
    koszul_differential_tuples, CohomologyEntry, KoszulComplex,
};
pub use lie::{
    check_jacobi, check_rep_property, AlgebraFile, LieAlgebraData, RepresentationSpec, Scalar,
    Verdict,
};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kostant::cohomology_table;
use crate::weights::DynkinLabels;

/// Brute-force cohomology of one module set against the closed-form table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableComparison {
    pub labels: DynkinLabels,
    pub dim_v: usize,
    pub entries: Vec<CohomologyEntry>,
    pub mismatches: Vec<String>,
}

impl TableComparison {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Builds the module, runs the graded Koszul complex and checks that each
/// `H^r` is concentrated in the tabulated grade with the tabulated dimension.
pub fn compare_with_table(d: &DynkinLabels, opts: &BuildOptions) -> Result<TableComparison> {
    let rep = build_irrep_with(d, opts)?;
    let complex = KoszulComplex::projective(&rep)?;
    let entries = cohomology_dims(&complex)?;
    let table = cohomology_table(d);
    let mut mismatches = Vec::new();
    for (r, expected) in table.iter().enumerate() {
        let found: Vec<&CohomologyEntry> = entries.iter().filter(|e| e.p == r).collect();
        let want_dim = expected.dim_u64().map(|x| x as usize);
        let hit = found.len() == 1
            && found[0].grade.as_ref() == Some(expected.grade.value())
            && Some(found[0].dim) == want_dim;
        if !hit {
            let got: Vec<String> = found
                .iter()
                .map(|e| {
                    let g = e.grade.as_ref().map(|g| g.to_string()).unwrap_or_default();
                    format!("{} at grade {g}", e.dim)
                })
                .collect();
            mismatches.push(format!(
                "H^{r}: expected {} at grade {}, found [{}]",
                expected.dim,
                expected.grade,
                got.join(", ")
            ));
        }
    }
    if let Some(extra) = entries.iter().find(|e| e.p >= table.len()) {
        mismatches.push(format!("unexpected H^{}", extra.p));
    }
    Ok(TableComparison {
        labels: d.clone(),
        dim_v: rep.dim,
        entries,
        mismatches,
    })
}
