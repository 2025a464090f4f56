//! Human- and machine-readable reports: the cohomology table, E_1 positions,
//! the operator formulae on the round sphere and the outcome of each check.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bruteforce::{build_irrep_with, compare_with_table, grade_dimensions, BuildOptions};
use crate::error::{Error, Result};
use crate::kostant::{dim_serde, graded_euler_check, BggComplexData};
use crate::riccati::{
    factored_string, rhs_factors, rhs_product, shifted_nabla, NCOp, Specialization,
};
use crate::weights::{
    c_value, dual_c_value, filtration_length, labels_to_partition, weyl_dim_u64, DynkinLabels,
    Grade, LeviLabels,
};

/// Projective weight `w`, valence `v`, row length `b` and row index `r` of a
/// weighted tableau, as far as the change-of-connection rule needs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBookkeeping {
    pub w: i64,
    pub v: i64,
    pub b: i64,
    pub r: i64,
}

impl WeightBookkeeping {
    /// The bookkeeping of an order-`s` BGG step, `w + r = s + v + b`.
    pub fn bgg_step(v: i64, b: i64, r: i64, s: i64) -> Self {
        WeightBookkeeping {
            w: s + v + b - r,
            v,
            b,
            r,
        }
    }

    /// `k = w - (v + b + 1 - r)`.
    pub fn k(&self) -> i64 {
        self.w - (self.v + self.b + 1 - self.r)
    }

    pub fn is_bgg_step(&self, s: i64) -> bool {
        s == self.w + self.r - self.v - self.b
    }
}

/// The factors `∇ + jΥ`, `j = k, k-2, ..., k-2s+2`, listed left to right as
/// `j = k-2s+2` first and `j = k` last.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConnectionExpansion {
    pub k: i64,
    pub shifts: Vec<i64>,
    pub symmetric: bool,
}

impl ConnectionExpansion {
    pub fn factors(&self) -> Vec<NCOp> {
        self.shifts.iter().map(|&j| shifted_nabla(j)).collect()
    }

    pub fn product(&self) -> NCOp {
        NCOp::product(&self.factors(), Specialization::Graded)
    }
}

pub fn change_of_connection_expansion(
    wb: &WeightBookkeeping,
    s: i64,
) -> Result<ConnectionExpansion> {
    if s < 1 {
        return Err(Error::Bookkeeping(format!(
            "order s = {s} must be a positive integer"
        )));
    }
    let k = wb.k();
    let shifts: Vec<i64> = (0..s).map(|i| k - 2 * (s - 1) + 2 * i).collect();
    let symmetric = shifts.first().map(|j| -j) == shifts.last().copied();
    if wb.is_bgg_step(s) && !symmetric {
        return Err(Error::Bookkeeping(format!(
            "BGG step of order {s} should give k = {}, got k = {k}",
            s - 1
        )));
    }
    Ok(ConnectionExpansion {
        k,
        shifts,
        symmetric,
    })
}

/// The operator from row `r` to row `r + 1`: `π(rhs_product(s - 1) φ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BggFormula {
    pub r: usize,
    pub s: u64,
    /// Levi labels of the target bundle, naming the projection π.
    pub target: LeviLabels,
    pub factors: Vec<NCOp>,
    pub expression: NCOp,
}

impl BggFormula {
    pub fn new(r: usize, s: u64, target: LeviLabels) -> Self {
        let k = (s - 1) as u32;
        BggFormula {
            r,
            s,
            target,
            factors: rhs_factors(k),
            expression: rhs_product(k),
        }
    }

    pub fn to_ascii(&self) -> String {
        format!(
            "pi{}({} phi)",
            self.target,
            factored_string(&self.factors, false)
        )
    }

    pub fn to_latex(&self) -> String {
        let t: Vec<String> = self.target.0.iter().map(u32::to_string).collect();
        format!(
            "\\pi_{{[{}]}}\\left({} \\phi\\right)",
            t.join(","),
            factored_string(&self.factors, true)
        )
    }

    /// The connection-change expansion of this step multiplies out to the
    /// emitted expression.
    pub fn verify(&self) -> bool {
        let s = self.s as i64;
        let wb = WeightBookkeeping::bgg_step(0, 0, 0, s);
        match change_of_connection_expansion(&wb, s) {
            Ok(exp) => exp.symmetric && exp.product() == self.expression,
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub r: usize,
    pub levi: LeviLabels,
    pub grade: Grade,
    #[serde(with = "dim_serde")]
    pub dim: BigUint,
    pub p: i64,
    pub q: i64,
    /// Order of the operator leaving this row; `None` for the last row.
    pub order: Option<u64>,
    pub formula_ascii: Option<String>,
    pub formula_latex: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn of(ok: bool, detail: Option<String>) -> Self {
        CheckResult {
            status: CheckStatus::from_bool(ok),
            detail,
        }
    }

    fn skipped(reason: String) -> Self {
        CheckResult {
            status: CheckStatus::Skipped,
            detail: Some(reason),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    /// `c + c' = N`.
    pub dual_sum: CheckResult,
    /// `p + q = r` at every E_1 position.
    pub positions: CheckResult,
    /// Every emitted formula equals its connection-change expansion.
    pub formulas: CheckResult,
    /// Koszul cohomology of the explicit module equals the table.
    pub brute_force: CheckResult,
    /// Column Euler characteristics on E_0 versus E_1.
    pub euler: CheckResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BggReport {
    pub n: usize,
    pub labels: Vec<u32>,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub c: Grade,
    pub cohomology: Vec<CohomologyRow>,
    pub checks: Checks,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Run the brute-force comparison when the module is small enough.
    pub brute_force: bool,
    pub build: BuildOptions,
    /// Largest total cochain dimension `2^n dim V` attempted.
    pub dim_cap: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            brute_force: true,
            build: BuildOptions::default(),
            dim_cap: 5000,
        }
    }
}

/// Total dimension of the cochain spaces `Λ^• g_- ⊗ V`.
pub fn chain_dimension(d: &DynkinLabels) -> u64 {
    weyl_dim_u64(d.labels()).saturating_mul(1u64 << d.n().min(63))
}

pub fn emit_bgg_report(d: &DynkinLabels, opts: &ReportOptions) -> BggReport {
    let data = BggComplexData::new(d);
    let n = d.n();
    let formulas: Vec<BggFormula> = (0..n)
        .map(|r| BggFormula::new(r, data.orders[r], data.cohomology[r + 1].levi.clone()))
        .collect();

    let cohomology = data
        .cohomology
        .iter()
        .enumerate()
        .map(|(r, desc)| CohomologyRow {
            r,
            levi: desc.levi.clone(),
            grade: desc.grade.clone(),
            dim: desc.dim.clone(),
            p: data.positions[r].p,
            q: data.positions[r].q,
            order: data.orders.get(r).copied(),
            formula_ascii: formulas.get(r).map(BggFormula::to_ascii),
            formula_latex: formulas.get(r).map(BggFormula::to_latex),
        })
        .collect();

    let c = c_value(d);
    let big_n = filtration_length(d);
    let dual_sum = CheckResult::of(
        c.value() + dual_c_value(d).value() == crate::linalg::q(big_n as i64),
        None,
    );
    let positions = CheckResult::of(data.positions.iter().all(|p| p.p + p.q == p.r as i64), None);
    let bad_formula = formulas.iter().find(|f| !f.verify());
    let formulas_check = CheckResult::of(
        bad_formula.is_none(),
        bad_formula.map(|f| format!("formula for r = {} does not expand correctly", f.r)),
    );
    let (brute_force, euler) = brute_force_checks(d, opts);

    BggReport {
        n,
        labels: d.labels().to_vec(),
        big_n,
        c,
        cohomology,
        checks: Checks {
            dual_sum,
            positions,
            formulas: formulas_check,
            brute_force,
            euler,
        },
    }
}

fn brute_force_checks(d: &DynkinLabels, opts: &ReportOptions) -> (CheckResult, CheckResult) {
    if !opts.brute_force {
        let reason = "brute force disabled".to_string();
        return (
            CheckResult::skipped(reason.clone()),
            CheckResult::skipped(reason),
        );
    }
    let chain = chain_dimension(d);
    if chain > opts.dim_cap {
        let reason = format!("cochain dimension {chain} exceeds cap {}", opts.dim_cap);
        return (
            CheckResult::skipped(reason.clone()),
            CheckResult::skipped(reason),
        );
    }
    let bf = match compare_with_table(d, &opts.build) {
        Ok(cmp) => CheckResult::of(cmp.ok(), cmp.mismatches.first().cloned()),
        Err(Error::TooLarge { .. }) => {
            let reason = format!("tensor degree exceeds bound {}", opts.build.degree_bound);
            return (
                CheckResult::skipped(reason.clone()),
                CheckResult::skipped(reason),
            );
        }
        Err(e) => CheckResult::of(false, Some(e.to_string())),
    };
    let euler = match build_irrep_with(d, &opts.build)
        .and_then(|rep| grade_dimensions(&rep))
        .and_then(|gd| graded_euler_check(d, &gd))
    {
        Ok(cols) => {
            let bad = cols.iter().find(|c| !c.ok);
            CheckResult::of(
                bad.is_none(),
                bad.map(|c| format!("column {}: chi = {}, expected {}", c.p, c.chi, c.expected)),
            )
        }
        Err(e) => CheckResult::of(false, Some(e.to_string())),
    };
    (bf, euler)
}

/// Rows of boxes for the partition of a Levi highest weight; `•` for the empty diagram.
pub fn young_diagram(levi: &LeviLabels) -> String {
    let p = labels_to_partition(&levi.0);
    if p.is_empty() {
        return "•".into();
    }
    p.parts()
        .iter()
        .map(|&len| "□".repeat(len as usize))
        .collect::<Vec<_>>()
        .join("\n")
}

fn status_word(c: &CheckResult) -> String {
    let word = match c.status {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "skipped",
    };
    match &c.detail {
        Some(d) => format!("{word} ({d})"),
        None => word.to_string(),
    }
}

pub fn render_text(rep: &BggReport) -> String {
    let mut out = String::new();
    let labels: Vec<String> = rep.labels.iter().map(u32::to_string).collect();
    out.push_str(&format!(
        "sl({}) module with lowest weight -[{}]\nN = {}, c = {}\n\n",
        rep.n + 1,
        labels.join(","),
        rep.big_n,
        rep.c
    ));
    for row in &rep.cohomology {
        out.push_str(&format!(
            "H^{}: levi {} grade {} dim {} at E1({}, {})\n",
            row.r, row.levi, row.grade, row.dim, row.p, row.q
        ));
        for line in young_diagram(&row.levi).lines() {
            out.push_str(&format!("    {line}\n"));
        }
        if let (Some(s), Some(f)) = (row.order, &row.formula_ascii) {
            out.push_str(&format!("  order {s}: phi -> {f}\n"));
        }
    }
    out.push_str("\nchecks:\n");
    let c = &rep.checks;
    for (name, res) in [
        ("c + c' = N", &c.dual_sum),
        ("p + q = r", &c.positions),
        ("formulas", &c.formulas),
        ("brute force", &c.brute_force),
        ("euler columns", &c.euler),
    ] {
        out.push_str(&format!("  {name}: {}\n", status_word(res)));
    }
    out
}

pub fn render_latex(rep: &BggReport) -> String {
    let mut out = String::from("\\begin{array}{cccccl}\nr & \\text{levi} & \\text{grade} & \\dim & (p,q) & \\text{operator} \\\\\n");
    for row in &rep.cohomology {
        let levi: Vec<String> = row.levi.0.iter().map(u32::to_string).collect();
        out.push_str(&format!(
            "{} & [{}] & {} & {} & ({},{}) & {} \\\\\n",
            row.r,
            levi.join(","),
            row.grade,
            row.dim,
            row.p,
            row.q,
            row.formula_latex.clone().unwrap_or_default()
        ));
    }
    out.push_str("\\end{array}\n");
    out
}

pub fn to_json(rep: &BggReport) -> String {
    serde_json::to_string_pretty(rep).expect("report serializes")
}

pub fn from_json(text: &str) -> Result<BggReport> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}
