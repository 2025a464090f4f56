//! The `verify` subcommands. Each prints one line per case in a canonical
//! order and a summary line naming the first failure.

use std::path::Path;

use anyhow::Result;
use bgg_core::bruteforce::{
    betti_numbers, check_jacobi, check_rep_property, koszul_differential,
    koszul_differential_tuples, KoszulComplex, LieAlgebraData,
};
use bgg_core::circle::{
    apply_dk1, cos_multiple, default_m_range, sin_multiple, verify_cross_module,
    verify_factorization, verify_homomorphism, verify_ladder, verify_ladder_annihilation,
    verify_recursion, IdentityVerdict,
};
use bgg_core::kostant::{cohomology_table, pieri_multiplicity};
use bgg_core::linalg::q;
use bgg_core::report::{emit_bgg_report, CheckResult, CheckStatus, ReportOptions};
use bgg_core::riccati::{leading_terms_match, verify_identity, NCOp};
use bgg_core::{DynkinLabels, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{InputError, Outcome};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Collects case verdicts and prints the summary.
struct Tally {
    passed: usize,
    skipped: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            passed: 0,
            skipped: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, case: &str, ok: bool, detail: &str) {
        if ok {
            self.passed += 1;
            println!("pass  {case}");
        } else {
            println!("FAIL  {case}: {detail}");
            self.first_failure
                .get_or_insert_with(|| format!("{case}: {detail}"));
        }
    }

    fn skip(&mut self, case: &str, reason: &str) {
        self.skipped += 1;
        println!("skip  {case}: {reason}");
    }

    fn verdict(&mut self, case: &str, v: &IdentityVerdict) {
        let detail = v.first_failure.clone().unwrap_or_default();
        self.record(case, v.ok(), &format!("fails on {detail}"));
    }

    fn finish(self) -> Outcome {
        match self.first_failure {
            None => {
                println!(
                    "all {} checks passed ({} skipped)",
                    self.passed, self.skipped
                );
                Outcome::Pass
            }
            Some(f) => {
                println!("verification failed; first counterexample: {f}");
                Outcome::Fail
            }
        }
    }
}

pub fn kostant(max_n: usize, max_sum: u32, opts: &ReportOptions) -> Result<Outcome> {
    let cases: Vec<DynkinLabels> = (1..=max_n)
        .flat_map(|n| DynkinLabels::enumerate(n, max_sum))
        .collect();
    let results: Vec<(DynkinLabels, Vec<(&'static str, CheckResult)>)> = cases
        .par_iter()
        .map(|d| {
            let report = emit_bgg_report(d, opts);
            let c = report.checks;
            let pieri = pieri_check(d);
            (
                d.clone(),
                vec![
                    ("c + c' = N", c.dual_sum),
                    ("p + q = r", c.positions),
                    ("formulas", c.formulas),
                    ("pieri", pieri),
                    ("brute force", c.brute_force),
                    ("euler", c.euler),
                ],
            )
        })
        .collect();
    let mut tally = Tally::new();
    for (d, checks) in results {
        for (name, res) in checks {
            let case = format!("n={} {d} {name}", d.n());
            let detail = res.detail.clone().unwrap_or_default();
            match res.status {
                CheckStatus::Pass => tally.record(&case, true, ""),
                CheckStatus::Fail => tally.record(&case, false, &detail),
                CheckStatus::Skipped => tally.skip(&case, &detail),
            }
        }
    }
    Ok(tally.finish())
}

/// Each consecutive pair of cohomology modules is joined with multiplicity one.
fn pieri_check(d: &DynkinLabels) -> CheckResult {
    let table = cohomology_table(d);
    let orders = bgg_core::kostant::operator_orders(d);
    for r in 0..d.n() {
        match pieri_multiplicity(orders[r] as u32, &table[r].levi, &table[r + 1].levi) {
            Ok(1) => {}
            Ok(m) => {
                return CheckResult {
                    status: CheckStatus::Fail,
                    detail: Some(format!("multiplicity {m} between rows {r} and {}", r + 1)),
                }
            }
            Err(e) => {
                return CheckResult {
                    status: CheckStatus::Fail,
                    detail: Some(e.to_string()),
                }
            }
        }
    }
    CheckResult {
        status: CheckStatus::Pass,
        detail: None,
    }
}

fn random_monomial_op(rng: &mut ChaCha8Rng) -> NCOp {
    let mut op = NCOp::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let l = rng.gen_range(0..=3);
        let m = rng.gen_range(0..=1);
        let p = rng.gen_range(0..=3);
        op = &op + &NCOp::monomial(l, m, p, q(rng.gen_range(-3..=3)));
    }
    op
}

pub fn riccati(max_k: u32, seed: u64) -> Outcome {
    let mut tally = Tally::new();
    for k in 0..=max_k {
        tally.record(
            &format!("identity k={k}"),
            verify_identity(k),
            "products differ",
        );
    }
    for k in 0..=max_k {
        for l in 0..=max_k {
            tally.record(
                &format!("leading terms k={k} l={l}"),
                leading_terms_match(k, l),
                "coefficient mismatch",
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc_ok = true;
    for _ in 0..50 {
        let (a, b, c) = (
            random_monomial_op(&mut rng),
            random_monomial_op(&mut rng),
            random_monomial_op(&mut rng),
        );
        if &(&a * &b) * &c != &a * &(&b * &c) {
            assoc_ok = false;
            break;
        }
    }
    tally.record(
        &format!("associativity (seed {seed})"),
        assoc_ok,
        "not associative",
    );
    tally.finish()
}

pub fn circle(max_k: u32, m_min: Option<i64>, m_max: Option<i64>, seed: u64) -> Result<Outcome> {
    if let (Some(lo), Some(hi)) = (m_min, m_max) {
        if lo > hi {
            return Err(InputError(format!("--m-min {lo} exceeds --m-max {hi}")).into());
        }
    }
    let range = |k: u32| {
        let (lo, hi) = default_m_range(k);
        (m_min.unwrap_or(lo), m_max.unwrap_or(hi))
    };
    let mut tally = Tally::new();
    for k in 0..=max_k {
        tally.verdict(
            &format!("factorization k={k}"),
            &verify_factorization(k, range(k)),
        );
        tally.verdict(&format!("recursion k={k}"), &verify_recursion(k, range(k)));
        tally.verdict(
            &format!("cross-module k={k}"),
            &verify_cross_module(k, range(k)),
        );
        tally.verdict(
            &format!("ladder annihilation k={k}"),
            &verify_ladder_annihilation(k),
        );
    }
    for l in 1..=8 {
        tally.record(
            &format!("ladder l={l}"),
            verify_ladder(l),
            "D does not map the ladder",
        );
    }
    for m in 1..=16u32 {
        let mm = q((m * m) as i64);
        let ok = [cos_multiple(m), sin_multiple(m)]
            .iter()
            .all(|f| (&f.derivative(2) + &f.scale(&mm)).is_zero());
        tally.record(&format!("chebyshev m={m}"), ok, "not an eigenfunction");
    }
    // D_{k+1} kills cos jθ and sin jθ, j = k, k-2, ...
    for k in 0..=max_k {
        let mut ok = true;
        let mut j = k as i64;
        while j >= 1 {
            ok &= apply_dk1(k, &cos_multiple(j as u32)).is_zero();
            ok &= apply_dk1(k, &sin_multiple(j as u32)).is_zero();
            j -= 2;
        }
        tally.record(&format!("chebyshev kernel k={k}"), ok, "not annihilated");
    }
    tally.verdict(
        &format!("homomorphism (seed {seed})"),
        &verify_homomorphism(seed, 100, 6),
    );
    Ok(tally.finish())
}

pub fn koszul(path: &Path, expect_betti: Option<&[usize]>, dim_cap: u64) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let g = LieAlgebraData::from_json(&text).map_err(|e| InputError(e.to_string()))?;
    let chain = (g.dim_v as u64).saturating_mul(1u64 << g.dim.min(63));
    if g.dim > 20 || chain > dim_cap {
        return Err(InputError(format!(
            "cochain dimension {chain} exceeds --dim-cap {dim_cap}"
        ))
        .into());
    }
    let mut tally = Tally::new();
    let jac = check_jacobi(&g);
    tally.record(
        &format!("{} jacobi", g.name),
        jac.ok,
        jac.failures.first().map_or("", String::as_str),
    );
    let rep = check_rep_property(&g);
    tally.record(
        &format!("{} representation", g.name),
        rep.ok,
        rep.failures.first().map_or("", String::as_str),
    );
    if g.dim <= 6 {
        let same =
            (0..g.dim).all(|p| koszul_differential(&g, p) == koszul_differential_tuples(&g, p));
        tally.record(
            &format!("{} both differentials agree", g.name),
            same,
            "constructions differ",
        );
    }
    let complex = KoszulComplex::new(&g);
    match betti_numbers(&complex) {
        Ok(betti) => {
            tally.record(&format!("{} d^2 = 0", g.name), true, "");
            let shown: Vec<String> = betti.iter().map(usize::to_string).collect();
            println!("betti {}", shown.join(","));
            if let Some(want) = expect_betti {
                tally.record(
                    &format!("{} betti numbers", g.name),
                    want == betti.as_slice(),
                    &format!("expected {want:?}, got {betti:?}"),
                );
            }
        }
        Err(Error::NotAComplex(p, p1)) => {
            tally.record(
                &format!("{} d^2 = 0", g.name),
                false,
                &format!("d_{p1} d_{p} is nonzero"),
            );
        }
        Err(e) => tally.record(&format!("{} cohomology", g.name), false, &e.to_string()),
    }
    Ok(tally.finish())
}
