//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bgg_core::bruteforce::{
    betti_numbers, build_irrep, check_d_squared, check_grade_lowering, check_jacobi,
    compare_with_table, grade_dimensions, BuildOptions, KoszulComplex, LieAlgebraData,
};
use bgg_core::circle::{
    apply_dk1, cos_multiple, default_m_range, sin_multiple, verify_cross_module,
    verify_factorization, verify_ladder, verify_recursion, TrigFn,
};
use bgg_core::kostant::{
    cohomology_table, e1_positions, graded_euler_check, operator_orders, pieri_multiplicity,
};
use bgg_core::linalg::{q, qf};
use bgg_core::riccati::{leading_terms_match, verify_identity};
use bgg_core::weights::{c_value, dual_c_value, filtration_length};
use bgg_core::{DynkinLabels, Error};
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })
}

fn criterion2_grid() -> Vec<DynkinLabels> {
    let mut grid = Vec::new();
    for n in 2..=4 {
        grid.extend(DynkinLabels::enumerate(n, 3));
    }
    grid.extend(
        DynkinLabels::enumerate(2, 5)
            .into_iter()
            .filter(|d| d.labels().iter().sum::<u32>() > 3),
    );
    grid
}

fn c1_standard_example() -> Outcome {
    let start = Instant::now();
    let d = DynkinLabels::new(2, vec![0, 1]).unwrap();
    let rep = build_irrep(&d).map_err(|e| e.to_string())?;
    let gd = grade_dimensions(&rep).map_err(|e| e.to_string())?;
    ensure(gd == BTreeMap::from([(0, 2), (1, 1)]), || {
        format!("grade dims {gd:?}")
    })?;
    ensure(check_grade_lowering(&rep).ok, || {
        "rho does not lower grade".into()
    })?;

    let table = cohomology_table(&d);
    let dims: Vec<u64> = table.iter().map(|t| t.dim_u64().unwrap()).collect();
    ensure(dims == [2, 3, 1], || format!("dims {dims:?}"))?;
    let grades: Vec<_> = table.iter().map(|t| t.grade.value().clone()).collect();
    ensure(grades == [qf(-1, 3), qf(2, 3), qf(8, 3)], || {
        format!("grades {grades:?}")
    })?;
    let pos: Vec<(i64, i64)> = e1_positions(&d).iter().map(|p| (p.p, p.q)).collect();
    ensure(pos == [(0, 0), (1, 0), (3, -1)], || {
        format!("positions {pos:?}")
    })?;
    let orders = operator_orders(&d);
    ensure(orders == [1, 2], || format!("orders {orders:?}"))?;

    let cmp = compare_with_table(&d, &BuildOptions::default()).map_err(|e| e.to_string())?;
    ensure(cmp.ok(), || format!("brute force: {:?}", cmp.mismatches))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("n=2 [0,1] exact, {elapsed:.2?}"))
}

fn c2_table_agreement() -> Outcome {
    let start = Instant::now();
    let grid = criterion2_grid();
    let opts = BuildOptions::default();
    let results: Vec<(DynkinLabels, Result<bool, String>)> = grid
        .par_iter()
        .map(|d| {
            let r = match compare_with_table(d, &opts) {
                Ok(cmp) if cmp.ok() => Ok(true),
                Ok(cmp) => Err(cmp.mismatches.join("; ")),
                Err(Error::TooLarge { .. }) => Ok(false),
                Err(e) => Err(e.to_string()),
            };
            (d.clone(), r)
        })
        .collect();
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (d, r) in results {
        match r {
            Ok(true) => checked += 1,
            Ok(false) => skipped.push(d.to_string()),
            Err(e) => return Err(format!("n={} {d}: {e}", d.n())),
        }
    }
    Ok(format!(
        "{checked} label sets agree, {} skipped {:?}, {:.2?}",
        skipped.len(),
        skipped,
        start.elapsed()
    ))
}

fn c3_riccati() -> Outcome {
    let start = Instant::now();
    for k in 0..=12 {
        ensure(verify_identity(k), || format!("identity fails at k={k}"))?;
    }
    for k in 0..=8 {
        for l in 0..=8 {
            ensure(leading_terms_match(k, l), || {
                format!("leading terms k={k} l={l}")
            })?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "k <= 12 graded and g=1, leading terms k,l <= 8, {elapsed:.2?}"
    ))
}

fn c4_circle() -> Outcome {
    let start = Instant::now();
    for k in 0..=10 {
        let range = default_m_range(k);
        let t = verify_factorization(k, range);
        ensure(t.ok(), || {
            format!("factorization k={k} fails on {:?}", t.first_failure)
        })?;
        let r = verify_recursion(k, range);
        ensure(r.ok(), || {
            format!("recursion k={k} fails on {:?}", r.first_failure)
        })?;
        // annihilation, stated separately from verify_factorization
        let mut j = k as i64;
        while j >= 1 {
            for f in [cos_multiple(j as u32), sin_multiple(j as u32)] {
                ensure(apply_dk1(k, &f).is_zero(), || {
                    format!("k={k} j={j} not killed")
                })?;
            }
            j -= 2;
        }
        if k % 2 == 0 {
            ensure(apply_dk1(k, &TrigFn::one()).is_zero(), || {
                format!("k={k} constant")
            })?;
        }
    }
    for l in 1..=8 {
        ensure(verify_ladder(l), || format!("ladder l={l}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "k <= 10 over [-(k+4), k+4], ladder l <= 8, {elapsed:.2?}"
    ))
}

fn c5_cross_module() -> Outcome {
    let mut checked = 0;
    for k in 0..=8 {
        let v = verify_cross_module(k, default_m_range(k));
        ensure(v.ok(), || format!("k={k} fails on {:?}", v.first_failure))?;
        checked += v.checked;
    }
    Ok(format!("k <= 8, {checked} basis functions"))
}

fn c6_koszul() -> Outcome {
    for g in [
        LieAlgebraData::abelian(3, 1),
        LieAlgebraData::abelian(4, 2),
        LieAlgebraData::heisenberg(),
        LieAlgebraData::sl2_adjoint(),
    ] {
        let c = KoszulComplex::new(&g);
        check_d_squared(&c).map_err(|e| format!("{}: {e}", g.name))?;
    }
    let betti = betti_numbers(&KoszulComplex::new(&LieAlgebraData::heisenberg()))
        .map_err(|e| e.to_string())?;
    ensure(betti == [1, 2, 2, 1], || {
        format!("Heisenberg Betti {betti:?}")
    })?;

    // broken Jacobi: add [x, z] = x
    let mut broken = LieAlgebraData::heisenberg();
    broken.gamma[0][2][0] = q(1);
    broken.gamma[2][0][0] = q(-1);
    ensure(!check_jacobi(&broken).ok, || {
        "broken Jacobi not detected".into()
    })?;
    ensure(
        matches!(
            check_d_squared(&KoszulComplex::new(&broken)),
            Err(Error::NotAComplex(..))
        ),
        || "d^2 = 0 despite broken Jacobi".into(),
    )?;

    // rho that raises instead of lowers the grade
    let d = DynkinLabels::new(2, vec![0, 1]).unwrap();
    let mut rep = build_irrep(&d).map_err(|e| e.to_string())?;
    ensure(check_grade_lowering(&rep).ok, || "control rep fails".into())?;
    rep.gminus[0] = rep.gminus[0].transpose();
    ensure(!check_grade_lowering(&rep).ok, || {
        "transposed rho accepted".into()
    })?;
    Ok("d^2 = 0 on abelian/Heisenberg/sl(2)-adjoint, Betti 1,2,2,1, controls fail".into())
}

fn c7_multiplicity_one() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        for d in DynkinLabels::enumerate(n, 4) {
            let table = cohomology_table(&d);
            let orders = operator_orders(&d);
            for r in 0..n {
                let m = pieri_multiplicity(orders[r] as u32, &table[r].levi, &table[r + 1].levi)
                    .map_err(|e| e.to_string())?;
                ensure(m == 1, || format!("n={n} {d} r={r}: multiplicity {m}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} consecutive pairs, n <= 5, sum <= 4"))
}

fn c8_bookkeeping() -> Outcome {
    let grid = criterion2_grid();
    for d in &grid {
        let big_n = filtration_length(d) as i64;
        ensure(
            c_value(d).value() + dual_c_value(d).value() == q(big_n),
            || format!("c + c' != N for {d}"),
        )?;
        for p in e1_positions(d) {
            ensure(p.p + p.q == p.r as i64, || {
                format!("{d}: p + q != r at {p:?}")
            })?;
        }
    }
    let columns: Result<Vec<usize>, String> = grid
        .par_iter()
        .map(|d| {
            let rep = build_irrep(d).map_err(|e| format!("{d}: {e}"))?;
            let gd = grade_dimensions(&rep).map_err(|e| format!("{d}: {e}"))?;
            let cols = graded_euler_check(d, &gd).map_err(|e| format!("{d}: {e}"))?;
            match cols.iter().find(|c| !c.ok) {
                Some(c) => Err(format!(
                    "{d}: column {} has chi {} but E_1 predicts {}",
                    c.p, c.chi, c.expected
                )),
                None => Ok(cols.len()),
            }
        })
        .collect();
    let total: usize = columns?.iter().sum();
    Ok(format!("{} label sets, {total} Euler columns", grid.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("C1 standard representation example", c1_standard_example),
        ("C2 Kostant table vs brute force", c2_table_agreement),
        ("C3 Riccati factorization identities", c3_riccati),
        ("C4 circle operator identities", c4_circle),
        ("C5 cross-module consistency", c5_cross_module),
        ("C6 Koszul complexes and controls", c6_koszul),
        ("C7 multiplicity one", c7_multiplicity_one),
        ("C8 bookkeeping identities", c8_bookkeeping),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria failed");
        ExitCode::FAILURE
    }
}
