use std::collections::BTreeMap;

use bgg_core::bruteforce::{
    betti_numbers, build_irrep, check_d_squared, check_grade_lowering, compare_with_table,
    grade_dimensions, BuildOptions, KoszulComplex, LieAlgebraData,
};
use bgg_core::kostant::graded_euler_check;
use bgg_core::DynkinLabels;

#[test]
fn table_matches_brute_force_small_grid() {
    let opts = BuildOptions::default();
    for (n, max_sum) in [(1, 6), (2, 4), (3, 3), (4, 2)] {
        for d in DynkinLabels::enumerate(n, max_sum) {
            let cmp = compare_with_table(&d, &opts).unwrap();
            assert!(cmp.ok(), "{d}: {:?}", cmp.mismatches);
        }
    }
}

#[test]
fn euler_columns_from_brute_force_grades() {
    for d in DynkinLabels::enumerate(3, 2) {
        let rep = build_irrep(&d).unwrap();
        assert!(check_grade_lowering(&rep).ok);
        let gd: BTreeMap<i64, u64> = grade_dimensions(&rep).unwrap();
        for col in graded_euler_check(&d, &gd).unwrap() {
            assert!(col.ok, "{d}: column {}", col.p);
        }
    }
}

#[test]
fn sl3_trivial_cohomology() {
    // basis E_ij, i != j, plus two Cartan elements, of gl(3) restricted to sl(3)
    let mut basis: Vec<(usize, usize)> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                basis.push((i, j));
            }
        }
    }
    let m = 8;
    let mut g = LieAlgebraData::abelian(m, 1);
    g.name = "sl3".into();
    // H_1 = E_00 - E_11, H_2 = E_11 - E_22 encoded as diagonal vectors
    let elem = |k: usize| -> [[i64; 3]; 3] {
        let mut a = [[0i64; 3]; 3];
        if k < 6 {
            let (i, j) = basis[k];
            a[i][j] = 1;
        } else {
            let t = k - 6;
            a[t][t] = 1;
            a[t + 1][t + 1] = -1;
        }
        a
    };
    let coords = |a: [[i64; 3]; 3]| -> Vec<i64> {
        let mut v: Vec<i64> = basis.iter().map(|&(i, j)| a[i][j]).collect();
        // diagonal d = x H_1 + y H_2 with x = d0, y = d0 + d1
        v.push(a[0][0]);
        v.push(a[0][0] + a[1][1]);
        v
    };
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (elem(a), elem(b));
            let mut c = [[0i64; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        c[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
                    }
                }
            }
            for (k, v) in coords(c).into_iter().enumerate() {
                g.gamma[a][b][k] = bgg_core::linalg::q(v);
            }
        }
    }
    assert!(bgg_core::bruteforce::check_jacobi(&g).ok);
    let c = KoszulComplex::new(&g);
    check_d_squared(&c).unwrap();
    // Poincare polynomial (1 + t^3)(1 + t^5)
    assert_eq!(betti_numbers(&c).unwrap(), vec![1, 0, 0, 1, 0, 1, 0, 0, 1]);
}
