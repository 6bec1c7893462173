use proptest::prelude::*;

use solvlat_core::combinatorics::{
    betti_formula, big_d, binomial, count_dpq, count_dpq_brute, lemma_report, parity_report, subset_counts_dp,
    CountTable,
};
use solvlat_core::exterior::{adapted_betti_direct, betti_direct};
use solvlat_core::models::m6_family;

#[test]
fn formula_matches_direct() {
    for n in 2..=4 {
        let f = m6_family(n).unwrap();
        assert_eq!(betti_direct(&f.algebra).unwrap(), betti_formula(n, false).unwrap(), "n = {n}");
        assert_eq!(
            adapted_betti_direct(&f.algebra, &f.theta).unwrap(),
            betti_formula(n, true).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn counts_match_brute_force() {
    for n in 1..=8 {
        for p in 0..=n {
            for q in 0..=n {
                for s in 0..=1 {
                    assert_eq!(count_dpq(n, p, q, s).unwrap(), count_dpq_brute(n, p, q, s));
                }
            }
        }
    }
}

#[test]
fn table_symmetries() {
    for n in 1..=10 {
        for tilde in [false, true] {
            assert!(CountTable::new(n, tilde).unwrap().symmetries_hold(), "n = {n} {tilde}");
        }
    }
}

#[test]
fn euler_characteristics_vanish() {
    for n in 2..=12 {
        for tilde in [false, true] {
            assert_eq!(betti_formula(n, tilde).unwrap().euler_characteristic(), 0);
        }
    }
}

#[test]
fn low_degree_values() {
    for n in 2..=12 {
        let b = betti_formula(n, false).unwrap();
        let t = betti_formula(n, true).unwrap();
        assert_eq!(&b.values()[..3], &[1, 2, n as u64 + 1]);
        assert_eq!(&t.values()[..3], &[0, 1, n as u64 + 1]);
        assert_eq!(big_d(n, 2, false).unwrap(), n as u64);
    }
}

#[test]
fn reports() {
    for n in 2..=10 {
        assert!(lemma_report(n).unwrap().iter().all(|c| c.passed));
        assert!(parity_report(n)
            .unwrap()
            .iter()
            .filter(|c| c.name != "beta3")
            .all(|c| c.passed));
    }
}

proptest! {
    #[test]
    fn mitm_matches_dp(n in 1usize..=16) {
        let dp = subset_counts_dp(n);
        for p in 0..=n {
            prop_assert_eq!(dp[p].iter().sum::<u64>(), binomial(n as u64, p as u64));
        }
        for p in 0..=n {
            for q in 0..=n {
                let expected: u64 = dp[p].iter().enumerate().map(|(s, &x)| x * dp[q][s]).sum();
                prop_assert_eq!(count_dpq(n, p, q, 0).unwrap(), expected);
            }
        }
    }
}
