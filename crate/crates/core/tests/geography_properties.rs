use fibrelab_core::geography::*;
use fibrelab_core::poly::Rational;
use proptest::prelude::*;

fn chi_from(inv: &SurfaceInvariants) -> Rational {
    Rational::new((inv.k2.unwrap() + inv.e.unwrap()).into(), 12.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn noether_survives_blow_ups(chi in -3i64..20, k2 in -20i64..80, n in 0u64..=100) {
        let inv = noether_complete(&SurfaceInvariants { chi: Some(chi), k2: Some(k2), ..Default::default() }).unwrap();
        let out = blow_up(&inv, n).unwrap();
        prop_assert_eq!(out.noether_holds(), Some(true));
        prop_assert_eq!(chi_from(&out), Rational::from_integer(chi.into()));
        prop_assert_eq!((out.chi, out.q, out.p_g), (inv.chi, inv.q, inv.p_g));
    }

    #[test]
    fn slope_verdict_scales(k2 in -30i64..60, c2 in 1i64..30, m in 1i64..20) {
        prop_assert_eq!(kodaira_slope(k2, c2).unwrap(), kodaira_slope(m * k2, m * c2).unwrap());
    }

    #[test]
    fn elliptic_values_complete(d in 0i64..200) {
        let (c2, chi) = elliptic_c2(d).unwrap();
        let done = noether_complete(&SurfaceInvariants { k2: Some(0), e: Some(c2), ..Default::default() }).unwrap();
        prop_assert_eq!(done.chi, Some(chi));
    }
}

#[test]
fn plane_blown_up_eight_times() {
    let out = blow_up(&SurfaceInvariants::plane(), 8).unwrap();
    assert_eq!((out.k2, out.e, out.chi), (Some(1), Some(11), Some(1)));
}

#[test]
fn scan_rows_validate_across_interval() {
    for g2 in 0..=2 {
        let rows = xiao_admissible_scan(g2, 12);
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(row.k2_max <= 8 * row.chi);
            for k2 in row.k2_min..=row.k2_max {
                let rep = xiao_validate(&row.invariants(g2, k2), XiaoCase::CaseII);
                let failed: Vec<_> = rep.failures().map(|c| c.name).collect();
                assert!(failed.is_empty(), "g2={g2} {row:?} K2={k2}: {failed:?}");
            }
        }
    }
}

#[test]
fn scan_is_ordered_and_complete() {
    for g2 in 0..=2 {
        let rows = xiao_admissible_scan(g2, 12);
        let keys: Vec<(i64, i64)> = rows.iter().map(|r| (r.chi, r.eps)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let streamed: Vec<ScanRow> = ((g2 - 1)..=12).flat_map(|chi| xiao_scan_chi(g2, chi)).collect();
        assert_eq!(streamed, rows);
        for r in &rows {
            assert!(r.eps >= 0 && r.eps <= r.chi - g2 + 1);
            assert_eq!((r.eps - (r.chi + g2 - 1)).rem_euclid(2), 0);
        }
    }
}

#[test]
fn scan_upper_end_monotone_in_chi() {
    for g2 in 0..=2 {
        let rows = xiao_admissible_scan(g2, 12);
        for eps in 0..=14 {
            let ends: Vec<i64> = rows
                .iter()
                .filter(|r| r.eps == eps && !r.flags.contains(&ScanFlag::IrregularityRaised))
                .map(|r| r.k2_max)
                .collect();
            assert!(ends.windows(2).all(|w| w[0] <= w[1]), "g2={g2} eps={eps}: {ends:?}");
        }
    }
}

#[test]
fn corollary_rejects_one_past_eight_chi() {
    for g2 in 0..=2 {
        for row in xiao_admissible_scan(g2, 12) {
            let inv = row.invariants(g2, 8 * row.chi + 1);
            let rep = xiao_validate(&inv, XiaoCase::CaseII);
            assert_eq!(rep.get("xiao_k2_le_8chi").unwrap().status, Status::Fail);
        }
    }
}

#[test]
fn reports_carry_both_sides() {
    let inv = SurfaceInvariants {
        g1: Some(2),
        g2: Some(1),
        chi: Some(3),
        q: Some(1),
        p_g: Some(3),
        k2: Some(10),
        e: Some(26),
        epsilon: Some(1),
        d: None,
    };
    for rep in [
        xiao_validate(&inv, XiaoCase::CaseII),
        xiao_validate(&inv, XiaoCase::CaseI),
        fibration_chi_bounds(&inv),
        general_type_checks(&inv, true),
    ] {
        for c in &rep.checks {
            if c.status != Status::Inapplicable {
                assert!(c.lhs.is_some() && c.rhs.is_some(), "{}", c.name);
            }
        }
    }
}

#[test]
fn hurwitz_linear() {
    for g in 2..50 {
        assert_eq!(hurwitz_bound(g).unwrap(), 84 * (g - 1));
    }
}
