use fibrelab_core::curves::{
    classify, construct_nodal, construct_split, FibreKind, HyperellipticModel,
};
use fibrelab_core::pencil::*;
use fibrelab_core::poly::{discriminant, int, UniPoly};
use num_traits::Zero;

fn lambda_sq_minus_two() -> UniPoly {
    UniPoly::from_ints(&[-2, 0, 1])
}

#[test]
fn seeded_genus_two_pencils() {
    for seed in 0..20 {
        let p = Pencil::random(2, seed).unwrap();
        let disc = pencil_discriminant(&p).unwrap();
        let s = total_space_euler(&p).unwrap();
        let node_sum: i64 = s
            .singular_fibres
            .iter()
            .map(|r| r.conjugates as i64 * r.nodes as i64)
            .sum();
        let contributions: i64 = s.singular_fibres.iter().map(|r| r.euler_contribution(2)).sum();
        assert_eq!(s.e_total, -4 + contributions);
        if s.singular_fibres.iter().all(|r| r.nodes == 1) {
            assert_eq!(node_sum, disc.deg() as i64, "seed {seed}");
            assert_eq!(s.e_total, -4 + node_sum);
        }
        assert_eq!(disc.deg(), 10, "seed {seed}");
        assert!(s.total_space_smooth);
        assert!(s.strict);
        assert!(s.e_total > s.bound);
    }
}

#[test]
fn rational_records_agree_with_classify() {
    for seed in 0..10 {
        let f0 = construct_nodal(2, 1 + seed as i64 % 2, seed).unwrap().f().clone();
        let f1 = construct_nodal(2, 0, seed + 50).unwrap().f().clone();
        let p = Pencil::new(2, f0, f1).unwrap();
        let fam = p.family();
        for r in singular_fibres(&p).unwrap() {
            if let FibreParameter::Rational(l) = &r.parameter {
                let fibre = fam.fibre_at(l);
                if fibre.deg() == 6 {
                    let oracle = classify(&HyperellipticModel::new(2, fibre).unwrap());
                    assert_eq!(r.class, oracle);
                }
            }
        }
    }
}

#[test]
fn discriminant_agrees_fibrewise() {
    for seed in 0..5 {
        let p = Pencil::random(3, seed).unwrap();
        let disc = pencil_discriminant(&p).unwrap();
        assert_eq!(disc.deg(), 2 * 8 - 2);
        let fam = p.family();
        for k in -4..=4 {
            let l = int(k);
            let fibre = fam.fibre_at(&l);
            if fibre.deg() == 8 {
                assert_eq!(disc.eval(&l), discriminant(&fibre).unwrap());
            }
        }
    }
}

#[test]
fn planted_node_discriminant_root() {
    let f0 = construct_nodal(2, 1, 9).unwrap().f().clone();
    let f1 = UniPoly::from_ints(&[1, 3, 0, 0, 0, 0, 1]);
    assert_eq!(f0.gcd(&f1).deg(), 0);
    let p = Pencil::new(2, f0, f1).unwrap();
    let disc = pencil_discriminant(&p).unwrap();
    assert!(disc.eval(&int(0)).is_zero());
    let reduced = disc.exact_div(&UniPoly::x()).unwrap();
    assert!(!reduced.eval(&int(0)).is_zero());
    assert!(fibrelab_core::poly::is_squarefree(&reduced));
}

/// Pulling back along the double cover `λ ↦ λ² − 2`, branched over −2 and ∞.
/// With smooth fibres there, every singular fibre has two preimages, so
/// `Σ` doubles and `e' = 2e − 2e(A)`.
#[test]
fn base_change_conjugate_bookkeeping() {
    let mut planted = 0;
    for seed in 0..40 {
        let f0 = if seed % 2 == 0 {
            construct_nodal(2, 1, seed).unwrap()
        } else {
            construct_split(2, seed).unwrap()
        };
        let f1 = construct_nodal(2, 0, seed + 100).unwrap();
        let p = Pencil::new(2, f0.f().clone(), f1.f().clone()).unwrap();
        let old = total_space_euler(&p).unwrap();
        let over_branch = old.singular_fibres.iter().any(|r| {
            r.parameter == FibreParameter::Rational(int(-2)) || r.parameter == FibreParameter::Infinity
        });
        if over_branch {
            continue;
        }
        let fam = p.family().base_change(&lambda_sq_minus_two()).unwrap();
        let new = family_total_space_euler(&fam).unwrap();

        let at_zero = old
            .singular_fibres
            .iter()
            .find(|r| r.parameter == FibreParameter::Rational(int(0)))
            .unwrap();
        let lifted = new
            .singular_fibres
            .iter()
            .find(|r| r.parameter == FibreParameter::Algebraic(lambda_sq_minus_two()))
            .expect("conjugate record over ±√2");
        assert_eq!(lifted.conjugates, 2);
        assert_eq!(lifted.nodes, at_zero.nodes);
        assert_eq!(lifted.class, at_zero.class);

        assert_eq!(new.fibre_count(), 2 * old.fibre_count());
        let sum = |s: &FibrationSummary| s.e_total - s.e_fibre * s.e_base;
        assert_eq!(sum(&new), 2 * sum(&old));
        assert_eq!(new.e_total, 2 * old.e_total - 2 * old.e_fibre);
        planted += 1;
        if planted == 5 {
            break;
        }
    }
    assert_eq!(planted, 5);
}

#[test]
fn split_fibre_at_infinity() {
    let f0 = construct_nodal(2, 0, 3).unwrap().f().clone();
    let s = UniPoly::from_roots(&[int(5), int(6), int(7)]);
    let f1 = &f0 + &(&s * &s);
    let p = Pencil::new(2, f0, f1).unwrap();
    let summary = total_space_euler(&p).unwrap();
    let inf = summary
        .singular_fibres
        .iter()
        .find(|r| r.parameter == FibreParameter::Infinity)
        .expect("fibre at infinity");
    assert_eq!(inf.class.kind, FibreKind::SplitNodal);
    assert_eq!(inf.euler_contribution(2), 3);
    // every finite-λ degree is accounted for: 10 = deg Disc + deficit
    let disc = pencil_discriminant(&p).unwrap();
    assert_eq!(disc.deg() + inf.disc_multiplicity, 10);
}

/// A root shared by f₀ and f₁ is a base point: the fibre through it with a
/// double root there has one node, but the surface acquires an A₁ point and
/// the discriminant vanishes to order two.
#[test]
fn base_point_makes_total_space_singular() {
    let f0 = construct_nodal(2, 1, 9).unwrap().f().clone();
    let f1 = construct_nodal(2, 0, 10).unwrap().f().clone();
    let shared = f0.gcd(&f1).deg();
    assert_eq!(shared, 2);
    let p = Pencil::new(2, f0, f1).unwrap();
    let s = total_space_euler(&p).unwrap();
    assert!(!s.total_space_smooth);
    let doubled = s.singular_fibres.iter().filter(|r| r.disc_multiplicity == 2 && r.nodes == 1).count();
    assert_eq!(doubled, shared);
}

#[test]
fn symbolic_base_genus() {
    for g1 in 2..5u32 {
        for g2 in 0..4u32 {
            let s = FibrationSummary::from_records(g1, g2, Vec::new());
            assert_eq!(s.e_total, s.bound);
            assert!(!s.strict);
        }
    }
}

#[test]
fn worse_fibre_marks_summary_inexact() {
    let f0 = UniPoly::from_roots(&[int(0), int(0), int(0), int(1), int(2), int(3)]);
    let f1 = construct_nodal(2, 0, 4).unwrap().f().clone();
    let p = Pencil::new(2, f0, f1).unwrap();
    let s = total_space_euler(&p).unwrap();
    assert!(!s.exact);
    // the cusp has Milnor number 2 and f₁(0) ≠ 0 keeps the surface smooth
    assert!(s.total_space_smooth);
    assert!(s.singular_fibres.iter().any(|r| r.class.kind == FibreKind::NonNodal));
}

#[test]
fn pencil_json_shape() {
    let p = Pencil::random(2, 3).unwrap();
    let s = total_space_euler(&p).unwrap();
    let v = s.to_value();
    for key in ["e_total", "bound", "strict", "fibres"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for f in v["fibres"].as_array().unwrap() {
        assert!(f.get("param").is_some() ^ f.get("minpoly").is_some());
        assert!(f["nodes"].as_u64().unwrap() >= 1);
    }
}
