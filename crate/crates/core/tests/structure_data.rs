use osdual::structure_data::*;
use osdual::Rational;
use proptest::prelude::*;

#[test]
fn table_reproduced_for_many_n() {
    for n in 1..=60 {
        let t = cayley_table(n).unwrap();
        assert_eq!(t.len(), 9);
        for e in &t {
            assert!(e.matches_table, "{} at n={n}", e.row.algebra);
            assert!(e.bound_holds, "{} at n={n}", e.row.algebra);
            assert_eq!(e.constants.l_pos_plus_rho, Rational::from_integer(e.row.tabulated.at(n)));
        }
    }
}

#[test]
fn stored_reference_values() {
    let expect = [(3, 3), (0, 2), (1, 2), (1, 2), (0, 3), (2, 2), (1, 2), (0, 2), (3, 3)];
    let t = cayley_table(1).unwrap();
    for (e, (r, l)) in t.iter().zip(expect) {
        assert_eq!(e.r_value, r, "{}", e.row.algebra);
        assert_eq!(e.constants.l_pos_plus_rho, Rational::from_integer(l), "{}", e.row.algebra);
    }
}

#[test]
fn invalid_ranks() {
    for k in [-3, 0, 1, 2] {
        assert!(matches!(TubeFamily::new(FamilyKind::SoK2, k), Err(osdual::Error::InvalidRank { rank, .. }) if rank == k));
    }
    for kind in [FamilyKind::SuNN, FamilyKind::SpNR, FamilyKind::SoStar4n] {
        assert!(TubeFamily::new(kind, 0).is_err());
    }
    assert!(TubeFamily::new(FamilyKind::E7Minus25, 0).is_ok());
}

fn family(kind_idx: usize, p: i64) -> TubeFamily {
    let kind = FamilyKind::ALL[kind_idx];
    let p = if kind == FamilyKind::SoK2 { p + 2 } else { p };
    TubeFamily::new(kind, p).unwrap()
}

proptest! {
    #[test]
    fn l_pos_plus_rho_is_rank(kind_idx in 0usize..5, p in 1i64..200) {
        let c = tube_constants(&family(kind_idx, p)).unwrap();
        prop_assert_eq!(c.gamma, c.r);
        prop_assert_eq!(c.l_pos_plus_rho, Rational::from_integer(c.r));
        prop_assert_eq!(c.l_pos, -Rational::from_integer(c.gamma * (c.r - 1) * c.d) / Rational::from_integer(2));
    }

    #[test]
    fn wallach_forms_agree(kind_idx in 0usize..5, p in 1i64..30) {
        let c = tube_constants(&family(kind_idx, p)).unwrap();
        let nus = rational_sweep(-(c.r + 5), c.r + 5, 12);
        prop_assert!(wallach_consistent(&c, &nus));
        prop_assert!(wallach_scalar_form(&c, Rational::from_integer(c.r)));
        prop_assert!(!wallach_scalar_form(&c, Rational::new(12 * c.r + 1, 12)));
    }
}
