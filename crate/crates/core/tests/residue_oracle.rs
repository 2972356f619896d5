use lfactor_core::algebra::{Field, Scalar};
use lfactor_core::hecke::{containment_oracle, coset_count_oracle, coset_in_iwahori_order, coset_in_mat_o};
use lfactor_core::rootdata::{Coweight, GroupData};
use lfactor_core::satake::coset_volume;

#[test]
fn coset_counts_match_volumes() {
    let g = GroupData::gl(2).unwrap();
    for p in [2u64, 3] {
        let field = Field::from_integer(p as i64).unwrap();
        for a in -2..=2i64 {
            for b in -2..=a {
                let lambda = Coweight::from([a, b]);
                let level = 3.max((a - b) as u32);
                let count = coset_count_oracle(&lambda, level, p).unwrap();
                let vol = coset_volume(&lambda, &g, &field).unwrap();
                assert_eq!(Scalar::from_integer(count as i64), vol, "{lambda} at p = {p}");
            }
        }
    }
}

#[test]
fn containment_matches_closed_form() {
    for (p, level) in [(2u64, 3u32), (3, 2)] {
        for record in containment_oracle(level, p).unwrap() {
            assert_eq!(record.in_mat_o, coset_in_mat_o(&record.element).unwrap(), "{}", record.element);
            assert_eq!(
                record.in_iwahori_order,
                coset_in_iwahori_order(&record.element).unwrap(),
                "{}",
                record.element
            );
        }
    }
}

#[test]
fn level_and_prime_validation() {
    assert!(coset_count_oracle(&Coweight::from([2, -2]), 3, 2).is_err());
    assert!(coset_count_oracle(&Coweight::from([1, 0]), 1, 11).is_err());
    assert!(containment_oracle(0, 2).is_err());
}
