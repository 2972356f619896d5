use std::collections::{BTreeMap, VecDeque};

use lfactor_core::hecke::{pi_power, s0, s1};
use lfactor_core::rootdata::{Coweight, ExtAffineWeylElement, GroupData};
use proptest::prelude::*;

fn element(rank: usize) -> impl Strategy<Value = ExtAffineWeylElement> {
    let g = GroupData::gl(rank).unwrap();
    let perms = g.weyl_group();
    (proptest::collection::vec(-4i64..=4, rank), 0..perms.len())
        .prop_map(move |(t, i)| ExtAffineWeylElement::new(Coweight::new(t), perms[i].clone()))
}

/// Coxeter length by breadth-first search from the length-zero elements.
fn coxeter_lengths(depth: u64) -> BTreeMap<ExtAffineWeylElement, u64> {
    let mut seen = BTreeMap::new();
    let mut queue = VecDeque::new();
    for m in -12..=12 {
        let w = pi_power(m);
        seen.insert(w.clone(), 0);
        queue.push_back(w);
    }
    while let Some(w) = queue.pop_front() {
        let d = seen[&w];
        if d == depth {
            continue;
        }
        for s in [s0(), s1()] {
            let next = s.compose(&w);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    seen
}

#[test]
fn length_matches_coxeter_search() {
    let g = GroupData::gl(2).unwrap();
    let table = coxeter_lengths(7);
    assert!(table.len() > 200);
    for (w, d) in &table {
        assert_eq!(w.length(&g), *d, "{w}");
    }
}

#[test]
fn translation_length_is_two_delta_pairing() {
    for n in 1..=3 {
        let g = GroupData::gl(n).unwrap();
        for a in -3..=3 {
            for b in -3..=a {
                let mut v = vec![a, b, b - 1];
                v.truncate(n);
                let lambda = Coweight::new(v);
                let w = ExtAffineWeylElement::translation(lambda.clone());
                assert_eq!(w.length(&g) as i64, g.two_delta_pairing(&lambda));
            }
        }
    }
}

proptest! {
    #[test]
    fn associativity(a in element(3), b in element(3), c in element(3)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverses(a in element(3)) {
        let e = ExtAffineWeylElement::identity(3);
        prop_assert_eq!(a.compose(&a.inverse()), e.clone());
        prop_assert_eq!(a.inverse().compose(&a), e);
    }

    #[test]
    fn length_is_inverse_invariant(a in element(3)) {
        let g = GroupData::gl(3).unwrap();
        prop_assert_eq!(a.length(&g), a.inverse().length(&g));
    }

    #[test]
    fn length_subadditive(a in element(2), b in element(2)) {
        let g = GroupData::gl(2).unwrap();
        prop_assert!(a.compose(&b).length(&g) <= a.length(&g) + b.length(&g));
    }

    #[test]
    fn simple_reflections_change_length_by_one(a in element(2)) {
        let g = GroupData::gl(2).unwrap();
        for s in [s0(), s1()] {
            let diff = s.compose(&a).length(&g) as i64 - a.length(&g) as i64;
            prop_assert_eq!(diff.abs(), 1);
        }
    }
}
