use lfactor_core::algebra::{Field, Scalar};
use lfactor_core::hecke::{
    pi, pi_power, principal_series_module, s0, s1, steinberg_module, HeckeElement, IwahoriHecke,
};
use lfactor_core::rootdata::{Coweight, ExtAffineWeylElement, GroupData};
use lfactor_core::satake::{spherical_convolve, SatakeParameter, SphericalElement};
use proptest::prelude::*;

fn s(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

fn weyl_element() -> impl Strategy<Value = ExtAffineWeylElement> {
    (-2i64..=2, -2i64..=2, any::<bool>()).prop_map(|(a, b, swap)| {
        ExtAffineWeylElement::new(Coweight::from([a, b]), if swap { vec![1, 0] } else { vec![0, 1] })
    })
}

fn hecke_element() -> impl Strategy<Value = HeckeElement> {
    proptest::collection::vec((weyl_element(), -3i64..=3), 1..=3).prop_map(|terms| {
        let mut h = HeckeElement::zero();
        for (w, c) in terms {
            h.add_term(w, &s(c));
        }
        h
    })
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(4i64), Just(9), Just(3)].prop_map(|q| Field::from_integer(q).unwrap())
}

#[test]
fn quadratic_relations_and_rotation() {
    let field = Field::from_integer(5).unwrap();
    let h = IwahoriHecke::new(field);
    let q = field.q();
    for t in [s0(), s1()] {
        let ts = HeckeElement::basis(t);
        let lhs = h.multiply(&ts, &ts).unwrap();
        let rhs = ts.scale(&(&q - &s(1))).add(&HeckeElement::unit().scale(&q));
        assert_eq!(lhs, rhs);
    }
    let p = HeckeElement::basis(pi());
    let p_inv = HeckeElement::basis(pi_power(-1));
    let conj = h.multiply(&h.multiply(&p, &HeckeElement::basis(s0())).unwrap(), &p_inv).unwrap();
    assert_eq!(conj, HeckeElement::basis(s1()));
}

#[test]
fn spherical_embedding_is_multiplicative() {
    let g = GroupData::gl(2).unwrap();
    for q in [2, 4, 9] {
        let field = Field::from_integer(q).unwrap();
        let h = IwahoriHecke::new(field);
        let pool = [[0, 0], [1, 0], [1, 1], [2, 0], [1, -1], [2, -1]];
        for a in &pool {
            for b in &pool {
                let f = SphericalElement::indicator(Coweight::from(*a));
                let k = SphericalElement::indicator(Coweight::from(*b));
                let lhs = h.multiply(&h.from_spherical(&f).unwrap(), &h.from_spherical(&k).unwrap()).unwrap();
                let rhs = h.from_spherical(&spherical_convolve(&f, &k, &g, &field).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a:?} * {b:?} at q = {q}");
                assert_eq!(h.spherical_average(&h.from_spherical(&f).unwrap()).unwrap(), f);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn multiplication_is_associative(a in hecke_element(), b in hecke_element(), c in hecke_element(), field in field()) {
        let h = IwahoriHecke::new(field);
        let left = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lengths_add_means_basis_product(x in weyl_element(), y in weyl_element(), field in field()) {
        let h = IwahoriHecke::new(field);
        let xy = x.compose(&y);
        if h.length(&xy) == h.length(&x) + h.length(&y) {
            let p = h.multiply(&HeckeElement::basis(x), &HeckeElement::basis(y)).unwrap();
            prop_assert_eq!(p, HeckeElement::basis(xy));
        }
    }

    #[test]
    fn modules_are_representations(
        a in hecke_element(),
        b in hecke_element(),
        x in prop_oneof![-4i64..=-1, 1i64..=4],
        y in prop_oneof![-4i64..=-1, 1i64..=4],
        field in field(),
    ) {
        let h = IwahoriHecke::new(field);
        let ab = h.multiply(&a, &b).unwrap();
        let alpha = SatakeParameter::new(vec![s(x), s(y)]).unwrap();
        for m in [principal_series_module(&field, &alpha).unwrap(), steinberg_module(&field, &s(x)).unwrap()] {
            let lhs = m.act_element(&ab).unwrap();
            let rhs = &m.act_element(&a).unwrap() * &m.act_element(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
