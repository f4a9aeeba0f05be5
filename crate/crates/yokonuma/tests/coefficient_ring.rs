//! Ring axioms, root-of-unity arithmetic, and the canonical string form,
//! exercised on generated inputs.

use proptest::prelude::*;
use yokonuma::{parse_poly, CycNumber, LaurentPoly, Monomial, VarId};

const ORDER: u32 = 3;

fn cyc_strategy() -> impl Strategy<Value = CycNumber> {
    prop::collection::vec((-3i64..=3i64, 1i64..=2i64), 1..=2).prop_map(|parts| {
        let mut acc = CycNumber::zero();
        for (k, (num, den)) in parts.into_iter().enumerate() {
            let term = CycNumber::fraction(num, den)
                .checked_mul(&CycNumber::zeta_pow(ORDER, k as i64))
                .unwrap();
            acc = acc.checked_add(&term).unwrap();
        }
        acc
    })
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    (
        -3i32..=3,
        -3i32..=3,
        -1i32..=1,
        -2i32..=2,
        prop::option::of((1u32..=2, prop::sample::select(vec![-2i64, -1, 1, 2]))),
    )
        .prop_map(|(a, b, c, lam_half, xp)| {
            let mut m = Monomial::var(VarId::U, a)
                .mul(&Monomial::var(VarId::V, b))
                .mul(&Monomial::var(VarId::Gamma, c))
                .mul(&Monomial::var_half(VarId::Lambda, lam_half));
            if let Some((color, winding)) = xp {
                m = m.mul(&Monomial::var(VarId::XParam { color, winding }, 1));
            }
            m
        })
}

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial_strategy(), cyc_strategy()), 0..=3).prop_map(|terms| {
        let mut acc = LaurentPoly::zero();
        for (m, c) in terms {
            acc = acc.add(&LaurentPoly::term(m, c));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_commutative_and_associative(
        a in poly_strategy(), b in poly_strategy(), c in poly_strategy()
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.sub(&a), LaurentPoly::zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(
        a in poly_strategy(), b in poly_strategy(), c in poly_strategy()
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&LaurentPoly::one()), a.clone());
    }

    #[test]
    fn canonical_string_round_trips(a in poly_strategy()) {
        let text = a.to_string();
        let back = parse_poly(&text, ORDER).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn monomial_units_invert(m in monomial_strategy(), c in cyc_strategy()) {
        prop_assume!(!c.is_zero());
        let p = LaurentPoly::term(m, c);
        let inv = p.try_inverse().unwrap();
        prop_assert_eq!(p.mul(&inv), LaurentPoly::one());
    }

    #[test]
    fn inverse_roundtrip_when_defined(a in poly_strategy()) {
        if let Some(inv) = a.try_inverse() {
            prop_assert_eq!(a.mul(&inv), LaurentPoly::one());
        }
    }

    #[test]
    fn substitution_by_a_unit_is_a_ring_map(a in poly_strategy(), b in poly_strategy()) {
        let mut map = std::collections::BTreeMap::new();
        map.insert(VarId::U, LaurentPoly::term(
            Monomial::var(VarId::U, 1),
            CycNumber::integer(2),
        ));
        let sa = a.substitute(&map).unwrap();
        let sb = b.substitute(&map).unwrap();
        prop_assert_eq!(a.mul(&b).substitute(&map).unwrap(), sa.mul(&sb));
        prop_assert_eq!(a.add(&b).substitute(&map).unwrap(), sa.add(&sb));
    }
}

#[test]
fn root_of_unity_identities() {
    for d in 1..=6u32 {
        assert_eq!(CycNumber::zeta_pow(d, d as i64), CycNumber::one(), "d={d}");
        assert_eq!(
            CycNumber::zeta_pow(d, -1)
                .checked_mul(&CycNumber::zeta_pow(d, 1))
                .unwrap(),
            CycNumber::one(),
            "d={d}"
        );
        if d >= 2 {
            let mut sum = CycNumber::zero();
            for k in 0..d {
                sum = sum.checked_add(&CycNumber::zeta_pow(d, k as i64)).unwrap();
            }
            assert!(sum.is_zero(), "d={d}");
        }
    }
}

#[test]
fn displayed_order_is_stable() {
    // The canonical form sorts terms the same way every time, so equal
    // values (however assembled) print identically.
    let a = parse_poly("v^2 + 2*u^2 - u^4", 1).unwrap();
    let b = parse_poly("-u^4 + v^2 + u^2 + u^2", 1).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.to_string(), "2*u^2 - u^4 + v^2");
}
