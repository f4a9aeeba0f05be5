//! Trace functionals across the tower: the colorless trace against the
//! winding-aware evaluator, symmetry, stability one strand down, and the
//! color-set families assembled from the block decomposition.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yokonuma::trace::{ocneanu_trace, rho_element, TraceEvaluator};
use yokonuma::{
    parse_poly, Budget, LaurentPoly, Perm, RhoSpec, TraceParams, YElement, YKey,
};

fn evaluator() -> TraceEvaluator {
    TraceEvaluator::new(BTreeMap::new(), Budget::default())
}

fn all_perms(n: usize) -> Vec<Perm> {
    if n == 1 {
        return vec![Perm::identity(1)];
    }
    let mut out = Vec::new();
    for w in all_perms(n - 1) {
        let img = w.images();
        for slot in 0..n {
            let mut v: Vec<usize> = img.iter().map(|&x| x + usize::from(x >= slot)).collect();
            v.push(slot);
            out.push(Perm::from_images(v));
        }
    }
    out
}

fn basis_el(n: usize, w: &Perm) -> YElement {
    let mut key = YKey::unit(n);
    key.w = w.clone();
    YElement::from_key(1, n, key, LaurentPoly::integer(1))
}

#[test]
fn evaluator_matches_the_classical_trace_on_plain_words() {
    let mut ev = evaluator();
    for n in 1..=4usize {
        for w in all_perms(n) {
            let el = basis_el(n, &w);
            assert_eq!(
                ev.eval_element(1, &el).unwrap(),
                ocneanu_trace(&el),
                "n={n} w={w:?}"
            );
        }
    }
}

#[test]
fn classical_trace_is_symmetric_and_markov_stable() {
    for (a, b) in [(1usize, 1usize), (1, 2), (2, 2), (2, 1)] {
        for wa in all_perms(3) {
            for wb in all_perms(3) {
                let x = basis_el(3, &wa).rmul_g(a);
                let y = basis_el(3, &wb).rmul_g(b);
                assert_eq!(ocneanu_trace(&x.mul(&y)), ocneanu_trace(&y.mul(&x)));
            }
        }
    }
    for w in all_perms(2) {
        let h = basis_el(2, &w);
        let up = h.embed(3);
        assert_eq!(
            ocneanu_trace(&up.mul(&YElement::g(1, 3, 2))),
            ocneanu_trace(&h),
            "positive stabilization w={w:?}"
        );
        assert_eq!(
            ocneanu_trace(&up.mul(&YElement::g_inv(1, 3, 2))),
            ocneanu_trace(&h),
            "negative stabilization w={w:?}"
        );
    }
}

fn random_affine(rng: &mut ChaCha8Rng, n: usize) -> YElement {
    let perms = all_perms(n);
    let mut acc = YElement::zero(1, n);
    for _ in 0..rng.gen_range(1..=2) {
        let mut key = YKey::unit(n);
        key.w = perms[rng.gen_range(0..perms.len())].clone();
        for j in 0..n {
            key.x[j] = rng.gen_range(-1..=1);
        }
        let coeff = parse_poly(["1", "u^2", "-v"][rng.gen_range(0..3)], 1).unwrap();
        acc = acc.add(&YElement::from_key(1, n, key, coeff));
    }
    acc
}

#[test]
fn winding_trace_is_symmetric_on_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut ev = evaluator();
    for _ in 0..30 {
        let a = random_affine(&mut rng, 3);
        let b = random_affine(&mut rng, 3);
        assert_eq!(
            ev.eval_element(1, &a.mul(&b)).unwrap(),
            ev.eval_element(1, &b.mul(&a)).unwrap()
        );
    }
}

#[test]
fn winding_trace_is_markov_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut ev = evaluator();
    for _ in 0..20 {
        let h = random_affine(&mut rng, 2);
        let up = h.embed(3);
        assert_eq!(
            ev.eval_element(1, &up.mul(&YElement::g(1, 3, 2))).unwrap(),
            ev.eval_element(1, &h).unwrap()
        );
        assert_eq!(
            ev.eval_element(1, &up.mul(&YElement::g_inv(1, 3, 2)))
                .unwrap(),
            ev.eval_element(1, &h).unwrap()
        );
    }
}

#[test]
fn twisted_powers_peel_off_as_parameters() {
    // tau_m(twisted^k * h) = x_k * c * tau_{m-1}(h), tested with the
    // symbolic family of color 2 so the parameter names are visible.
    let c = parse_poly("v^-1 - u^2*v^-1", 1).unwrap();
    for m in [2usize, 3] {
        for k in [-2i64, -1, 1, 2] {
            for w in all_perms(m - 1) {
                let h = basis_el(m - 1, &w);
                let tw = YElement::x_twisted(1, m, m, k);
                let el = tw.mul(&h.embed(m));
                let mut ev = TraceEvaluator::new(
                    BTreeMap::from([(2u32, TraceParams::symbolic(2))]),
                    Budget::default(),
                );
                let got = ev.eval_element(2, &el).unwrap();
                let xk = LaurentPoly::var(yokonuma::VarId::XParam {
                    color: 2,
                    winding: k,
                });
                let mut ev2 = evaluator();
                let expect = xk.mul(&c).mul(&ev2.eval_element(1, &h).unwrap());
                assert_eq!(got, expect, "m={m} k={k} w={w:?}");
            }
        }
    }
}

#[test]
fn color_set_families_are_symmetric_and_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let budget = Budget::default();
    let perms = all_perms(2);
    let supports: [&[u32]; 3] = [&[1], &[2], &[1, 2]];
    for support in supports {
        let spec2 = RhoSpec::symbolic(2, support);
        for _ in 0..10 {
            let mut mk = |n: usize| {
                let mut key = YKey::unit(n);
                key.w = if n == 2 {
                    perms[rng.gen_range(0..2)].clone()
                } else {
                    Perm::identity(n)
                };
                for j in 0..n {
                    key.t[j] = rng.gen_range(0..2);
                    key.x[j] = rng.gen_range(-1..=1);
                }
                YElement::from_key(2, n, key, LaurentPoly::integer(1))
            };
            let a = mk(2);
            let b = mk(2);
            assert_eq!(
                rho_element(&a.mul(&b), &spec2, budget).unwrap(),
                rho_element(&b.mul(&a), &spec2, budget).unwrap(),
                "symmetry S={support:?}"
            );
            let up = a.embed(3);
            let spec3 = RhoSpec::symbolic(2, support);
            assert_eq!(
                rho_element(&up.mul(&YElement::g(2, 3, 2)), &spec3, budget).unwrap(),
                rho_element(&a, &spec2, budget).unwrap(),
                "stability S={support:?}"
            );
            assert_eq!(
                rho_element(&up.mul(&YElement::g_inv(2, 3, 2)), &spec3, budget).unwrap(),
                rho_element(&a, &spec2, budget).unwrap(),
                "inverse stability S={support:?}"
            );
        }
    }
}
