//! The classical Markov trace on the colorless finite Hecke algebra,
//! computed by peeling the top strand one crossing at a time. Used as an
//! independent oracle for the affine evaluator on elements without
//! affine content.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::free_strand_factor;
use crate::algebra::{YElement, YKey};
use crate::coeff::LaurentPoly;
use crate::combin::Perm;

/// Trace of a colorless element with no affine part, normalized so the
/// identity on one strand has trace 1. Panics if the element carries
/// colors or affine exponents.
pub fn ocneanu_trace(el: &YElement) -> LaurentPoly {
    assert_eq!(el.d(), 1, "colorless elements only");
    let mut memo: BTreeMap<Perm, LaurentPoly> = BTreeMap::new();
    let mut out = LaurentPoly::zero();
    for (key, coeff) in el.terms() {
        assert!(
            key.x.iter().all(|&a| a == 0),
            "no affine content allowed here"
        );
        out = out.add(&coeff.mul(&tau(&key.w, &mut memo)));
    }
    out
}

fn tau(w: &Perm, memo: &mut BTreeMap<Perm, LaurentPoly>) -> LaurentPoly {
    let m = w.n();
    if m <= 1 {
        return LaurentPoly::one();
    }
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let res = if w.apply(m - 1) == m - 1 {
        let sub = Perm::from_images(w.images()[..m - 1].to_vec());
        free_strand_factor().mul(&tau(&sub, memo))
    } else {
        // w = w' . (j0 -> top cycle), lengths additive; the leading top
        // crossing slides out and the rest multiplies back together one
        // strand lower.
        let j0 = w.inverse().apply(m - 1);
        let cyc = top_cycle(m, j0);
        let wp = w.compose(&cyc.inverse());
        debug_assert_eq!(wp.apply(m - 1), m - 1);
        debug_assert_eq!(wp.len() + (m - 1 - j0), w.len());
        let wp_low = Perm::from_images(wp.images()[..m - 1].to_vec());
        let mut el = YElement::from_key(
            1,
            m - 1,
            YKey {
                t: alloc::vec![0; m - 1],
                x: alloc::vec![0; m - 1],
                w: wp_low,
            },
            LaurentPoly::one(),
        );
        for i in (j0 + 1..=m.saturating_sub(2)).rev() {
            el = el.rmul_g(i);
        }
        let mut acc = LaurentPoly::zero();
        for (key, coeff) in el.terms() {
            acc = acc.add(&coeff.mul(&tau(&key.w, memo)));
        }
        acc
    };
    memo.insert(w.clone(), res.clone());
    res
}

/// The cycle sending position `j0` to the top, shifting everything above
/// it down one: as a word, `s_{m-1} s_{m-2} .. s_{j0+1}` in 1-based
/// generator indices.
pub(super) fn top_cycle(m: usize, j0: usize) -> Perm {
    let mut img = Vec::with_capacity(m);
    for i in 0..m {
        img.push(if i < j0 {
            i
        } else if i == j0 {
            m - 1
        } else {
            i - 1
        });
    }
    Perm::from_images(img)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_poly;

    fn lit(s: &str) -> LaurentPoly {
        parse_poly(s, 1).unwrap()
    }

    #[test]
    fn frozen_two_strand_values() {
        let c = free_strand_factor();
        assert_eq!(c, lit("v^-1 - u^2*v^-1"));
        assert_eq!(ocneanu_trace(&YElement::one(1, 2)), c);
        assert_eq!(ocneanu_trace(&YElement::g(1, 2, 1)), LaurentPoly::one());
        let g = YElement::g(1, 2, 1);
        let g3 = g.mul(&g).mul(&g);
        assert_eq!(ocneanu_trace(&g3), lit("2*u^2 - u^4 + v^2"));
    }

    #[test]
    fn top_strand_slides_out() {
        // tau(h g_{m-1} h') = tau(h h') for h, h' below the top strand
        let h = YElement::g(1, 3, 1);
        let hp = YElement::g_inv(1, 3, 1);
        let lhs = ocneanu_trace(&h.mul(&YElement::g(1, 3, 2)).mul(&hp));
        let rhs = ocneanu_trace(&h.mul(&hp).restrict(2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_on_products() {
        let a = YElement::g(1, 3, 1).mul(&YElement::g(1, 3, 2));
        let b = YElement::g(1, 3, 2).mul(&YElement::g(1, 3, 1)).mul(&YElement::g(1, 3, 2));
        assert_eq!(ocneanu_trace(&a.mul(&b)), ocneanu_trace(&b.mul(&a)));
    }

    #[test]
    fn three_strand_identity() {
        let c = free_strand_factor();
        assert_eq!(ocneanu_trace(&YElement::one(1, 3)), c.mul(&c));
    }
}
