//! The block-matrix decomposition as a ring map: relations on generator
//! images, invertibility on a low-degree basis, and the morphism property
//! on random pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yokonuma::iso::{psi_forward, psi_inverse, verify_relations};
use yokonuma::{parse_poly, Character, LaurentPoly, Perm, YElement, YKey};

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

#[test]
fn generator_images_satisfy_the_relations() {
    for (d, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
        verify_relations(d, n).unwrap();
    }
}

#[test]
fn round_trip_fixes_a_low_degree_basis() {
    for (d, n) in [(2u32, 2usize), (3, 2)] {
        let perms = all_perms(n);
        let mut torus = vec![vec![0u32; n]];
        for j in 0..n {
            let mut more = Vec::new();
            for t in &torus {
                for a in 1..d {
                    let mut s = t.clone();
                    s[j] = a;
                    more.push(s);
                }
            }
            torus.extend(more);
        }
        let mut loops = vec![vec![0i64; n]];
        for j in 0..n {
            for s in [-1i64, 1] {
                let mut l = vec![0i64; n];
                l[j] = s;
                loops.push(l);
            }
        }
        for w in &perms {
            for t in &torus {
                for x in &loops {
                    let key = YKey {
                        t: t.clone(),
                        x: x.clone(),
                        w: w.clone(),
                    };
                    let el = YElement::from_key(d, n, key, LaurentPoly::integer(1));
                    assert_eq!(psi_inverse(&psi_forward(&el)), el, "d={d} n={n}");
                }
            }
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, d: u32, n: usize) -> YElement {
    let perms = all_perms(n);
    let mut acc = YElement::zero(d, n);
    for _ in 0..rng.gen_range(1..=3) {
        let mut key = YKey::unit(n);
        key.w = perms[rng.gen_range(0..perms.len())].clone();
        for j in 0..n {
            key.t[j] = rng.gen_range(0..d);
            key.x[j] = rng.gen_range(-1..=1);
        }
        let coeff = parse_poly(["1", "u^2", "-v", "gamma", "1/2"][rng.gen_range(0..5)], d).unwrap();
        acc = acc.add(&YElement::from_key(d, n, key, coeff));
    }
    acc
}

#[test]
fn forward_map_is_a_ring_morphism_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (d, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
        for _ in 0..25 {
            let a = random_element(&mut rng, d, n);
            let b = random_element(&mut rng, d, n);
            let lhs = psi_forward(&a.mul(&b));
            let rhs = psi_forward(&a).mul(&psi_forward(&b));
            assert_eq!(lhs, rhs, "product d={d} n={n}");
            assert_eq!(
                psi_forward(&a.add(&b)),
                psi_forward(&a).add(&psi_forward(&b)),
                "sum d={d} n={n}"
            );
            assert_eq!(psi_inverse(&lhs), a.mul(&b), "inverse d={d} n={n}");
        }
    }
}

#[test]
fn basis_images_touch_each_row_and_column_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (d, n) in [(2u32, 3usize), (3, 2)] {
        let mut chars = Character::all(d, n);
        chars.sort();
        let perms = all_perms(n);
        for _ in 0..20 {
            let mut key = YKey::unit(n);
            key.w = perms[rng.gen_range(0..perms.len())].clone();
            for j in 0..n {
                key.t[j] = rng.gen_range(0..d);
                key.x[j] = rng.gen_range(-1..=1);
            }
            let el = YElement::from_key(d, n, key, LaurentPoly::integer(1));
            let mat = psi_forward(&el);
            let mut rows = Vec::new();
            let mut cols = Vec::new();
            for ((r, c), entry) in mat.entries() {
                assert!(!entry.is_zero());
                rows.push(r.clone());
                cols.push(c.clone());
            }
            rows.sort();
            cols.sort();
            assert_eq!(rows, chars, "rows d={d} n={n}");
            assert_eq!(cols, chars, "cols d={d} n={n}");
        }
    }
}
