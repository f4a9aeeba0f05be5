//! Brute-force checks of the color-sorting permutations and block
//! bookkeeping used by the matrix decomposition.

use yokonuma::{Character, Perm};

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

fn multinomial(parts: &[usize]) -> usize {
    let n: usize = parts.iter().sum();
    let mut acc = 1usize;
    let mut rest = n;
    for &p in parts {
        // choose(rest, p)
        let mut ch = 1usize;
        for j in 0..p {
            ch = ch * (rest - j) / (j + 1);
        }
        acc *= ch;
        rest -= p;
    }
    acc
}

#[test]
fn sorting_permutation_is_the_unique_shortest_sorter() {
    for d in 1..=3u32 {
        for n in 1..=4usize {
            let perms = all_perms(n);
            for chi in Character::all(d, n) {
                let colors = chi.colors().to_vec();
                let pi_inv = chi.sort_perm_inv();
                assert_eq!(pi_inv, chi.sort_perm().inverse());
                let mut sorted = colors.clone();
                sorted.sort_unstable();
                assert_eq!(pi_inv.permute(&colors), sorted, "d={d} n={n} {colors:?}");
                for w in &perms {
                    if w.permute(&colors) == sorted {
                        assert!(
                            w.len() >= pi_inv.len(),
                            "shorter sorter for {colors:?}: {w:?}"
                        );
                        if w.len() == pi_inv.len() {
                            assert_eq!(*w, pi_inv, "tie sorter for {colors:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn block_sizes_partition_the_color_cube() {
    for d in 1..=3u32 {
        for n in 1..=4usize {
            let all = Character::all(d, n);
            assert_eq!(all.len(), (d as usize).pow(n as u32));
            for chi in &all {
                let mu = chi.mu();
                let mut start = 0;
                for a in 1..=d {
                    assert_eq!(mu.block_start(a), start, "d={d} n={n} a={a}");
                    start += mu.part(a);
                }
                assert_eq!(start, n);
                // Counting colorings with a given multiplicity vector.
                let parts: Vec<usize> = (1..=d).map(|a| mu.part(a)).collect();
                let same = all.iter().filter(|c| c.mu() == mu).count();
                assert_eq!(same, multinomial(&parts), "d={d} n={n} {parts:?}");
            }
        }
    }
}

#[test]
fn color_action_composes_contravariantly_with_products() {
    for d in 1..=3u32 {
        let n = 3;
        let perms = all_perms(n);
        for chi in Character::all(d, n) {
            for v in &perms {
                for w in &perms {
                    let vw = v.compose(w);
                    assert_eq!(chi.act(&vw), chi.act(w).act(v), "d={d}");
                }
            }
        }
    }
}
