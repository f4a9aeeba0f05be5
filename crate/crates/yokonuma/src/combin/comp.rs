//! Compositions of n into d (possibly zero) parts, indexed by color.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A d-composition of n: part `a` counts the positions of color `a`.
/// Colors are numbered 1..=d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty());
        Composition { parts }
    }

    /// Number of parts (colors).
    pub fn d(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Total size.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Size of the part for color `a`, 1-based.
    pub fn part(&self, a: u32) -> usize {
        self.parts[(a - 1) as usize]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Colors with a nonzero part, ascending.
    pub fn support(&self) -> Vec<u32> {
        (1..=self.d()).filter(|&a| self.part(a) > 0).collect()
    }

    /// Start offset of color block `a` when positions are sorted by color:
    /// the sum of the parts of all smaller colors.
    pub fn block_start(&self, a: u32) -> usize {
        self.parts[..(a - 1) as usize].iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All d-compositions of n, lexicographically.
pub fn compositions(d: u32, n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = vec![0usize; d as usize];
    fill(&mut out, &mut parts, 0, n);
    out
}

fn fill(out: &mut Vec<Composition>, parts: &mut Vec<usize>, idx: usize, rest: usize) {
    if idx + 1 == parts.len() {
        parts[idx] = rest;
        out.push(Composition::new(parts.clone()));
        return;
    }
    for k in 0..=rest {
        parts[idx] = k;
        fill(out, parts, idx + 1, rest - k);
    }
}

/// All d-compositions of n whose support is exactly the given color set.
pub fn compositions_with_support(d: u32, n: usize, support: &[u32]) -> Vec<Composition> {
    compositions(d, n)
        .into_iter()
        .filter(|mu| mu.support() == support)
        .collect()
}

/// The multinomial coefficient `n! / (mu_1! ... mu_d!)`: the number of
/// color vectors with the given multiplicities. Exact in u128 for n <= 20.
pub fn multinomial(mu: &Composition) -> u128 {
    let n = mu.n();
    assert!(n <= 20, "multinomial overflow guard");
    let fact = |k: usize| -> u128 { (1..=k as u128).product::<u128>().max(1) };
    let mut val = fact(n);
    for &p in mu.parts() {
        val /= fact(p);
    }
    val
}

/// Whether the multiset of cycle lengths can be split into color classes
/// with the prescribed sizes: true when some assignment of a single color
/// to every cycle realizes the composition. Decided by depth-first search
/// with memoization on (cycle index, remaining parts).
pub fn can_color_cycles(cycle_sizes: &[usize], mu: &Composition) -> bool {
    if cycle_sizes.iter().sum::<usize>() != mu.n() {
        return false;
    }
    let mut memo: BTreeMap<(usize, Vec<usize>), bool> = BTreeMap::new();
    fn go(
        sizes: &[usize],
        idx: usize,
        rest: &mut Vec<usize>,
        memo: &mut BTreeMap<(usize, Vec<usize>), bool>,
    ) -> bool {
        if idx == sizes.len() {
            return rest.iter().all(|&r| r == 0);
        }
        let key = (idx, rest.clone());
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut ok = false;
        for a in 0..rest.len() {
            if rest[a] >= sizes[idx] {
                rest[a] -= sizes[idx];
                if go(sizes, idx + 1, rest, memo) {
                    ok = true;
                }
                rest[a] += sizes[idx];
                if ok {
                    break;
                }
            }
        }
        memo.insert(key, ok);
        ok
    }
    let mut rest = mu.parts().to_vec();
    go(cycle_sizes, 0, &mut rest, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_compositions() {
        assert_eq!(compositions(2, 3).len(), 4);
        assert_eq!(compositions(3, 4).len(), 15);
        for mu in compositions(3, 4) {
            assert_eq!(mu.n(), 4);
        }
    }

    #[test]
    fn support_and_blocks() {
        let mu = Composition::new(vec![2, 0, 1]);
        assert_eq!(mu.support(), vec![1, 3]);
        assert_eq!(mu.block_start(1), 0);
        assert_eq!(mu.block_start(2), 2);
        assert_eq!(mu.block_start(3), 2);
        assert_eq!(
            compositions_with_support(2, 3, &[1, 2]),
            vec![
                Composition::new(vec![1, 2]),
                Composition::new(vec![2, 1]),
            ]
        );
    }

    #[test]
    fn multinomials_sum_to_power() {
        for (d, n) in [(2u32, 4usize), (3, 3), (4, 2)] {
            let total: u128 = compositions(d, n).iter().map(multinomial).sum();
            assert_eq!(total, (d as u128).pow(n as u32));
        }
    }

    #[test]
    fn cycle_coloring_feasibility() {
        // cycles 2+1 fit (2,1) and (1,2) swapped roles but not (3,0) splits
        let mu21 = Composition::new(vec![2, 1]);
        assert!(can_color_cycles(&[2, 1], &mu21));
        assert!(can_color_cycles(&[1, 1, 1], &mu21));
        assert!(!can_color_cycles(&[3], &mu21));
        assert!(!can_color_cycles(&[2, 2], &mu21));
        let mu30 = Composition::new(vec![3, 0]);
        assert!(can_color_cycles(&[3], &mu30));
        assert!(can_color_cycles(&[2, 1], &mu30));
    }
}
