//! Color vectors: functions from the n strand positions to d colors.
//!
//! A color vector chi stands for the torus character sending the j-th
//! torus generator to the root of unity numbered chi(j). The sorting
//! permutation `pi_chi` rearranges positions so equal colors become
//! contiguous blocks in color order, preserving relative order inside
//! each block.

use alloc::vec::Vec;
use core::fmt;

use super::{Composition, Perm};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Character {
    d: u32,
    colors: Vec<u32>, // colors[pos] in 1..=d, positions 0-based
}

impl Character {
    pub fn new(d: u32, colors: Vec<u32>) -> Self {
        assert!(d >= 1);
        assert!(
            colors.iter().all(|&c| (1..=d).contains(&c)),
            "color out of range"
        );
        Character { d, colors }
    }

    /// The all-ones coloring.
    pub fn trivial(d: u32, n: usize) -> Self {
        Character::new(d, alloc::vec![1; n])
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Color at 0-based position `j`.
    pub fn color(&self, j: usize) -> u32 {
        self.colors[j]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Multiplicity composition: how many positions carry each color.
    pub fn mu(&self) -> Composition {
        let mut parts = alloc::vec![0usize; self.d as usize];
        for &c in &self.colors {
            parts[(c - 1) as usize] += 1;
        }
        Composition::new(parts)
    }

    /// The action of a permutation on colorings: position `w(i)` of the
    /// result carries the color at position `i`.
    pub fn act(&self, w: &Perm) -> Character {
        Character {
            d: self.d,
            colors: w.permute(&self.colors),
        }
    }

    /// Swap the colors at positions `i-1`, `i` (the simple reflection).
    pub fn swap(&self, i: usize) -> Character {
        let mut colors = self.colors.clone();
        colors.swap(i - 1, i);
        Character { d: self.d, colors }
    }

    /// Whether the simple reflection `s_i` fixes this coloring.
    pub fn fixed_by(&self, i: usize) -> bool {
        self.colors[i - 1] == self.colors[i]
    }

    /// The sorting permutation `pi`: block-sorts positions by color while
    /// keeping the relative order inside each color class, so that
    /// `self.act(&pi.inverse())` is sorted. Computed from the closed
    /// formula for `pi^{-1}`: position j of color a goes to
    /// (size of all smaller color blocks) + (rank of j within color a).
    pub fn sort_perm(&self) -> Perm {
        self.sort_perm_inv().inverse()
    }

    /// Inverse of the sorting permutation, directly from the closed formula.
    pub fn sort_perm_inv(&self) -> Perm {
        let mu = self.mu();
        let mut rank = alloc::vec![0usize; self.d as usize];
        let mut img = Vec::with_capacity(self.n());
        for &c in &self.colors {
            let a = (c - 1) as usize;
            img.push(mu.block_start(c) + rank[a]);
            rank[a] += 1;
        }
        Perm::from_images(img)
    }

    /// All colorings, lexicographic in the color vector.
    pub fn all(d: u32, n: usize) -> Vec<Character> {
        let total = (d as u64).checked_pow(n as u32).expect("d^n overflow");
        assert!(total <= 1 << 20, "refusing to enumerate d^n > 2^20 colorings");
        let mut out = Vec::with_capacity(total as usize);
        let mut colors = alloc::vec![1u32; n];
        loop {
            out.push(Character::new(d, colors.clone()));
            // increment the color vector as a base-d counter, last position fastest
            let mut j = n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if colors[j] < d {
                    colors[j] += 1;
                    break;
                }
                colors[j] = 1;
            }
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
