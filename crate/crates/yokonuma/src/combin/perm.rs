//! Permutations in one-line notation.
//!
//! Values and positions are 0-based internally; simple transpositions are
//! numbered 1..n-1 as usual, with `s_i` swapping positions `i-1` and `i`.
//! Composition is `(v * w)(i) = v(w(i))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Build from 0-based images; panics unless a bijection.
    pub fn from_images(img: Vec<usize>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            assert!(x < n && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm(img)
    }

    /// The simple transposition `s_i`, `1 <= i <= n-1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!((1..n).contains(&i));
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i - 1, i);
        Perm(img)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            img[x] = i;
        }
        Perm(img)
    }

    /// `self * s_i`: swaps the images at positions `i-1`, `i`.
    pub fn rmul_simple(&self, i: usize) -> Perm {
        assert!((1..self.n()).contains(&i));
        let mut img = self.0.clone();
        img.swap(i - 1, i);
        Perm(img)
    }

    /// `s_i * self`: swaps the values `i-1`, `i` wherever they occur.
    pub fn lmul_simple(&self, i: usize) -> Perm {
        assert!((1..self.n()).contains(&i));
        let img = self
            .0
            .iter()
            .map(|&x| {
                if x == i - 1 {
                    i
                } else if x == i {
                    i - 1
                } else {
                    x
                }
            })
            .collect();
        Perm(img)
    }

    /// Coxeter length: the number of inversions.
    pub fn len(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when right-multiplying by `s_i` increases length,
    /// i.e. `w(i-1) < w(i)` in 0-based positions.
    pub fn ascends_at(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// The canonical reduced word: generator indices `i_1..i_k` with
    /// `w = s_{i_1} * ... * s_{i_k}`, chosen by repeatedly stripping the
    /// smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(w.len());
        loop {
            let descent = (1..w.n()).find(|&i| !w.ascends_at(i));
            match descent {
                None => break,
                Some(i) => {
                    rev.push(i);
                    w = w.rmul_simple(i);
                }
            }
        }
        rev.reverse();
        rev
    }

    /// Rearrange entries by this permutation: `out[self(i)] = v[i]`.
    /// This is the place-permutation action `(w . v)_j = v_{w^{-1}(j)}`.
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.n(), v.len());
        let mut out: Vec<T> = v.to_vec();
        for (i, &wi) in self.0.iter().enumerate() {
            out[wi] = v[i].clone();
        }
        out
    }

    /// Cycle decomposition, each cycle listed from its smallest element;
    /// fixed points included as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.0[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.0[j];
            }
            out.push(cyc);
        }
        out
    }

    /// All permutations of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        assert!(n <= 8, "refusing to enumerate S_n beyond n = 8");
        let mut out = Vec::new();
        let mut img: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(img.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| img[i] < img[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| img[j] > img[i]).unwrap();
            img.swap(i, j);
            img[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    /// One-line notation with 1-based values, e.g. `[3,1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .0
            .iter()
            .map(|&x| alloc::format!("{}", x + 1))
            .collect();
        write!(f, "[{}]", body.join(","))
    }
}
