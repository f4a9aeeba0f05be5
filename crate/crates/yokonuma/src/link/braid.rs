//! Words in the framed affine braid group: crossings `s<i>` between
//! adjacent strands, the loop generator `x` around the torus axis, and
//! framing shifts `t<j>^<k>`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::combin::Perm;

/// One letter of a framed affine braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidLetter {
    /// `s<i>` or `s<i>^-1`: crossing of strands `i`, `i+1` (1-based).
    Sigma { i: usize, inverse: bool },
    /// `x` or `x^-1`: the loop of strand 1 around the axis.
    Loop { inverse: bool },
    /// `t<j>^<k>`: framing shift of `k` on strand `j` (1-based).
    Frame { j: usize, k: i64 },
}

/// A braid word: strand count plus letters, read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Self {
        assert!(n >= 1, "at least one strand");
        for l in &letters {
            match *l {
                BraidLetter::Sigma { i, .. } => {
                    assert!((1..n).contains(&i), "crossing index out of range")
                }
                BraidLetter::Frame { j, k } => {
                    assert!((1..=n).contains(&j), "strand index out of range");
                    assert!(k != 0, "framing letters carry a nonzero shift");
                }
                BraidLetter::Loop { .. } => {}
            }
        }
        BraidWord { n, letters }
    }

    /// Parse the textual form `B<n>: <letters>`, e.g. `B3: s1 s2^-1 x t2^3`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let text = text.trim();
        let rest = text
            .strip_prefix('B')
            .ok_or_else(|| "expected a braid word starting with 'B<n>:'".to_string())?;
        let colon = rest
            .find(':')
            .ok_or_else(|| "missing ':' after the strand count".to_string())?;
        let n: usize = rest[..colon]
            .parse()
            .map_err(|_| format!("bad strand count {:?}", &rest[..colon]))?;
        if n == 0 {
            return Err("strand count must be at least 1".to_string());
        }
        let mut letters = Vec::new();
        for tok in rest[colon + 1..].split_whitespace() {
            letters.push(parse_letter(tok, n)?);
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// The underlying permutation: framing and loop letters act trivially.
    pub fn underlying_perm(&self) -> Perm {
        let mut w = Perm::identity(self.n);
        for l in &self.letters {
            if let BraidLetter::Sigma { i, .. } = *l {
                w = w.rmul_simple(i);
            }
        }
        w
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        self.underlying_perm().cycles().len()
    }

    /// Total winding: signed count of loop letters.
    pub fn total_winding(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match *l {
                BraidLetter::Loop { inverse } => {
                    if inverse {
                        -1
                    } else {
                        1
                    }
                }
                _ => 0,
            })
            .sum()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            n: self.n,
            letters,
        }
    }

    /// The group inverse: letters reversed and inverted.
    pub fn inverse(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match *l {
                BraidLetter::Sigma { i, inverse } => BraidLetter::Sigma {
                    i,
                    inverse: !inverse,
                },
                BraidLetter::Loop { inverse } => BraidLetter::Loop { inverse: !inverse },
                BraidLetter::Frame { j, k } => BraidLetter::Frame { j, k: -k },
            })
            .collect();
        BraidWord {
            n: self.n,
            letters,
        }
    }

    /// Cyclic rotation by `k` letters: the closure is unchanged.
    pub fn rotate(&self, k: usize) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord {
            n: self.n,
            letters,
        }
    }

    /// Conjugation `a w a^{-1}`; the closure is unchanged.
    pub fn conjugate(&self, a: &BraidWord) -> BraidWord {
        a.concat(self).concat(&a.inverse())
    }

    /// Positive (or negative) stabilization: one more strand and a final
    /// crossing `s_n^{+-1}`; the closure is unchanged.
    pub fn stabilize(&self, negative: bool) -> BraidWord {
        let n = self.n + 1;
        let mut letters = self.letters.clone();
        letters.push(BraidLetter::Sigma {
            i: self.n,
            inverse: negative,
        });
        BraidWord { n, letters }
    }

    /// Undo a stabilization: the word must end in `s_{n-1}^{+-1}` and no
    /// other letter may touch the last strand. The closure is unchanged.
    pub fn destabilize(&self) -> Result<BraidWord, String> {
        if self.n < 2 {
            return Err("nothing to destabilize on one strand".to_string());
        }
        let top = self.n - 1;
        match self.letters.last() {
            Some(BraidLetter::Sigma { i, .. }) if *i == top => {}
            _ => {
                return Err(format!(
                    "destabilization needs a final s{top} or s{top}^-1"
                ))
            }
        }
        for l in &self.letters[..self.letters.len() - 1] {
            let uses_top = match *l {
                BraidLetter::Sigma { i, .. } => i >= top,
                BraidLetter::Frame { j, .. } => j == self.n,
                BraidLetter::Loop { .. } => false,
            };
            if uses_top {
                return Err(format!("strand {} is used before the final crossing", self.n));
            }
        }
        Ok(BraidWord {
            n: self.n - 1,
            letters: self.letters[..self.letters.len() - 1].to_vec(),
        })
    }
}

fn parse_letter(tok: &str, n: usize) -> Result<BraidLetter, String> {
    let bad = |why: &str| format!("bad letter {tok:?}: {why}");
    let (head, exp) = match tok.find('^') {
        None => (tok, None),
        Some(p) => (&tok[..p], Some(&tok[p + 1..])),
    };
    let parse_exp = |e: Option<&str>| -> Result<i64, String> {
        match e {
            None => Ok(1),
            Some(s) => s.parse().map_err(|_| bad("malformed exponent")),
        }
    };
    if head == "x" {
        let k = parse_exp(exp)?;
        return match k {
            1 => Ok(BraidLetter::Loop { inverse: false }),
            -1 => Ok(BraidLetter::Loop { inverse: true }),
            _ => Err(bad("loop letters only take exponents 1 or -1")),
        };
    }
    if let Some(num) = head.strip_prefix('s') {
        let i: usize = num.parse().map_err(|_| bad("malformed strand index"))?;
        if !(1..n).contains(&i) {
            return Err(bad("crossing index out of range"));
        }
        let k = parse_exp(exp)?;
        return match k {
            1 => Ok(BraidLetter::Sigma { i, inverse: false }),
            -1 => Ok(BraidLetter::Sigma { i, inverse: true }),
            _ => Err(bad("crossings only take exponents 1 or -1")),
        };
    }
    if let Some(num) = head.strip_prefix('t') {
        let j: usize = num.parse().map_err(|_| bad("malformed strand index"))?;
        if !(1..=n).contains(&j) {
            return Err(bad("strand index out of range"));
        }
        let k = parse_exp(exp)?;
        if k == 0 {
            return Err(bad("framing shift must be nonzero"));
        }
        return Ok(BraidLetter::Frame { j, k });
    }
    Err(bad("unknown letter"))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.n)?;
        for l in &self.letters {
            match *l {
                BraidLetter::Sigma { i, inverse: false } => write!(f, " s{i}")?,
                BraidLetter::Sigma { i, inverse: true } => write!(f, " s{i}^-1")?,
                BraidLetter::Loop { inverse: false } => write!(f, " x")?,
                BraidLetter::Loop { inverse: true } => write!(f, " x^-1")?,
                BraidLetter::Frame { j, k } if k == 1 => write!(f, " t{j}")?,
                BraidLetter::Frame { j, k } => write!(f, " t{j}^{k}")?,
            }
        }
        Ok(())
    }
}
