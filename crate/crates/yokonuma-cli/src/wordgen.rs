//! Seeded random braid words for the verification suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use yokonuma::link::BraidLetter;
use yokonuma::BraidWord;

/// Shape of the words a suite draws.
#[derive(Clone, Copy, Debug)]
pub struct WordShape {
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_len: usize,
    /// Cap on loop letters, which drive the winding degree of the trace.
    pub max_loops: usize,
    pub frames: bool,
    /// Framing shifts are drawn from 1..=frame_span.
    pub frame_span: i64,
}

impl WordShape {
    pub fn classical(max_strands: usize, max_len: usize) -> Self {
        WordShape {
            min_strands: 2,
            max_strands,
            max_len,
            max_loops: 0,
            frames: false,
            frame_span: 1,
        }
    }

    pub fn affine(max_strands: usize, max_len: usize, max_loops: usize) -> Self {
        WordShape {
            max_loops,
            ..Self::classical(max_strands, max_len)
        }
    }

    pub fn framed(max_strands: usize, max_len: usize, max_loops: usize, span: i64) -> Self {
        WordShape {
            frames: true,
            frame_span: span,
            ..Self::affine(max_strands, max_len, max_loops)
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, shape: WordShape) -> BraidWord {
    let n = rng.gen_range(shape.min_strands..=shape.max_strands);
    let len = rng.gen_range(0..=shape.max_len);
    let mut letters = Vec::with_capacity(len);
    let mut loops = 0usize;
    for _ in 0..len {
        let mut kind = rng.gen_range(0..10); // mostly crossings
        if kind >= 8 && loops >= shape.max_loops {
            kind = rng.gen_range(0..7);
        }
        if kind == 7 && !shape.frames {
            kind = 0;
        }
        match kind {
            8 | 9 => {
                loops += 1;
                letters.push(BraidLetter::Loop {
                    inverse: rng.gen_bool(0.5),
                });
            }
            7 => {
                let mut k = rng.gen_range(-shape.frame_span..=shape.frame_span);
                if k == 0 {
                    k = 1;
                }
                letters.push(BraidLetter::Frame {
                    j: rng.gen_range(1..=n),
                    k,
                });
            }
            _ => {
                if n >= 2 {
                    letters.push(BraidLetter::Sigma {
                        i: rng.gen_range(1..n),
                        inverse: rng.gen_bool(0.5),
                    });
                }
            }
        }
    }
    BraidWord::new(n, letters)
}

/// A random classical word whose closure has exactly `components`
/// components.
pub fn random_classical_with_components(
    rng: &mut ChaCha8Rng,
    shape: WordShape,
    components: usize,
) -> BraidWord {
    loop {
        let w = random_word(rng, shape);
        if w.components() == components && !w.letters().is_empty() {
            return w;
        }
    }
}

/// A one-letter word usable as a conjugator on `n` strands.
pub fn random_conjugator(rng: &mut ChaCha8Rng, n: usize, frames: bool) -> BraidWord {
    let letter = match rng.gen_range(0..if frames { 4 } else { 3 }) {
        0 if n >= 2 => BraidLetter::Sigma {
            i: rng.gen_range(1..n),
            inverse: rng.gen_bool(0.5),
        },
        1 => BraidLetter::Loop {
            inverse: rng.gen_bool(0.5),
        },
        3 => BraidLetter::Frame {
            j: rng.gen_range(1..=n),
            k: if rng.gen_bool(0.5) { 1 } else { -1 },
        },
        _ => BraidLetter::Loop { inverse: false },
    };
    BraidWord::new(n, vec![letter])
}
