//! Link invariants from braid words.
//!
//! A framed affine braid word maps into the algebra by sending a
//! crossing to `(gamma + (1-gamma) e_i) g_i`, the loop generator to
//! `X_1` and framing shifts to torus generators; a trace functional of
//! the image is then a link invariant of the closure.
//!
//! Instead of multiplying out full block matrices, the computation runs
//! one column per contributing coloring: a coloring contributes to the
//! diagonal only when it is constant on the cycles of the underlying
//! permutation (every letter's image moves the torus idempotents along
//! the strand permutation, so other diagonal entries vanish), and its
//! support must match the requested color set.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::YElement;
use crate::coeff::{CoeffError, CycNumber, LaurentPoly, Monomial, VarId};
use crate::combin::Character;
use crate::link::braid::{BraidLetter, BraidWord};
use crate::trace::{free_strand_factor, tensor_trace, Budget, RhoSpec, TraceError, TraceEvaluator, TraceParams};

/// How the crossing-smoothing variable is handled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaMode {
    /// Keep it as the symbolic variable `gamma`.
    Symbolic,
    /// Specialize to 1.
    One,
    /// Specialize to a fixed invertible Laurent polynomial.
    Fixed(LaurentPoly),
}

impl GammaMode {
    pub fn value(&self) -> LaurentPoly {
        match self {
            GammaMode::Symbolic => LaurentPoly::var(VarId::Gamma),
            GammaMode::One => LaurentPoly::one(),
            GammaMode::Fixed(p) => p.clone(),
        }
    }

    pub fn inverse(&self) -> Result<LaurentPoly, TraceError> {
        match self {
            GammaMode::Symbolic => Ok(LaurentPoly::var_pow(VarId::Gamma, -1)),
            GammaMode::One => Ok(LaurentPoly::one()),
            GammaMode::Fixed(p) => p.try_inverse().ok_or_else(|| {
                TraceError::Parameter("the gamma value must be invertible".to_string())
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantOptions {
    pub gamma: GammaMode,
    pub budget: Budget,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            gamma: GammaMode::Symbolic,
            budget: Budget::default(),
        }
    }
}

/// The image of a braid word in the algebra, multiplied out directly.
/// Exact but exponential in the strand count; the invariants below avoid
/// it, and tests compare against it.
pub fn delta_image(word: &BraidWord, d: u32, gamma: &GammaMode) -> Result<YElement, TraceError> {
    let n = word.n();
    let g = gamma.value();
    let gi = gamma.inverse()?;
    let mut acc = YElement::one(d, n);
    for letter in word.letters() {
        let el = match *letter {
            BraidLetter::Sigma { i, inverse: false } => {
                let rest = LaurentPoly::one().sub(&g);
                YElement::g(d, n, i)
                    .scale(&g)
                    .add(&YElement::e(d, n, i).mul(&YElement::g(d, n, i)).scale(&rest))
            }
            BraidLetter::Sigma { i, inverse: true } => {
                let rest = LaurentPoly::one().sub(&gi);
                YElement::g_inv(d, n, i).scale(&gi).add(
                    &YElement::g_inv(d, n, i)
                        .mul(&YElement::e(d, n, i))
                        .scale(&rest),
                )
            }
            BraidLetter::Loop { inverse } => YElement::x(d, n, 1, if inverse { -1 } else { 1 }),
            BraidLetter::Frame { j, k } => YElement::t(d, n, j, k),
        };
        acc = acc.mul(&el);
    }
    Ok(acc)
}

/// The invariant for one exact color support.
pub fn rho_invariant(
    word: &BraidWord,
    spec: &RhoSpec,
    opts: &InvariantOptions,
) -> Result<LaurentPoly, TraceError> {
    let g = opts.gamma.value();
    let gi = opts.gamma.inverse()?;
    let mut ev = TraceEvaluator::new(spec.params().clone(), opts.budget);
    let mut out = LaurentPoly::zero();
    for chi in cycle_colorings(word, spec.d(), spec.support()) {
        if chi.mu().support() != spec.support() {
            continue;
        }
        let entry = run_column(word, &chi, &g, &gi);
        out = out.add(&tensor_trace(&chi, &entry, &mut ev)?);
    }
    Ok(out)
}

/// The averaged invariant over a color set `D`.
pub fn rho_tilde_invariant(
    word: &BraidWord,
    d: u32,
    dset: &[u32],
    params: &BTreeMap<u32, TraceParams>,
    opts: &InvariantOptions,
) -> Result<LaurentPoly, TraceError> {
    let mut ds = dset.to_vec();
    ds.sort_unstable();
    ds.dedup();
    assert_eq!(ds.len(), dset.len(), "duplicate colors in the set");
    assert!(!ds.is_empty(), "the color set must be nonempty");
    assert!(ds.iter().all(|&a| (1..=d).contains(&a)), "colors out of range");
    let g = opts.gamma.value();
    let gi = opts.gamma.inverse()?;
    let mut ev = TraceEvaluator::new(params.clone(), opts.budget);
    let c = free_strand_factor();
    let mut out = LaurentPoly::zero();
    for chi in cycle_colorings(word, d, &ds) {
        let supp = chi.mu().support();
        let mut weight = LaurentPoly::fraction(1, ds.len() as i64);
        for _ in 1..supp.len() {
            weight = weight.mul(&c);
        }
        let entry = run_column(word, &chi, &g, &gi);
        out = out.add(&weight.mul(&tensor_trace(&chi, &entry, &mut ev)?));
    }
    Ok(out)
}

/// Specialization onto the two-variable invariants compared in the
/// literature: `u -> lambda^(1/2)`, `v -> lambda^(1/2) w` with
/// `w = q - q^{-1}` kept atomic, and `gamma -> 1` or `gamma -> q^{-1}`.
pub fn jl_specialize(p: &LaurentPoly, gamma_to_q_inverse: bool) -> Result<LaurentPoly, CoeffError> {
    let mut map = BTreeMap::new();
    map.insert(
        VarId::U,
        LaurentPoly::term(Monomial::var_half(VarId::Lambda, 1), CycNumber::one()),
    );
    map.insert(
        VarId::V,
        LaurentPoly::term(
            Monomial::var_half(VarId::Lambda, 1).mul(&Monomial::var(VarId::W, 1)),
            CycNumber::one(),
        ),
    );
    map.insert(
        VarId::Gamma,
        if gamma_to_q_inverse {
            LaurentPoly::var_pow(VarId::Q, -1)
        } else {
            LaurentPoly::one()
        },
    );
    p.substitute(&map)
}

/// Colorings constant on the cycles of the underlying permutation, with
/// colors drawn from the palette. Exactly these can contribute to the
/// diagonal of the word's image.
fn cycle_colorings(word: &BraidWord, d: u32, palette: &[u32]) -> Vec<Character> {
    let cycles = word.underlying_perm().cycles();
    let r = cycles.len();
    let total = (palette.len() as u64)
        .checked_pow(r as u32)
        .expect("too many cycle colorings");
    assert!(total <= 1 << 20, "too many cycle colorings");
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = alloc::vec![0usize; r];
    loop {
        let mut colors = alloc::vec![0u32; word.n()];
        for (c, cyc) in cycles.iter().enumerate() {
            for &pos in cyc {
                colors[pos] = palette[idx[c]];
            }
        }
        out.push(Character::new(d, colors));
        let mut c = r;
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            if idx[c] + 1 < palette.len() {
                idx[c] += 1;
                break;
            }
            idx[c] = 0;
        }
    }
}

/// Evolve the column of the coloring through the word, right to left,
/// and return the diagonal entry.
fn run_column(
    word: &BraidWord,
    chi0: &Character,
    gamma: &LaurentPoly,
    gamma_inv: &LaurentPoly,
) -> YElement {
    let n = word.n();
    let d = chi0.d();
    let mut state: BTreeMap<Character, YElement> = BTreeMap::new();
    state.insert(chi0.clone(), YElement::one(1, n));
    for letter in word.letters().iter().rev() {
        let mut next: BTreeMap<Character, YElement> = BTreeMap::new();
        for (col, val) in &state {
            match *letter {
                BraidLetter::Sigma { i, inverse } => {
                    if col.fixed_by(i) {
                        // equal colors at the crossing: the interpolation
                        // collapses and the sorted-slot generator acts
                        let k = col.sort_perm_inv().apply(i - 1) + 1;
                        let m = if inverse {
                            YElement::g_inv(1, n, k)
                        } else {
                            YElement::g(1, n, k)
                        };
                        add_state(&mut next, col.clone(), m.mul(val));
                    } else {
                        // different colors: scalar u gamma (or its inverse)
                        // and the coloring moves
                        let f = if inverse {
                            gamma_inv.mul(&LaurentPoly::var_pow(VarId::U, -1))
                        } else {
                            gamma.mul(&LaurentPoly::var_pow(VarId::U, 1))
                        };
                        add_state(&mut next, col.swap(i), val.scale(&f));
                    }
                }
                BraidLetter::Loop { inverse } => {
                    let slot = col.sort_perm_inv().apply(0) + 1;
                    let m = YElement::x(1, n, slot, if inverse { -1 } else { 1 });
                    add_state(&mut next, col.clone(), m.mul(val));
                }
                BraidLetter::Frame { j, k } => {
                    let s = CycNumber::zeta_pow(d, (col.color(j - 1) as i64 - 1) * k);
                    add_state(&mut next, col.clone(), val.scale_cyc(&s));
                }
            }
        }
        state = next;
    }
    state
        .remove(chi0)
        .unwrap_or_else(|| YElement::zero(1, n))
}

fn add_state(state: &mut BTreeMap<Character, YElement>, chi: Character, el: YElement) {
    if el.is_zero() {
        return;
    }
    match state.remove(&chi) {
        None => {
            state.insert(chi, el);
        }
        Some(old) => {
            let sum = old.add(&el);
            if !sum.is_zero() {
                state.insert(chi, sum);
            }
        }
    }
}
