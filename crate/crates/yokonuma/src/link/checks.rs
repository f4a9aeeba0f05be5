//! Structural checks on computed invariants: reduction of the color
//! support for non-framed words, vanishing on closures with few
//! components, and the binomial rescaling comparison between averaged
//! invariants of different depths.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::braid::{BraidLetter, BraidWord};
use super::invariant::{jl_specialize, rho_invariant, rho_tilde_invariant, InvariantOptions};
use crate::coeff::LaurentPoly;
use crate::trace::{RhoSpec, TraceError, TraceParams};

/// Two polynomials that some identity claims are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Vanishing check: the basic invariant with a color set larger than the
/// component count of the closure must be zero. When the set is not
/// larger, the computed value is reported without any claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub components: usize,
    pub set_size: usize,
    pub value: LaurentPoly,
}

impl VanishingReport {
    pub fn applies(&self) -> bool {
        self.set_size > self.components
    }

    pub fn holds(&self) -> bool {
        !self.applies() || self.value.is_zero()
    }
}

/// Compares the invariant over a color set `S` inside depth `d` with the
/// invariant over the full set `{1..|S|}` at depth `|S|`. For non-framed
/// words the two agree exactly once the winding-parameter families are
/// matched rank by rank, so only the size of the set matters.
pub fn check_support_reduction(
    word: &BraidWord,
    d: u32,
    support: &[u32],
    opts: &InvariantOptions,
) -> Result<CheckReport, TraceError> {
    if word
        .letters()
        .iter()
        .any(|l| matches!(l, BraidLetter::Frame { .. }))
    {
        return Err(TraceError::Parameter(
            "support reduction applies to non-framed words only".to_string(),
        ));
    }
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != support.len() {
        return Err(TraceError::Parameter("duplicate colors in the set".to_string()));
    }
    let params: BTreeMap<u32, TraceParams> = sorted
        .iter()
        .enumerate()
        .map(|(i, &k)| (k, TraceParams::symbolic(i as u32 + 1)))
        .collect();
    let lhs = rho_invariant(word, &RhoSpec::with_params(d, &sorted, params), opts)?;
    let dp = sorted.len() as u32;
    let small: Vec<u32> = (1..=dp).collect();
    let rhs = rho_invariant(word, &RhoSpec::symbolic(dp, &small), opts)?;
    Ok(CheckReport { lhs, rhs })
}

/// Computes the basic invariant and reports it against the component
/// count of the closure; see [`VanishingReport`].
pub fn check_component_vanishing(
    word: &BraidWord,
    spec: &RhoSpec,
    opts: &InvariantOptions,
) -> Result<VanishingReport, TraceError> {
    let value = rho_invariant(word, spec, opts)?;
    Ok(VanishingReport {
        components: word.components(),
        set_size: spec.support().len(),
        value,
    })
}

/// Rescaling comparison for the two-variable specialization of the
/// averaged invariant: for a classical non-framed word whose closure has
/// `N` components and a depth `d > N`, reports the depth-`d` value
/// against `(N/d) * binom(d, N)` times the depth-`N` value. Both sides
/// are expressed through the half-exponent substitution, where the
/// average-size rescaling of the second parameter is absorbed by the
/// definition of the substituted base variable.
pub fn check_phi_rescaling(word: &BraidWord, d: u32) -> Result<CheckReport, TraceError> {
    if word
        .letters()
        .iter()
        .any(|l| !matches!(l, BraidLetter::Sigma { .. }))
    {
        return Err(TraceError::Parameter(
            "the rescaling comparison applies to classical non-framed words only".to_string(),
        ));
    }
    let ncomp = word.components() as u32;
    if d <= ncomp {
        return Err(TraceError::Parameter(format!(
            "depth {d} must exceed the component count {ncomp}"
        )));
    }
    let lhs = two_variable_average(word, d)?;
    let small = two_variable_average(word, ncomp)?;
    let scale = LaurentPoly::fraction((ncomp as i64) * binom(d as i64, ncomp as i64), d as i64);
    Ok(CheckReport {
        lhs,
        rhs: scale.mul(&small),
    })
}

/// The averaged invariant over the full color set `{1..m}`, specialized
/// to two variables at gamma = 1.
pub fn two_variable_average(word: &BraidWord, m: u32) -> Result<LaurentPoly, TraceError> {
    let dset: Vec<u32> = (1..=m).collect();
    let opts = InvariantOptions {
        gamma: super::invariant::GammaMode::One,
        ..InvariantOptions::default()
    };
    let p = rho_tilde_invariant(word, m, &dset, &BTreeMap::new(), &opts)?;
    jl_specialize(&p, false).map_err(|e| TraceError::Parameter(format!("{e}")))
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
