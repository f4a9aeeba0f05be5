//! Color-summed trace functionals on the affine algebra with `d` torus
//! colors: push an element through the block decomposition, take the
//! framed affine trace of each diagonal block factor by factor, and sum
//! over the colorings whose support matches the requested color set.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::affine::{Budget, TraceError, TraceEvaluator, TraceParams};
use super::free_strand_factor;
use crate::algebra::YElement;
use crate::coeff::LaurentPoly;
use crate::combin::{Character, Perm};
use crate::iso::psi_forward;

/// Which functional to compute: the torus color order, the exact support
/// set, and the winding parameters per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoSpec {
    d: u32,
    support: Vec<u32>,
    params: BTreeMap<u32, TraceParams>,
}

impl RhoSpec {
    /// Fully symbolic parameters for each color in the support.
    pub fn symbolic(d: u32, support: &[u32]) -> Self {
        let params = support
            .iter()
            .map(|&a| (a, TraceParams::symbolic(a)))
            .collect();
        Self::with_params(d, support, params)
    }

    pub fn with_params(d: u32, support: &[u32], params: BTreeMap<u32, TraceParams>) -> Self {
        assert!(d >= 1);
        assert!(!support.is_empty(), "the color set must be nonempty");
        let mut s = support.to_vec();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), support.len(), "duplicate colors in the set");
        assert!(s.iter().all(|&a| (1..=d).contains(&a)), "colors out of range");
        let mut params = params;
        for &a in &s {
            params.entry(a).or_insert_with(|| TraceParams::symbolic(a));
        }
        RhoSpec { d, support: s, params }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn params(&self) -> &BTreeMap<u32, TraceParams> {
        &self.params
    }
}

/// Trace of one diagonal block: the block factors through the color
/// multiplicities, so evaluate each color's strands separately and
/// multiply.
pub fn tensor_trace(
    chi: &Character,
    entry: &YElement,
    ev: &mut TraceEvaluator,
) -> Result<LaurentPoly, TraceError> {
    assert_eq!(entry.d(), 1);
    assert_eq!(entry.n(), chi.n());
    let mu = chi.mu();
    let mut out = LaurentPoly::zero();
    for (key, coeff) in entry.terms() {
        let mut term = coeff.clone();
        for a in 1..=chi.d() {
            let sz = mu.part(a);
            if sz == 0 {
                continue;
            }
            let lo = mu.block_start(a);
            let lam = key.x[lo..lo + sz].to_vec();
            let img: Vec<usize> = key.w.images()[lo..lo + sz]
                .iter()
                .map(|&p| {
                    assert!(
                        (lo..lo + sz).contains(&p),
                        "diagonal block must preserve color blocks"
                    );
                    p - lo
                })
                .collect();
            let f = ev.eval(a as u32, &lam, &Perm::from_images(img))?;
            term = term.mul(&f);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The trace for one exact color support: sum of diagonal block traces
/// over the colorings using exactly those colors.
pub fn rho_element(
    el: &YElement,
    spec: &RhoSpec,
    budget: Budget,
) -> Result<LaurentPoly, TraceError> {
    assert_eq!(el.d(), spec.d());
    let mat = psi_forward(el);
    let mut ev = TraceEvaluator::new(spec.params().clone(), budget);
    let mut out = LaurentPoly::zero();
    for (chi, entry) in mat.diagonal() {
        if chi.mu().support() != spec.support() {
            continue;
        }
        out = out.add(&tensor_trace(chi, entry, &mut ev)?);
    }
    Ok(out)
}

/// The averaged functional over a color set `D`: colorings supported
/// anywhere inside `D` contribute, weighted by the free-strand factor to
/// the power (support size - 1), all divided by `|D|`.
pub fn rho_tilde_element(
    el: &YElement,
    dset: &[u32],
    params: &BTreeMap<u32, TraceParams>,
    budget: Budget,
) -> Result<LaurentPoly, TraceError> {
    let d = el.d();
    let mut ds = dset.to_vec();
    ds.sort_unstable();
    ds.dedup();
    assert_eq!(ds.len(), dset.len(), "duplicate colors in the set");
    assert!(!ds.is_empty(), "the color set must be nonempty");
    assert!(ds.iter().all(|&a| (1..=d).contains(&a)), "colors out of range");
    let mat = psi_forward(el);
    let mut ev = TraceEvaluator::new(params.clone(), budget);
    let c = free_strand_factor();
    let mut out = LaurentPoly::zero();
    for (chi, entry) in mat.diagonal() {
        let supp = chi.mu().support();
        if !supp.iter().all(|a| ds.binary_search(a).is_ok()) {
            continue;
        }
        let mut weight = LaurentPoly::fraction(1, ds.len() as i64);
        for _ in 1..supp.len() {
            weight = weight.mul(&c);
        }
        out = out.add(&weight.mul(&tensor_trace(chi, entry, &mut ev)?));
    }
    Ok(out)
}
