//! The framed Markov trace on the colorless affine Hecke algebra.
//!
//! The functional is determined by four rules: it restricts to the trace
//! one level down on elements of the subalgebra (times the free-strand
//! factor), the top crossing slides out between elements of the
//! subalgebra, powers of the *twisted* affine generator
//! `Xtilde_m = g_{m-1}^{-1} .. g_1^{-1} X_1 g_1 .. g_{m-1}` peel off as
//! winding parameters, and it is linear. Concretely, for `h` below the
//! top strand:
//!
//! ```text
//! trace_m(h)                     = c * trace_{m-1}(h)
//! trace_m(h g_{m-1} h')          = trace_{m-1}(h h')
//! trace_m(Xtilde_m^k h)          = x_k * c * trace_{m-1}(h)
//! ```
//!
//! with `c = (1 - u^2)/v` and `x_k` the winding parameter for `k` turns
//! (`x_0 = 1`). The evaluator rewrites straight powers `Xbar_m^k` into
//! twisted ones plus a lower-order defect, and straightens crossings with
//! the exchange identity
//!
//! ```text
//! Xbar_m^k g_{m-1} = g_{m-1} Xbar_{m-1}^k + v * sum_j Xbar_m^j Xbar_{m-1}^{k-j}
//! ```
//!
//! where `j` runs over `1..=k` for positive `k` and the sum enters with a
//! minus sign over `k+1..=0` for negative `k`. Every step either lowers
//! the strand count, lowers the top winding magnitude, or exchanges a
//! crossing for a straight top strand, so the recursion terminates; a
//! step budget guards the recursion anyway.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::free_strand_factor;
use super::ocneanu::top_cycle;
use crate::algebra::{YElement, YKey};
use crate::coeff::{LaurentPoly, VarId};
use crate::combin::Perm;

/// Winding parameters for one color: `x_k` for each nonzero winding
/// number `k`. Unset windings stay symbolic as the variable `x[color,k]`;
/// winding 0 is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceParams {
    symbol_color: u32,
    overrides: BTreeMap<i64, LaurentPoly>,
}

impl TraceParams {
    /// Fully symbolic parameters printing as `x[color,k]`.
    pub fn symbolic(color: u32) -> Self {
        assert!(color >= 1);
        TraceParams {
            symbol_color: color,
            overrides: BTreeMap::new(),
        }
    }

    pub fn symbol_color(&self) -> u32 {
        self.symbol_color
    }

    /// Pin the value of one winding parameter.
    pub fn set(&mut self, winding: i64, value: LaurentPoly) {
        assert!(winding != 0, "winding 0 is fixed to 1");
        self.overrides.insert(winding, value);
    }

    pub fn with(mut self, winding: i64, value: LaurentPoly) -> Self {
        self.set(winding, value);
        self
    }

    pub fn overrides(&self) -> &BTreeMap<i64, LaurentPoly> {
        &self.overrides
    }

    pub fn value(&self, winding: i64) -> LaurentPoly {
        if winding == 0 {
            return LaurentPoly::one();
        }
        match self.overrides.get(&winding) {
            Some(p) => p.clone(),
            None => LaurentPoly::var(VarId::XParam {
                color: self.symbol_color,
                winding,
            }),
        }
    }
}

/// Resource limits for trace evaluation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Cap on the total affine degree `sum_j |lambda_j|` of any evaluated
    /// term.
    pub max_x_degree: i64,
    /// Cap on recursion steps across one evaluator's lifetime.
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_x_degree: 6,
            max_steps: 4_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    /// A term's total affine degree exceeded the budget.
    DegreeBudget { degree: i64, limit: i64 },
    /// The evaluator ran out of recursion steps.
    StepBudget { limit: u64 },
    /// A parameter value was unusable (for example a non-invertible
    /// framing variable).
    Parameter(String),
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::DegreeBudget { degree, limit } => write!(
                f,
                "total affine degree {degree} exceeds the budget of {limit}"
            ),
            TraceError::StepBudget { limit } => {
                write!(f, "trace evaluation exhausted its step budget of {limit}")
            }
            TraceError::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

/// Memoizing evaluator for the framed affine trace, one instance per
/// computation so budgets and caches have a clear scope.
pub struct TraceEvaluator {
    params: BTreeMap<u32, TraceParams>,
    budget: Budget,
    steps: u64,
    memo: BTreeMap<(u32, Vec<i64>, Perm), LaurentPoly>,
    defects: BTreeMap<(usize, i64), YElement>,
}

impl TraceEvaluator {
    pub fn new(params: BTreeMap<u32, TraceParams>, budget: Budget) -> Self {
        TraceEvaluator {
            params,
            budget,
            steps: 0,
            memo: BTreeMap::new(),
            defects: BTreeMap::new(),
        }
    }

    pub fn steps_used(&self) -> u64 {
        self.steps
    }

    fn params_for(&self, color: u32) -> TraceParams {
        self.params
            .get(&color)
            .cloned()
            .unwrap_or_else(|| TraceParams::symbolic(color))
    }

    /// Trace of the basis element `Xbar^lambda gbar_w` on `lambda.len()`
    /// strands, with winding parameters for `color`.
    pub fn eval(&mut self, color: u32, lambda: &[i64], w: &Perm) -> Result<LaurentPoly, TraceError> {
        let m = lambda.len();
        assert_eq!(w.n(), m);
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(TraceError::StepBudget {
                limit: self.budget.max_steps,
            });
        }
        let degree: i64 = lambda.iter().map(|a| a.abs()).sum();
        if degree > self.budget.max_x_degree {
            return Err(TraceError::DegreeBudget {
                degree,
                limit: self.budget.max_x_degree,
            });
        }
        if m == 0 {
            return Ok(LaurentPoly::one());
        }
        if m == 1 {
            return Ok(self.params_for(color).value(lambda[0]));
        }
        let key = (color, lambda.to_vec(), w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let res = self.eval_inner(color, lambda, w)?;
        self.memo.insert(key, res.clone());
        Ok(res)
    }

    /// Trace of a whole colorless element.
    pub fn eval_element(&mut self, color: u32, el: &YElement) -> Result<LaurentPoly, TraceError> {
        assert_eq!(el.d(), 1);
        let mut out = LaurentPoly::zero();
        for (key, coeff) in el.terms() {
            out = out.add(&coeff.mul(&self.eval(color, &key.x, &key.w)?));
        }
        Ok(out)
    }

    fn eval_inner(&mut self, color: u32, lambda: &[i64], w: &Perm) -> Result<LaurentPoly, TraceError> {
        let m = lambda.len();
        let k = lambda[m - 1];
        let fixes_top = w.apply(m - 1) == m - 1;
        if k == 0 && fixes_top {
            let wl = Perm::from_images(w.images()[..m - 1].to_vec());
            let sub = self.eval(color, &lambda[..m - 1], &wl)?;
            return Ok(free_strand_factor().mul(&sub));
        }
        if k == 0 {
            // slide the top crossing out and multiply the remainder back
            // together one strand lower
            let (base, tail) = split_top_crossing(lambda, w);
            let el = apply_tail(base, &tail);
            return self.eval_restricted(color, &el, m - 1);
        }
        let mut hat = lambda.to_vec();
        hat[m - 1] = 0;
        if fixes_top {
            // rewrite the straight power through the twisted one: the
            // twisted power peels off as a winding parameter, the defect
            // re-enters the recursion with lower top degree
            let wl = Perm::from_images(w.images()[..m - 1].to_vec());
            let peeled = self
                .params_for(color)
                .value(k)
                .mul(&free_strand_factor())
                .mul(&self.eval(color, &hat[..m - 1], &wl)?);
            let defect = self.defect(m, k);
            let f = YElement::from_key(
                1,
                m,
                YKey {
                    t: alloc::vec![0; m],
                    x: hat,
                    w: w.clone(),
                },
                LaurentPoly::one(),
            );
            let prod = f.mul(&defect);
            let mut rest = LaurentPoly::zero();
            for (pk, pc) in prod.terms() {
                rest = rest.add(&pc.mul(&self.eval(color, &pk.x, &pk.w)?));
            }
            return Ok(peeled.add(&rest));
        }
        // nonzero winding on a crossing top strand: straighten with the
        // exchange identity
        let (base, tail) = split_top_crossing(&hat, w);
        // main part: the winding drops onto the strand below
        let main = apply_tail(base.rmul_x_pow(m - 2, k), &tail);
        let mut total = self.eval_restricted(color, &main, m - 1)?;
        let v = LaurentPoly::var(VarId::V);
        let (sign, range): (LaurentPoly, Vec<i64>) = if k > 0 {
            (v.clone(), (1..=k).collect())
        } else {
            (v.neg(), (k + 1..=0).collect())
        };
        for jp in range {
            let f = apply_tail(base.rmul_x_pow(m - 2, k - jp), &tail);
            let el = f.rmul_x_pow(m - 1, jp);
            for (pk, pc) in el.terms() {
                let sub = self.eval(color, &pk.x, &pk.w)?;
                total = total.add(&sign.mul(pc).mul(&sub));
            }
        }
        Ok(total)
    }

    /// All keys must lie in the subalgebra on the first `m` strands;
    /// restrict and recurse there.
    fn eval_restricted(
        &mut self,
        color: u32,
        el: &YElement,
        m: usize,
    ) -> Result<LaurentPoly, TraceError> {
        let low = el
            .restrict(m)
            .expect("slid-out product must lie one strand lower");
        let mut out = LaurentPoly::zero();
        for (key, coeff) in low.terms() {
            out = out.add(&coeff.mul(&self.eval(color, &key.x, &key.w)?));
        }
        Ok(out)
    }

    /// `N(Xbar_m^k - Xtilde_m^k)`, cached per strand count and winding.
    fn defect(&mut self, m: usize, k: i64) -> YElement {
        if let Some(hit) = self.defects.get(&(m, k)) {
            return hit.clone();
        }
        let straight = YElement::one(1, m).rmul_x_pow(m - 1, k);
        let twisted = YElement::x_twisted(1, m, m, k);
        let out = straight.sub(&twisted);
        self.defects.insert((m, k), out.clone());
        out
    }
}

/// Factor `Xbar^lambda gbar_w = (Xbar^lambda gbar_{w'}) . gbar_{m-1} . tail`
/// where `w'` fixes the top strand and the tail is the descending run
/// `gbar_{m-2} .. gbar_{j0+1}`. Returns the left factor (at full size,
/// with the leading top crossing dropped) and the 1-based tail letters.
fn split_top_crossing(lambda: &[i64], w: &Perm) -> (YElement, Vec<usize>) {
    let m = lambda.len();
    let j0 = w.inverse().apply(m - 1);
    let cyc = top_cycle(m, j0);
    let wp = w.compose(&cyc.inverse());
    debug_assert_eq!(wp.apply(m - 1), m - 1);
    debug_assert_eq!(wp.len() + (m - 1 - j0), w.len());
    let base = YElement::from_key(
        1,
        m,
        YKey {
            t: alloc::vec![0; m],
            x: lambda.to_vec(),
            w: wp,
        },
        LaurentPoly::one(),
    );
    let tail = (j0 + 1..=m.saturating_sub(2)).rev().collect();
    (base, tail)
}

fn apply_tail(mut el: YElement, tail: &[usize]) -> YElement {
    for &i in tail {
        el = el.rmul_g(i);
    }
    el
}
