//! Trace functionals: the classical Markov trace on the colorless Hecke
//! algebra, its framed affine extension driven by winding parameters, and
//! the color-summed functionals built from both through the block
//! decomposition.

mod affine;
mod ocneanu;
mod rho;

pub use affine::{Budget, TraceError, TraceEvaluator, TraceParams};
pub use ocneanu::ocneanu_trace;
pub use rho::{rho_element, rho_tilde_element, tensor_trace, RhoSpec};

use crate::coeff::{LaurentPoly, VarId};

/// The trace of a free extra strand: `(1 - u^2)/v`. Peeling a trivial top
/// strand multiplies the trace by this factor.
pub fn free_strand_factor() -> LaurentPoly {
    LaurentPoly::var_pow(VarId::V, -1)
        .sub(&LaurentPoly::var_pow(VarId::U, 2).mul(&LaurentPoly::var_pow(VarId::V, -1)))
}
