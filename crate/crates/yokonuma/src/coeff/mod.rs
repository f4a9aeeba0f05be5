//! The coefficient ring: exact cyclotomic rationals and sparse
//! multivariate Laurent polynomials.
//!
//! # Key objects
//!
//! * [`CycNumber`]: an element of `Q[zeta]/Phi_d(zeta)` in the power basis
//!   `1, zeta, ..., zeta^(phi(d)-1)`. Reduction modulo the d-th cyclotomic
//!   polynomial is applied eagerly, so equality is coordinate-wise.
//! * [`LaurentPoly`]: a sparse Laurent polynomial in the symbols of
//!   [`VarId`] with `CycNumber` coefficients. Exponents live in the
//!   half-integer lattice and are stored doubled.
//!
//! # Design notes
//!
//! Plain rationals are encoded at order `d = 1` and promote silently when
//! combined with a higher order; two distinct orders larger than 1 never
//! mix and produce [`CoeffError::OrderMismatch`] instead.

mod cyc;
mod parse;
mod poly;

pub use cyc::{cyclotomic_poly, euler_phi, CycNumber};
pub use parse::parse_poly;
pub use poly::{LaurentPoly, Monomial, VarId};

use alloc::string::String;
use core::fmt;

/// Errors raised by coefficient-ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffError {
    /// Two cyclotomic numbers of distinct orders (both larger than 1) were
    /// combined.
    OrderMismatch { left: u32, right: u32 },
    /// A negative power of a variable was substituted by a non-unit.
    NonInvertibleSubstitution(VarId),
    /// A half-integer power of a variable was substituted by an image that
    /// has no representable half power.
    FractionalPower(VarId),
    /// The text could not be parsed as a polynomial.
    Parse(String),
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::OrderMismatch { left, right } => {
                write!(f, "cyclotomic order mismatch: {left} vs {right}")
            }
            CoeffError::NonInvertibleSubstitution(v) => {
                write!(f, "negative power of {v} substituted by a non-unit")
            }
            CoeffError::FractionalPower(v) => {
                write!(f, "half power of {v} has no representable image")
            }
            CoeffError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}
