//! Exact computer algebra for affine Yokonuma-Hecke algebras.
//!
//! The crate computes in the algebra on `n` strands with `d` torus colors,
//! entirely over exact cyclotomic-rational coefficients:
//!
//! * [`coeff`] - Laurent polynomials in the deformation parameters with
//!   coefficients in a cyclotomic field, plus the canonical string form.
//! * [`combin`] - permutations, compositions, and color vectors.
//! * [`algebra`] - normal-form elements `t^a X^lambda g_w` and the
//!   rewriting engine that multiplies them.
//! * [`iso`] - the explicit isomorphism onto a direct sum of matrix
//!   algebras with affine Hecke tensor entries, and its inverse.
//! * [`trace`] - Markov traces: the classical trace on the Hecke tower,
//!   its framed extension with symbolic parameters, and the trace
//!   families assembled from the matrix decomposition.
//! * [`link`] - braid words for links in the solid torus, their algebra
//!   images, and the resulting three-variable link invariants.
//!
//! Everything is deterministic: elements and polynomials live in ordered
//! maps, so equal values always print identically.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod coeff;
pub mod combin;
pub mod iso;
pub mod link;
pub mod trace;

pub use algebra::{YElement, YKey};
pub use coeff::{parse_poly, CoeffError, CycNumber, LaurentPoly, Monomial, VarId};
pub use combin::{Character, Composition, Perm};
pub use iso::BlockMatrix;
pub use link::BraidWord;
pub use trace::{Budget, RhoSpec, TraceError, TraceParams};
