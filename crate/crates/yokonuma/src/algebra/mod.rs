//! The affine algebra itself: normal-form basis elements and the
//! rewriting engine that multiplies them.

mod element;

pub use element::{YElement, YKey};
