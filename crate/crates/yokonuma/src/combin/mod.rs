//! Combinatorial backbone: permutations of the symmetric group,
//! compositions with named support, and color vectors (characters of the
//! finite torus) together with their sorting permutations.

mod character;
mod comp;
mod perm;

pub use character::Character;
pub use comp::{can_color_cycles, compositions, compositions_with_support, multinomial, Composition};
pub use perm::Perm;
