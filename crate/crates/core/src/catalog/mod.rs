//! Built-in, validated example structures.

mod entries;
mod finite;
mod monopole;

pub use entries::*;
pub use finite::*;
pub use monopole::*;
