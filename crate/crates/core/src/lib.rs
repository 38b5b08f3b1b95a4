//! Exact computations in the Clifford algebras Cl(r,s): the Lie algebra of
//! isometric elements, its Cartan decomposition, centers, Killing form and
//! ideal structure, dimension formulas, and the real-form classification of
//! the semisimple ideal.

pub mod blade;
pub mod classify;
pub mod dims;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod multivector;
pub mod parse;
pub mod verify;

pub use blade::{Blade, Sign, SignedBlade, Signature};
pub use error::{Error, Result};
pub use multivector::{Coeff, Involution, Multivector};
pub use parse::parse_mv;
