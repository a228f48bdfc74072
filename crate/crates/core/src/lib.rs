//! Commuting graphs of 2x2 upper-triangular matrix rings over finite
//! commutative rings, their exact invariants, closed-form predictions and
//! brute-force ground truth.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod ring;
pub mod trimat;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Elem, Ring, RingSpec};
pub use trimat::{Class, Ut2};
