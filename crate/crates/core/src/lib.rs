//! Exact computation of Macaulay inverse systems and their limits.

pub mod artinian;
pub mod duality;
pub mod error;
pub mod groebner;
pub mod limit;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod rees;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use monomial::{Exponent, MonomialOrder, OrderKind};
pub use poly::Polynomial;
pub use ring::{Mode, RingContext};
pub use scalar::{Field, Scalar};
pub use groebner::Ideal;
pub use artinian::{HilbertData, TruncatedIdeal};
pub use duality::{contract, DualModule};
pub use limit::{LimitInverseSystem, DualTower};
