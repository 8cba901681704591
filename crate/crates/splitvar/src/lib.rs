//! Exact symbolic computation of splitting-variety ideals for cup products
//! with Z/n coefficients.
//!
//! The pipeline: the mod-n Heisenberg group acts on a coordinate ring
//! through an induced monomial representation; the degree-n part carries a
//! simultaneous Z/n x Z/n eigenbasis; the toric ideal of the n-th Veronese
//! embedding transports along the change of basis and projects onto
//! eigenspaces; weighting each projection back into the trivial eigenspace
//! by powers of the invertible variables produces generators whose images
//! vanish identically, cutting out the variety. Everything is exact: the
//! coefficient field is Q(zeta_n) with arbitrary-precision rationals, and
//! all verification reduces to symbolic zeroes.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod eigenbasis;
pub mod field;
pub mod heisenberg;
pub mod polyring;
pub mod splitkernel;
pub mod variety;
pub mod veronese;

pub use error::{Error, Result};
