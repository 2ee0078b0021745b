//! Finite monoids, right acts over them, and executable checks of
//! Nakayama-type statements for acts, swept exhaustively over small
//! enumerated structures.
//!
//! The crate is layered bottom-up:
//!
//! - [`monoid`]: Cayley tables, right ideals, Rees quotients, isomorphism.
//! - [`act`]: right acts, subacts, Rees factors, `AI` products, generation,
//!   projectivity.
//! - [`verify`]: one verifier per statement, each returning a [`Verdict`].
//! - [`enumerate`]: all monoids and acts up to isomorphism, and sweeps.
//! - [`cli`]: the `actlab` command line.

pub mod act;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod monoid;
pub mod set;
pub mod verify;

pub use act::{ActMorphismWitness, FiniteAct};
pub use error::{ActError, AlgebraError, MonoidError};
pub use monoid::{FiniteMonoid, QuotientMonoid};
pub use set::{ActSubset, ElementSet};
pub use verify::{StatementId, Verdict};
