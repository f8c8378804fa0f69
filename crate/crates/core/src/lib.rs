//! Dimensions of irreducible modules for the centralizer algebras of `S_n`,
//! `S_{n-1}`, `A_n` and `A_{n-1}` acting on tensor powers of the permutation
//! and reflection modules, together with the restriction–induction Bratteli
//! diagrams, the vacillating-tableau bijection, and a character-theoretic
//! oracle that checks every formula independently.

pub mod arith;
pub mod bijection;
pub mod branch;
pub mod bratteli;
pub mod cli;
pub mod dims;
pub mod error;
pub mod oracle;
pub mod verify;
pub mod young;

pub use arith::Nat;
pub use error::{Error, Result};
