//! Idempotent, monotone, n-associative operations with a neutral element on
//! finite chains.
//!
//! A chain of size `k` models a real interval sampled at `k` grid points.
//! Members of the class are generated from a non-increasing threshold
//! function ([`gspec`]), built into tables ([`construct`]), evaluated in one
//! pass at any arity ([`evaluate`]), checked against the axioms by brute
//! force ([`verify`]), recovered from tables ([`extract`]) and enumerated
//! exhaustively on small chains ([`explore`]).

pub mod cli;
pub mod construct;
pub mod domain;
pub mod error;
pub mod evaluate;
pub mod explore;
pub mod extract;
pub mod gspec;
pub mod io;
pub mod verify;

pub use domain::{fold_eval, BinTable, Chain, ExtValue, Word};
pub use error::{Error, Result};
pub use gspec::{GSpec, Tie};
