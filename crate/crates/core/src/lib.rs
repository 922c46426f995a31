//! Negative halves of quantum generalized Kac-Moody algebras attached to
//! quivers with loops, computed two ways: symbolically over `Q(v)` and
//! through flag counts over finite fields.

pub mod cli;
pub mod error;
pub mod formalg;
pub mod hallfq;
pub mod qring;
pub mod quiverlab;
pub mod theorems;

pub use error::{Error, Result};
