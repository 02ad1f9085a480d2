pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod numbers;
pub mod construct;
pub mod eval;
pub mod gf;
pub mod verify;
pub mod cli;
