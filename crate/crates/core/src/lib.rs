pub mod blocks;
pub mod classalgebra;
pub mod decider;
pub mod commalg;
pub mod error;
pub mod ffield;
pub mod groups;
pub mod linalg2;
pub mod verify;
pub mod symalg;

pub use error::{Error, Result};
