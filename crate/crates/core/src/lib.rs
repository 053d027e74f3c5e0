#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod curve;
pub mod error;
pub mod groupring;
pub mod linalg;
pub mod lseries;
pub mod maninsym;
pub mod stickelberger;

pub use error::{Error, Result};
