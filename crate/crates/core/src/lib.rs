#![no_std]
extern crate alloc;

pub mod algebra;
pub mod error;
pub mod hecke;
pub mod langlands;
pub mod repring;
pub mod rootdata;
pub mod satake;
pub mod semigroup;
pub mod toric;
pub mod zeta;

pub use error::{Error, Result};
