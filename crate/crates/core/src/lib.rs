//! Exact computer algebra for quantum matrices and their covariantized
//! (reflection equation) counterparts, including the small quotients at odd
//! roots of unity.

pub mod braided;
pub mod combinatorics;
pub mod error;
pub mod frt;
pub mod memo;
pub mod presentations;
pub mod render;
pub mod rform;
pub mod ring;
pub mod twisting;
pub mod verify;

pub use error::{Error, Result};
