pub mod artin;
pub mod braid;
pub mod error;
pub mod gassner;
pub mod hermitian;
pub mod matrix;
pub mod rings;
pub mod spectral;
pub mod topology;

pub use error::{Error, Result};
