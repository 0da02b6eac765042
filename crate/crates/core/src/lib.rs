pub mod cli;
pub mod coefficients;
pub mod error;
pub mod landau;
pub mod numerics;
pub mod series_oracle;
pub mod verify;

pub use error::{Error, Result};
