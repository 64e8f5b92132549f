pub mod bbw;
pub mod cli;
pub mod intersect;
pub mod mukai;
pub mod error;
pub mod rootdata;
pub mod sections;

pub use error::{Error, Result};
