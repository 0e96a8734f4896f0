//! Numerical toolkit for unital quantum channels.

pub mod birkhoff;
pub mod catlaws;
pub mod channels;
pub mod cli;
pub mod error;
pub mod extremality;
pub mod matcore;
pub mod mixapprox;

pub use error::{Error, Result};
