//! Exact computational machinery for coprimality windows on Gaussian
//! lines: Gaussian-integer arithmetic, canonical line representation,
//! divisor-set tests, line CRT, constructive synthesis of lines with
//! prescribed divisibility, and search/certification of the smallest
//! window of consecutive points on a line in which no member is coprime
//! to all the others.

pub mod cli;
pub mod construct;
pub mod crt;
pub mod error;
pub mod line;
pub mod pillai;
pub mod zi;

pub use error::{Error, Result};
pub use line::Line;
pub use zi::GaussInt;
