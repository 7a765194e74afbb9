//! Exact densest-subgraph computation (value and witness) plus a brute-force
//! oracle and the classical peeling 2-approximation.

mod brute;
mod exact;
mod maxflow;
mod peel;

pub use brute::brute_force_densest;
pub use exact::{exact_densest, exact_densest_with_hint, DensestResult};
pub use peel::charikar_peel;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("brute-force oracle limited to n <= 20, got n = {0}")]
    TooLarge(u32),
}
