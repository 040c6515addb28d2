//! Exact computation with non-crossing partitions and the moment/cumulant
//! transforms of free, Boolean, conditionally free and infinitesimal
//! probability, together with the `Δ*` map on multilinear functionals.

pub mod cumulants;
pub mod delta_star;
pub mod error;
pub mod functionals;
pub mod nc;
pub mod products;
pub mod rational;
pub mod selftest;
pub mod typeb;
pub mod verification;

pub use error::{Error, Result};
pub use rational::Rational;
