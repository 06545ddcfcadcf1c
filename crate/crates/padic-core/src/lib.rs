//! Exact p-adic scalar and vector arithmetic over Q_p^d.
//!
//! Scalars are exact rationals (big-integer pairs) tagged with a prime;
//! p-adic absolute values are kept symbolically as powers of the prime so
//! that every comparison reduces to integer arithmetic.  Conventions fixed
//! throughout the crate: `v_p(0) = +infinity` and `|0| = 0`.
//!
//! All values are immutable after construction and safe to share across
//! threads.

mod abs;
mod error;
mod extended;
mod prime;
mod rational;
mod scalar;
mod vector;

pub use abs::PAdicAbs;
pub use error::CoreError;
pub use extended::ExtendedInt;
pub use prime::Prime;
pub use rational::{floor_to_int, format_rational, parse_rational, rational_mod};
pub use scalar::{abs_p, valuation, PAdicScalar};
pub use vector::{cauchy_schwarz_holds, padic_inner_product, sup_norm, PAdicVector};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
