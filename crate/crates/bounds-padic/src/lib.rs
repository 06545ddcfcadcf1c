//! Pfender-style certificate bounds for p-adic spherical codes.
//!
//! A certificate is a constant `c > 0` together with a function `phi` on
//! pair values `|2 - 2<t_j, t_k>|`; when the double sum of `phi` over a
//! code is nonnegative and `phi + c` is nonpositive past the separation
//! threshold, the code size is at most `(phi(0) + c) / c`.  Certificates
//! are per-code objects here: hypothesis (i) depends on the code and is
//! checked by exact summation.
//!
//! Verification replays the underlying proof chain
//! `c n^2 <= sum + c n^2 <= n (phi(0) + c)` as internal assertions on
//! every success, and certificate synthesis solves an exact rational
//! linear program whose optimum is pinned by the trivial tight
//! certificate.

mod certificate;
mod error;
mod simplex;
mod synthesize;
mod verify;

pub use certificate::{
    certificate_bound, parse_certificate_file, trivial_tight_certificate, write_certificate_file,
    PfenderCertificate, PhiFunction, ThresholdRule,
};
pub use error::{CertParseError, CertificateError};
pub use simplex::{rational_simplex, Constraint, LinearProgram, LpOutcome, Relation, Sense};
pub use synthesize::synthesize_certificate_lp;
pub use verify::{verify_certificate, verify_certificate_on_values, BoundResult, HypothesisReport};
