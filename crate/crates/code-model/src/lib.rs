//! p-adic spherical codes and their validation.
//!
//! A code is a finite list of vectors in Q_p^d together with a separation
//! specification (the angle threshold, kept exact whenever possible) and a
//! variant choice: the pairwise separation can be required on
//! `|2 - 2<t_j, t_k>|` directly or on the sup-norm distance, and the unit
//! norm / unit self-product conditions can be toggled individually.
//! Validation is exact in exact mode and reports every violation, not just
//! the first.

mod code;
mod error;
mod format;
mod separation;
mod validate;

pub use code::{CodeVariant, PAdicCode, PairInequality};
pub use error::{ModelError, ParseError, ParseErrorKind};
pub use format::{parse_code_file, write_code_file};
pub use separation::{effective_level, Level, SeparationSpec, Verdict, COMPARISON_TOLERANCE_EXP};
pub use validate::{
    off_diagonal_pair_values, pair_value_multiset, validate_code, AbsMultiset, ConditionOutcome,
    ValidationReport, Violation,
};
