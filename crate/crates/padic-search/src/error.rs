use thiserror::Error;

use code_model::ModelError;
use padic_core::CoreError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("p = 2 is not supported by the exact solver; use the mod-2^K lower-bound mode")]
    EvenPrimeUnsupported,
    #[error("residue vector is not on the sphere modulo p^{precision}")]
    NotOnSphere { precision: u32 },
    #[error("no coordinate is a unit modulo p")]
    NoUnitCoordinate,
    #[error("lift precision {requested} is below the graph precision {required}")]
    PrecisionTooLow { requested: u32, required: u32 },
    #[error("witness index {0} is out of range")]
    BadWitnessIndex(usize),
    #[error("witness vertices are not pairwise adjacent")]
    WitnessNotClique,
    #[error("separation level {spec_level} is finer than the graph level {graph_level}")]
    SpecLevelMismatch { spec_level: u32, graph_level: u32 },
    #[error("separation threshold is zero: code sizes are unbounded")]
    UnboundedSeparation,
}
