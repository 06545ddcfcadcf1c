use padic_core::{PAdicVector, Prime};

use crate::{ModelError, SeparationSpec};

/// Which pairwise inequality the separation condition uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairInequality {
    /// `|2 - 2<t_j, t_k>| >= b` on the inner product directly.
    Pe,
    /// `||t_j - t_k||^2 >= b` on the sup-norm distance (the relaxation;
    /// checked in squared form to stay in exact arithmetic).
    Pn,
}

/// Which conditions a code is validated against.  The default requires the
/// unit norm, the unit self-product, and the `Pe` inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeVariant {
    pub inequality: PairInequality,
    pub require_unit_norm: bool,
    pub require_unit_self_product: bool,
}

impl Default for CodeVariant {
    fn default() -> Self {
        CodeVariant {
            inequality: PairInequality::Pe,
            require_unit_norm: true,
            require_unit_self_product: true,
        }
    }
}

/// A p-adic spherical code: vectors in Q_p^d plus the separation
/// specification and validation variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicCode {
    prime: Prime,
    dim: usize,
    vectors: Vec<PAdicVector>,
    spec: SeparationSpec,
    variant: CodeVariant,
}

impl PAdicCode {
    pub fn new(
        prime: Prime,
        dim: usize,
        vectors: Vec<PAdicVector>,
        spec: SeparationSpec,
        variant: CodeVariant,
    ) -> Result<Self, ModelError> {
        if vectors.is_empty() {
            return Err(ModelError::EmptyCode);
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.prime() != prime {
                return Err(ModelError::WrongPrime {
                    index,
                    expected: prime.value(),
                    found: v.prime().value(),
                });
            }
            if v.dim() != dim {
                return Err(ModelError::WrongDimension {
                    index,
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        Ok(PAdicCode {
            prime,
            dim,
            vectors,
            spec,
            variant,
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[PAdicVector] {
        &self.vectors
    }

    pub fn spec(&self) -> &SeparationSpec {
        &self.spec
    }

    pub fn variant(&self) -> CodeVariant {
        self.variant
    }

    /// The same vectors under a different variant (validation knobs only).
    pub fn with_variant(&self, variant: CodeVariant) -> PAdicCode {
        PAdicCode {
            variant,
            ..self.clone()
        }
    }
}
