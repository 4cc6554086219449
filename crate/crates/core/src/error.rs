use thiserror::Error;

use crate::repr::ValidationReport;
use crate::spectra::HypothesisReport;

/// Errors raised by group construction, representation handling and the
/// spectral formulas.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("capacity exceeded: {requested} elements requested, cap is {cap}")]
    CapacityExceeded { requested: usize, cap: usize },

    #[error("element {0} does not belong to the group")]
    ElementNotInGroup(String),

    #[error("group has no distinguished split structure K x| H")]
    NoSplitStructure,

    #[error("no irreducible representations available: {0}")]
    NoIrreps(String),

    #[error("irreducible representation set failed validation: {0}")]
    IrrepValidationFailed(ValidationReport),

    #[error(
        "color function is not a class function: alpha({element}) != alpha({conjugate}) \
         where {conjugate} = {conjugator} * {element} * {conjugator}^-1"
    )]
    NotClassFunction {
        element: usize,
        conjugator: usize,
        conjugate: usize,
    },

    #[error("hypotheses of the split-extension formula violated: {0}")]
    HypothesesViolated(Box<HypothesisReport>),

    #[error(
        "layer S_{layer} is not invariant: exponent {exponent} maps to {image} outside the layer"
    )]
    LayerNotInvariant {
        layer: usize,
        exponent: usize,
        image: usize,
    },

    #[error("class sum depends on the representative: class {class} deviates by {deviation:e}")]
    RepresentativeDependence { class: usize, deviation: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("irrep block of degree {0} has no closed-form eigenvalues")]
    BlockTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
