use thiserror::Error;

use crate::complex::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("facet label {label} is not in the ground set")]
    InvalidFacet { label: Label },

    #[error("label {label} appears in both ground sets")]
    GroundSetClash { label: Label },

    #[error("complex has a facet with {size} elements; expected a graph")]
    NotAGraph { size: usize },

    #[error("ambient mismatch: expected {expected} coordinates, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("functional does not lie in the row space of the marginal-to-correlation map")]
    NotInRowSpace,

    #[error("point configuration has affine rank {rank}, expected {expected}")]
    NotFullDimensional { rank: usize, expected: usize },

    #[error("point configuration contains repeated points")]
    DuplicatePoints,

    #[error("switch set contains label {label} outside the ground set")]
    InvalidSwitchSet { label: Label },

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("degenerate configuration: {distinct} distinct point(s)")]
    Degenerate { distinct: usize },

    #[error("points are not integral; lattice volume is undefined")]
    NotLattice,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn too_large(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::TooLarge {
            what,
            limit,
            actual,
        }
    }
}
