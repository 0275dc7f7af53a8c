//! Exact computations on generalized cut, correlation and binary marginal
//! polytopes of simplicial complexes.
//!
//! The crate covers vertex enumeration, the linear isomorphisms between the
//! three polytopes, switching of inequalities, closed-form H-representations for
//! several complex families, Gale transforms, an exact convex hull oracle and
//! toric degree formulas checked against normalized volume.

pub mod complex;
pub mod degree;
pub mod error;
pub mod gale;
pub mod hrep;
pub mod hull;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rational;
pub mod switching;
pub mod transform;

pub use complex::{Face, Label, SimplicialComplex};
pub use error::{Error, Result};
pub use hrep::{hrep, Family, HRepresentation, SparseInequality};
pub use hull::{hull, HullConfig, HullResult};
pub use polytope::{LinearInequality, Space, VertexMatrix};
pub use rational::Rational;
