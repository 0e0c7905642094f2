//! Integral cohomology of real flag manifolds from Schubert cell incidences.
//!
//! The cells `Ω_I` of `Fl_D(R^N)` are labelled by ordered set partitions `I`
//! of `{1, ..., N}` with block sizes `D`. Adjacent cells have incidence
//! coefficient `0` or `±2`, given in closed form by [`incidence`]; the
//! resulting cochain complex ([`vassiliev`]) computes `H^*(Fl_D(R^N); Z)`.

pub mod bockstein;
pub mod error;
pub mod gf2;
pub mod homology;
pub mod incidence;
pub mod matrix;
pub mod osp;
pub mod poincare;
pub mod schubert_ring;
pub mod snf;
pub mod tables;
pub mod vassiliev;

pub use error::{Error, Result};
pub use homology::{cohomology, Coefficients, CohomologyReport};
pub use osp::{AdjacentPair, DimVector, OrderedSetPartition, YoungDiagram};
pub use poincare::IntPolynomial;
pub use schubert_ring::{GrassBox, Label, RingElement};
pub use vassiliev::{GradedComplex, SchubertElement};
