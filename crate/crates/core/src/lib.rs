//! Exact tools for checking depth bounds of squared edge ideals.
//!
//! - [`graph`]: labelled simple graphs, star packing number, whiskered
//!   triangles and the even-connection construction.
//! - [`ideal`]: monomial ideal arithmetic, symbolic squares of edge ideals
//!   and polarization.
//! - [`homology`] and [`depth`]: reduced homology, Hochster Betti numbers,
//!   projective dimension and depth.
//! - [`catalog`]: graph6 corpora and exhaustive small-graph enumeration.
//! - [`harness`]: one check per bound or identity, batch drivers and reports.

pub mod catalog;
pub mod depth;
pub mod error;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod ideal;

pub use depth::{depth_ideal, depth_quotient, DepthOptions, DepthResult};
pub use error::{DepthError, GraphError, HarnessError, IdealError};
pub use graph::{Graph, StarPackingWitness, VertexSet};
pub use homology::FieldChoice;
pub use ideal::{Monomial, MonomialIdeal};
