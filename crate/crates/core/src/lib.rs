//! Construction and exact verification of the graph families around
//! 4-chromatic Schrijver graphs: drums and reduced drums, the winding-number
//! calculus for 3-colorings, color-critical edge characterizations, and
//! quadrangulations of the Klein bottle and the projective plane.
//!
//! Everything is desk-scale and deterministic: graphs are immutable after
//! construction, vertex orders are fixed by the constructors, and every
//! constructive coloring is re-verified before it is returned.

pub mod error;
pub mod graph;
pub mod schrijver;
pub mod drum;
pub mod winding;
pub mod solver;
pub mod coloring;
pub mod quad;
pub mod criticality;
pub mod embedding;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
