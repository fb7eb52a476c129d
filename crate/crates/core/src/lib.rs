// SPDX-License-Identifier: Apache-2.0

//! Sombor matrices of simple graphs: exact and numerical characteristic
//! polynomials, spectra, energies and energy bounds, adjacency permanents,
//! enumeration of small regular graphs, and corpus-level analyses of cubic
//! graphs.

pub mod analysis;
pub mod charpoly;
pub mod combinat;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod qsqrt2;
pub mod sombor;
pub mod spectra;

pub use graph::{disjoint_union, Graph, GraphError, RangeError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use poly::{Mode, Poly, SomborPoly};
pub use qsqrt2::QSqrt2;

/// Version tag written into every JSON document.
pub const SCHEMA: &str = "sombor/1";
