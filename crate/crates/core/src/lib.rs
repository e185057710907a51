//! p-spectral radius λ^(p)(G) and p-spectral minimum λ_min^(p)(G) of weighted
//! uniform hypergraphs: the maximum and minimum of the polyform
//! P_G(x) = r! Σ_e G(e) Π_{i∈e} x_i over the unit l^p sphere.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod closed_forms;
pub mod combinatorics;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod numeric;
pub mod polyform;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Family, HypergraphBuilder, JoinKind, WeightedHypergraph};
pub use polyform::{evaluate, gradient, PointOnSphere};
pub use solver::{lambda_max, lambda_min, EigenResult, Mode, SolveOptions, Status, Target};
