//! Exact computation of the exponential independence number of small graphs.

pub mod graph;
pub mod weights;
pub mod solver;
pub mod families;
pub mod characterize;
pub mod verify;
