//! Numerical tracking of the real chains `T_f` and their crossings.

pub mod arc;
pub mod chart;
pub mod crossings;
pub mod loops;

pub use arc::{track_t, ArcPoint, ArcSample, TArc};
pub use crossings::{arc_crossings, CutCrossing};
pub use loops::{loop_cut_crossings, winding_by_quadrature, Loop};
