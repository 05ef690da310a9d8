//! Exact enumeration of the joint ascent/descent (NE/SE chain) statistic
//! over 01-fillings of moon polyominoes, the statistic-swapping involution,
//! the composition bijection with its closed-form product of p,q-Gaussian
//! coefficients, and the application to crossings and nestings of matchings,
//! set partitions and linked partitions. Every closed form ships with a
//! brute-force oracle.

pub mod arcs;
pub mod biject;
pub mod fill;
pub mod involution;
pub mod qpoly;
pub mod report;
pub mod shape;
pub mod verify;

pub use arcs::ArcGraph;
pub use biject::CompositionSeq;
pub use fill::{ColorMask, Filling01};
pub use qpoly::BivarPoly;
pub use shape::{MoonPolyomino, RectRegion};
