//! Gradient recovery for linear finite elements in one dimension.
//!
//! The derivative of a piecewise linear interpolant is piecewise constant.
//! This crate projects it back onto the continuous piecewise linear space,
//! either obliquely against a biorthogonal dual basis (a diagonal system,
//! equivalent to centred differences) or orthogonally in L2 (a tridiagonal
//! mass-matrix solve), and provides the tooling to measure how well the
//! recovered field approximates the true gradient.
//!
//! ```
//! use gradrec::{analysis::FunctionSpec, mesh::Mesh, projection};
//!
//! let mesh = Mesh::uniform(0.0, 1.0, 4).unwrap();
//! let u = projection::interpolate(&FunctionSpec::quadratic(1.0, 0.0, 0.0), &mesh).unwrap();
//! let g = projection::recover_oblique(&u).unwrap();
//! assert_eq!(g.values(), &[0.25, 0.5, 1.0, 1.5, 1.75]);
//! ```

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod basis;
pub mod cli;
pub mod error;
pub mod mesh;
pub mod projection;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
