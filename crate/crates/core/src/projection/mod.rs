//! Gradient recovery: projecting the piecewise constant derivative of a
//! linear interpolant back onto the linear finite element space.
//!
//! Two projections share the same load vector
//! `f_j = ∫ u_h' lambda_j dx = ∫ u_h' phi_j dx`:
//!
//! * the oblique projection tests against the dual basis, whose pairing
//!   with the hat basis is diagonal, so `g = D^{-1} f`;
//! * the orthogonal L2 projection tests against the hat basis itself and
//!   needs a tridiagonal mass-matrix solve.

mod tridiagonal;

pub use tridiagonal::TridiagonalMatrix;

use serde::{Deserialize, Serialize};

use crate::analysis::FunctionSpec;
use crate::basis::pairing_integral;
use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// Absolute tolerance for matching sample abscissae against mesh nodes.
pub const NODE_MATCH_TOL: f64 = 1e-12;

/// An element `sum_i values[i] phi_i` of the linear finite element space.
#[derive(Debug, Clone, PartialEq)]
pub struct NodalFunction<'m> {
    mesh: &'m Mesh,
    values: Vec<f64>,
}

impl<'m> NodalFunction<'m> {
    pub fn new(mesh: &'m Mesh, values: Vec<f64>) -> Result<Self> {
        if values.len() != mesh.n_nodes() {
            return Err(Error::LengthMismatch {
                expected: mesh.n_nodes(),
                got: values.len(),
            });
        }
        Ok(NodalFunction { mesh, values })
    }

    pub fn mesh(&self) -> &'m Mesh {
        self.mesh
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Constant slope `(u_{k+1} - u_k) / h_k` on element `k`.
    pub fn slope(&self, k: usize) -> f64 {
        (self.values[k + 1] - self.values[k]) / self.mesh.element_length(k)
    }

    /// Piecewise linear evaluation at `x`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let k = self.mesh.locate(x)?;
        let t = (x - self.mesh.node(k)) / self.mesh.element_length(k);
        Ok((1.0 - t) * self.values[k] + t * self.values[k + 1])
    }

    /// `a * self + b * other`, both on the same mesh.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.mesh != other.mesh {
            return Err(Error::LengthMismatch {
                expected: self.values.len(),
                got: other.values.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| a * u + b * v)
            .collect();
        NodalFunction::new(self.mesh, values)
    }
}

/// Which projection recovers the gradient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oblique,
    Orthogonal,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oblique => "oblique",
            Method::Orthogonal => "orthogonal",
        }
    }

    pub fn recover<'m>(self, u: &NodalFunction<'m>) -> Result<NodalFunction<'m>> {
        match self {
            Method::Oblique => recover_oblique(u),
            Method::Orthogonal => recover_orthogonal(u),
        }
    }
}

/// Nodal interpolant `I_h u`.
///
/// Sampled functions must carry exactly one sample per node, each within
/// [`NODE_MATCH_TOL`] of the node.
pub fn interpolate<'m>(spec: &FunctionSpec, mesh: &'m Mesh) -> Result<NodalFunction<'m>> {
    let values = match spec {
        FunctionSpec::Sampled(rows) => {
            if rows.len() != mesh.n_nodes() {
                return Err(Error::LengthMismatch {
                    expected: mesh.n_nodes(),
                    got: rows.len(),
                });
            }
            rows.iter()
                .zip(mesh.nodes())
                .enumerate()
                .map(|(row, (&(x, u), &node))| {
                    if (x - node).abs() <= NODE_MATCH_TOL {
                        Ok(u)
                    } else {
                        Err(Error::NodeMismatch { row, x, node })
                    }
                })
                .collect::<Result<Vec<_>>>()?
        }
        _ => mesh
            .nodes()
            .iter()
            .map(|&x| spec.value(x))
            .collect::<Result<Vec<_>>>()?,
    };
    NodalFunction::new(mesh, values)
}

fn require_interior(mesh: &Mesh) -> Result<()> {
    let n = mesh.n_elements();
    if n < 2 {
        return Err(Error::TooCoarse { n, min: 2 });
    }
    Ok(())
}

/// Load vector `f_j = ∫ u_h' lambda_j dx`: half the jump of `u` across the
/// support of node `j`.
pub fn gradient_load(u: &NodalFunction) -> Vec<f64> {
    let v = u.values();
    let n = v.len() - 1;
    (0..=n)
        .map(|j| 0.5 * (v[(j + 1).min(n)] - v[j.saturating_sub(1)]))
        .collect()
}

/// Oblique projection in closed form: centred differences at interior
/// nodes, one-sided differences at the two ends.
pub fn recover_oblique<'m>(u: &NodalFunction<'m>) -> Result<NodalFunction<'m>> {
    let mesh = u.mesh();
    require_interior(mesh)?;
    let (x, v) = (mesh.nodes(), u.values());
    let n = mesh.n_elements();
    let g = (0..=n)
        .map(|i| {
            let (l, r) = (i.saturating_sub(1), (i + 1).min(n));
            (v[r] - v[l]) / (x[r] - x[l])
        })
        .collect();
    NodalFunction::new(mesh, g)
}

/// Oblique projection through the assembled system `D g = f` with
/// `D_ii = ∫ phi_i lambda_i dx`.
pub fn recover_oblique_assembled<'m>(u: &NodalFunction<'m>) -> Result<NodalFunction<'m>> {
    let mesh = u.mesh();
    require_interior(mesh)?;
    let f = gradient_load(u);
    let g = f
        .iter()
        .enumerate()
        .map(|(i, fi)| Ok(fi / pairing_integral(i, i, mesh)?))
        .collect::<Result<Vec<_>>>()?;
    NodalFunction::new(mesh, g)
}

/// Orthogonal L2 projection: solves `M g = f` with the tridiagonal hat-basis
/// mass matrix.
pub fn recover_orthogonal<'m>(u: &NodalFunction<'m>) -> Result<NodalFunction<'m>> {
    let mesh = u.mesh();
    require_interior(mesh)?;
    let g = TridiagonalMatrix::mass(mesh).solve(&gradient_load(u))?;
    NodalFunction::new(mesh, g)
}
