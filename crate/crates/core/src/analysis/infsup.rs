//! Discrete inf-sup constant of the pairing between the hat space and the
//! dual space.
//!
//! With Gram matrices `M_V`, `M_M` and pairing `B_ij = ∫ lambda_i phi_j`,
//! the constant is `sqrt(sigma_min)` for `M_V^{-1} B^T M_M^{-1} B`. `B` is
//! diagonal, so `(B^T M_M^{-1} B)^{-1} = T = B^{-1} M_M B^{-1}` is
//! tridiagonal. Writing `M_V = L L^T`, the reciprocals of the eigenvalues
//! are those of the symmetric matrix `L^T T L`, which is diagonalised by
//! cyclic Jacobi.

use crate::basis::pairing_scale;
use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::projection::TridiagonalMatrix;

/// Largest mesh accepted by [`estimate_inf_sup`].
pub const MAX_INF_SUP_ELEMENTS: usize = 512;

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Gram matrix `∫ lambda_i lambda_j dx` of the dual basis.
pub fn dual_gram(mesh: &Mesh) -> TridiagonalMatrix {
    let n = mesh.n_elements();
    let mut diag = vec![0.0; n + 1];
    let mut off = Vec::with_capacity(n);
    for (k, h) in mesh.element_lengths().enumerate() {
        diag[k] += h;
        diag[k + 1] += h;
        off.push(-0.5 * h);
    }
    TridiagonalMatrix {
        sub: off.clone(),
        diag,
        sup: off,
    }
}

/// Estimate of the inf-sup constant `min_phi sup_mu (mu, phi) / (|mu| |phi|)`.
pub fn estimate_inf_sup(mesh: &Mesh) -> Result<f64> {
    let n = mesh.n_elements();
    if n > MAX_INF_SUP_ELEMENTS {
        return Err(Error::TooLarge {
            n,
            max: MAX_INF_SUP_ELEMENTS,
        });
    }
    let dim = n + 1;
    let c = (0..dim)
        .map(|i| pairing_scale(mesh, i))
        .collect::<Result<Vec<_>>>()?;

    let gram = dual_gram(mesh);
    let t = TridiagonalMatrix {
        sub: (0..n).map(|i| gram.sub[i] / (c[i + 1] * c[i])).collect(),
        diag: (0..dim).map(|i| gram.diag[i] / (c[i] * c[i])).collect(),
        sup: (0..n).map(|i| gram.sup[i] / (c[i] * c[i + 1])).collect(),
    };

    // Cholesky of the hat-basis mass matrix: lower bidiagonal (ld, ls).
    let mass = TridiagonalMatrix::mass(mesh);
    let mut ld = vec![0.0; dim];
    let mut ls = vec![0.0; n];
    for i in 0..dim {
        let mut d = mass.diag[i];
        if i > 0 {
            ls[i - 1] = mass.sub[i - 1] / ld[i - 1];
            d -= ls[i - 1] * ls[i - 1];
        }
        if !(d > 0.0) {
            return Err(Error::SingularSystem(i));
        }
        ld[i] = d.sqrt();
    }

    // S = L^T T L, pentadiagonal, stored dense for the Jacobi sweeps.
    let l = |r: usize, col: usize| -> f64 {
        if r == col {
            ld[r]
        } else if r == col + 1 {
            ls[col]
        } else {
            0.0
        }
    };
    let tv = |r: usize, col: usize| -> f64 {
        if r == col {
            t.diag[r]
        } else if r == col + 1 {
            t.sub[col]
        } else if col == r + 1 {
            t.sup[r]
        } else {
            0.0
        }
    };
    let mut s = vec![vec![0.0; dim]; dim];
    for i in 0..dim {
        for j in i..(i + 3).min(dim) {
            let mut v = 0.0;
            // (L^T)_{i a} = L_{a i} nonzero for a in {i, i+1}; L_{b j} for b in {j, j+1}.
            for a in i..(i + 2).min(dim) {
                for b in j..(j + 2).min(dim) {
                    v += l(a, i) * tv(a, b) * l(b, j);
                }
            }
            s[i][j] = v;
            s[j][i] = v;
        }
    }

    let eig = jacobi_eigenvalues(s);
    let largest = eig.into_iter().fold(f64::MIN, f64::max);
    if !(largest > 0.0) {
        return Err(Error::SingularSystem(0));
    }
    Ok(largest.recip().sqrt())
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm falls below `1e-12` times the
/// matrix norm, or after 100 sweeps.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let total: f64 = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_norm(&a) <= JACOBI_TOL * total {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}
