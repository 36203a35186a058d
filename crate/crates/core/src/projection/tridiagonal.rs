use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// A square matrix with nonzeros only on the main diagonal and the two
/// adjacent bands. `sub[i]` is entry `(i + 1, i)`, `sup[i]` is `(i, i + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    pub sub: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        for band in [&sub, &sup] {
            if band.len() + 1 != n {
                return Err(Error::LengthMismatch {
                    expected: n.saturating_sub(1),
                    got: band.len(),
                });
            }
        }
        Ok(TridiagonalMatrix { sub, diag, sup })
    }

    /// Mass matrix `M_ij = ∫ phi_i phi_j dx` of the linear hat basis.
    pub fn mass(mesh: &Mesh) -> Self {
        let n = mesh.n_elements();
        let mut diag = vec![0.0; n + 1];
        let mut off = Vec::with_capacity(n);
        for (k, h) in mesh.element_lengths().enumerate() {
            diag[k] += h / 3.0;
            diag[k + 1] += h / 3.0;
            off.push(h / 6.0);
        }
        TridiagonalMatrix {
            sub: off.clone(),
            diag,
            sup: off,
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }

    /// `|a_ii| > |a_{i,i-1}| + |a_{i,i+1}|` on every row.
    pub fn is_strictly_diagonally_dominant(&self) -> bool {
        (0..self.dim()).all(|i| {
            let left = if i > 0 { self.sub[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < self.dim() {
                self.sup[i].abs()
            } else {
                0.0
            };
            self.diag[i].abs() > left + right
        })
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y += self.sub[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.sup[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            a[i][i] = self.diag[i];
            if i + 1 < n {
                a[i][i + 1] = self.sup[i];
                a[i + 1][i] = self.sub[i];
            }
        }
        a
    }

    /// Thomas algorithm without pivoting. Stable for diagonally dominant
    /// matrices; a zero pivot is reported as [`Error::SingularSystem`].
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        if rhs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut pivot = self.diag[0];
        if pivot == 0.0 || !pivot.is_finite() {
            return Err(Error::SingularSystem(0));
        }
        if n > 1 {
            c[0] = self.sup[0] / pivot;
        }
        d[0] = rhs[0] / pivot;
        for i in 1..n {
            pivot = self.diag[i] - self.sub[i - 1] * c[i - 1];
            if pivot == 0.0 || !pivot.is_finite() {
                return Err(Error::SingularSystem(i));
            }
            if i + 1 < n {
                c[i] = self.sup[i] / pivot;
            }
            d[i] = (rhs[i] - self.sub[i - 1] * d[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mass_matrix_entries() {
        let m = Mesh::new(vec![0.0, 0.3, 0.5, 1.0]).unwrap();
        let a = TridiagonalMatrix::mass(&m);
        let expect = [0.1, 0.5 / 3.0, 0.7 / 3.0, 0.5 / 3.0];
        for (d, e) in a.diag.iter().zip(expect) {
            assert!((d - e).abs() < 1e-15);
        }
        assert!((a.sub[0] - 0.05).abs() < 1e-15);
        assert!(a.is_symmetric());
        assert!(a.is_strictly_diagonally_dominant());
    }

    #[test]
    fn solve_recovers_known_solution() {
        let a = TridiagonalMatrix::new(
            vec![1.0, -2.0, 0.5],
            vec![4.0, 5.0, 6.0, 3.0],
            vec![2.0, 1.0, -1.0],
        )
        .unwrap();
        let x = vec![1.0, -2.0, 0.5, 3.0];
        let b = a.mul_vec(&x);
        let y = a.solve(&b).unwrap();
        for (u, v) in x.iter().zip(&y) {
            assert!((u - v).abs() < 1e-14);
        }
    }

    #[test]
    fn zero_pivot_is_reported() {
        let a = TridiagonalMatrix::new(vec![1.0], vec![1.0, 1.0], vec![1.0]).unwrap();
        assert!(matches!(
            a.solve(&[1.0, 2.0]),
            Err(Error::SingularSystem(1))
        ));
        let z = TridiagonalMatrix::new(vec![1.0], vec![0.0, 1.0], vec![1.0]).unwrap();
        assert!(matches!(
            z.solve(&[1.0, 2.0]),
            Err(Error::SingularSystem(0))
        ));
        assert!(matches!(a.solve(&[1.0]), Err(Error::LengthMismatch { .. })));
        assert!(TridiagonalMatrix::new(vec![], vec![1.0, 2.0], vec![1.0]).is_err());
    }
}
