//! Nodal hat functions of the linear finite element space and the
//! piecewise linear dual functions biorthogonal to them.
//!
//! On element `[x_k, x_{k+1}]` with local coordinate `t = (x - x_k) / h_k`
//! the only nonzero functions are
//!
//! ```text
//! phi_k    = 1 - t        lambda_k     = 2 - 3t
//! phi_{k+1} = t           lambda_{k+1} = 3t - 1
//! ```
//!
//! Dual functions are discontinuous at nodes. Point evaluation follows the
//! element ownership of [`Mesh::locate`]; use the `*_on_element` variants to
//! evaluate a function's restriction to a closed element.

use crate::error::{Error, Result};
use crate::mesh::Mesh;

#[derive(Debug, Clone, Copy)]
pub struct HatBasis<'m> {
    mesh: &'m Mesh,
}

#[derive(Debug, Clone, Copy)]
pub struct DualBasis<'m> {
    mesh: &'m Mesh,
}

fn local_coordinate(mesh: &Mesh, k: usize, x: f64) -> f64 {
    (x - mesh.node(k)) / mesh.element_length(k)
}

fn check_element(mesh: &Mesh, k: usize) -> Result<()> {
    if k < mesh.n_elements() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: k,
            len: mesh.n_elements(),
        })
    }
}

impl<'m> HatBasis<'m> {
    pub fn new(mesh: &'m Mesh) -> Self {
        HatBasis { mesh }
    }

    pub fn mesh(&self) -> &'m Mesh {
        self.mesh
    }

    /// `phi_i(x)`.
    pub fn eval(&self, i: usize, x: f64) -> Result<f64> {
        self.mesh.check_index(i)?;
        let k = self.mesh.locate(x)?;
        self.eval_on_element(i, k, x)
    }

    /// Restriction of `phi_i` to the closed element `k`, evaluated at `x`.
    pub fn eval_on_element(&self, i: usize, k: usize, x: f64) -> Result<f64> {
        self.eval_local(i, k, local_coordinate(self.mesh, k, x))
    }

    /// Restriction to element `k` at local coordinate `t = (x - x_k) / h_k`.
    pub fn eval_local(&self, i: usize, k: usize, t: f64) -> Result<f64> {
        self.mesh.check_index(i)?;
        check_element(self.mesh, k)?;
        Ok(if i == k {
            1.0 - t
        } else if i == k + 1 {
            t
        } else {
            0.0
        })
    }
}

impl<'m> DualBasis<'m> {
    pub fn new(mesh: &'m Mesh) -> Self {
        DualBasis { mesh }
    }

    pub fn mesh(&self) -> &'m Mesh {
        self.mesh
    }

    /// `lambda_i(x)`.
    pub fn eval(&self, i: usize, x: f64) -> Result<f64> {
        self.mesh.check_index(i)?;
        let k = self.mesh.locate(x)?;
        self.eval_on_element(i, k, x)
    }

    /// Restriction of `lambda_i` to the closed element `k`, evaluated at `x`.
    pub fn eval_on_element(&self, i: usize, k: usize, x: f64) -> Result<f64> {
        self.eval_local(i, k, local_coordinate(self.mesh, k, x))
    }

    /// Restriction to element `k` at local coordinate `t = (x - x_k) / h_k`.
    pub fn eval_local(&self, i: usize, k: usize, t: f64) -> Result<f64> {
        self.mesh.check_index(i)?;
        check_element(self.mesh, k)?;
        Ok(if i == k {
            2.0 - 3.0 * t
        } else if i == k + 1 {
            3.0 * t - 1.0
        } else {
            0.0
        })
    }
}

/// `c_i = ∫ lambda_i phi_i dx`: half the length of the support of `phi_i`.
pub fn pairing_scale(mesh: &Mesh, i: usize) -> Result<f64> {
    mesh.check_index(i)?;
    let n = mesh.n_elements();
    let (lo, hi) = (i.saturating_sub(1), (i + 1).min(n));
    Ok(0.5 * (mesh.node(hi) - mesh.node(lo)))
}

/// Closed form of `∫ lambda_i phi_j dx`, which is `c_i` for `i == j` and
/// zero otherwise.
pub fn pairing_integral(i: usize, j: usize, mesh: &Mesh) -> Result<f64> {
    mesh.check_index(j)?;
    let c = pairing_scale(mesh, i)?;
    Ok(if i == j { c } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_rule, integrate_elements, integrate_reference, PAIRING_POINTS};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn quadrature_pairing(mesh: &Mesh, i: usize, j: usize) -> f64 {
        let rule = gauss_rule(PAIRING_POINTS).unwrap();
        let (lam, phi) = (DualBasis::new(mesh), HatBasis::new(mesh));
        integrate_reference(
            |k, t| lam.eval_local(i, k, t).unwrap() * phi.eval_local(j, k, t).unwrap(),
            mesh,
            &rule,
        )
    }

    // Same integral with point evaluation from global abscissae.
    fn global_quadrature_pairing(mesh: &Mesh, i: usize, j: usize) -> f64 {
        let rule = gauss_rule(PAIRING_POINTS).unwrap();
        let (lam, phi) = (DualBasis::new(mesh), HatBasis::new(mesh));
        integrate_elements(
            |x| lam.eval(i, x).unwrap() * phi.eval(j, x).unwrap(),
            mesh,
            &rule,
            0..mesh.n_elements(),
        )
    }

    #[test]
    fn hat_examples() {
        let m = Mesh::uniform(0.0, 1.0, 2).unwrap();
        let phi = HatBasis::new(&m);
        assert_eq!(phi.eval(1, 0.5).unwrap(), 1.0);
        assert_eq!(phi.eval(1, 0.25).unwrap(), 0.5);
        assert_eq!(phi.eval(0, 0.75).unwrap(), 0.0);
        assert_eq!(phi.eval(2, 1.0).unwrap(), 1.0);
        assert!(matches!(
            phi.eval(3, 0.5),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn hat_is_nodal() {
        let m = Mesh::new(vec![0.0, 0.1, 0.45, 0.5, 1.0]).unwrap();
        let phi = HatBasis::new(&m);
        for i in 0..m.n_nodes() {
            for j in 0..m.n_nodes() {
                let v = phi.eval(i, m.node(j)).unwrap();
                assert_eq!(v, if i == j { 1.0 } else { 0.0 }, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn dual_examples() {
        let m = Mesh::uniform(0.0, 1.0, 2).unwrap();
        let lam = DualBasis::new(&m);
        assert_eq!(lam.eval(1, 0.5).unwrap(), 2.0);
        // lambda_0 on its support [x_0, x_1], evaluated at the closing node.
        assert_eq!(lam.eval_on_element(0, 0, 0.5).unwrap(), -1.0);
        // Point evaluation at x_1 belongs to element 1, outside lambda_0's support.
        assert_eq!(lam.eval(0, 0.5).unwrap(), 0.0);
        assert!(matches!(
            lam.eval(5, 0.5),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(lam.eval(0, -0.1), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn dual_matches_explicit_formulas() {
        let m = Mesh::new(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        let lam = DualBasis::new(&m);
        let x = m.nodes();
        let n = m.n_elements();
        for s in 0..=20 {
            let t = s as f64 / 20.0;
            // lambda_0 on [x_0, x_1]
            let y = x[0] + t * (x[1] - x[0]);
            let expect = (2.0 * (y - x[1]) + (y - x[0])) / (x[0] - x[1]);
            assert!((lam.eval_on_element(0, 0, y).unwrap() - expect).abs() < 1e-14);
            // lambda_n on [x_{n-1}, x_n]
            let y = x[n - 1] + t * (x[n] - x[n - 1]);
            let expect = (2.0 * (y - x[n - 1]) + (y - x[n])) / (x[n] - x[n - 1]);
            assert!((lam.eval_on_element(n, n - 1, y).unwrap() - expect).abs() < 1e-14);
            // interior lambda_1, both pieces
            let i = 1;
            let y = x[i - 1] + t * (x[i] - x[i - 1]);
            let expect = (2.0 * (y - x[i - 1]) + (y - x[i])) / (x[i] - x[i - 1]);
            assert!((lam.eval_on_element(i, i - 1, y).unwrap() - expect).abs() < 1e-14);
            let y = x[i] + t * (x[i + 1] - x[i]);
            let expect = (2.0 * (y - x[i + 1]) + (y - x[i])) / (x[i] - x[i + 1]);
            assert!((lam.eval_on_element(i, i, y).unwrap() - expect).abs() < 1e-14);
        }
        // Nodal values on h = 1 range over {-1, 2}.
        for k in 0..n {
            for i in [k, k + 1] {
                for y in [x[k], x[k + 1]] {
                    let v = lam.eval_on_element(i, k, y).unwrap();
                    assert!(v == -1.0 || v == 2.0, "{v}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let m = Mesh::uniform(0.0, 1.0, 4).unwrap();
        assert_eq!(pairing_integral(2, 2, &m).unwrap(), 0.25);
        assert_eq!(pairing_integral(1, 3, &m).unwrap(), 0.0);
        assert_eq!(pairing_integral(2, 3, &m).unwrap(), 0.0);
        assert!(quadrature_pairing(&m, 2, 3).abs() < 1e-16);
        assert_eq!(pairing_integral(0, 0, &m).unwrap(), 0.125);
        assert_eq!(pairing_integral(4, 4, &m).unwrap(), 0.125);
        assert!(matches!(
            pairing_integral(5, 0, &m),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            pairing_integral(0, 5, &m),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(2..30);
            let m = Mesh::random(-0.5, 1.5, n, &mut rng).unwrap();
            let len = m.beta() - m.alpha();
            for i in 0..m.n_nodes() {
                for j in 0..m.n_nodes() {
                    let q = quadrature_pairing(&m, i, j);
                    let c = pairing_integral(i, j, &m).unwrap();
                    let qg = global_quadrature_pairing(&m, i, j);
                    assert!((qg - q).abs() < 1e-12 * len);
                    if i == j {
                        assert!(c > 0.0);
                        assert!((q - c).abs() <= 1e-14 * c, "i={i} q={q} c={c}");
                    } else {
                        assert_eq!(c, 0.0);
                        assert!(q.abs() <= 1e-14 * len, "i={i} j={j} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_of_unity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let n = rng.gen_range(2..20);
            let m = Mesh::random(0.0, 1.0, n, &mut rng).unwrap();
            let (phi, lam) = (HatBasis::new(&m), DualBasis::new(&m));
            for _ in 0..100 {
                let x: f64 = rng.gen_range(0.0..=1.0);
                let s_phi: f64 = (0..m.n_nodes()).map(|i| phi.eval(i, x).unwrap()).sum();
                let s_lam: f64 = (0..m.n_nodes()).map(|i| lam.eval(i, x).unwrap()).sum();
                assert!((s_phi - 1.0).abs() < 1e-14);
                assert!((s_lam - 1.0).abs() < 1e-14);
            }
            // Nodes included: left ownership keeps the sum at one.
            for &x in m.nodes() {
                let s_lam: f64 = (0..m.n_nodes()).map(|i| lam.eval(i, x).unwrap()).sum();
                assert!((s_lam - 1.0).abs() < 1e-14);
            }
        }
    }
}
