use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::FunctionSpec;
use crate::error::{Error, Result};
use crate::projection::NodalFunction;
use crate::quadrature::{gauss_rule, NORM_POINTS};

/// Node subsets for nodal error maxima.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSet {
    All,
    Interior,
    Endpoints,
}

/// Error measure used by convergence studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Norm {
    /// L2 over the whole interval.
    L2,
    /// L2 over `(x_1, x_{n-1})`.
    L2Interior,
    /// Maximum nodal error over all nodes.
    MaxNodal,
    /// Maximum nodal error over interior nodes.
    MaxNodalInterior,
}

impl Norm {
    pub fn name(self) -> &'static str {
        match self {
            Norm::L2 => "l2",
            Norm::L2Interior => "l2-interior",
            Norm::MaxNodal => "max-nodal",
            Norm::MaxNodalInterior => "max-nodal-interior",
        }
    }

    pub fn measure(self, spec: &FunctionSpec, g: &NodalFunction) -> Result<f64> {
        match self {
            Norm::L2 => error_l2(spec, g),
            Norm::L2Interior => error_l2_interior(spec, g),
            Norm::MaxNodal => error_max_nodal(spec, g, NodeSet::All),
            Norm::MaxNodalInterior => error_max_nodal(spec, g, NodeSet::Interior),
        }
    }
}

fn require_derivative(spec: &FunctionSpec) -> Result<()> {
    if spec.has_exact_derivative() {
        Ok(())
    } else {
        Err(Error::NoExactDerivative)
    }
}

fn l2_over(spec: &FunctionSpec, g: &NodalFunction, elements: Range<usize>) -> Result<f64> {
    require_derivative(spec)?;
    let rule = gauss_rule(NORM_POINTS)?;
    let mesh = g.mesh();
    let v = g.values();
    let mut sum = 0.0;
    for k in elements {
        let (a, b) = (mesh.node(k), mesh.node(k + 1));
        let h = b - a;
        sum += rule.integrate_on(a, b, |x| {
            let t = (x - a) / h;
            let gh = (1.0 - t) * v[k] + t * v[k + 1];
            let e = spec.derivative(x).unwrap_or(f64::NAN) - gh;
            e * e
        });
    }
    Ok(sum.sqrt())
}

/// `||u' - g_h||` in L2 over the whole interval.
pub fn error_l2(spec: &FunctionSpec, g: &NodalFunction) -> Result<f64> {
    l2_over(spec, g, 0..g.mesh().n_elements())
}

/// `||u' - g_h||` in L2 over the interior subdomain `(x_1, x_{n-1})`.
pub fn error_l2_interior(spec: &FunctionSpec, g: &NodalFunction) -> Result<f64> {
    let n = g.mesh().n_elements();
    if n < 3 {
        return Err(Error::TooCoarse { n, min: 3 });
    }
    l2_over(spec, g, 1..n - 1)
}

/// `max |g_i - u'(x_i)|` over the selected nodes.
pub fn error_max_nodal(spec: &FunctionSpec, g: &NodalFunction, which: NodeSet) -> Result<f64> {
    require_derivative(spec)?;
    let mesh = g.mesh();
    let n = mesh.n_elements();
    let indices: Vec<usize> = match which {
        NodeSet::All => (0..=n).collect(),
        NodeSet::Interior => mesh.interior().collect(),
        NodeSet::Endpoints => vec![0, n],
    };
    indices.into_iter().try_fold(0.0f64, |acc, i| {
        let e = (g.values()[i] - spec.derivative(mesh.node(i))?).abs();
        Ok(acc.max(e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::Mesh;
    use crate::projection::{interpolate, recover_oblique};

    fn oblique<'m>(spec: &FunctionSpec, m: &'m Mesh) -> NodalFunction<'m> {
        recover_oblique(&interpolate(spec, m).unwrap()).unwrap()
    }

    #[test]
    fn linear_input_has_zero_error() {
        let m = Mesh::graded(0.0, 1.0, 12, 0.25).unwrap();
        let u = FunctionSpec::polynomial(vec![1.0, -2.0]);
        let g = oblique(&u, &m);
        assert!(error_l2_interior(&u, &g).unwrap() < 1e-14);
        assert!(error_l2(&u, &g).unwrap() < 1e-14);
        assert!(error_max_nodal(&u, &g, NodeSet::All).unwrap() < 1e-14);
    }

    #[test]
    fn quadratic_on_uniform_grid() {
        let u = FunctionSpec::quadratic(1.0, 0.0, 0.0);
        for n in [4, 16, 64] {
            let m = Mesh::uniform(0.0, 1.0, n).unwrap();
            let g = oblique(&u, &m);
            assert!(error_l2_interior(&u, &g).unwrap() < 1e-13);
            assert!(error_max_nodal(&u, &g, NodeSet::Interior).unwrap() < 1e-13);
            let h = 1.0 / n as f64;
            assert!((error_max_nodal(&u, &g, NodeSet::Endpoints).unwrap() - h).abs() < 1e-13);
            // Boundary elements carry error, so the full norm does not vanish.
            assert!(error_l2(&u, &g).unwrap() > 1e-3 * h);
        }
    }

    #[test]
    fn quadratic_on_nonuniform_nodes() {
        let m = Mesh::new(vec![0.0, 0.2, 0.5, 1.0]).unwrap();
        let a = 3.0;
        let u = FunctionSpec::quadratic(a, -1.0, 2.0);
        let g = oblique(&u, &m);
        let e1 = g.values()[1] - u.derivative(0.2).unwrap();
        assert!((e1 - 0.1 * a).abs() < 1e-14);
    }

    #[test]
    fn sinusoid_l2_interior_ratio() {
        let u = FunctionSpec::Sinusoid {
            amplitude: 1.0,
            wavenumber: 1.0,
        };
        let e: Vec<f64> = [32, 64]
            .iter()
            .map(|&n| {
                let m = Mesh::uniform(0.0, 1.0, n).unwrap();
                error_l2_interior(&u, &oblique(&u, &m)).unwrap()
            })
            .collect();
        let ratio = e[0] / e[1];
        assert!((3.8..4.2).contains(&ratio), "{ratio}");
    }

    #[test]
    fn errors() {
        let m = Mesh::uniform(0.0, 1.0, 2).unwrap();
        let u = FunctionSpec::quadratic(1.0, 0.0, 0.0);
        let g = oblique(&u, &m);
        assert!(matches!(
            error_l2_interior(&u, &g),
            Err(Error::TooCoarse { .. })
        ));
        let s = FunctionSpec::sampled(vec![(0.0, 0.0), (0.5, 1.0), (1.0, 0.0)]).unwrap();
        let gs = oblique(&s, &m);
        assert!(matches!(error_l2(&s, &gs), Err(Error::NoExactDerivative)));
        assert!(matches!(
            error_max_nodal(&s, &gs, NodeSet::All),
            Err(Error::NoExactDerivative)
        ));
    }
}
