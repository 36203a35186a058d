//! Gauss-Legendre rules on the reference interval and their composite
//! application over mesh elements.

use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// Largest tabulated rule.
pub const MAX_POINTS: usize = 10;

/// Points per element used for error norms.
pub const NORM_POINTS: usize = 5;

/// Points per element used for pairing integrals of piecewise quadratics.
pub const PAIRING_POINTS: usize = 2;

// (abscissa, weight) on [-1, 1], ascending abscissae.
#[allow(clippy::excessive_precision)]
const TABLE: [&[(f64, f64)]; MAX_POINTS] = [
    &[(0.0, 2.0)],
    &[
        (-0.577350269189625764509, 1.0),
        (0.577350269189625764509, 1.0),
    ],
    &[
        (-0.774596669241483377036, 0.555555555555555555556),
        (0.0, 0.888888888888888888889),
        (0.774596669241483377036, 0.555555555555555555556),
    ],
    &[
        (-0.861136311594052575224, 0.347854845137453857373),
        (-0.339981043584856264803, 0.652145154862546142627),
        (0.339981043584856264803, 0.652145154862546142627),
        (0.861136311594052575224, 0.347854845137453857373),
    ],
    &[
        (-0.906179845938663992798, 0.236926885056189087514),
        (-0.538469310105683091036, 0.478628670499366468041),
        (0.0, 0.568888888888888888889),
        (0.538469310105683091036, 0.478628670499366468041),
        (0.906179845938663992798, 0.236926885056189087514),
    ],
    &[
        (-0.932469514203152027812, 0.17132449237917034504),
        (-0.661209386466264513661, 0.36076157304813860757),
        (-0.238619186083196908631, 0.46791393457269104739),
        (0.238619186083196908631, 0.46791393457269104739),
        (0.661209386466264513661, 0.36076157304813860757),
        (0.932469514203152027812, 0.17132449237917034504),
    ],
    &[
        (-0.949107912342758524526, 0.129484966168869693271),
        (-0.741531185599394439864, 0.279705391489276667901),
        (-0.405845151377397166907, 0.38183005050511894495),
        (0.0, 0.417959183673469387755),
        (0.405845151377397166907, 0.38183005050511894495),
        (0.741531185599394439864, 0.279705391489276667901),
        (0.949107912342758524526, 0.129484966168869693271),
    ],
    &[
        (-0.960289856497536231684, 0.101228536290376259153),
        (-0.796666477413626739592, 0.222381034453374470544),
        (-0.525532409916328985818, 0.313706645877887287338),
        (-0.183434642495649804939, 0.362683783378361982965),
        (0.183434642495649804939, 0.362683783378361982965),
        (0.525532409916328985818, 0.313706645877887287338),
        (0.796666477413626739592, 0.222381034453374470544),
        (0.960289856497536231684, 0.101228536290376259153),
    ],
    &[
        (-0.968160239507626089836, 0.0812743883615744119719),
        (-0.836031107326635794299, 0.180648160694857404058),
        (-0.613371432700590397309, 0.260610696402935462319),
        (-0.324253423403808929039, 0.312347077040002840069),
        (0.0, 0.330239355001259763165),
        (0.324253423403808929039, 0.312347077040002840069),
        (0.613371432700590397309, 0.260610696402935462319),
        (0.836031107326635794299, 0.180648160694857404058),
        (0.968160239507626089836, 0.0812743883615744119719),
    ],
    &[
        (-0.973906528517171720078, 0.0666713443086881375936),
        (-0.865063366688984510732, 0.149451349150580593146),
        (-0.679409568299024406234, 0.219086362515982043996),
        (-0.433395394129247190799, 0.269266719309996355091),
        (-0.148874338981631210885, 0.295524224714752870174),
        (0.148874338981631210885, 0.295524224714752870174),
        (0.433395394129247190799, 0.269266719309996355091),
        (0.679409568299024406234, 0.219086362515982043996),
        (0.865063366688984510732, 0.149451349150580593146),
        (0.973906528517171720078, 0.0666713443086881375936),
    ],
];

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of points; the rule is exact for degree `2 * order() - 1`.
    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Applies the rule to `f` on `[a, b]`.
    pub fn integrate_on(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let s: f64 = self
            .points
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(mid + half * t))
            .sum();
        half * s
    }
}

/// The `p`-point Gauss-Legendre rule, `1 <= p <= 10`.
pub fn gauss_rule(p: usize) -> Result<QuadratureRule> {
    if p == 0 || p > MAX_POINTS {
        return Err(Error::UnsupportedOrder(p));
    }
    let (points, weights) = TABLE[p - 1].iter().copied().unzip();
    Ok(QuadratureRule { points, weights })
}

/// Composite rule over every element of `mesh`.
pub fn integrate(f: impl FnMut(f64) -> f64, mesh: &Mesh, rule: &QuadratureRule) -> f64 {
    integrate_elements(f, mesh, rule, 0..mesh.n_elements())
}

/// Composite rule over the interior subdomain `(x_1, x_{n-1})`, i.e. the
/// elements `1..=n-2`.
pub fn integrate_interior(
    f: impl FnMut(f64) -> f64,
    mesh: &Mesh,
    rule: &QuadratureRule,
) -> Result<f64> {
    let n = mesh.n_elements();
    if n < 3 {
        return Err(Error::TooCoarse { n, min: 3 });
    }
    Ok(integrate_elements(f, mesh, rule, 1..n - 1))
}

/// Composite rule with the integrand given in element-local form
/// `f(k, t)`, `t` in `[0, 1]` the reference coordinate on element `k`.
///
/// Evaluating basis functions from `t` avoids the `eps * |x| / h_k`
/// cancellation of recovering local coordinates from global abscissae.
pub fn integrate_reference(
    mut f: impl FnMut(usize, f64) -> f64,
    mesh: &Mesh,
    rule: &QuadratureRule,
) -> f64 {
    (0..mesh.n_elements())
        .map(|k| {
            let s: f64 = rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(&xi, &w)| w * f(k, 0.5 * (1.0 + xi)))
                .sum();
            0.5 * mesh.element_length(k) * s
        })
        .sum()
}

/// Composite rule over the given element range.
pub fn integrate_elements(
    mut f: impl FnMut(f64) -> f64,
    mesh: &Mesh,
    rule: &QuadratureRule,
    elements: std::ops::Range<usize>,
) -> f64 {
    elements
        .map(|k| rule.integrate_on(mesh.node(k), mesh.node(k + 1), &mut f))
        .sum()
}
