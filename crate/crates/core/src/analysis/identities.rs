//! Closed-form predictions of the oblique recovery error for quadratic and
//! cubic inputs.
//!
//! All predictions are signed differences `g_i - u'(.)`. For
//! `u = a x^2 + b x + c` the recovered value is `g_i = a (p + q) + b` where
//! `[p, q]` is the difference stencil of node `i`; for
//! `u = a x^3 + b x^2 + c x + d` it is `a (p^2 + p q + q^2) + b (p + q) + c`.

use crate::error::Result;
use crate::mesh::Mesh;

/// Difference stencil `(x_{i-1}, x_{i+1})`, collapsing to the single
/// adjacent element at either end.
fn stencil(m: &Mesh, i: usize) -> Result<(f64, f64)> {
    m.check_index(i)?;
    let n = m.n_elements();
    Ok((m.node(i.saturating_sub(1)), m.node((i + 1).min(n))))
}

/// Point at which the recovered gradient of any quadratic is exact: the
/// midpoint of the difference stencil of node `i`.
pub fn x_tilde(m: &Mesh, i: usize) -> Result<f64> {
    let (p, q) = stencil(m, i)?;
    Ok(0.5 * (p + q))
}

/// `g_i - u'(x_i)` for `u = a x^2 + b x + c`.
///
/// Interior: `a (x_{i-1} + x_{i+1} - 2 x_i)`; ends: `a (x_1 - x_0)` and
/// `a (x_{n-1} - x_n)`.
pub fn predicted_error_quadratic(a: f64, m: &Mesh, i: usize) -> Result<f64> {
    let (p, q) = stencil(m, i)?;
    let x = m.node(i);
    Ok(a * ((p - x) + (q - x)))
}

/// `g_i - u'(x̃_i)` for a cubic with leading coefficient `a`:
/// `(a / 4) (x_{i-1} - x_{i+1})^2`, with the one-element stencil at the ends.
pub fn predicted_error_cubic_at_tilde(a: f64, m: &Mesh, i: usize) -> Result<f64> {
    let (p, q) = stencil(m, i)?;
    Ok(0.25 * a * (p - q) * (p - q))
}

/// `g_i - u'(x_i)` for `u = a x^3 + b x^2 + c x + d`.
///
/// Interior: `a (x_{i-1}^2 + x_{i-1} x_{i+1} + x_{i+1}^2 - 3 x_i^2) + b (x_{i-1} + x_{i+1} - 2 x_i)`.
/// At `i = 0` this reads `a (x_1^2 + x_0 x_1 - 2 x_0^2) + b (x_1 - x_0)`, and
/// symmetrically at `i = n`.
pub fn predicted_error_cubic_at_node(a: f64, b: f64, m: &Mesh, i: usize) -> Result<f64> {
    let n = m.n_elements();
    let (p, q) = stencil(m, i)?;
    let x = m.node(i);
    Ok(if i == 0 {
        a * (q * q + p * q - 2.0 * p * p) + b * (q - p)
    } else if i == n {
        a * (p * p + p * q - 2.0 * q * q) + b * (p - q)
    } else {
        a * (p * p + p * q + q * q - 3.0 * x * x) + b * (p + q - 2.0 * x)
    })
}
