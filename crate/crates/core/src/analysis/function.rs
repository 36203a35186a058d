use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A test function `u` together with its exact derivative where one exists.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `sum_k c_k x^k`, coefficients in ascending powers.
    Polynomial(Vec<f64>),
    /// `amplitude * sin(wavenumber * pi * x)`.
    Sinusoid { amplitude: f64, wavenumber: f64 },
    /// `exp(scale * x)`.
    Exponential { scale: f64 },
    /// Tabulated `(x, u)` pairs, strictly increasing in `x`. Values between
    /// samples are linearly interpolated; there is no exact derivative.
    Sampled(Vec<(f64, f64)>),
}

impl FunctionSpec {
    pub fn polynomial(coeffs: impl Into<Vec<f64>>) -> Self {
        FunctionSpec::Polynomial(coeffs.into())
    }

    /// `a x^2 + b x + c`.
    pub fn quadratic(a: f64, b: f64, c: f64) -> Self {
        FunctionSpec::Polynomial(vec![c, b, a])
    }

    /// `a x^3 + b x^2 + c x + d`.
    pub fn cubic(a: f64, b: f64, c: f64, d: f64) -> Self {
        FunctionSpec::Polynomial(vec![d, c, b, a])
    }

    pub fn sampled(rows: Vec<(f64, f64)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::parse(0, "empty sample table"));
        }
        for (i, w) in rows.windows(2).enumerate() {
            if !(w[1].0 > w[0].0) {
                return Err(Error::NotIncreasing(i + 1));
            }
        }
        Ok(FunctionSpec::Sampled(rows))
    }

    pub fn has_exact_derivative(&self) -> bool {
        !matches!(self, FunctionSpec::Sampled(_))
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        Ok(match self {
            FunctionSpec::Polynomial(c) => horner(c, x),
            FunctionSpec::Sinusoid {
                amplitude,
                wavenumber,
            } => amplitude * (wavenumber * PI * x).sin(),
            FunctionSpec::Exponential { scale } => (scale * x).exp(),
            FunctionSpec::Sampled(rows) => sample_lerp(rows, x)?,
        })
    }

    /// Exact `u'(x)`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        Ok(match self {
            FunctionSpec::Polynomial(c) => horner(&derivative_coefficients(c), x),
            FunctionSpec::Sinusoid {
                amplitude,
                wavenumber,
            } => amplitude * wavenumber * PI * (wavenumber * PI * x).cos(),
            FunctionSpec::Exponential { scale } => scale * (scale * x).exp(),
            FunctionSpec::Sampled(_) => return Err(Error::NoExactDerivative),
        })
    }
}

/// Coefficients of the derivative of `sum_k c_k x^k`.
pub fn derivative_coefficients(c: &[f64]) -> Vec<f64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| k as f64 * ck)
        .collect()
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

fn sample_lerp(rows: &[(f64, f64)], x: f64) -> Result<f64> {
    let (lo, hi) = (rows[0].0, rows[rows.len() - 1].0);
    if !(lo..=hi).contains(&x) {
        return Err(Error::OutOfDomain {
            x,
            alpha: lo,
            beta: hi,
        });
    }
    let k = rows.partition_point(|r| r.0 <= x);
    if k == 0 || k == rows.len() {
        return Ok(rows[k.saturating_sub(1)].1);
    }
    let ((x0, u0), (x1, u1)) = (rows[k - 1], rows[k]);
    Ok(u0 + (u1 - u0) * (x - x0) / (x1 - x0))
}
