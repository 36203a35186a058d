use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{FunctionSpec, Norm};
use crate::error::{Error, Result};
use crate::mesh::MeshFamily;
use crate::projection::{interpolate, Method};

/// One refinement level of a convergence study.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub h: f64,
    pub error: f64,
    /// Observed order against the previous level; absent on the first level
    /// or when either error is zero.
    pub rate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Study {
    pub records: Vec<ConvergenceRecord>,
    /// Least-squares slope of `log(error)` against `log(h)` over all levels.
    pub slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub spec: FunctionSpec,
    pub family: MeshFamily,
    pub domain: (f64, f64),
    pub levels: Vec<usize>,
    pub method: Method,
    pub norm: Norm,
}

/// Observed order between two levels.
pub fn pairwise_rate(h0: f64, e0: f64, h1: f64, e1: f64) -> Option<f64> {
    (e0 > 0.0 && e1 > 0.0).then(|| (e0 / e1).ln() / (h0 / h1).ln())
}

/// Least-squares slope of `log y` against `log x`; `None` if fewer than two
/// points or any value is not positive.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() < 2 || xs.len() != ys.len() || xs.iter().chain(ys).any(|&v| !(v > 0.0)) {
        return None;
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let m = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / m;
    let my = ly.iter().sum::<f64>() / m;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Runs recovery on every level of a mesh family and fits convergence
/// rates. Levels are computed in parallel; records keep level order.
pub fn convergence_study(cfg: &StudyConfig) -> Result<Study> {
    if cfg.levels.is_empty() {
        return Err(Error::parse(0, "no refinement levels"));
    }
    for (k, &n) in cfg.levels.iter().enumerate() {
        if n < 3 {
            return Err(Error::TooCoarse { n, min: 3 });
        }
        if k > 0 && n <= cfg.levels[k - 1] {
            return Err(Error::NotIncreasing(k));
        }
    }
    let (alpha, beta) = cfg.domain;
    let measured = cfg
        .levels
        .par_iter()
        .map(|&n| {
            let mesh = cfg.family.build(alpha, beta, n)?;
            let u = interpolate(&cfg.spec, &mesh)?;
            let g = cfg.method.recover(&u)?;
            Ok((n, mesh.mesh_size(), cfg.norm.measure(&cfg.spec, &g)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut records: Vec<ConvergenceRecord> = Vec::with_capacity(measured.len());
    for (k, &(n, h, error)) in measured.iter().enumerate() {
        let rate = k
            .checked_sub(1)
            .and_then(|j| pairwise_rate(measured[j].1, measured[j].2, h, error));
        records.push(ConvergenceRecord { n, h, error, rate });
    }
    let hs: Vec<f64> = records.iter().map(|r| r.h).collect();
    let es: Vec<f64> = records.iter().map(|r| r.error).collect();
    Ok(Study {
        slope: loglog_slope(&hs, &es),
        records,
    })
}
