//! Seeded identity suites: each suite recomputes the recovered gradient on
//! random meshes and compares it with a closed-form prediction.
//!
//! Tolerances are the nominal ones multiplied by `tol_scale`, so a scale far
//! below machine precision must make the suites fail.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    estimate_inf_sup, predicted_error_cubic_at_node, predicted_error_cubic_at_tilde,
    predicted_error_quadratic, x_tilde, FunctionSpec,
};
use crate::basis::{pairing_integral, DualBasis, HatBasis};
use crate::error::Result;
use crate::mesh::{Mesh, MeshFamily};
use crate::projection::{interpolate, recover_oblique};
use crate::quadrature::{gauss_rule, integrate_reference, PAIRING_POINTS};

pub const RANDOM_MESHES: usize = 50;
pub const POLYNOMIALS_PER_MESH: usize = 20;
pub const MAX_RANDOM_N: usize = 64;
pub const COEFF_BOUND: f64 = 10.0;
pub const BIORTHOGONAL_MESHES: usize = 20;

pub const QUADRATIC_TOL: f64 = 1e-11;
pub const UNIFORM_ENDPOINT_TOL: f64 = 1e-12;
pub const CUBIC_TOL: f64 = 1e-10;
pub const PAIRING_TOL: f64 = 1e-14;
pub const INF_SUP_SPREAD: f64 = 0.05;
pub const INF_SUP_FLOOR: f64 = 0.1;
pub const INF_SUP_LEVELS: [usize; 5] = [8, 16, 32, 64, 128];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quadratic,
    Cubic,
    Biorthogonality,
    InfSup,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "quadratic" => Suite::Quadratic,
            "cubic" => Suite::Cubic,
            "biorthogonality" => Suite::Biorthogonality,
            "infsup" => Suite::InfSup,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub tol_scale: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 1,
            tol_scale: 1.0,
        }
    }
}

/// Outcome of one named check, aggregated over all its cases. `measured`
/// and `predicted` are the values at the worst case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub predicted: f64,
    pub deviation: f64,
    pub tolerance: f64,
    pub cases: usize,
    pub passed: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} cases={} measured={:?} predicted={:?} deviation={:?} tolerance={:?}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.measured,
            self.predicted,
            self.deviation,
            self.tolerance
        )
    }
}

/// Accumulates the worst scaled deviation `|measured - predicted| / scale`.
struct Tracker {
    name: String,
    tolerance: f64,
    worst: Option<(f64, f64, f64)>,
    cases: usize,
}

impl Tracker {
    fn new(name: &str, tolerance: f64) -> Self {
        Tracker {
            name: name.to_string(),
            tolerance,
            worst: None,
            cases: 0,
        }
    }

    /// Records one comparison; deviation is `|m - p| / scale`.
    fn record(&mut self, measured: f64, predicted: f64, scale: f64) {
        self.cases += 1;
        let dev = (measured - predicted).abs() / scale;
        let worse = match self.worst {
            None => true,
            Some((d, _, _)) => !(dev <= d),
        };
        if worse {
            self.worst = Some((dev, measured, predicted));
        }
    }

    fn finish(self) -> Check {
        let (deviation, measured, predicted) = self.worst.unwrap_or((f64::NAN, f64::NAN, f64::NAN));
        Check {
            passed: deviation < self.tolerance,
            name: self.name,
            measured,
            predicted,
            deviation,
            tolerance: self.tolerance,
            cases: self.cases,
        }
    }
}

fn mixed_scale(predicted: f64) -> f64 {
    predicted.abs().max(1.0)
}

fn random_coeffs<const K: usize>(rng: &mut ChaCha8Rng) -> [f64; K] {
    std::array::from_fn(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
}

fn random_meshes(rng: &mut ChaCha8Rng, count: usize, min_n: usize) -> Result<Vec<Mesh>> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=MAX_RANDOM_N);
            Mesh::random(0.0, 1.0, n, rng)
        })
        .collect()
}

fn quadratic(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut tilde = Tracker::new("quadratic.exact-at-x-tilde", QUADRATIC_TOL * opts.tol_scale);
    let mut signed = Tracker::new(
        "quadratic.signed-nodal-error",
        QUADRATIC_TOL * opts.tol_scale,
    );
    for mesh in random_meshes(&mut rng, RANDOM_MESHES, 3)? {
        for _ in 0..POLYNOMIALS_PER_MESH {
            let [a, b, c] = random_coeffs::<3>(&mut rng);
            let u = FunctionSpec::quadratic(a, b, c);
            let g = recover_oblique(&interpolate(&u, &mesh)?)?;
            for (i, &gi) in g.values().iter().enumerate() {
                tilde.record(gi, u.derivative(x_tilde(&mesh, i)?)?, 1.0);
                let measured = gi - u.derivative(mesh.node(i))?;
                signed.record(measured, predicted_error_quadratic(a, &mesh, i)?, 1.0);
            }
        }
    }

    let tol = UNIFORM_ENDPOINT_TOL * opts.tol_scale;
    let mut ends = Tracker::new("quadratic.uniform-endpoint-error", tol);
    let mut interior = Tracker::new("quadratic.uniform-interior-error", tol);
    for n in [4, 16, 64] {
        let mesh = Mesh::uniform(0.0, 1.0, n)?;
        let h = mesh.mesh_size();
        for _ in 0..POLYNOMIALS_PER_MESH {
            let [a, b, c] = random_coeffs::<3>(&mut rng);
            let u = FunctionSpec::quadratic(a, b, c);
            let g = recover_oblique(&interpolate(&u, &mesh)?)?;
            for i in [0, n] {
                let e = (g.values()[i] - u.derivative(mesh.node(i))?).abs();
                ends.record(e, a.abs() * h, mixed_scale(a * h));
            }
            for i in mesh.interior() {
                interior.record(g.values()[i], u.derivative(mesh.node(i))?, 1.0);
            }
        }
    }
    Ok(vec![
        tilde.finish(),
        signed.finish(),
        ends.finish(),
        interior.finish(),
    ])
}

fn cubic(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let tol = CUBIC_TOL * opts.tol_scale;
    let mut tilde = Tracker::new("cubic.error-at-x-tilde", tol);
    let mut node = Tracker::new("cubic.signed-nodal-error", tol);
    for mesh in random_meshes(&mut rng, RANDOM_MESHES, 3)? {
        for _ in 0..POLYNOMIALS_PER_MESH {
            let [a, b, c, d] = random_coeffs::<4>(&mut rng);
            let u = FunctionSpec::cubic(a, b, c, d);
            let g = recover_oblique(&interpolate(&u, &mesh)?)?;
            for (i, &gi) in g.values().iter().enumerate() {
                let at_tilde = (gi - u.derivative(x_tilde(&mesh, i)?)?).abs();
                let pred = predicted_error_cubic_at_tilde(a, &mesh, i)?.abs();
                tilde.record(at_tilde, pred, mixed_scale(pred));
                let at_node = gi - u.derivative(mesh.node(i))?;
                let pred = predicted_error_cubic_at_node(a, b, &mesh, i)?;
                node.record(at_node, pred, mixed_scale(pred));
            }
        }
    }
    Ok(vec![tilde.finish(), node.finish()])
}

fn biorthogonality(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(2));
    let rule = gauss_rule(PAIRING_POINTS)?;
    let tol = PAIRING_TOL * opts.tol_scale;
    let mut off = Tracker::new("biorthogonality.off-diagonal", tol);
    let mut diag = Tracker::new("biorthogonality.diagonal", tol);
    for mesh in random_meshes(&mut rng, BIORTHOGONAL_MESHES, 2)? {
        let (phi, lam) = (HatBasis::new(&mesh), DualBasis::new(&mesh));
        let len = mesh.beta() - mesh.alpha();
        for i in 0..mesh.n_nodes() {
            for j in 0..mesh.n_nodes() {
                let q = integrate_reference(
                    |k, t| {
                        lam.eval_local(i, k, t).unwrap_or(f64::NAN)
                            * phi.eval_local(j, k, t).unwrap_or(f64::NAN)
                    },
                    &mesh,
                    &rule,
                );
                let c = pairing_integral(i, j, &mesh)?;
                if i == j {
                    diag.record(q, c, c.abs());
                } else {
                    off.record(q, c, len);
                }
            }
        }
    }
    Ok(vec![off.finish(), diag.finish()])
}

fn inf_sup(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let sweep = |family: MeshFamily| -> Result<Vec<f64>> {
        INF_SUP_LEVELS
            .iter()
            .map(|&n| estimate_inf_sup(&family.build(0.0, 1.0, n)?))
            .collect()
    };
    let uniform = sweep(MeshFamily::Uniform)?;
    let lo = uniform.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = uniform.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let cases = INF_SUP_LEVELS.len();

    let spread = (hi - lo) / hi;
    let tol = INF_SUP_SPREAD * opts.tol_scale;
    let mut checks = vec![
        Check {
            name: "infsup.uniform-spread".into(),
            measured: lo,
            predicted: hi,
            deviation: spread,
            tolerance: tol,
            cases,
            passed: spread < tol,
        },
        Check {
            name: "infsup.uniform-floor".into(),
            measured: lo,
            predicted: INF_SUP_FLOOR,
            deviation: (lo - INF_SUP_FLOOR).min(0.0).abs(),
            tolerance: 0.0,
            cases,
            passed: lo > INF_SUP_FLOOR,
        },
    ];
    for (name, family) in [
        ("infsup.graded-floor", MeshFamily::Graded { delta: 0.2 }),
        (
            "infsup.perturbed-floor",
            MeshFamily::Perturbed {
                rho: 0.4,
                seed: opts.seed,
            },
        ),
    ] {
        let values = sweep(family)?;
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        checks.push(Check {
            name: name.into(),
            measured: min,
            predicted: 0.5 * lo,
            deviation: (min - 0.5 * lo).min(0.0).abs(),
            tolerance: 0.0,
            cases,
            passed: min > 0.5 * lo,
        });
    }
    Ok(checks)
}

/// Runs the selected suite and returns one [`Check`] per identity.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Quadratic => quadratic(opts)?,
        Suite::Cubic => cubic(opts)?,
        Suite::Biorthogonality => biorthogonality(opts)?,
        Suite::InfSup => inf_sup(opts)?,
        Suite::All => {
            let mut all = quadratic(opts)?;
            all.extend(cubic(opts)?);
            all.extend(biorthogonality(opts)?);
            all.extend(inf_sup(opts)?);
            all
        }
    })
}
