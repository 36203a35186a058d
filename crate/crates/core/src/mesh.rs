//! Partitions of a bounded interval and the mesh families used in
//! convergence studies.
//!
//! A [`Mesh`] stores strictly increasing nodes `x_0 < ... < x_n` with
//! `n >= 2`, so that there is always at least one interior node. Elements
//! are the half-open intervals `[x_k, x_{k+1})`, except that the last element
//! also owns the right endpoint.

use std::f64::consts::PI;
use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Smallest admissible element count.
pub const MIN_ELEMENTS: usize = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    nodes: Vec<f64>,
}

impl Mesh {
    /// Builds a mesh from explicit node coordinates.
    pub fn new(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < MIN_ELEMENTS + 1 {
            return Err(Error::TooCoarse {
                n: nodes.len().saturating_sub(1),
                min: MIN_ELEMENTS,
            });
        }
        let (alpha, beta) = (nodes[0], nodes[nodes.len() - 1]);
        if !alpha.is_finite() || !beta.is_finite() || beta <= alpha {
            return Err(Error::InvalidInterval { alpha, beta });
        }
        for (i, w) in nodes.windows(2).enumerate() {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::NotIncreasing(i + 1));
            }
        }
        Ok(Mesh { nodes })
    }

    /// Equally spaced nodes `x_i = alpha + (beta - alpha) * i / n`.
    pub fn uniform(alpha: f64, beta: f64, n: usize) -> Result<Self> {
        check_interval(alpha, beta, n)?;
        Ok(Self::from_map(alpha, beta, n, |t| t))
    }

    /// Smoothly graded nodes `x_i = alpha + (beta - alpha) g(i/n)` with
    /// `g(t) = t + delta sin(pi t) / pi`.
    ///
    /// The map is a smooth diffeomorphism of `[0, 1]`, so neighbouring
    /// element lengths differ by `O(h^2)`. `delta = 0` reproduces
    /// [`Mesh::uniform`] bit for bit.
    pub fn graded(alpha: f64, beta: f64, n: usize, delta: f64) -> Result<Self> {
        check_interval(alpha, beta, n)?;
        if !(0.0..1.0 / PI).contains(&delta) {
            return Err(Error::InvalidDelta(delta));
        }
        Ok(Self::from_map(alpha, beta, n, |t| {
            t + delta * (PI * t).sin() / PI
        }))
    }

    /// Uniform nodes with each interior node shifted by `rho * h * eta_i`,
    /// `eta_i` uniform on `[-1, 1]` from a generator seeded with `seed`.
    ///
    /// Neighbouring element lengths differ by `O(h)`, which violates the
    /// spacing hypothesis of the superconvergence estimate.
    pub fn perturbed(alpha: f64, beta: f64, n: usize, rho: f64, seed: u64) -> Result<Self> {
        check_interval(alpha, beta, n)?;
        if !(0.0..0.5).contains(&rho) {
            return Err(Error::InvalidRho(rho));
        }
        let mut mesh = Self::uniform(alpha, beta, n)?;
        let h = (beta - alpha) / n as f64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for x in &mut mesh.nodes[1..n] {
            let eta: f64 = rng.gen_range(-1.0..=1.0);
            *x += rho * h * eta;
        }
        Ok(mesh)
    }

    /// Random non-uniform mesh whose element lengths are drawn from
    /// `[0.25, 1]` and rescaled to fill the interval. Adjacent lengths
    /// therefore differ by at most a factor of four.
    pub fn random<R: Rng + ?Sized>(alpha: f64, beta: f64, n: usize, rng: &mut R) -> Result<Self> {
        check_interval(alpha, beta, n)?;
        let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.25..=1.0)).collect();
        let total: f64 = weights.iter().sum();
        let mut nodes = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        nodes.push(alpha);
        for w in &weights[..n - 1] {
            acc += w;
            nodes.push(alpha + (beta - alpha) * (acc / total));
        }
        nodes.push(beta);
        Self::new(nodes)
    }

    fn from_map(alpha: f64, beta: f64, n: usize, g: impl Fn(f64) -> f64) -> Self {
        let mut nodes: Vec<f64> = (0..=n)
            .map(|i| alpha + (beta - alpha) * g(i as f64 / n as f64))
            .collect();
        nodes[0] = alpha;
        nodes[n] = beta;
        Mesh { nodes }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Coordinate of node `i`.
    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Number of elements `n`; there are `n + 1` nodes.
    #[inline]
    pub fn n_elements(&self) -> usize {
        self.nodes.len() - 1
    }

    #[inline]
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn alpha(&self) -> f64 {
        self.nodes[0]
    }

    pub fn beta(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Length `h_k = x_{k+1} - x_k` of element `k`.
    #[inline]
    pub fn element_length(&self, k: usize) -> f64 {
        self.nodes[k + 1] - self.nodes[k]
    }

    pub fn element_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.nodes.windows(2).map(|w| w[1] - w[0])
    }

    /// `h = max_k h_k`.
    pub fn mesh_size(&self) -> f64 {
        self.element_lengths().fold(0.0, f64::max)
    }

    /// `max_k |h_{k+1} - h_k|`, the quantity constrained by the spacing
    /// hypothesis.
    pub fn max_spacing_jump(&self) -> f64 {
        let h: Vec<f64> = self.element_lengths().collect();
        h.windows(2)
            .map(|w| (w[1] - w[0]).abs())
            .fold(0.0, f64::max)
    }

    /// Indices of interior nodes `1..n`.
    pub fn interior(&self) -> Range<usize> {
        1..self.n_elements()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n_nodes() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.n_nodes(),
            })
        }
    }

    /// Element owning `x`: the `k` with `x_k <= x < x_{k+1}`, or the last
    /// element for `x = beta`.
    pub fn locate(&self, x: f64) -> Result<usize> {
        if !(self.alpha()..=self.beta()).contains(&x) {
            return Err(Error::OutOfDomain {
                x,
                alpha: self.alpha(),
                beta: self.beta(),
            });
        }
        let k = self.nodes.partition_point(|&xi| xi <= x);
        Ok(k.saturating_sub(1).min(self.n_elements() - 1))
    }

    /// Image of this mesh under the affine map taking `[alpha, beta]` onto
    /// `[a, b]`.
    pub fn rescaled(&self, a: f64, b: f64) -> Result<Self> {
        let n = self.n_elements();
        check_interval(a, b, n)?;
        let (alpha, beta) = (self.alpha(), self.beta());
        let mut nodes: Vec<f64> = self
            .nodes
            .iter()
            .map(|x| a + (b - a) * ((x - alpha) / (beta - alpha)))
            .collect();
        nodes[0] = a;
        nodes[n] = b;
        Self::new(nodes)
    }
}

fn check_interval(alpha: f64, beta: f64, n: usize) -> Result<()> {
    if !alpha.is_finite() || !beta.is_finite() || beta <= alpha {
        return Err(Error::InvalidInterval { alpha, beta });
    }
    if n < MIN_ELEMENTS {
        return Err(Error::TooCoarse {
            n,
            min: MIN_ELEMENTS,
        });
    }
    Ok(())
}

/// A generator for meshes of any resolution on a fixed interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeshFamily {
    Uniform,
    Graded { delta: f64 },
    Perturbed { rho: f64, seed: u64 },
}

impl MeshFamily {
    pub fn build(&self, alpha: f64, beta: f64, n: usize) -> Result<Mesh> {
        match *self {
            MeshFamily::Uniform => Mesh::uniform(alpha, beta, n),
            MeshFamily::Graded { delta } => Mesh::graded(alpha, beta, n, delta),
            MeshFamily::Perturbed { rho, seed } => Mesh::perturbed(alpha, beta, n, rho, seed),
        }
    }
}
