use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::LctParams;
use crate::signal::Signal;

/// Uniform frequency grid w_k = origin + k * span / count, k = 0..count-1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrequencyGrid {
    count: usize,
    origin: f64,
    span: f64,
}

impl FrequencyGrid {
    pub fn new(count: usize, origin: f64, span: f64) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid { count });
        }
        Ok(Self {
            count,
            origin,
            span,
        })
    }

    /// `count` points over one full period [0, 2pi).
    pub fn full(count: usize) -> Result<Self> {
        Self::new(count, 0.0, 2.0 * PI)
    }

    /// The 512-point grid over [0, 2pi) used by the verification routines.
    pub fn verification() -> Self {
        Self::full(512).expect("512 >= 2")
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    pub fn span(&self) -> f64 {
        self.span
    }

    pub fn step(&self) -> f64 {
        self.span / self.count as f64
    }

    pub fn point(&self, k: usize) -> f64 {
        self.origin + self.span * k as f64 / self.count as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|k| self.point(k))
    }
}

/// Transform values sampled on a [`FrequencyGrid`], tagged with the sample
/// period of the originating signal.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
    grid: FrequencyGrid,
    period: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn value(&self, k: usize) -> Complex64 {
        self.values[k]
    }

    /// Grid index of the largest magnitude.
    pub fn argmax(&self) -> usize {
        let mut best = 0usize;
        let mut best_mag = f64::MIN;
        for (k, v) in self.values.iter().enumerate() {
            let m = v.norm();
            if m > best_mag {
                best_mag = m;
                best = k;
            }
        }
        best
    }

    /// Indices of the `count` largest magnitudes, greedily excluding
    /// `exclusion` bins on either side of each accepted peak (circularly),
    /// sorted ascending.
    pub fn dominant_peaks(&self, count: usize, exclusion: usize) -> Vec<usize> {
        let n = self.values.len();
        let mut mags: Vec<f64> = self.values.iter().map(|v| v.norm()).collect();
        let mut peaks = Vec::with_capacity(count);
        for _ in 0..count.min(n) {
            let mut best = 0usize;
            let mut best_mag = f64::MIN;
            for (k, &m) in mags.iter().enumerate() {
                if m > best_mag {
                    best_mag = m;
                    best = k;
                }
            }
            if best_mag == f64::MIN {
                break;
            }
            peaks.push(best);
            for offset in 0..=(2 * exclusion) {
                let k = (best + n + offset - exclusion) % n;
                mags[k] = f64::MIN;
            }
        }
        peaks.sort_unstable();
        peaks
    }
}

/// Evaluates the discrete-time LCT of `x` at a single frequency.
///
/// X(w) = sqrt(1/(j 2 pi b)) sum_n x(n) exp[(j/2)((a/b) n^2 T^2 - 2 n w +
/// (d b / T^2) w^2)], with the principal-branch prefactor from
/// [`LctParams::normalization`].
///
/// The sum runs over the stored support in ascending index order, so
/// results are bit-reproducible.
pub fn dtlct_at(x: &Signal, params: &LctParams, omega: f64) -> Complex64 {
    let alpha = params.chirp_rate(x.period());
    let mut acc = Complex64::new(0.0, 0.0);
    for (n, z) in x.iter() {
        let phase = alpha * (n * n) as f64 - n as f64 * omega;
        acc += z * Complex64::from_polar(1.0, phase);
    }
    params.normalization() * params.freq_chirp(omega, x.period()) * acc
}

/// Evaluates the discrete-time LCT of `x` on every point of `grid`.
///
/// Direct O(len * count) summation; the time chirp is attached to the
/// samples once and each grid point accumulates in ascending index order.
pub fn dtlct(x: &Signal, params: &LctParams, grid: &FrequencyGrid) -> Spectrum {
    let alpha = params.chirp_rate(x.period());
    let chirped: Vec<(i64, Complex64)> = x
        .iter()
        .map(|(n, z)| (n, z * Complex64::from_polar(1.0, alpha * (n * n) as f64)))
        .collect();
    let norm = params.normalization();
    let values = grid
        .points()
        .map(|omega| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(n, z) in &chirped {
                acc += z * Complex64::from_polar(1.0, -(n as f64) * omega);
            }
            norm * params.freq_chirp(omega, x.period()) * acc
        })
        .collect();
    Spectrum {
        values,
        grid: *grid,
        period: x.period(),
    }
}
