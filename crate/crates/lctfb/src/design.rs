//! Power-symmetric prototype design: a windowed half-band filter and its
//! minimum-phase spectral factor.
//!
//! A zero-phase half-band filter f has f(0) = 1/2 and zero even-indexed taps,
//! so F(e^{jw}) + F(e^{j(w+pi)}) = 1 holds exactly by construction. Any
//! spectral factor h of a nonnegative half-band (conv(h, rev(h)) = f)
//! satisfies |H(e^{jw})|^2 + |H(e^{j(w+pi)})|^2 = 1, which is the single
//! design degree of freedom of a two-channel paraunitary bank.

use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Grid density used for spectrum minima and verification sweeps.
const SPECTRUM_GRID: usize = 4096;

/// Modified Bessel function I0 by its power series.
fn bessel_i0(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= (half / k as f64) * (half / k as f64);
        sum += term;
        if term < sum * 1e-18 {
            break;
        }
    }
    sum
}

/// Evaluates a zero-phase symmetric filter (center at `(len-1)/2`) at `w`.
fn zero_phase_response(f: &[f64], omega: f64) -> f64 {
    let center = (f.len() - 1) / 2;
    let mut acc = f[center];
    for k in 1..=center {
        acc += 2.0 * f[center + k] * (k as f64 * omega).cos();
    }
    acc
}

fn min_response(f: &[f64]) -> f64 {
    (0..=SPECTRUM_GRID)
        .map(|k| zero_phase_response(f, PI * k as f64 / SPECTRUM_GRID as f64))
        .fold(f64::INFINITY, f64::min)
}

/// Designs a zero-phase half-band filter of the given even order (length
/// order + 1, centered). `transition` is the full transition width around
/// pi/2 in radians; `shape` is the Kaiser window beta (0 = rectangular).
///
/// The order must be twice an odd number so the spectral factor has odd
/// order, as the paraunitary construction requires. The ideal half-band
/// response is smoothed with a cosine roll-off of the requested width and
/// windowed; even taps are zero structurally, so the complementarity
/// F(w) + F(w+pi) = 1 is exact. If the response dips below zero it is lifted
/// (f(0) += |min| + 1e-12) and renormalized, keeping f(0) = 1/2.
pub fn design_halfband(order: usize, transition: f64, shape: f64) -> Result<Vec<f64>> {
    if order < 2 || !order.is_multiple_of(2) || (order / 2).is_multiple_of(2) {
        return Err(Error::InvalidOrder { order });
    }
    if !(transition > 0.0 && transition < PI / 2.0) {
        return Err(Error::InvalidTransition { value: transition });
    }
    if !shape.is_finite() || shape < 0.0 {
        return Err(Error::InvalidShape { value: shape });
    }

    let half = order / 2;
    let mut f = vec![0.0; order + 1];
    f[half] = 0.5;
    let i0_beta = bessel_i0(shape);
    for n in (1..=half).step_by(2) {
        // sin(pi n / 2) / (pi n) alternates +-1/(pi n) on odd n.
        let ideal = if n % 4 == 1 { 1.0 } else { -1.0 } / (PI * n as f64);
        let u = transition * n as f64 / PI;
        let rolloff = if (u - 1.0).abs() < 1e-9 {
            PI / 4.0
        } else {
            (transition * n as f64 / 2.0).cos() / (1.0 - u * u)
        };
        let x = n as f64 / half as f64;
        let window = bessel_i0(shape * (1.0 - x * x).max(0.0).sqrt()) / i0_beta;
        let tap = ideal * rolloff * window;
        f[half + n] = tap;
        f[half - n] = tap;
    }

    let min = min_response(&f);
    if min < 0.0 {
        // Lift the DC tap until the response clears zero, then renormalize
        // the odd taps so that f(0) stays exactly 1/2.
        let eps = -min + 1e-12;
        let scale = 1.0 / (1.0 + 2.0 * eps);
        for (k, tap) in f.iter_mut().enumerate() {
            if k != half {
                *tap *= scale;
            }
        }
    }
    Ok(f)
}

fn check_halfband(f: &[f64]) -> Result<usize> {
    if f.len() < 3 || f.len().is_multiple_of(2) {
        return Err(Error::InvalidOrder {
            order: f.len().saturating_sub(1),
        });
    }
    let half = (f.len() - 1) / 2;
    if half.is_multiple_of(2) {
        return Err(Error::InvalidOrder { order: f.len() - 1 });
    }
    for k in 1..=half {
        if (f[half + k] - f[half - k]).abs() > 1e-12 {
            return Err(Error::RootFindingFailure(format!(
                "half-band is not symmetric at offset {k}"
            )));
        }
        if k % 2 == 0 && f[half + k].abs() > 1e-12 {
            return Err(Error::RootFindingFailure(format!(
                "even tap {k} of half-band is {}, expected 0",
                f[half + k]
            )));
        }
    }
    Ok(half)
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    // Returns (p(z), p'(z)) with coefficients in ascending powers.
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex64::new(c, 0.0);
    }
    (p, dp)
}

/// All complex roots of a real polynomial given in ascending powers, via
/// companion-matrix eigenvalues polished by a few Newton steps.
pub(crate) fn poly_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    if lead == 0.0 {
        return Err(Error::RootFindingFailure(
            "leading coefficient is zero".into(),
        ));
    }
    let mut companion = DMatrix::<f64>::zeros(degree, degree);
    for i in 1..degree {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..degree {
        companion[(i, degree - 1)] = -coeffs[i] / lead;
    }
    let eigen = companion.complex_eigenvalues();
    let mut roots: Vec<Complex64> = eigen
        .iter()
        .map(|e: &Complex<f64>| Complex64::new(e.re, e.im))
        .collect();
    for root in &mut roots {
        let mut best = *root;
        let (mut best_val, _) = horner(coeffs, best);
        let mut z = *root;
        for _ in 0..8 {
            let (p, dp) = horner(coeffs, z);
            if dp.norm() == 0.0 {
                break;
            }
            z -= p / dp;
            let (p2, _) = horner(coeffs, z);
            if p2.norm() < best_val.norm() {
                best_val = p2;
                best = z;
            }
        }
        *root = best;
    }
    // Deterministic order regardless of the eigen solver's internals.
    roots.sort_by(|x, y| {
        x.norm()
            .total_cmp(&y.norm())
            .then(x.arg().total_cmp(&y.arg()))
    });
    Ok(roots)
}

/// Minimum-phase spectral factor of a nonnegative half-band filter:
/// a real sequence h of length (len+1)/2 with conv(h, rev(h)) equal to the
/// input. The factor keeps all roots on or inside the unit circle and is
/// signed so its coefficient sum is positive.
///
/// Accuracy is limited by root clustering near the unit circle; the
/// reconstruction residual is checked against 1e-6 and typical designs stay
/// below 1e-8.
pub fn spectral_factor(halfband: &[f64]) -> Result<Vec<f64>> {
    let half = check_halfband(halfband)?;
    let min = min_response(halfband);
    if min < -1e-9 {
        return Err(Error::NegativeSpectrum { min });
    }

    let roots = poly_roots(halfband)?;
    // Reciprocal root pairs straddle the unit circle; the smallest `half`
    // moduli are the minimum-phase subset.
    let inside = &roots[..half];

    let mut coeffs = vec![Complex64::new(0.0, 0.0); half + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    for (k, root) in inside.iter().enumerate() {
        // Multiply the running polynomial by (z - root).
        let mut next = vec![Complex64::new(0.0, 0.0); k + 2];
        for (j, &c) in coeffs[..=k].iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * root;
        }
        coeffs[..=k + 1].copy_from_slice(&next);
    }
    // Conjugate-symmetry repair: the selected set is conjugate-closed up to
    // rounding, so the imaginary residue is numerical noise.
    let mut factor: Vec<f64> = coeffs.iter().map(|c| c.re).collect();

    let power: f64 = factor.iter().map(|&c| c * c).sum();
    if power == 0.0 {
        return Err(Error::RootFindingFailure("degenerate factor".into()));
    }
    let gamma = (halfband[half] / power).sqrt();
    if !gamma.is_finite() {
        return Err(Error::RootFindingFailure(
            "center tap is negative; cannot scale factor".into(),
        ));
    }
    for c in &mut factor {
        *c *= gamma;
    }
    if factor.iter().sum::<f64>() < 0.0 {
        for c in &mut factor {
            *c = -*c;
        }
    }

    let residual = reconstruction_residual(&factor, halfband);
    if residual > 1e-6 {
        return Err(Error::RootFindingFailure(format!(
            "factor reconstruction residual {residual:.3e} exceeds 1e-6"
        )));
    }
    Ok(factor)
}

/// max_k |conv(h, rev(h))(k) - f(k)|, the defining check for a factor.
pub fn reconstruction_residual(factor: &[f64], halfband: &[f64]) -> f64 {
    let n = factor.len();
    let mut worst = 0.0f64;
    for k in 0..2 * n - 1 {
        let mut acc = 0.0;
        for i in 0..n {
            // conv with the reversal: pairs h[i] with h[n - 1 - (k - i)].
            let j = n as i64 - 1 - (k as i64 - i as i64);
            if (0..n as i64).contains(&j) {
                acc += factor[i] * factor[j as usize];
            }
        }
        let want = if k < halfband.len() { halfband[k] } else { 0.0 };
        worst = worst.max((acc - want).abs());
    }
    worst
}

/// Full design chain: half-band of the given order, then its minimum-phase
/// factor, a power-symmetric sequence of length order/2 + 1.
pub fn design_power_symmetric(order: usize, transition: f64, shape: f64) -> Result<Vec<f64>> {
    spectral_factor(&design_halfband(order, transition, shape)?)
}
