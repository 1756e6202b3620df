use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on |ad - bc - 1| accepted by [`LctParams::new`]. Loose enough
/// that a quadruple built from an angle in double precision validates.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// Parameter quadruple (a, b, c, d) of a linear canonical transform with
/// ad - bc = 1 and b > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LctParams {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl LctParams {
    /// Validates and wraps an (a, b, c, d) quadruple.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !det.is_finite() || (det - 1.0).abs() > UNIMODULAR_TOL {
            return Err(Error::NonUnimodular {
                det,
                tol: UNIMODULAR_TOL,
            });
        }
        if !b.is_finite() || b <= 0.0 {
            return Err(Error::NonPositiveB { b });
        }
        Ok(Self { a, b, c, d })
    }

    /// Fractional Fourier transform at `angle`: (cos t, sin t, -sin t, cos t).
    /// The angle must keep sin(angle) > 0.
    pub fn frft(angle: f64) -> Result<Self> {
        Self::new(angle.cos(), angle.sin(), -angle.sin(), angle.cos())
    }

    /// The Fourier special case (0, 1, -1, 0).
    pub fn fourier() -> Self {
        Self {
            a: 0.0,
            b: 1.0,
            c: -1.0,
            d: 0.0,
        }
    }

    /// FrFT at pi/4, the worked example configuration.
    pub fn frft_quarter() -> Self {
        Self::frft(FRAC_PI_4).expect("pi/4 rotation is unimodular")
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Quadratic phase rate a T^2 / (2b) of the time-domain chirp.
    pub fn chirp_rate(&self, period: f64) -> f64 {
        self.a * period * period / (2.0 * self.b)
    }

    /// Unit-modulus time chirp exp(j a T^2 n^2 / (2b)) attached to sample n.
    pub fn time_chirp(&self, n: i64, period: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.chirp_rate(period) * (n * n) as f64)
    }

    /// Frequency chirp exp(j d b w^2 / (2 T^2)), the quadratic phase the
    /// transform attaches to the frequency variable.
    pub fn freq_chirp(&self, omega: f64, period: f64) -> Complex64 {
        Complex64::from_polar(
            1.0,
            self.d * self.b * omega * omega / (2.0 * period * period),
        )
    }

    /// Factor relating the transform at w + 2pi to its value at w:
    /// exp(j d b 2 pi (w + pi) / T^2). Unit modulus for every w.
    pub fn quasi_period_factor(&self, omega: f64, period: f64) -> Complex64 {
        let phase = self.d * self.b * 2.0 * PI * (omega + PI) / (period * period);
        Complex64::from_polar(1.0, phase)
    }

    /// Scalar prefactor sqrt(1/(j 2 pi b)) of the transform, taken on the
    /// principal branch: (1/sqrt(2 pi b)) e^{-j pi/4}.
    pub fn normalization(&self) -> Complex64 {
        Complex64::from_polar(1.0 / (2.0 * PI * self.b).sqrt(), -FRAC_PI_4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_case_is_valid() {
        let p = LctParams::new(0.0, 1.0, -1.0, 0.0).unwrap();
        assert_eq!(p.a(), 0.0);
        assert_eq!(p.d(), 0.0);
    }

    #[test]
    fn quarter_rotation_is_valid() {
        let t = FRAC_PI_4;
        let p = LctParams::new(t.cos(), t.sin(), -t.sin(), t.cos()).unwrap();
        assert!((p.a() - p.b()).abs() < 1e-15);
    }

    #[test]
    fn all_ones_is_rejected() {
        match LctParams::new(1.0, 1.0, 1.0, 1.0) {
            Err(Error::NonUnimodular { det, .. }) => assert_eq!(det, 0.0),
            other => panic!("expected NonUnimodular, got {other:?}"),
        }
    }

    #[test]
    fn negative_b_is_rejected() {
        assert!(matches!(
            LctParams::new(0.0, -1.0, 1.0, 0.0),
            Err(Error::NonPositiveB { .. })
        ));
    }

    #[test]
    fn chirp_at_zero_is_one() {
        let p = LctParams::frft_quarter();
        assert_eq!(p.time_chirp(0, 0.05), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn chirp_vanishes_when_a_is_zero() {
        let p = LctParams::fourier();
        for n in -5..=5 {
            assert_eq!(p.time_chirp(n, 1.0), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn chirp_matches_scalar_evaluation() {
        // a = b = sqrt(2)/2, T = 0.05, n = 1: exponent a T^2 / (2b) = 0.00125.
        let p = LctParams::frft_quarter();
        let expect = Complex64::from_polar(1.0, 0.00125);
        assert!((p.time_chirp(1, 0.05) - expect).norm() < 1e-15);
    }

    #[test]
    fn quasi_period_factor_trivial_cases() {
        let p = LctParams::fourier();
        assert_eq!(p.quasi_period_factor(0.3, 1.0), Complex64::new(1.0, 0.0));

        let q = LctParams::frft_quarter();
        let at_minus_pi = q.quasi_period_factor(-PI, 0.05);
        assert!((at_minus_pi - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quasi_period_factor_quarter_case() {
        // d b = 1/2, so the phase at w = 0 is pi^2 / T^2 = pi^2 / 0.0025.
        let p = LctParams::frft_quarter();
        let expect = Complex64::from_polar(1.0, PI * PI / 0.0025);
        assert!((p.quasi_period_factor(0.0, 0.05) - expect).norm() < 1e-9);
    }

    #[test]
    fn normalization_modulus() {
        let p = LctParams::frft_quarter();
        let norm = p.normalization();
        assert!((norm.norm() - 1.0 / (2.0 * PI * p.b()).sqrt()).abs() < 1e-15);
        assert!((norm.arg() + FRAC_PI_4).abs() < 1e-15);
    }
}
