//! Filter-bank construction from a single prototype, plus the paraunitarity
//! and power-symmetry checks.
//!
//! All four filters come from one real power-symmetric prototype h:
//! the analysis low-pass is the chirp-lifted h, the analysis high-pass is a
//! conjugate flip with a quadratic phase, and each synthesis filter is the
//! conjugate flip of its analysis partner. Stored filters are scaled to unit
//! energy; with that scaling the synthesis output reproduces the input at
//! unit gain (delayed by the order N).
//!
//! Normalization of the checks: the transform prefactor contributes
//! |norm|^2 = 1/(2 pi b) to every |H|^2 term. The power-symmetry check
//! multiplies by 2 pi b and compares to 1, so exact factors of a half-band
//! (energy 1/2) read zero. The paraunitary check multiplies the Gram matrix
//! by pi b and compares to I, so unit-energy banks read zero and a missing
//! filter reads 1.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ops::{polyphase_split, PolyphaseKind};
use crate::params::LctParams;
use crate::signal::Signal;
use crate::transform::{dtlct_at, FrequencyGrid};

/// 2x2 complex matrix used for modulation and polyphase evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mat2([[one, zero], [zero, one]])
    }

    pub fn diag(d0: Complex64, d1: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Mat2([[d0, zero], [zero, d1]])
    }

    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.0[row][col]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        Mat2(out)
    }

    pub fn scale(&self, factor: Complex64) -> Mat2 {
        let mut out = self.0;
        for row in &mut out {
            for cell in row.iter_mut() {
                *cell *= factor;
            }
        }
        Mat2(out)
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2([[self.0[0][0], self.0[1][0]], [self.0[0][1], self.0[1][1]]])
    }

    pub fn conj_transpose(&self) -> Mat2 {
        Mat2([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn mul_vec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    /// Frobenius norm of self - other.
    pub fn frobenius_diff(&self, other: &Mat2) -> f64 {
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                acc += (self.0[i][j] - other.0[i][j]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }
}

/// Attaches the lifting chirp to a real (Fourier-domain) prototype:
/// h0(n) = h(n) exp(-j a n^2 T^2 / (2b)). Moduli are preserved, and the
/// power-symmetry error of the result equals the Fourier-domain error of h.
pub fn lift_prototype(h: &Signal, params: &LctParams) -> Signal {
    let samples = h
        .iter()
        .map(|(n, z)| z * params.time_chirp(n, h.period()).conj())
        .collect();
    Signal::new(samples, h.start_index(), h.period()).expect("lifted prototype is valid")
}

fn require_causal_odd(h: &Signal) -> Result<usize> {
    if h.start_index() != 0 {
        return Err(Error::UnsupportedStart {
            start: h.start_index(),
        });
    }
    let order = h.len() - 1;
    if order.is_multiple_of(2) {
        return Err(Error::EvenOrder { order });
    }
    Ok(order)
}

/// High-pass analysis filter from the lifted low-pass:
/// h1(k) = conj(h0(N-k)) e^{j phi(k)} with
/// phi(k) = -(a T^2 / 2b)[(N-k)^2 + k^2] + (N-k) pi - (d b / 2T^2) pi^2.
///
/// Requires support 0..=N with N odd. When a = 0, d = 0, T = 1 this is the
/// classical alternating flip h1(k) = (-1)^{N-k} conj(h0(N-k)).
pub fn derive_highpass(h0: &Signal, params: &LctParams) -> Result<Signal> {
    let order = require_causal_odd(h0)?;
    let n = order as i64;
    let t = h0.period();
    let rate = params.chirp_rate(t);
    let freq_const = params.d() * params.b() * PI * PI / (2.0 * t * t);
    let samples = (0..=n)
        .map(|k| {
            let flip = n - k;
            let phi = -rate * ((flip * flip + k * k) as f64) + flip as f64 * PI - freq_const;
            h0.get(flip).conj() * Complex64::from_polar(1.0, phi)
        })
        .collect();
    Signal::new(samples, 0, t)
}

/// [`derive_highpass`] with the spectral weight e^{j(2l+1)w} chosen by `l`
/// instead of the default l0 = -(N+1)/2 embedded in phi. Shifting l moves
/// the support by 2(l0 - l) via the chirped delay, leaving paraunitarity
/// untouched.
pub fn derive_highpass_with_l(h0: &Signal, params: &LctParams, l: i64) -> Result<Signal> {
    let order = require_causal_odd(h0)? as i64;
    let base = derive_highpass(h0, params)?;
    let l0 = -(order + 1) / 2;
    Ok(crate::ops::delay_pow(&base, 2 * (l0 - l), params))
}

/// Synthesis filter for an analysis filter supported on 0..=N:
/// g(k) = conj(h(N-k)) e^{-j (a T^2 / 2b)[(N-k)^2 + k^2]}.
/// When a = 0 this is the classical time-reversed conjugate.
pub fn derive_synthesis(h: &Signal, params: &LctParams) -> Result<Signal> {
    let order = require_causal_odd(h)?;
    let n = order as i64;
    let rate = params.chirp_rate(h.period());
    let samples = (0..=n)
        .map(|k| {
            let flip = n - k;
            let phi = -rate * ((flip * flip + k * k) as f64);
            h.get(flip).conj() * Complex64::from_polar(1.0, phi)
        })
        .collect();
    Signal::new(samples, 0, h.period())
}

/// Deviation of h from LCT-domain power symmetry in the unit-target
/// convention: max over the grid of |2 pi b (|H(w)|^2 + |H(w+pi)|^2) - 1|.
///
/// Exact spectral factors of a half-band (energy 1/2) score zero; a
/// unit-energy filter scores 1 rather than its true deviation, so scale the
/// input accordingly (see [`FilterBank::power_symmetry_error`]).
pub fn power_symmetry_error(h: &Signal, params: &LctParams, grid: &FrequencyGrid) -> f64 {
    let scale = 2.0 * PI * params.b();
    grid.points()
        .map(|omega| {
            let lo = dtlct_at(h, params, omega).norm_sqr();
            let hi = dtlct_at(h, params, omega + PI).norm_sqr();
            (scale * (lo + hi) - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

/// Tolerances attached to a [`VerificationReport`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    pub power_symmetry: f64,
    pub paraunitarity: f64,
    pub reconstruction: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            power_symmetry: 1e-7,
            paraunitarity: 1e-7,
            reconstruction: 1e-7,
        }
    }
}

/// Maximum deviations measured for a bank, with the tolerances they were
/// judged against.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_ps_error: f64,
    pub max_pu_error: f64,
    pub max_pr_error: f64,
    /// Reconstruction error ignoring phase: max | |xhat| - |x(n-N)| |.
    pub max_pr_magnitude_error: f64,
    pub n_grid: usize,
    pub seed: Option<u64>,
    pub tolerances: Tolerances,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.max_ps_error <= self.tolerances.power_symmetry
            && self.max_pu_error <= self.tolerances.paraunitarity
            && self.max_pr_error <= self.tolerances.reconstruction
    }
}

/// Two-channel filter bank: analysis pair (h0, h1) and synthesis pair
/// (g0, g1), all supported on 0..=N with a shared sample period.
#[derive(Debug, Clone)]
pub struct FilterBank {
    analysis_lowpass: Signal,
    analysis_highpass: Signal,
    synthesis_lowpass: Signal,
    synthesis_highpass: Signal,
    order: usize,
    params: LctParams,
}

impl FilterBank {
    /// Builds the bank from a Fourier-domain power-symmetric prototype
    /// (e.g. a spectral factor from [`crate::design`]). The prototype is
    /// rescaled to unit energy, lifted into the LCT domain, and the other
    /// three filters are derived from the result.
    pub fn from_prototype(prototype: &Signal, params: &LctParams) -> Result<Self> {
        Self::from_lifted_lowpass(&lift_prototype(prototype, params), params)
    }

    /// Builds the bank from an already-lifted low-pass filter. The filter is
    /// rescaled to unit energy first; reconstruction at unit gain needs that.
    pub fn from_lifted_lowpass(h0: &Signal, params: &LctParams) -> Result<Self> {
        let order = require_causal_odd(h0)?;
        let energy = h0.energy();
        if energy == 0.0 {
            return Err(Error::EmptySignal);
        }
        let h0 = h0.scaled(Complex64::new(1.0 / energy.sqrt(), 0.0));
        let h1 = derive_highpass(&h0, params)?;
        let g0 = derive_synthesis(&h0, params)?;
        let g1 = derive_synthesis(&h1, params)?;
        Ok(Self {
            analysis_lowpass: h0,
            analysis_highpass: h1,
            synthesis_lowpass: g0,
            synthesis_highpass: g1,
            order,
            params: *params,
        })
    }

    /// Assembles a bank from four explicit filters without deriving or
    /// rescaling anything. All filters must share the period and the 0..=N
    /// support.
    pub fn from_filters(
        h0: Signal,
        h1: Signal,
        g0: Signal,
        g1: Signal,
        params: &LctParams,
    ) -> Result<Self> {
        let order = require_causal_odd(&h0)?;
        for other in [&h1, &g0, &g1] {
            if other.start_index() != 0 || other.len() != h0.len() {
                return Err(Error::BankMismatch(format!(
                    "filter support {}..{} does not match 0..{}",
                    other.start_index(),
                    other.end_index(),
                    order
                )));
            }
            if other.period() != h0.period() {
                return Err(Error::PeriodMismatch {
                    left: h0.period(),
                    right: other.period(),
                });
            }
        }
        Ok(Self {
            analysis_lowpass: h0,
            analysis_highpass: h1,
            synthesis_lowpass: g0,
            synthesis_highpass: g1,
            order,
            params: *params,
        })
    }

    /// The order-1 bank lifted from the Haar prototype.
    pub fn haar(params: &LctParams, period: f64) -> Result<Self> {
        let proto = Signal::from_real(&[0.5, 0.5], period)?;
        Self::from_prototype(&proto, params)
    }

    pub fn analysis_lowpass(&self) -> &Signal {
        &self.analysis_lowpass
    }

    pub fn analysis_highpass(&self) -> &Signal {
        &self.analysis_highpass
    }

    pub fn synthesis_lowpass(&self) -> &Signal {
        &self.synthesis_lowpass
    }

    pub fn synthesis_highpass(&self) -> &Signal {
        &self.synthesis_highpass
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn params(&self) -> &LctParams {
        &self.params
    }

    pub fn period(&self) -> f64 {
        self.analysis_lowpass.period()
    }

    fn check_grid(&self, grid: &FrequencyGrid) -> Result<()> {
        let required = 4 * (self.order + 1);
        if grid.count() < required {
            return Err(Error::GridTooCoarse {
                count: grid.count(),
                order: self.order,
                required,
            });
        }
        Ok(())
    }

    /// Analysis modulation matrix [[H0(w), H0(w+pi)], [H1(w), H1(w+pi)]].
    pub fn modulation_matrix(&self, omega: f64) -> Mat2 {
        let h0 = &self.analysis_lowpass;
        let h1 = &self.analysis_highpass;
        Mat2([
            [
                dtlct_at(h0, &self.params, omega),
                dtlct_at(h0, &self.params, omega + PI),
            ],
            [
                dtlct_at(h1, &self.params, omega),
                dtlct_at(h1, &self.params, omega + PI),
            ],
        ])
    }

    /// Synthesis modulation matrix [[G0(w), G1(w)], [G0(w+pi), G1(w+pi)]].
    pub fn synthesis_modulation_matrix(&self, omega: f64) -> Mat2 {
        let g0 = &self.synthesis_lowpass;
        let g1 = &self.synthesis_highpass;
        Mat2([
            [
                dtlct_at(g0, &self.params, omega),
                dtlct_at(g1, &self.params, omega),
            ],
            [
                dtlct_at(g0, &self.params, omega + PI),
                dtlct_at(g1, &self.params, omega + PI),
            ],
        ])
    }

    /// Diagonal chirp matrix A(w) = diag(e^{-j d b w^2 / T^2},
    /// e^{-j d b (w+pi)^2 / T^2}) entering the modulation-domain relation.
    /// Entries are unit modulus.
    pub fn phase_matrix(&self, omega: f64) -> Mat2 {
        let t = self.period();
        let db = self.params.d() * self.params.b();
        let entry = |w: f64| Complex64::from_polar(1.0, -db * w * w / (t * t));
        Mat2::diag(entry(omega), entry(omega + PI))
    }

    /// Analysis polyphase matrix: row i holds the transforms of filter i's
    /// polyphase components (sampled at 2T) at `omega`.
    pub fn analysis_polyphase_matrix(&self, omega: f64, kind: PolyphaseKind) -> Mat2 {
        let rows: Vec<[Complex64; 2]> = [&self.analysis_lowpass, &self.analysis_highpass]
            .iter()
            .map(|h| {
                let pair = polyphase_split(h, kind, &self.params);
                [
                    dtlct_at(pair.comp0(), &self.params, omega),
                    dtlct_at(pair.comp1(), &self.params, omega),
                ]
            })
            .collect();
        Mat2([rows[0], rows[1]])
    }

    /// Synthesis polyphase matrix: column i holds the transforms of filter
    /// i's polyphase components at `omega`.
    pub fn synthesis_polyphase_matrix(&self, omega: f64, kind: PolyphaseKind) -> Mat2 {
        let cols: Vec<[Complex64; 2]> = [&self.synthesis_lowpass, &self.synthesis_highpass]
            .iter()
            .map(|g| {
                let pair = polyphase_split(g, kind, &self.params);
                [
                    dtlct_at(pair.comp0(), &self.params, omega),
                    dtlct_at(pair.comp1(), &self.params, omega),
                ]
            })
            .collect();
        Mat2([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
    }

    /// Max over the grid of || pi b H_m(w) H_m(w)^H - I ||_F. Zero for a
    /// paraunitary bank with unit-energy filters. The grid must cover a full
    /// period with at least 4(N+1) points.
    pub fn paraunitary_error(&self, grid: &FrequencyGrid) -> Result<f64> {
        self.check_grid(grid)?;
        let scale = Complex64::new(PI * self.params.b(), 0.0);
        let identity = Mat2::identity();
        Ok(grid
            .points()
            .map(|omega| {
                let hm = self.modulation_matrix(omega);
                hm.mul(&hm.conj_transpose())
                    .scale(scale)
                    .frobenius_diff(&identity)
            })
            .fold(0.0, f64::max))
    }

    /// Power-symmetry deviation of the stored low-pass, measured in the
    /// unit-target convention of [`power_symmetry_error`]. The stored filter
    /// has unit energy, so it is evaluated at half power (h0 / sqrt 2),
    /// which is exactly the half-band-factor scaling the check expects.
    pub fn power_symmetry_error(&self, grid: &FrequencyGrid) -> Result<f64> {
        self.check_grid(grid)?;
        let reference = self
            .analysis_lowpass
            .scaled(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
        Ok(power_symmetry_error(&reference, &self.params, grid))
    }

    /// Signal-side factors B(w), C(w) of the modulation/polyphase relation:
    /// [X(w); X(w+pi)] = B(w) C(w) [X0(2w); X1(2w)] for components of the
    /// given kind at period 2T. The filter-side matrices obey
    /// H_m(w) = H_p(2w) (B C)^T.
    pub fn mod_poly_factors(&self, omega: f64, kind: PolyphaseKind) -> (Mat2, Mat2) {
        let one = Complex64::new(1.0, 0.0);
        let quasi = self
            .params
            .quasi_period_factor(2.0 * omega, 2.0 * self.period());
        let b = Mat2::diag(one, quasi);
        let w = Complex64::from_polar(1.0, kind.spectral_sign() * omega);
        let c = Mat2([[one, w], [one, -w]]);
        (b, c)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;
    use crate::testing::random_signal;

    fn haar_bank() -> FilterBank {
        FilterBank::haar(&LctParams::frft_quarter(), 0.05).unwrap()
    }

    #[test]
    fn lift_is_identity_when_a_is_zero() {
        let params = LctParams::fourier();
        let h = random_signal(40, 8, 0, 1.0);
        let lifted = lift_prototype(&h, &params);
        assert_eq!(lifted, h);
    }

    #[test]
    fn lift_haar_sample_value() {
        // h0(1) = (1/sqrt 2) e^{-j a T^2 / (2b)} = (1/sqrt 2) e^{-j 0.00125}.
        let params = LctParams::frft_quarter();
        let h = Signal::from_real(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2], 0.05).unwrap();
        let lifted = lift_prototype(&h, &params);
        let expect = FRAC_1_SQRT_2 * Complex64::from_polar(1.0, -0.00125);
        assert!((lifted.get(1) - expect).norm() < 1e-15);
        for n in 0..2 {
            assert!((lifted.get(n).norm() - h.get(n).norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn lifted_power_symmetry_matches_fourier_domain() {
        // The lift leaves the power-symmetry deviation unchanged.
        let params = LctParams::frft_quarter();
        let grid = FrequencyGrid::verification();
        let h = random_signal(41, 6, 0, 0.05);
        let lifted = lift_prototype(&h, &params);
        let lct_err = power_symmetry_error(&lifted, &params, &grid);

        let ft_err = grid
            .points()
            .map(|omega| {
                let eval = |w: f64| -> f64 {
                    h.iter()
                        .map(|(n, z)| z * Complex64::from_polar(1.0, -(n as f64) * w))
                        .sum::<Complex64>()
                        .norm_sqr()
                };
                (eval(omega) + eval(omega + PI) - 1.0).abs()
            })
            .fold(0.0, f64::max);
        assert!((lct_err - ft_err).abs() < 1e-12);
    }

    #[test]
    fn power_symmetry_check_examples() {
        let params = LctParams::frft_quarter();
        let grid = FrequencyGrid::verification();

        let half_impulse = Signal::from_real(&[FRAC_1_SQRT_2], 0.05).unwrap();
        assert!(power_symmetry_error(&half_impulse, &params, &grid) < 1e-14);

        let unit_impulse = Signal::from_real(&[1.0, 0.0], 0.05).unwrap();
        assert!((power_symmetry_error(&unit_impulse, &params, &grid) - 1.0).abs() < 1e-12);

        let haar_factor = Signal::from_real(&[0.5, 0.5], 0.05).unwrap();
        let lifted = lift_prototype(&haar_factor, &params);
        assert!(power_symmetry_error(&lifted, &params, &grid) < 1e-12);
    }

    #[test]
    fn highpass_classical_reduction() {
        let params = LctParams::fourier();
        let h0 = random_signal(42, 6, 0, 1.0);
        let h1 = derive_highpass(&h0, &params).unwrap();
        let n = 5i64;
        for k in 0..=n {
            let expect = h0.get(n - k).conj() * if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
            assert!((h1.get(k) - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn highpass_modulus_is_flipped() {
        let params = LctParams::frft_quarter();
        let h0 = random_signal(43, 8, 0, 0.05);
        let h1 = derive_highpass(&h0, &params).unwrap();
        for k in 0..8 {
            assert!((h1.get(k).norm() - h0.get(7 - k).norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn highpass_rejects_even_order() {
        let params = LctParams::frft_quarter();
        let h0 = random_signal(44, 7, 0, 0.05);
        assert!(matches!(
            derive_highpass(&h0, &params),
            Err(Error::EvenOrder { order: 6 })
        ));
    }

    #[test]
    fn synthesis_classical_reduction() {
        let params = LctParams::fourier();
        let h = random_signal(45, 4, 0, 1.0);
        let g = derive_synthesis(&h, &params).unwrap();
        for k in 0..4i64 {
            assert!((g.get(k) - h.get(3 - k).conj()).norm() < 1e-15);
            assert!((g.get(k).norm() - h.get(3 - k).norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn haar_bank_is_paraunitary() {
        let fb = haar_bank();
        let err = fb
            .paraunitary_error(&FrequencyGrid::verification())
            .unwrap();
        assert!(err < 1e-12, "pu error {err}");
    }

    #[test]
    fn haar_bank_power_symmetry() {
        let fb = haar_bank();
        let err = fb
            .power_symmetry_error(&FrequencyGrid::verification())
            .unwrap();
        assert!(err < 1e-12, "ps error {err}");
    }

    #[test]
    fn missing_highpass_breaks_paraunitarity() {
        let fb = haar_bank();
        let zero = Signal::new(vec![Complex64::new(0.0, 0.0); 2], 0, fb.period()).unwrap();
        let broken = FilterBank::from_filters(
            fb.analysis_lowpass().clone(),
            zero.clone(),
            fb.synthesis_lowpass().clone(),
            zero,
            fb.params(),
        )
        .unwrap();
        let err = broken
            .paraunitary_error(&FrequencyGrid::verification())
            .unwrap();
        assert!(err >= 1.0, "rank-deficient bank scored {err}");
    }

    #[test]
    fn lazy_bank_modulation_matrix() {
        // h0 = impulse, h1 = delayed impulse, a = 0: up to the transform
        // prefactor, H_m = [[1, 1], [e^{-jw}, -e^{-jw}]].
        let params = LctParams::fourier();
        let h0 = Signal::from_real(&[1.0, 0.0], 1.0).unwrap();
        let h1 = Signal::from_real(&[0.0, 1.0], 1.0).unwrap();
        let g0 = h0.clone();
        let g1 = h1.clone();
        let fb = FilterBank::from_filters(h0, h1, g0, g1, &params).unwrap();
        let norm = params.normalization();
        for omega in [0.3, 1.2, 4.0] {
            let hm = fb.modulation_matrix(omega);
            let shift = Complex64::from_polar(1.0, -omega);
            let expect = Mat2([
                [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
                [shift, -shift],
            ])
            .scale(norm);
            assert!(hm.max_abs_diff(&expect) < 1e-14);
        }
    }

    #[test]
    fn phase_matrix_is_unit_modulus() {
        let fb = haar_bank();
        for omega in FrequencyGrid::full(32).unwrap().points() {
            let a = fb.phase_matrix(omega);
            assert!((a.at(0, 0).norm() - 1.0).abs() < 1e-15);
            assert!((a.at(1, 1).norm() - 1.0).abs() < 1e-15);
            assert_eq!(a.at(0, 1), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn modulation_from_polyphase() {
        // H_m(w) = H_p(2w) (B(w) C(w))^T for both component types.
        let params = LctParams::frft_quarter();
        let proto = Signal::from_real(
            &crate::design::design_power_symmetric(14, 1.0, 8.0).unwrap(),
            0.05,
        )
        .unwrap();
        let fb = FilterBank::from_prototype(&proto, &params).unwrap();
        for kind in [PolyphaseKind::Type1, PolyphaseKind::Type2] {
            for omega in FrequencyGrid::full(64).unwrap().points() {
                let hm = fb.modulation_matrix(omega);
                let hp = fb.analysis_polyphase_matrix(2.0 * omega, kind);
                let (b, c) = fb.mod_poly_factors(omega, kind);
                let rebuilt = hp.mul(&b.mul(&c).transpose());
                assert!(
                    hm.max_abs_diff(&rebuilt) < 1e-10,
                    "kind {kind:?} omega {omega}"
                );
            }
        }
    }

    #[test]
    fn highpass_mirrors_lowpass_magnitude() {
        // |H1(w)| = |H0(w+pi)| on the whole grid.
        let fb = haar_bank();
        for omega in FrequencyGrid::verification().points() {
            let h1 = dtlct_at(fb.analysis_highpass(), fb.params(), omega).norm();
            let h0 = dtlct_at(fb.analysis_lowpass(), fb.params(), omega + PI).norm();
            assert!((h1 - h0).abs() < 1e-12);
        }
    }

    #[test]
    fn highpass_matches_frequency_form_up_to_constant() {
        // Time-domain h1 realizes H1(w) = c e^{j(db w(w+pi)/T^2 + (2L+1)w)}
        // H0*(w+pi) with 2L+1 = -N and the constant c = -j.
        let fb = haar_bank();
        let params = fb.params();
        let t = fb.period();
        let n = fb.order() as f64;
        let minus_j = Complex64::new(0.0, -1.0);
        for omega in FrequencyGrid::full(64).unwrap().points() {
            let lhs = dtlct_at(fb.analysis_highpass(), params, omega);
            let phase = params.d() * params.b() * omega * (omega + PI) / (t * t) - n * omega;
            let rhs = Complex64::from_polar(1.0, phase)
                * dtlct_at(fb.analysis_lowpass(), params, omega + PI).conj();
            assert!((lhs - minus_j * rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn alternate_l_keeps_magnitudes() {
        let fb = haar_bank();
        let shifted = derive_highpass_with_l(fb.analysis_lowpass(), fb.params(), -3).unwrap();
        // l0 = -1 for N = 1, so l = -3 shifts the support by 2(l0 - l) = 4.
        assert_eq!(shifted.start_index(), 4);
        let default = derive_highpass(fb.analysis_lowpass(), fb.params()).unwrap();
        for (k, z) in default.iter() {
            assert!((shifted.get(k + 4).norm() - z.norm()).abs() < 1e-14);
        }
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let params = LctParams::frft_quarter();
        let proto = Signal::from_real(
            &crate::design::design_power_symmetric(14, 1.0, 8.0).unwrap(),
            0.05,
        )
        .unwrap();
        let fb = FilterBank::from_prototype(&proto, &params).unwrap();
        let coarse = FrequencyGrid::full(16).unwrap();
        assert!(matches!(
            fb.paraunitary_error(&coarse),
            Err(Error::GridTooCoarse { required: 32, .. })
        ));
    }

    #[test]
    fn classical_point_matches_zt_paraunitarity_check() {
        // At (0, 1, -1, 0), T = 1 the check reduces to the z-transform one:
        // pi b |norm|^2 = 1/2, so the deviation of (1/2) Hm_ft Hm_ft^H from I
        // (the classical unit-energy criterion) must match exactly.
        let params = LctParams::fourier();
        let fb = FilterBank::haar(&params, 1.0).unwrap();
        let grid = FrequencyGrid::verification();
        let lib_err = fb.paraunitary_error(&grid).unwrap();

        let dtft = |h: &Signal, w: f64| -> Complex64 {
            h.iter()
                .map(|(n, z)| z * Complex64::from_polar(1.0, -(n as f64) * w))
                .sum()
        };
        let mut classical_err = 0.0f64;
        for omega in grid.points() {
            let m = [
                [
                    dtft(fb.analysis_lowpass(), omega),
                    dtft(fb.analysis_lowpass(), omega + PI),
                ],
                [
                    dtft(fb.analysis_highpass(), omega),
                    dtft(fb.analysis_highpass(), omega + PI),
                ],
            ];
            let mut acc = 0.0;
            for i in 0..2 {
                for j in 0..2 {
                    let gram = 0.5 * (m[i][0] * m[j][0].conj() + m[i][1] * m[j][1].conj());
                    let target = if i == j { 1.0 } else { 0.0 };
                    acc += (gram - target).norm_sqr();
                }
            }
            classical_err = classical_err.max(acc.sqrt());
        }
        assert!(
            (lib_err - classical_err).abs() < 1e-12,
            "lib {lib_err} vs classical {classical_err}"
        );
    }

    #[test]
    fn designed_bank_paraunitarity_tracks_power_symmetry() {
        let params = LctParams::frft_quarter();
        let proto = Signal::from_real(
            &crate::design::design_power_symmetric(14, 1.0, 8.0).unwrap(),
            0.05,
        )
        .unwrap();
        let fb = FilterBank::from_prototype(&proto, &params).unwrap();
        let grid = FrequencyGrid::verification();
        let ps = fb.power_symmetry_error(&grid).unwrap();
        let pu = fb.paraunitary_error(&grid).unwrap();
        assert!(ps < 1e-7, "ps error {ps}");
        assert!(pu <= 10.0 * ps.max(f64::EPSILON), "pu {pu} vs ps {ps}");
    }
}
