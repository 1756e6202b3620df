//! Time-domain operator algebra for LCT multirate processing: chirped
//! convolution and delay, sampling-rate changes, and the two-component
//! polyphase decomposition.
//!
//! Convolution in the LCT domain carries a cross chirp,
//!
//! ```text
//! (h * x)(n) = sum_k h(k) x(n-k) exp(-j (a T^2 / b) k (n-k)),
//! ```
//!
//! and the matching delay operator is D[x](n) = x(n-1) e^{j a T^2 (-2n+1)/(2b)}.
//! Both reduce to their classical forms when a = 0. All chirp phases use
//! absolute sample indices, so shifted signals stay consistent.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::LctParams;
use crate::signal::Signal;

/// Inserts `factor - 1` zeros between consecutive samples. The sample period
/// shrinks to T / factor, and the spectrum obeys Y(w) = X(factor * w).
pub fn upsample(x: &Signal, factor: usize) -> Signal {
    assert!(factor >= 1, "upsampling factor must be at least 1");
    if factor == 1 {
        return x.clone();
    }
    let l = factor as i64;
    let mut samples = vec![Complex64::new(0.0, 0.0); (x.len() - 1) * factor + 1];
    for (k, (_, z)) in x.iter().enumerate() {
        samples[k * factor] = z;
    }
    Signal::new(samples, x.start_index() * l, x.period() / factor as f64)
        .expect("upsampled signal is valid")
}

/// Keeps samples at absolute indices divisible by `factor`: y(n) = x(factor n).
/// The sample period grows to factor * T.
pub fn downsample(x: &Signal, factor: usize) -> Signal {
    assert!(factor >= 1, "downsampling factor must be at least 1");
    if factor == 1 {
        return x.clone();
    }
    let m = factor as i64;
    let first = x.start_index().div_euclid(m) + i64::from(x.start_index().rem_euclid(m) != 0);
    let last = x.end_index().div_euclid(m);
    let period = x.period() * factor as f64;
    if last < first {
        // Support contains no multiple of the factor; the result is zero.
        return Signal::new(vec![Complex64::new(0.0, 0.0)], first, period)
            .expect("zero signal is valid");
    }
    let samples = (first..=last).map(|n| x.get(m * n)).collect();
    Signal::new(samples, first, period).expect("downsampled signal is valid")
}

/// k-fold chirped delay D^k (negative k advances):
/// D^k[x](n) = x(n-k) exp(j a T^2 (k^2 - 2nk) / (2b)).
///
/// Implemented by this closed form rather than by iterating D, so a single
/// call costs O(len) and accumulates no phase error. The transform picks up
/// the factor e^{-jkw}.
pub fn delay_pow(x: &Signal, k: i64, params: &LctParams) -> Signal {
    if k == 0 {
        return x.clone();
    }
    let rate = params.chirp_rate(x.period());
    let start = x.start_index() + k;
    let samples = x
        .iter()
        .map(|(m, z)| {
            let n = m + k; // absolute output index
            z * Complex64::from_polar(1.0, rate * (k * k - 2 * n * k) as f64)
        })
        .collect();
    Signal::new(samples, start, x.period()).expect("delayed signal is valid")
}

/// Chirped convolution of two signals sharing a sample period.
///
/// The spectra satisfy norm * Y(w) = H(w) X(w) e^{-j d b w^2 / (2 T^2)} with
/// norm the transform prefactor.
pub fn lct_convolve(h: &Signal, x: &Signal, params: &LctParams) -> Result<Signal> {
    if h.period() != x.period() {
        return Err(Error::PeriodMismatch {
            left: h.period(),
            right: x.period(),
        });
    }
    let cross = 2.0 * params.chirp_rate(x.period()); // a T^2 / b
    let start = h.start_index() + x.start_index();
    let end = h.end_index() + x.end_index();
    let mut samples = Vec::with_capacity((end - start + 1) as usize);
    for n in start..=end {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, hk) in h.iter() {
            let xk = x.get(n - k);
            if xk.re == 0.0 && xk.im == 0.0 {
                continue;
            }
            acc += hk * xk * Complex64::from_polar(1.0, -cross * (k * (n - k)) as f64);
        }
        samples.push(acc);
    }
    Signal::new(samples, start, x.period())
}

/// Which chirped shift moves the odd-indexed half onto even indices before
/// decimation: type 1 advances it (D^{-1}), type 2 delays it (D).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyphaseKind {
    Type1,
    Type2,
}

impl PolyphaseKind {
    /// The opposite decomposition type. Analysis filters and the signal they
    /// act on use opposite types; synthesis filters share the signal's type.
    pub fn opposite(self) -> Self {
        match self {
            PolyphaseKind::Type1 => PolyphaseKind::Type2,
            PolyphaseKind::Type2 => PolyphaseKind::Type1,
        }
    }

    fn odd_shift(self) -> i64 {
        match self {
            PolyphaseKind::Type1 => -1,
            PolyphaseKind::Type2 => 1,
        }
    }

    /// Sign s of the spectral weight e^{s jw} multiplying the odd component:
    /// X(w) = X0(2w) + e^{s jw} X1(2w). Type 1 gives s = -1, type 2 s = +1,
    /// matching the classical z-domain convention z^{-1} vs z.
    pub fn spectral_sign(self) -> f64 {
        match self {
            PolyphaseKind::Type1 => -1.0,
            PolyphaseKind::Type2 => 1.0,
        }
    }
}

/// Even/odd polyphase components at twice the source period.
#[derive(Debug, Clone)]
pub struct PolyphasePair {
    comp0: Signal,
    comp1: Signal,
    kind: PolyphaseKind,
}

impl PolyphasePair {
    pub fn new(comp0: Signal, comp1: Signal, kind: PolyphaseKind) -> Result<Self> {
        if comp0.period() != comp1.period() {
            return Err(Error::InconsistentPair {
                left: comp0.period(),
                right: comp1.period(),
            });
        }
        Ok(Self { comp0, comp1, kind })
    }

    pub fn comp0(&self) -> &Signal {
        &self.comp0
    }

    pub fn comp1(&self) -> &Signal {
        &self.comp1
    }

    pub fn kind(&self) -> PolyphaseKind {
        self.kind
    }

    pub fn period(&self) -> f64 {
        self.comp0.period()
    }
}

/// Splits `x` into polyphase components: comp0 keeps the even-indexed half,
/// comp1 the odd-indexed half moved onto even indices by a chirped shift and
/// decimated. Both components sample at 2T.
pub fn polyphase_split(x: &Signal, kind: PolyphaseKind, params: &LctParams) -> PolyphasePair {
    let mut even = Vec::with_capacity(x.len());
    let mut odd = Vec::with_capacity(x.len());
    for (n, z) in x.iter() {
        if n.rem_euclid(2) == 0 {
            even.push(z);
            odd.push(Complex64::new(0.0, 0.0));
        } else {
            even.push(Complex64::new(0.0, 0.0));
            odd.push(z);
        }
    }
    let x_even = Signal::new(even, x.start_index(), x.period()).expect("even part is valid");
    let x_odd = Signal::new(odd, x.start_index(), x.period()).expect("odd part is valid");
    let shifted_odd = delay_pow(&x_odd, kind.odd_shift(), params);
    PolyphasePair {
        comp0: downsample(&x_even, 2),
        comp1: downsample(&shifted_odd, 2),
        kind,
    }
}

/// Reassembles a signal from its polyphase components, inverting
/// [`polyphase_split`] up to floating-point rounding in the chirp products.
pub fn polyphase_merge(pair: &PolyphasePair, params: &LctParams) -> Result<Signal> {
    if pair.comp0.period() != pair.comp1.period() {
        return Err(Error::InconsistentPair {
            left: pair.comp0.period(),
            right: pair.comp1.period(),
        });
    }
    let x_even = upsample(&pair.comp0, 2);
    let shifted_odd = upsample(&pair.comp1, 2);
    let x_odd = delay_pow(&shifted_odd, -pair.kind.odd_shift(), params);
    x_even.add(&x_odd)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::testing::random_signal;
    use crate::transform::{dtlct_at, FrequencyGrid};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn upsample_identity_and_zero_insertion() {
        let x = Signal::new(vec![c(1.0, 0.0), c(2.0, 0.0)], 0, 1.0).unwrap();
        assert_eq!(upsample(&x, 1), x);
        let y = upsample(&x, 2);
        assert_eq!(y.period(), 0.5);
        assert_eq!(y.samples(), &[c(1.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn upsample_spectral_contract() {
        let params = LctParams::frft_quarter();
        let x = random_signal(11, 16, -3, 0.05);
        let y = upsample(&x, 2);
        for omega in FrequencyGrid::full(48).unwrap().points() {
            let lhs = dtlct_at(&y, &params, omega);
            let rhs = dtlct_at(&x, &params, 2.0 * omega);
            assert!((lhs - rhs).norm() < 1e-11);
        }
    }

    #[test]
    fn downsample_identity_and_decimation() {
        let x = Signal::new(
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)],
            0,
            1.0,
        )
        .unwrap();
        assert_eq!(downsample(&x, 1), x);
        let y = downsample(&x, 2);
        assert_eq!(y.period(), 2.0);
        assert_eq!(y.samples(), &[c(1.0, 0.0), c(3.0, 0.0)]);
    }

    #[test]
    fn downsample_keeps_absolute_even_indices() {
        let x = Signal::new(vec![c(5.0, 0.0), c(6.0, 0.0), c(7.0, 0.0)], 1, 1.0).unwrap();
        let y = downsample(&x, 2);
        assert_eq!(y.start_index(), 1);
        assert_eq!(y.samples(), &[c(6.0, 0.0)]);
    }

    #[test]
    fn downsample_two_term_spectral_identity() {
        // Y(w) = 1/2 sum_m exp(-j d b 2 pi m (w + m pi) / Ty^2) U(w/2 + m pi)
        let params = LctParams::frft_quarter();
        let x = random_signal(12, 32, 0, 0.05);
        let y = downsample(&x, 2);
        let ty = y.period();
        for omega in FrequencyGrid::full(64).unwrap().points() {
            let lhs = dtlct_at(&y, &params, omega);
            let mut rhs = Complex64::new(0.0, 0.0);
            for m in 0..2 {
                let mf = m as f64;
                let phase =
                    -params.d() * params.b() * 2.0 * PI * mf * (omega + mf * PI) / (ty * ty);
                rhs += Complex64::from_polar(0.5, phase)
                    * dtlct_at(&x, &params, omega / 2.0 + mf * PI);
            }
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }

    #[test]
    fn up_then_down_is_identity() {
        let x = random_signal(13, 17, -4, 0.5);
        let y = downsample(&upsample(&x, 2), 2);
        assert_eq!(x, y);
    }

    #[test]
    fn convolve_with_impulse_is_identity() {
        let params = LctParams::frft_quarter();
        let x = random_signal(14, 12, 2, 0.05);
        let h = Signal::impulse(0, 0.05);
        let y = lct_convolve(&h, &x, &params).unwrap();
        assert!(y.max_abs_diff(&x) == 0.0);
    }

    #[test]
    fn convolve_reduces_to_plain_convolution_when_a_is_zero() {
        let params = LctParams::fourier();
        let h = random_signal(15, 5, 0, 1.0);
        let x = random_signal(16, 9, 0, 1.0);
        let y = lct_convolve(&h, &x, &params).unwrap();
        for n in 0..13i64 {
            let mut plain = c(0.0, 0.0);
            for (k, hk) in h.iter() {
                plain += hk * x.get(n - k);
            }
            assert!((y.get(n) - plain).norm() < 1e-14);
        }
    }

    #[test]
    fn convolve_rejects_period_mismatch() {
        let params = LctParams::fourier();
        let h = random_signal(17, 4, 0, 1.0);
        let x = random_signal(18, 4, 0, 2.0);
        assert!(matches!(
            lct_convolve(&h, &x, &params),
            Err(Error::PeriodMismatch { .. })
        ));
    }

    #[test]
    fn convolution_theorem() {
        // norm * Y(w) = H(w) X(w) e^{-j d b w^2 / (2 T^2)}
        let params = LctParams::frft_quarter();
        let period = 0.05;
        let h = random_signal(19, 8, 0, period);
        let x = random_signal(20, 32, 0, period);
        let y = lct_convolve(&h, &x, &params).unwrap();
        let norm = params.normalization();
        for omega in FrequencyGrid::full(96).unwrap().points() {
            let lhs = norm * dtlct_at(&y, &params, omega);
            let rhs = dtlct_at(&h, &params, omega)
                * dtlct_at(&x, &params, omega)
                * params.freq_chirp(omega, period).conj();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }

    #[test]
    fn convolution_commutes() {
        let params = LctParams::frft_quarter();
        let h = random_signal(21, 7, -2, 0.05);
        let x = random_signal(22, 13, 1, 0.05);
        let hx = lct_convolve(&h, &x, &params).unwrap();
        let xh = lct_convolve(&x, &h, &params).unwrap();
        assert!(hx.max_abs_diff(&xh) < 1e-13);
    }

    #[test]
    fn delay_matches_definition() {
        // D[x](n) = x(n-1) e^{j a T^2 (-2n + 1) / (2b)}
        let params = LctParams::frft_quarter();
        let x = random_signal(23, 10, -3, 0.05);
        let y = delay_pow(&x, 1, &params);
        let rate = params.chirp_rate(0.05);
        for n in -5..12i64 {
            let expect = x.get(n - 1) * Complex64::from_polar(1.0, rate * (-2 * n + 1) as f64);
            assert!((y.get(n) - expect).norm() < 1e-15);
        }
    }

    #[test]
    fn delay_zero_is_identity() {
        let params = LctParams::frft_quarter();
        let x = random_signal(24, 6, 0, 0.05);
        assert_eq!(delay_pow(&x, 0, &params), x);
    }

    #[test]
    fn delay_composition() {
        let params = LctParams::frft_quarter();
        let x = random_signal(25, 20, -7, 0.05);
        let one_shot = delay_pow(&x, 5, &params);
        let two_step = delay_pow(&delay_pow(&x, 2, &params), 3, &params);
        assert!(one_shot.max_abs_diff(&two_step) < 1e-13);

        let back = delay_pow(&delay_pow(&x, 4, &params), -4, &params);
        assert!(back.max_abs_diff(&x) < 1e-13);
    }

    #[test]
    fn delay_spectral_contract() {
        let params = LctParams::frft_quarter();
        let x = random_signal(26, 16, 0, 0.05);
        let y = delay_pow(&x, 3, &params);
        for omega in FrequencyGrid::full(64).unwrap().points() {
            let lhs = dtlct_at(&y, &params, omega);
            let rhs = Complex64::from_polar(1.0, -3.0 * omega) * dtlct_at(&x, &params, omega);
            assert!((lhs - rhs).norm() < 1e-11);
        }
    }

    #[test]
    fn delay_distributes_over_convolution() {
        // D^l[x] * D^k[h] = D^{l+k}[x * h]
        let params = LctParams::frft_quarter();
        let h = random_signal(27, 6, 0, 0.05);
        let x = random_signal(28, 10, 0, 0.05);
        let lhs = lct_convolve(
            &delay_pow(&x, 2, &params),
            &delay_pow(&h, -3, &params),
            &params,
        )
        .unwrap();
        let rhs = delay_pow(&lct_convolve(&x, &h, &params).unwrap(), -1, &params);
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn split_even_support_gives_zero_odd_component() {
        let params = LctParams::frft_quarter();
        let x = upsample(&random_signal(29, 8, 0, 0.1), 2);
        let pair = polyphase_split(&x, PolyphaseKind::Type1, &params);
        assert_eq!(pair.comp1().trimmed().max_abs(), 0.0);
        assert_eq!(pair.comp0().period(), 2.0 * x.period());
    }

    #[test]
    fn classical_components_when_a_is_zero() {
        let params = LctParams::fourier();
        let x = random_signal(30, 11, 0, 1.0);
        let t1 = polyphase_split(&x, PolyphaseKind::Type1, &params);
        for (n, z) in t1.comp1().iter() {
            assert!((z - x.get(2 * n + 1)).norm() < 1e-15);
        }
        let t2 = polyphase_split(&x, PolyphaseKind::Type2, &params);
        for (n, z) in t2.comp1().iter() {
            assert!((z - x.get(2 * n - 1)).norm() < 1e-15);
        }
        for (n, z) in t1.comp0().iter() {
            assert!((z - x.get(2 * n)).norm() < 1e-15);
        }
    }

    #[test]
    fn polyphase_spectral_identity() {
        // X(w) = X0(2w) + e^{s jw} X1(2w), s = -1 for type 1, +1 for type 2.
        let params = LctParams::frft_quarter();
        let x = random_signal(31, 24, 0, 0.05);
        for kind in [PolyphaseKind::Type1, PolyphaseKind::Type2] {
            let pair = polyphase_split(&x, kind, &params);
            for omega in FrequencyGrid::full(64).unwrap().points() {
                let direct = dtlct_at(&x, &params, omega);
                let rebuilt = dtlct_at(pair.comp0(), &params, 2.0 * omega)
                    + Complex64::from_polar(1.0, kind.spectral_sign() * omega)
                        * dtlct_at(pair.comp1(), &params, 2.0 * omega);
                assert!((direct - rebuilt).norm() < 1e-10, "kind {kind:?}");
            }
        }
    }

    #[test]
    fn split_merge_round_trip() {
        let params = LctParams::frft_quarter();
        let x = random_signal(32, 23, -5, 0.05);
        for kind in [PolyphaseKind::Type1, PolyphaseKind::Type2] {
            let merged = polyphase_merge(&polyphase_split(&x, kind, &params), &params).unwrap();
            assert!(merged.max_abs_diff(&x) < 1e-15);
        }
    }

    #[test]
    fn merge_then_split_round_trip() {
        let params = LctParams::frft_quarter();
        let pair = PolyphasePair::new(
            random_signal(33, 9, 0, 0.1),
            random_signal(34, 9, 0, 0.1),
            PolyphaseKind::Type2,
        )
        .unwrap();
        let merged = polyphase_merge(&pair, &params).unwrap();
        let again = polyphase_split(&merged, PolyphaseKind::Type2, &params);
        assert!(again.comp0().max_abs_diff(pair.comp0()) < 1e-15);
        assert!(again.comp1().max_abs_diff(pair.comp1()) < 1e-15);
    }

    #[test]
    fn pair_rejects_period_mismatch() {
        let a = random_signal(35, 4, 0, 0.1);
        let b = random_signal(36, 4, 0, 0.2);
        assert!(matches!(
            PolyphasePair::new(a, b, PolyphaseKind::Type1),
            Err(Error::InconsistentPair { .. })
        ));
    }
}
