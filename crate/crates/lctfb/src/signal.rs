use num_complex::Complex64;

use crate::error::{Error, Result};

/// Finite complex sequence with an explicit sample period and start index.
///
/// The sequence is implicitly zero outside `[start_index, start_index + len)`.
/// Chirp phases throughout the crate are functions of the absolute index, so
/// delayed or advanced signals keep their meaning without renumbering.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<Complex64>,
    start_index: i64,
    period: f64,
}

impl Signal {
    pub fn new(samples: Vec<Complex64>, start_index: i64, period: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if !period.is_finite() || period <= 0.0 {
            return Err(Error::NonPositivePeriod { period });
        }
        if let Some(offset) = samples
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFiniteSample {
                index: start_index + offset as i64,
            });
        }
        Ok(Self {
            samples,
            start_index,
            period,
        })
    }

    /// Signal supported on `0..values.len()` built from real coefficients.
    pub fn from_real(values: &[f64], period: f64) -> Result<Self> {
        Self::new(
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            0,
            period,
        )
    }

    /// Unit impulse at index `at`.
    pub fn impulse(at: i64, period: f64) -> Self {
        Self::new(vec![Complex64::new(1.0, 0.0)], at, period).expect("impulse is valid")
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start_index(&self) -> i64 {
        self.start_index
    }

    /// Last index carrying a stored sample.
    pub fn end_index(&self) -> i64 {
        self.start_index + self.samples.len() as i64 - 1
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    /// Sample at absolute index `n`; zero outside the stored support.
    pub fn get(&self, n: i64) -> Complex64 {
        if n < self.start_index || n > self.end_index() {
            Complex64::new(0.0, 0.0)
        } else {
            self.samples[(n - self.start_index) as usize]
        }
    }

    /// Iterates `(absolute index, sample)` pairs in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.samples
            .iter()
            .enumerate()
            .map(|(k, &z)| (self.start_index + k as i64, z))
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            samples: self.samples.iter().map(|&z| z * factor).collect(),
            start_index: self.start_index,
            period: self.period,
        }
    }

    /// Pointwise sum over the union of supports. Errors if the periods differ.
    pub fn add(&self, other: &Signal) -> Result<Signal> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch {
                left: self.period,
                right: other.period,
            });
        }
        let start = self.start_index.min(other.start_index);
        let end = self.end_index().max(other.end_index());
        let samples = (start..=end).map(|n| self.get(n) + other.get(n)).collect();
        Signal::new(samples, start, self.period)
    }

    /// Largest |self(n) - other(n)| over the union of supports. Periods are
    /// not compared; callers that care check them first.
    pub fn max_abs_diff(&self, other: &Signal) -> f64 {
        let start = self.start_index.min(other.start_index);
        let end = self.end_index().max(other.end_index());
        (start..=end)
            .map(|n| (self.get(n) - other.get(n)).norm())
            .fold(0.0, f64::max)
    }

    /// Largest | |self(n)| - |other(n)| | over the union of supports.
    pub fn max_magnitude_diff(&self, other: &Signal) -> f64 {
        let start = self.start_index.min(other.start_index);
        let end = self.end_index().max(other.end_index());
        (start..=end)
            .map(|n| (self.get(n).norm() - other.get(n).norm()).abs())
            .fold(0.0, f64::max)
    }

    /// Drops leading and trailing zero samples. An all-zero signal keeps a
    /// single zero sample at its start index.
    pub fn trimmed(&self) -> Signal {
        let is_zero = |z: &Complex64| z.re == 0.0 && z.im == 0.0;
        let first = self.samples.iter().position(|z| !is_zero(z));
        match first {
            None => Signal {
                samples: vec![Complex64::new(0.0, 0.0)],
                start_index: self.start_index,
                period: self.period,
            },
            Some(lo) => {
                let hi = self.samples.iter().rposition(|z| !is_zero(z)).unwrap();
                Signal {
                    samples: self.samples[lo..=hi].to_vec(),
                    start_index: self.start_index + lo as i64,
                    period: self.period,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_empty_and_bad_period() {
        assert!(matches!(
            Signal::new(vec![], 0, 1.0),
            Err(Error::EmptySignal)
        ));
        assert!(matches!(
            Signal::new(vec![c(1.0, 0.0)], 0, 0.0),
            Err(Error::NonPositivePeriod { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        let err = Signal::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)], 3, 1.0);
        assert!(matches!(err, Err(Error::NonFiniteSample { index: 4 })));
    }

    #[test]
    fn zero_extension_outside_support() {
        let s = Signal::new(vec![c(1.0, 0.0), c(2.0, 0.0)], -1, 0.5).unwrap();
        assert_eq!(s.get(-2), c(0.0, 0.0));
        assert_eq!(s.get(-1), c(1.0, 0.0));
        assert_eq!(s.get(0), c(2.0, 0.0));
        assert_eq!(s.get(1), c(0.0, 0.0));
    }

    #[test]
    fn add_aligns_supports() {
        let a = Signal::new(vec![c(1.0, 0.0)], 0, 1.0).unwrap();
        let b = Signal::new(vec![c(2.0, 0.0)], 2, 1.0).unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.start_index(), 0);
        assert_eq!(sum.len(), 3);
        assert_eq!(sum.get(1), c(0.0, 0.0));
        assert_eq!(sum.get(2), c(2.0, 0.0));
    }

    #[test]
    fn add_rejects_period_mismatch() {
        let a = Signal::new(vec![c(1.0, 0.0)], 0, 1.0).unwrap();
        let b = Signal::new(vec![c(2.0, 0.0)], 0, 2.0).unwrap();
        assert!(matches!(a.add(&b), Err(Error::PeriodMismatch { .. })));
    }

    #[test]
    fn trim_keeps_values() {
        let s = Signal::new(vec![c(0.0, 0.0), c(3.0, 0.0), c(0.0, 0.0)], 5, 1.0).unwrap();
        let t = s.trimmed();
        assert_eq!(t.start_index(), 6);
        assert_eq!(t.len(), 1);
        assert_eq!(s.max_abs_diff(&t), 0.0);
    }
}
