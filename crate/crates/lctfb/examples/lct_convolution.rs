//! The chirped convolution and delay operators and their spectral contracts:
//! norm Y(w) = H(w) X(w) e^{-j d b w^2 / (2T^2)} and D^k -> e^{-jkw}.
//!
//! Run with: cargo run --example lct_convolution

use num_complex::Complex64;

use lctfb::ops::{delay_pow, lct_convolve};
use lctfb::run::seeded_probe;
use lctfb::{dtlct_at, FrequencyGrid, LctParams};

fn main() -> lctfb::Result<()> {
    let params = LctParams::frft_quarter();
    let period = 0.05;
    let h = seeded_probe(11, 8, period)?;
    let x = seeded_probe(12, 32, period)?;

    let y = lct_convolve(&h, &x, &params)?;
    println!(
        "convolved supports {}..{} and {}..{} into {}..{}",
        h.start_index(),
        h.end_index(),
        x.start_index(),
        x.end_index(),
        y.start_index(),
        y.end_index()
    );

    let norm = params.normalization();
    let mut worst = 0.0f64;
    for omega in FrequencyGrid::full(256)?.points() {
        let lhs = norm * dtlct_at(&y, &params, omega);
        let rhs = dtlct_at(&h, &params, omega)
            * dtlct_at(&x, &params, omega)
            * params.freq_chirp(omega, period).conj();
        worst = worst.max((lhs - rhs).norm());
    }
    println!("convolution theorem residual over 256 frequencies: {worst:.3e}");

    let shifted = delay_pow(&x, 3, &params);
    let mut worst = 0.0f64;
    for omega in FrequencyGrid::full(256)?.points() {
        let lhs = dtlct_at(&shifted, &params, omega);
        let rhs = Complex64::from_polar(1.0, -3.0 * omega) * dtlct_at(&x, &params, omega);
        worst = worst.max((lhs - rhs).norm());
    }
    println!("delay operator spectral residual (k = 3)          : {worst:.3e}");

    let round_trip = delay_pow(&delay_pow(&x, 5, &params), -5, &params);
    println!(
        "D^-5 D^5 round-trip error                          : {:.3e}",
        round_trip.max_abs_diff(&x)
    );
    Ok(())
}
