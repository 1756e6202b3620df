//! With (a, b, c, d) = (0, 1, -1, 0) and T = 1 every chirp collapses and the
//! bank degenerates to a classical two-channel QMF: plain convolutions,
//! alternating-flip high-pass, time-reversed synthesis, xhat(n) = x(n - N).
//!
//! Run with: cargo run --example classical_qmf

use lctfb::run::{reconstruct, seeded_probe};
use lctfb::{FilterBank, FrequencyGrid, LctParams};

fn main() -> lctfb::Result<()> {
    let params = LctParams::new(0.0, 1.0, -1.0, 0.0)?;
    let bank = FilterBank::haar(&params, 1.0)?;

    println!("Haar bank at the Fourier point:");
    for (name, filter) in [
        ("h0", bank.analysis_lowpass()),
        ("h1", bank.analysis_highpass()),
        ("g0", bank.synthesis_lowpass()),
        ("g1", bank.synthesis_highpass()),
    ] {
        let taps: Vec<String> = filter
            .iter()
            .map(|(_, z)| format!("{:+.6}", z.re))
            .collect();
        println!("  {name} = [{}]", taps.join(", "));
    }

    let x = seeded_probe(31, 64, 1.0)?;
    let xhat = reconstruct(&x, &bank)?;
    let mut worst = 0.0f64;
    for n in 0..(64 + 2) as i64 {
        worst = worst.max((xhat.get(n) - x.get(n - 1)).norm());
    }
    println!("max |xhat(n) - x(n-1)| = {worst:.3e} (plain shift, no chirp)");

    let pu = bank.paraunitary_error(&FrequencyGrid::verification())?;
    println!("paraunitarity error    = {pu:.3e}");
    Ok(())
}
