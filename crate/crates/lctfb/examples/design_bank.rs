//! Designs a power-symmetric prototype, builds the four-filter bank for an
//! FrFT at pi/4, and verifies it.
//!
//! Run with: cargo run --example design_bank

use lctfb::design::{design_halfband, spectral_factor};
use lctfb::run::{seeded_probe, verify_bank};
use lctfb::{FilterBank, FrequencyGrid, LctParams, Signal};

fn main() -> lctfb::Result<()> {
    let params = LctParams::frft_quarter();
    let period = 0.05;

    // Half-band of order 14 -> minimum-phase factor of order 7.
    let halfband = design_halfband(14, 1.0, 8.0)?;
    let prototype = spectral_factor(&halfband)?;
    println!("prototype (order {}):", prototype.len() - 1);
    for (k, c) in prototype.iter().enumerate() {
        println!("  h({k}) = {c:+.10}");
    }

    let bank = FilterBank::from_prototype(&Signal::from_real(&prototype, period)?, &params)?;
    println!("\nbank order N = {}, period T = {}", bank.order(), period);
    println!("analysis low-pass taps (lifted, unit energy):");
    for (k, z) in bank.analysis_lowpass().iter() {
        println!("  h0({k}) = {:+.10} {:+.10}j", z.re, z.im);
    }

    let grid = FrequencyGrid::verification();
    let probe = seeded_probe(1, 256, period)?;
    let report = verify_bank(&probe, &bank, &grid, Default::default(), Some(1))?;
    println!("\npower symmetry error : {:.3e}", report.max_ps_error);
    println!("paraunitarity error  : {:.3e}", report.max_pu_error);
    println!("reconstruction error : {:.3e}", report.max_pr_error);
    println!("verdict: {}", if report.passes() { "pass" } else { "FAIL" });
    Ok(())
}
