//! Three routes through the same bank: direct channel convolutions, the
//! polyphase component path, and the modulation-domain prediction.
//!
//! Run with: cargo run --example polyphase_paths

use lctfb::run::{polyphase_run, predict_output_spectrum, reconstruct, seeded_probe};
use lctfb::{dtlct_at, FilterBank, FrequencyGrid, LctParams};

fn main() -> lctfb::Result<()> {
    let params = LctParams::frft_quarter();
    let bank = FilterBank::haar(&params, 0.05)?;
    let x = seeded_probe(21, 96, bank.period())?;

    let direct = reconstruct(&x, &bank)?;
    let poly = polyphase_run(&x, &bank)?;
    println!(
        "time domain: |direct - polyphase| = {:.3e}",
        direct.max_abs_diff(&poly)
    );

    let mut worst = 0.0f64;
    for omega in FrequencyGrid::verification().points() {
        let spectral = dtlct_at(&direct, bank.params(), omega);
        let predicted = predict_output_spectrum(&x, &bank, omega);
        worst = worst.max((spectral - predicted).norm());
    }
    println!("spectrum:    |direct - modulation prediction| = {worst:.3e}");
    println!("all three paths agree on the reconstruction");
    Ok(())
}
