//! Evaluates the transform of a chirped multitone on a dense grid and writes
//! the signal and spectrum CSVs that the CLI would produce.
//!
//! Run with: cargo run --example spectrum_export

use std::f64::consts::PI;

use lctfb::io::{write_period_sidecar, write_signal_csv, write_spectrum_csv};
use lctfb::run::generate_multitone;
use lctfb::{dtlct, FrequencyGrid, LctParams};

fn main() -> lctfb::Result<()> {
    let params = LctParams::frft_quarter();
    let period = 0.05;
    let peaks = [30.0 * PI / 512.0, 100.0 * PI / 512.0];
    let x = generate_multitone(&peaks, 256, &params, period)?;

    let grid = FrequencyGrid::full(1024)?;
    let spectrum = dtlct(&x, &params, &grid);
    println!(
        "dominant bins: {:?} (grid step {:.5} rad)",
        spectrum.dominant_peaks(2, 8),
        grid.step()
    );

    let dir = std::env::temp_dir().join("lctfb-spectrum-export");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let signal_path = dir.join("multitone.csv");
    let spectrum_path = dir.join("multitone-spectrum.csv");
    write_signal_csv(&signal_path, &x)?;
    write_period_sidecar(&signal_path, period)?;
    write_spectrum_csv(&spectrum_path, &spectrum)?;
    println!("wrote {}", signal_path.display());
    println!("wrote {}", spectrum_path.display());
    Ok(())
}
