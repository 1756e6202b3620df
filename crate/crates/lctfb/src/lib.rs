//! Two-channel paraunitary filter banks in the discrete-time linear
//! canonical transform (DTLCT) domain.
//!
//! The LCT generalizes the Fourier transform to a three-parameter family of
//! transforms indexed by a unimodular matrix (a, b, c, d). Multirate
//! processing survives the generalization once convolution and delay pick up
//! quadratic chirp phases; this crate provides that operator algebra, the
//! transform itself, filter-bank construction from a single power-symmetric
//! prototype, execution of the analysis/synthesis channels, and numerical
//! verification of perfect reconstruction and paraunitarity.
//!
//! Start with the runnable examples (`cargo run --example design_bank`,
//! `cargo run --example subband_decomposition`, ...) or the `lctfb` binary,
//! a thin CLI over the same entry points.
//!
//! Normalization convention: the transform prefactor sqrt(1/(j 2 pi b)) is
//! taken on the principal branch, (1/sqrt(2 pi b)) e^{-j pi/4}. Product
//! identities (convolution theorem, polyphase and modulation relations)
//! carry explicit powers of that constant; the verification routines state
//! which power they use.

pub mod bank;
pub mod cli;
pub mod design;
pub mod error;
pub mod io;
pub mod ops;
pub mod params;
pub mod run;
pub mod signal;
pub mod transform;

pub use bank::FilterBank;
pub use error::{Error, Result};
pub use params::LctParams;
pub use signal::Signal;
pub use transform::{dtlct, dtlct_at, FrequencyGrid, Spectrum};
