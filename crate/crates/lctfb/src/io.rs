//! File formats: signal CSV (`n,re,im`), spectrum CSV (`omega,re,im,abs`),
//! filter-bank JSON, verification-report JSON, and the period sidecar.
//!
//! Floats are serialized with 17 significant digits so every f64
//! round-trips exactly, and all writers are deterministic: identical inputs
//! produce byte-identical files. The sample period is not part of the CSV;
//! it travels out of band, either as a CLI flag or in a `.meta.json`
//! sidecar next to the file.

use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bank::{FilterBank, VerificationReport};
use crate::error::{Error, Result};
use crate::params::LctParams;
use crate::signal::Signal;
use crate::transform::Spectrum;

/// 17 significant digits, enough to reconstruct the exact f64.
pub(crate) fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        source,
    }
}

fn parse_err(path: &Path, line: u64, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// serde_json formatter that writes floats with 17 significant digits.
struct FloatFormatter;

impl serde_json::ser::Formatter for FloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FloatFormatter);
    value.serialize(&mut ser).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })?;
    buf.push(b'\n');
    fs::write(path, buf).map_err(|source| io_err(path, source))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| io_err(path, source))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a `n,re,im` CSV into a signal with the given period. Indices must
/// be strictly increasing; gaps are filled with zeros.
pub fn read_signal_csv(path: &Path, period: f64) -> Result<Signal> {
    read_indexed_csv(path, period, "n")
}

/// Reads prototype coefficients from a `k,re,im` CSV (support 0..=N), e.g.
/// a filter taken from a published coefficient table.
pub fn read_prototype_csv(path: &Path, period: f64) -> Result<Signal> {
    let proto = read_indexed_csv(path, period, "k")?;
    if proto.start_index() != 0 {
        return Err(parse_err(
            path,
            2,
            format!(
                "prototype must start at k = 0, found {}",
                proto.start_index()
            ),
        ));
    }
    Ok(proto)
}

fn read_indexed_csv(path: &Path, period: f64, index_name: &str) -> Result<Signal> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;
    {
        let headers = reader.headers().map_err(|e| csv_error(path, e))?;
        let expect = [index_name, "re", "im"];
        if headers.len() != 3 || headers.iter().zip(expect).any(|(h, e)| h != e) {
            return Err(parse_err(
                path,
                1,
                format!("expected header `{index_name},re,im`"),
            ));
        }
    }
    let mut entries: Vec<(i64, Complex64)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != 3 {
            return Err(parse_err(
                path,
                line,
                format!("expected 3 fields, found {}", record.len()),
            ));
        }
        let n: i64 = record[0]
            .parse()
            .map_err(|_| parse_err(path, line, format!("bad index `{}`", &record[0])))?;
        let re: f64 = record[1]
            .parse()
            .map_err(|_| parse_err(path, line, format!("bad real part `{}`", &record[1])))?;
        let im: f64 = record[2]
            .parse()
            .map_err(|_| parse_err(path, line, format!("bad imaginary part `{}`", &record[2])))?;
        if let Some(&(prev, _)) = entries.last() {
            if n <= prev {
                return Err(parse_err(
                    path,
                    line,
                    format!("index {n} does not increase past {prev}"),
                ));
            }
        }
        entries.push((n, Complex64::new(re, im)));
    }
    let (&(first, _), &(last, _)) = match (entries.first(), entries.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(parse_err(path, 1, "no samples")),
    };
    let mut samples = vec![Complex64::new(0.0, 0.0); (last - first + 1) as usize];
    for (n, z) in entries {
        samples[(n - first) as usize] = z;
    }
    Signal::new(samples, first, period)
}

/// Writes a signal as `n,re,im` rows.
pub fn write_signal_csv(path: &Path, signal: &Signal) -> Result<()> {
    write_indexed_csv(path, signal, "n")
}

/// Writes prototype coefficients as `k,re,im` rows.
pub fn write_prototype_csv(path: &Path, prototype: &Signal) -> Result<()> {
    write_indexed_csv(path, prototype, "k")
}

fn write_indexed_csv(path: &Path, signal: &Signal, index_name: &str) -> Result<()> {
    let mut out = format!("{index_name},re,im\n");
    for (n, z) in signal.iter() {
        out.push_str(&format!(
            "{n},{},{}\n",
            format_float(z.re),
            format_float(z.im)
        ));
    }
    fs::write(path, out).map_err(|source| io_err(path, source))
}

/// Writes a spectrum as `omega,re,im,abs` rows.
pub fn write_spectrum_csv(path: &Path, spectrum: &Spectrum) -> Result<()> {
    let mut out = String::from("omega,re,im,abs\n");
    for (k, omega) in spectrum.grid().points().enumerate() {
        let v = spectrum.value(k);
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_float(omega),
            format_float(v.re),
            format_float(v.im),
            format_float(v.norm())
        ));
    }
    fs::write(path, out).map_err(|source| io_err(path, source))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let line = match e.position() {
        Some(p) => p.line(),
        None => 0,
    };
    parse_err(path, line, e.to_string())
}

/// Path of the JSON sidecar carrying a CSV's sample period.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("meta.json")
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    period: f64,
}

/// Records the sample period next to a CSV file.
pub fn write_period_sidecar(csv_path: &Path, period: f64) -> Result<()> {
    write_json(&sidecar_path(csv_path), &Sidecar { period })
}

/// Reads the sample period from a CSV's sidecar, if one exists.
pub fn read_period_sidecar(csv_path: &Path) -> Result<Option<f64>> {
    let path = sidecar_path(csv_path);
    if !path.exists() {
        return Ok(None);
    }
    let sidecar: Sidecar = read_json(&path)?;
    Ok(Some(sidecar.period))
}

#[derive(Serialize, Deserialize, Clone, Copy)]
struct ComplexEntry {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexEntry {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexEntry> for Complex64 {
    fn from(e: ComplexEntry) -> Self {
        Complex64::new(e.re, e.im)
    }
}

/// On-disk filter bank: parameters, period, order, the low-pass, and
/// optionally the derived filters and the report from design time.
#[derive(Serialize, Deserialize)]
struct BankFile {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    #[serde(rename = "T")]
    period: f64,
    #[serde(rename = "N")]
    order: usize,
    h0: Vec<ComplexEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h1: Option<Vec<ComplexEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g0: Option<Vec<ComplexEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g1: Option<Vec<ComplexEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<VerificationReport>,
}

fn entries(signal: &Signal) -> Vec<ComplexEntry> {
    signal.samples().iter().map(|&z| z.into()).collect()
}

/// Writes a bank (all four filters) and an optional report as JSON.
pub fn write_bank(
    path: &Path,
    bank: &FilterBank,
    report: Option<&VerificationReport>,
) -> Result<()> {
    let file = BankFile {
        a: bank.params().a(),
        b: bank.params().b(),
        c: bank.params().c(),
        d: bank.params().d(),
        period: bank.period(),
        order: bank.order(),
        h0: entries(bank.analysis_lowpass()),
        h1: Some(entries(bank.analysis_highpass())),
        g0: Some(entries(bank.synthesis_lowpass())),
        g1: Some(entries(bank.synthesis_highpass())),
        report: report.cloned(),
    };
    write_json(path, &file)
}

/// Loads a bank JSON. The derived filters are recomputed from h0; if the
/// file carries its own h1/g0/g1 they are cross-checked against the
/// recomputed ones and a mismatch is an error.
pub fn read_bank(path: &Path) -> Result<(FilterBank, Option<VerificationReport>)> {
    let file: BankFile = read_json(path)?;
    let params = LctParams::new(file.a, file.b, file.c, file.d)?;
    let h0 = Signal::new(file.h0.iter().map(|&e| e.into()).collect(), 0, file.period)?;
    if h0.len() != file.order + 1 {
        return Err(Error::BankMismatch(format!(
            "h0 has {} taps but N = {}",
            h0.len(),
            file.order
        )));
    }
    let bank = FilterBank::from_lifted_lowpass(&h0, &params)?;
    let checks: [(&str, &Option<Vec<ComplexEntry>>, &Signal); 3] = [
        ("h1", &file.h1, bank.analysis_highpass()),
        ("g0", &file.g0, bank.synthesis_lowpass()),
        ("g1", &file.g1, bank.synthesis_highpass()),
    ];
    for (name, stored, derived) in checks {
        if let Some(stored) = stored {
            if stored.len() != derived.len() {
                return Err(Error::BankMismatch(format!(
                    "{name} has {} taps, expected {}",
                    stored.len(),
                    derived.len()
                )));
            }
            let worst = stored
                .iter()
                .zip(derived.samples())
                .map(|(&s, &d)| (Complex64::from(s) - d).norm())
                .fold(0.0f64, f64::max);
            if worst > 1e-12 {
                return Err(Error::BankMismatch(format!(
                    "{name} deviates from the filter derived from h0 by {worst:.3e}"
                )));
            }
        }
    }
    Ok((bank, file.report))
}

/// Writes a verification report as JSON.
pub fn write_report(path: &Path, report: &VerificationReport) -> Result<()> {
    write_json(path, report)
}
