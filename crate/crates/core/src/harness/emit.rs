//! CSV and JSON output of sweep records and fits.
//!
//! Floats are written with 17 significant digits so that reading a file back
//! reproduces every value bit for bit. Output is byte-deterministic.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use super::sweep::SweepRecord;
use crate::error::{Error, Result};
use crate::numfmt::sci17;

pub const CSV_HEADER: &str = "k,f_numeric,f_asymptotic,abs_err,rel_err,quad_abs_error,n_evals";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?} (csv|json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    File(PathBuf),
}

impl Destination {
    fn describe(&self) -> PathBuf {
        match self {
            Destination::Stdout => PathBuf::from("<stdout>"),
            Destination::File(p) => p.clone(),
        }
    }
}

pub fn write_csv<W: Write>(records: &[SweepRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            sci17(r.k),
            sci17(r.f_numeric),
            sci17(r.f_asymptotic),
            sci17(r.abs_err),
            sci17(r.rel_err),
            sci17(r.quad_abs_error),
            r.n_evals
        )?;
    }
    w.flush()
}

pub fn write_json<T: Serialize + ?Sized, W: Write>(value: &T, mut w: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, value).map_err(io::Error::other)?;
    writeln!(w)?;
    w.flush()
}

fn with_destination<F>(dest: &Destination, body: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let wrap = |source| Error::Io {
        path: dest.describe(),
        source,
    };
    match dest {
        Destination::Stdout => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock).map_err(wrap)
        }
        Destination::File(path) => {
            let file = File::create(path).map_err(wrap)?;
            let mut w = BufWriter::new(file);
            body(&mut w).map_err(wrap)
        }
    }
}

/// Writes sweep records in the requested format.
pub fn emit_records(records: &[SweepRecord], format: Format, dest: &Destination) -> Result<()> {
    with_destination(dest, |w| match format {
        Format::Csv => write_csv(records, w),
        Format::Json => write_json(records, w),
    })
}

/// Writes any serializable summary (a fit, saddle data) as JSON.
pub fn emit_json<T: Serialize + ?Sized>(value: &T, dest: &Destination) -> Result<()> {
    with_destination(dest, |w| write_json(value, w))
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let headers = reader
        .headers()
        .map_err(|e| Error::Parse(e.to_string()))?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if headers != CSV_HEADER {
        return Err(Error::Parse(format!(
            "unexpected CSV header {headers:?}, expected {CSV_HEADER:?}"
        )));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn read_json<R: Read>(r: R) -> Result<Vec<SweepRecord>> {
    serde_json::from_reader(r).map_err(|e| Error::Parse(e.to_string()))
}

/// Loads records from a CSV or JSON file (JSON if the first non-blank byte is `[`).
pub fn load_records(path: &Path) -> Result<Vec<SweepRecord>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if text.trim_start().starts_with('[') {
        read_json(text.as_bytes())
    } else {
        read_csv(text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn sample() -> SweepRecord {
        SweepRecord::new(4.5, -1.2345678901234567e-3, -1.2e-3, 3.0e-15, 1275)
    }

    #[test]
    fn empty_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn one_record_two_lines() {
        let mut buf = Vec::new();
        write_csv(&[sample()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().starts_with("4.5000000000000000e0,"));
    }

    #[test]
    fn rejects_wrong_header() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn write_errors_carry_path() {
        let dest = Destination::File(PathBuf::from("/nonexistent-dir/out.csv"));
        let err = emit_records(&[sample()], Format::Csv, &dest).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
    }

    #[test]
    fn json_is_parseable_and_seventeen_digits() {
        let mut buf = Vec::new();
        write_json(&[sample()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"k\": 4.5000000000000000e0"));
        assert_eq!(read_json(text.as_bytes()).unwrap(), vec![sample()]);
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            any::<f64>().prop_filter("finite", |x| x.is_finite()),
            -1e3f64..1e3,
        ]
    }

    prop_compose! {
        fn record()(k in finite(), a in finite(), b in finite(), c in finite(), d in finite(),
                    e in finite(), n in 0usize..1_000_000) -> SweepRecord {
            SweepRecord { k, f_numeric: a, f_asymptotic: b, abs_err: c, rel_err: d, quad_abs_error: e, n_evals: n }
        }
    }

    fn bits(r: &SweepRecord) -> [u64; 6] {
        [r.k, r.f_numeric, r.f_asymptotic, r.abs_err, r.rel_err, r.quad_abs_error].map(f64::to_bits)
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_bit_exact(rows in prop::collection::vec(record(), 0..20)) {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).unwrap();
            let back = read_csv(buf.as_slice()).unwrap();
            prop_assert_eq!(back.len(), rows.len());
            for (x, y) in rows.iter().zip(&back) {
                prop_assert_eq!(bits(x), bits(y));
                prop_assert_eq!(x.n_evals, y.n_evals);
            }
        }

        #[test]
        fn json_round_trip_is_bit_exact(rows in prop::collection::vec(record(), 0..20)) {
            let mut buf = Vec::new();
            write_json(&rows, &mut buf).unwrap();
            let back = read_json(buf.as_slice()).unwrap();
            for (x, y) in rows.iter().zip(&back) {
                prop_assert_eq!(bits(x), bits(y));
            }
        }
    }
}
