//! Plain-text table and parameter files.
//!
//! A table file starts with a header `n=<int> kind=<real|complex|spectrum>`
//! followed by `2^n` lines, line `x` holding the entry for index `x`:
//! one decimal for `real`, `<re> <im>` for `complex` and `spectrum`.
//! Numbers are written in shortest round-trip form, so write-then-parse is
//! bit-exact.

use num_complex::Complex64;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::construct::ParamSeq;
use crate::error::{Error, Result};
use crate::spectrum::{FourierSpectrum, HypercubeFunction, TableLimit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Real,
    Complex,
    Spectrum,
}

impl TableKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Real => "real",
            TableKind::Complex => "complex",
            TableKind::Spectrum => "spectrum",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(TableKind::Real),
            "complex" => Ok(TableKind::Complex),
            "spectrum" => Ok(TableKind::Spectrum),
            other => Err(Error::invalid(format!("unknown table kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TableFile {
    Function {
        kind: TableKind,
        function: HypercubeFunction,
    },
    Spectrum(FourierSpectrum),
}

/// Shortest decimal that parses back to exactly `x`.
pub fn format_f64(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else if x == 0.0 {
        // drop the sign of negative zero
        "0".to_string()
    } else {
        format!("{x}")
    }
}

fn write_rows(out: &mut String, rows: &[Complex64], two_columns: bool) {
    for z in rows {
        if two_columns {
            let _ = writeln!(out, "{} {}", format_f64(z.re), format_f64(z.im));
        } else {
            let _ = writeln!(out, "{}", format_f64(z.re));
        }
    }
}

/// Serializes a function, as `real` when every imaginary part is zero.
pub fn write_function(f: &HypercubeFunction) -> String {
    let kind = if f.is_real() {
        TableKind::Real
    } else {
        TableKind::Complex
    };
    let mut out = format!("n={} kind={}\n", f.n(), kind);
    write_rows(&mut out, f.values(), kind == TableKind::Complex);
    out
}

pub fn write_spectrum(s: &FourierSpectrum) -> String {
    let mut out = format!("n={} kind=spectrum\n", s.n());
    write_rows(&mut out, s.coeffs(), true);
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value `{tok}`")));
    }
    Ok(v)
}

fn parse_header(line: &str) -> Result<(usize, TableKind)> {
    let mut n = None;
    let mut kind = None;
    for field in line.split_whitespace() {
        match field.split_once('=') {
            Some(("n", v)) => {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| parse_err(1, format!("bad dimension `{v}`")))?,
                )
            }
            Some(("kind", v)) => {
                kind = Some(
                    v.parse::<TableKind>()
                        .map_err(|e| parse_err(1, e.to_string()))?,
                )
            }
            _ => return Err(parse_err(1, format!("unexpected header field `{field}`"))),
        }
    }
    match (n, kind) {
        (Some(n), Some(kind)) => Ok((n, kind)),
        _ => Err(parse_err(
            1,
            "header must be `n=<int> kind=<real|complex|spectrum>`",
        )),
    }
}

/// Parses a table file. Line numbers in errors are 1-based and count the header.
pub fn parse_table(text: &str, limit: TableLimit) -> Result<TableFile> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (n, kind) = parse_header(header)?;
    limit.check(n)?;
    let len = 1usize << n;
    let mut rows = Vec::with_capacity(len);
    for (offset, raw) in lines.enumerate() {
        let line = offset + 2;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            if rows.len() == len {
                continue;
            }
            return Err(parse_err(line, "blank line inside the table"));
        }
        if rows.len() == len {
            return Err(parse_err(line, format!("more than 2^{n} = {len} rows")));
        }
        let z = match (kind, toks.as_slice()) {
            (TableKind::Real, [re]) => Complex64::new(parse_number(re, line)?, 0.0),
            (TableKind::Complex | TableKind::Spectrum, [re, im]) => {
                Complex64::new(parse_number(re, line)?, parse_number(im, line)?)
            }
            (TableKind::Spectrum, [re]) => Complex64::new(parse_number(re, line)?, 0.0),
            (TableKind::Real, _) => return Err(parse_err(line, "expected one value")),
            _ => return Err(parse_err(line, "expected `<re> <im>`")),
        };
        rows.push(z);
    }
    if rows.len() != len {
        return Err(parse_err(
            rows.len() + 2,
            format!("expected {len} rows, found {}", rows.len()),
        ));
    }
    Ok(match kind {
        TableKind::Spectrum => TableFile::Spectrum(FourierSpectrum::new(n, rows)?),
        _ => TableFile::Function {
            kind,
            function: HypercubeFunction::new(n, rows)?,
        },
    })
}

/// One `a_i` per line; blank lines and `#` comments are skipped.
pub fn parse_params(text: &str) -> Result<ParamSeq> {
    let mut a = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v = parse_number(line, i + 1)?;
        if !(v > 0.0 && v <= 1.0) {
            return Err(parse_err(i + 1, format!("a = {v} is outside (0, 1]")));
        }
        a.push(v);
    }
    ParamSeq::new(a)
}

pub fn write_params(p: &ParamSeq) -> String {
    p.as_slice().iter().map(|&a| format_f64(a) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const LIM: TableLimit = TableLimit::new(26);

    #[test]
    fn real_file_layout() {
        let f = HypercubeFunction::from_real(1, vec![1.0, -0.5]).unwrap();
        assert_eq!(write_function(&f), "n=1 kind=real\n1\n-0.5\n");
    }

    #[test]
    fn complex_and_spectrum_layout() {
        let f = HypercubeFunction::new(0, vec![Complex64::new(0.25, -1e-9)]).unwrap();
        assert_eq!(write_function(&f), "n=0 kind=complex\n0.25 -1e-9\n");
        let s = FourierSpectrum::new(1, vec![Complex64::new(1.0, 0.0); 2]).unwrap();
        assert_eq!(write_spectrum(&s), "n=1 kind=spectrum\n1 0\n1 0\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "n=1 kind=real\n1.0\nabc\n";
        assert!(matches!(
            parse_table(bad, LIM),
            Err(Error::Parse { line: 3, .. })
        ));
        let short = "n=2 kind=real\n1\n2\n";
        assert!(matches!(
            parse_table(short, LIM),
            Err(Error::Parse { line: 4, .. })
        ));
        let long = "n=0 kind=real\n1\n2\n";
        assert!(matches!(
            parse_table(long, LIM),
            Err(Error::Parse { line: 3, .. })
        ));
        let header = "n=1 kind=weird\n1\n2\n";
        assert!(matches!(
            parse_table(header, LIM),
            Err(Error::Parse { line: 1, .. })
        ));
        let nan = "n=0 kind=complex\n1 NaN\n";
        assert!(matches!(
            parse_table(nan, LIM),
            Err(Error::Parse { line: 2, .. })
        ));
        let cols = "n=0 kind=complex\n1\n";
        assert!(matches!(
            parse_table(cols, LIM),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_table("", LIM),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn header_over_cap_is_a_resource_error() {
        let text = "n=30 kind=real\n";
        assert!(matches!(
            parse_table(text, LIM),
            Err(Error::ResourceLimit { n: 30, .. })
        ));
    }

    #[test]
    fn params_file() {
        let p = parse_params("# sequence\n0.5\n\n1\n0.25 # tail\n").unwrap();
        assert_eq!(p.as_slice(), &[0.5, 1.0, 0.25]);
        assert!(matches!(
            parse_params("0.5\n1.5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_params(&write_params(&p)).unwrap(), p);
    }

    proptest! {
        #[test]
        fn function_files_round_trip_exactly(
            n in 0usize..6,
            seed in proptest::collection::vec((-1e6f64..1e6, -1e-12f64..1e-12), 64),
            complex in any::<bool>(),
        ) {
            let values: Vec<Complex64> = seed[..1 << n]
                .iter()
                .map(|&(re, im)| Complex64::new(re, if complex { im } else { 0.0 }))
                .collect();
            let f = HypercubeFunction::new(n, values).unwrap();
            let text = write_function(&f);
            match parse_table(&text, LIM).unwrap() {
                TableFile::Function { function, .. } => prop_assert_eq!(function, f),
                other => prop_assert!(false, "unexpected {:?}", other),
            }
        }
    }
}
