//! Columnar point files for reference sets and archives.
//!
//! ```text
//! # problem=multipolygon-d2 n=3 seed=42 d=2 m=6
//! <x_1> ... <x_D> <f_1> ... <f_M>
//! ```
//!
//! One point per line, decision coordinates first, every value written with
//! 17 significant digits so it parses back to the identical float.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::problems::ReferenceSet;
use crate::real::Real;
use crate::solution::Solution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnarHeader {
    pub problem: String,
    pub n: usize,
    pub seed: u64,
    pub dimension: usize,
    pub objectives: usize,
}

impl ColumnarHeader {
    fn render(&self) -> String {
        format!(
            "# problem={} n={} seed={} d={} m={}",
            self.problem, self.n, self.seed, self.dimension, self.objectives
        )
    }

    fn parse(line: &str) -> Result<Self> {
        let err = |message: String| Error::Parse { line: 1, message };
        let body = line
            .strip_prefix('#')
            .ok_or_else(|| err("missing '#' header line".into()))?;
        let mut problem = None;
        let (mut n, mut seed, mut d, mut m) = (None, None, None, None);
        for field in body.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| err(format!("malformed header field '{field}'")))?;
            let int = || value.parse::<u64>().map_err(|e| err(format!("{key}: {e}")));
            match key {
                "problem" => problem = Some(value.to_string()),
                "n" => n = Some(int()? as usize),
                "seed" => seed = Some(int()?),
                "d" => d = Some(int()? as usize),
                "m" => m = Some(int()? as usize),
                _ => {}
            }
        }
        match (problem, n, seed, d, m) {
            (Some(problem), Some(n), Some(seed), Some(dimension), Some(objectives)) => Ok(Self {
                problem,
                n,
                seed,
                dimension,
                objectives,
            }),
            _ => Err(err("header needs problem, n, seed, d and m".into())),
        }
    }
}

fn format_row<T: Real>(x: &[T], f: &[T]) -> String {
    let mut line = String::new();
    for (k, v) in x.iter().chain(f).enumerate() {
        if k > 0 {
            line.push(' ');
        }
        write!(line, "{:.16e}", v).expect("write to String");
    }
    line
}

/// Writes decision/objective pairs under `header`.
pub fn write_points<'a, T: Real, W: Write>(
    mut out: W,
    header: &ColumnarHeader,
    rows: impl IntoIterator<Item = (&'a [T], &'a [T])>,
) -> std::io::Result<()> {
    writeln!(out, "{}", header.render())?;
    for (x, f) in rows {
        writeln!(out, "{}", format_row(x, f))?;
    }
    out.flush()
}

/// Reads a columnar file back into its header and solutions.
pub fn read_points<T: Real, R: BufRead>(input: R) -> Result<(ColumnarHeader, Vec<Solution<T>>)> {
    let mut lines = input.lines();
    let first = lines
        .next()
        .ok_or(Error::Parse { line: 1, message: "empty file".into() })?
        .map_err(|e| Error::Parse { line: 1, message: e.to_string() })?;
    let header = ColumnarHeader::parse(&first)?;
    let width = header.dimension + header.objectives;
    let mut points = Vec::with_capacity(header.n);
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let line = line.map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        if line.trim().is_empty() {
            continue;
        }
        let values = line
            .split_whitespace()
            .map(|tok| tok.parse::<T>())
            .collect::<std::result::Result<Vec<T>, _>>()
            .map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
        if values.len() != width {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {width} columns, found {}", values.len()),
            });
        }
        let f = values[header.dimension..].to_vec();
        let mut x = values;
        x.truncate(header.dimension);
        points.push(Solution::from_parts(x, f));
    }
    if points.len() != header.n {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {} points, file holds {}", header.n, points.len()),
        });
    }
    Ok((header, points))
}

pub fn write_reference_set<T: Real, W: Write>(out: W, set: &ReferenceSet<T>) -> std::io::Result<()> {
    let header = ColumnarHeader {
        problem: set.problem.clone(),
        n: set.len(),
        seed: set.seed,
        dimension: set.decision_points.first().map_or(0, Vec::len),
        objectives: set.objective_points.first().map_or(0, Vec::len),
    };
    let rows = set
        .decision_points
        .iter()
        .zip(&set.objective_points)
        .map(|(x, f)| (x.as_slice(), f.as_slice()));
    write_points(out, &header, rows)
}

pub fn read_reference_set<T: Real, R: BufRead>(input: R) -> Result<ReferenceSet<T>> {
    let (header, points) = read_points(input)?;
    let (decision_points, objective_points) = points.into_iter().map(|s| (s.x, s.f)).unzip();
    Ok(ReferenceSet {
        problem: header.problem,
        seed: header.seed,
        decision_points,
        objective_points,
    })
}

pub fn write_archive<T: Real, W: Write>(
    out: W,
    problem: &str,
    seed: u64,
    archive: &[Solution<T>],
) -> std::io::Result<()> {
    let header = ColumnarHeader {
        problem: problem.to_string(),
        n: archive.len(),
        seed,
        dimension: archive.first().map_or(0, |s| s.x.len()),
        objectives: archive.first().map_or(0, |s| s.f.len()),
    };
    write_points(out, &header, archive.iter().map(|s| (s.x.as_slice(), s.f.as_slice())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn archives_round_trip_bit_exactly(
            rows in prop::collection::vec(
                (prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), 3),
                 prop::collection::vec(-1e300f64..1e300, 2)),
                1..20)
        ) {
            let archive: Vec<Solution<f64>> =
                rows.into_iter().map(|(x, f)| Solution::from_parts(x, f)).collect();
            let mut buf = Vec::new();
            write_archive(&mut buf, "sympart", 17, &archive).unwrap();
            let (header, back) = read_points::<f64, _>(buf.as_slice()).unwrap();
            prop_assert_eq!(header.n, archive.len());
            prop_assert_eq!(header.seed, 17);
            for (a, b) in archive.iter().zip(&back) {
                prop_assert!(a.x.iter().chain(&a.f).zip(b.x.iter().chain(&b.f)).all(|(u, v)| u.to_bits() == v.to_bits()));
            }
        }
    }

    #[test]
    fn header_and_column_errors_are_reported() {
        let bad = "# problem=x n=1 seed=0 d=2 m=2\n1 2 3\n";
        assert!(matches!(read_points::<f64, _>(bad.as_bytes()), Err(Error::Parse { line: 2, .. })));
        let short = "# problem=x n=2 seed=0 d=1 m=1\n1 2\n";
        assert!(read_points::<f64, _>(short.as_bytes()).is_err());
        assert!(read_points::<f64, _>("1 2\n".as_bytes()).is_err());
    }

    #[test]
    fn header_format_is_stable() {
        let mut buf = Vec::new();
        let archive = vec![Solution::from_parts(vec![0.5f64, -1.0], vec![0.25, 1.0])];
        write_archive(&mut buf, "ssuf1", 3, &archive).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# problem=ssuf1 n=1 seed=3 d=2 m=2\n\
             5.0000000000000000e-1 -1.0000000000000000e0 2.5000000000000000e-1 1.0000000000000000e0\n"
        );
    }
}
