//! Plain-text set files.
//!
//! ```text
//! # d=2 n=3
//! -1,0
//! 0,1
//! 1,0
//! ```
//!
//! Points are written in lexicographic order, one per line, with no spaces.
//! Readers accept extra `#` comment lines after the header and blank lines.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::lattice::{write_coords, PointSet};

pub fn write_points<W: Write>(w: &mut W, set: &PointSet) -> Result<()> {
    let mut line = String::new();
    for p in set.iter() {
        line.clear();
        write_coords(&mut line, p).expect("writing to a String cannot fail");
        line.push('\n');
        w.write_all(line.as_bytes())?;
    }
    Ok(())
}

pub fn write_set<W: Write>(w: &mut W, set: &PointSet) -> Result<()> {
    writeln!(w, "# d={} n={}", set.dim(), set.len())?;
    write_points(w, set)
}

pub fn set_to_string(set: &PointSet) -> String {
    let mut buf = Vec::new();
    write_set(&mut buf, set).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("set files are ASCII")
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let rest = line.strip_prefix('#')?.trim();
    let mut d = None;
    let mut n = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("d=") {
            d = v.parse().ok();
        } else if let Some(v) = field.strip_prefix("n=") {
            n = v.parse().ok();
        }
    }
    Some((d?, n?))
}

/// Reads a set file. The header's `d` and `n` are checked against the body.
pub fn read_set<R: BufRead>(r: R) -> Result<PointSet> {
    let mut lines = r.lines().enumerate();
    let (d, n) = loop {
        let Some((i, line)) = lines.next() else {
            return Err(Error::Parse { line: 0, msg: "missing `# d=<d> n=<n>` header".into() });
        };
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        break parse_header(line.trim()).ok_or_else(|| Error::Parse {
            line: i + 1,
            msg: format!("expected `# d=<d> n=<n>` header, found {line:?}"),
        })?;
    };
    if d == 0 {
        return Err(Error::Parse { line: 1, msg: "dimension must be at least 1".into() });
    }
    let mut flat = Vec::with_capacity(n.saturating_mul(d).min(1 << 24));
    let mut count = 0usize;
    for (i, line) in lines {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let before = flat.len();
        for tok in t.split(',') {
            let v = tok.parse::<i64>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: format!("bad coordinate {tok:?}: {e}"),
            })?;
            flat.push(v);
        }
        if flat.len() - before != d {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected {d} coordinates, found {}", flat.len() - before),
            });
        }
        count += 1;
    }
    if count != n {
        return Err(Error::Parse { line: 0, msg: format!("header declares n={n} but body has {count} points") });
    }
    let set = PointSet::from_flat(d, flat);
    if set.len() != n {
        return Err(Error::Parse { line: 0, msg: "duplicate points in set file".into() });
    }
    Ok(set)
}

pub fn read_set_file(path: &std::path::Path) -> Result<PointSet> {
    let f = std::fs::File::open(path)?;
    read_set(std::io::BufReader::new(f))
}
