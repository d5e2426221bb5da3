//! Point-set text files and order-type database files.
//!
//! Text format: optional `#` comment lines, then a line holding `n`, then
//! `n` lines `x y` (base-10 integers of any length, one space, LF).

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use kholes_core::ordertype::{decode_record, encode_record, record_size, KNOWN_ORDER_TYPE_COUNTS};
use kholes_core::{Error as CoreError, Point, PointSet};
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type IoResult<T> = std::result::Result<T, IoError>;

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

/// Reads a point set. Sets with collinear triples come back with
/// `collinear_allowed` set; duplicates are rejected.
pub fn read_points(r: impl BufRead) -> IoResult<PointSet> {
    let mut n: Option<usize> = None;
    let mut pts = Vec::new();
    let mut last = 0;
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        last = lineno;
        let t = line.trim_end_matches('\r');
        if t.starts_with('#') || (n.is_none() && t.trim().is_empty()) {
            continue;
        }
        match n {
            None => n = Some(t.trim().parse().map_err(|_| parse_err(lineno, format!("bad point count {t:?}")))?),
            Some(n) if pts.len() == n => {
                if !t.trim().is_empty() {
                    return Err(parse_err(lineno, format!("more than {n} points")));
                }
            }
            Some(_) => {
                let mut it = t.split_whitespace();
                let mut coord = |what| -> IoResult<BigInt> {
                    let tok = it.next().ok_or_else(|| parse_err(lineno, format!("missing {what} coordinate")))?;
                    tok.parse().map_err(|_| parse_err(lineno, format!("bad integer {tok:?}")))
                };
                let (x, y) = (coord("x")?, coord("y")?);
                if it.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens"));
                }
                pts.push(Point::new(x, y));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(last, "missing point count"))?;
    if pts.len() != n {
        return Err(parse_err(last, format!("expected {n} points, found {}", pts.len())));
    }
    match PointSet::new(pts.clone()) {
        Ok(s) => Ok(s),
        Err(CoreError::Collinear(..)) => Ok(PointSet::with_collinear(pts)?),
        Err(e) => Err(e.into()),
    }
}

pub fn read_points_file(path: &Path) -> IoResult<PointSet> {
    read_points(BufReader::new(File::open(path)?))
}

pub fn write_points(mut w: impl Write, s: &PointSet, comment: Option<&str>) -> io::Result<()> {
    if let Some(c) = comment {
        for l in c.lines() {
            writeln!(w, "# {l}")?;
        }
    }
    writeln!(w, "{}", s.len())?;
    for p in s.points() {
        writeln!(w, "{} {}", p.x, p.y)?;
    }
    Ok(())
}

pub fn format_points(s: &PointSet, comment: Option<&str>) -> String {
    let mut out = Vec::new();
    write_points(&mut out, s, comment).expect("writing to memory");
    String::from_utf8(out).expect("ascii output")
}

/// Streaming reader over an order-type database of `n`-point records.
pub struct OrderTypeDb<R> {
    reader: R,
    n: usize,
    records: u64,
    next: u64,
    buf: Vec<u8>,
}

impl OrderTypeDb<BufReader<File>> {
    /// Opens a database file. The length must be a whole number of records
    /// and, unless `check_count` is off, match the known order-type count.
    pub fn open(path: &Path, n: usize, check_count: bool) -> IoResult<Self> {
        let len = std::fs::metadata(path)?.len();
        let db = Self::new(BufReader::new(File::open(path)?), len, n)?;
        if check_count {
            db.check_count()?;
        }
        Ok(db)
    }
}

impl<R: Read> OrderTypeDb<R> {
    /// A reader over `len` bytes of records.
    pub fn new(reader: R, len: u64, n: usize) -> IoResult<Self> {
        if !(3..=10).contains(&n) {
            return Err(CoreError::OutOfRange(format!("database records need 3 <= n <= 10, got {n}")).into());
        }
        let rs = record_size(n) as u64;
        if !len.is_multiple_of(rs) {
            return Err(CoreError::Format {
                offset: len - len % rs,
                msg: format!("file length {len} is not a multiple of the record size {rs}"),
            }
            .into());
        }
        Ok(OrderTypeDb { reader, n, records: len / rs, next: 0, buf: vec![0; rs as usize] })
    }

    pub fn records(&self) -> u64 {
        self.records
    }

    /// Record count against the known number of order types.
    pub fn check_count(&self) -> IoResult<()> {
        let known = KNOWN_ORDER_TYPE_COUNTS[self.n];
        if self.records != known {
            return Err(CoreError::Format {
                offset: 0,
                msg: format!("{} records for n = {}, but there are {known} order types", self.records, self.n),
            }
            .into());
        }
        Ok(())
    }
}

impl<R: Read> Iterator for OrderTypeDb<R> {
    type Item = IoResult<PointSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.records {
            return None;
        }
        let index = self.next;
        self.next += 1;
        if let Err(e) = self.reader.read_exact(&mut self.buf) {
            self.next = self.records;
            return Some(Err(if e.kind() == io::ErrorKind::UnexpectedEof {
                CoreError::Format { offset: index * self.buf.len() as u64, msg: format!("record {index} truncated") }.into()
            } else {
                e.into()
            }));
        }
        Some(decode_record(&self.buf, self.n, index).map_err(Into::into))
    }
}

pub fn write_order_type_db<'a>(mut w: impl Write, sets: impl IntoIterator<Item = &'a PointSet>) -> IoResult<()> {
    for s in sets {
        w.write_all(&encode_record(s)?)?;
    }
    Ok(())
}
