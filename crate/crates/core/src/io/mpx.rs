//! The MPX flag-graph format.
//!
//! ```text
//! mpx 1
//! rank 2
//! flags 8
//! adj 0: 1 0 3 2 5 4 7 6
//! adj 1: 7 2 1 4 3 6 5 0
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::maniplex::Premaniplex;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses MPX text. Every color must be an involution; the commutation axiom
/// is left to [`Premaniplex::validate`] so that broken files can still be
/// inspected.
pub fn parse_mpx(text: &str) -> Result<Premaniplex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| lines.next().ok_or_else(|| parse_err(0, format!("unexpected end of input, expected {what}")));

    let (ln, header) = next("header")?;
    if header != "mpx 1" {
        return Err(parse_err(ln, format!("expected `mpx 1`, found `{header}`")));
    }
    let keyword = |ln: usize, line: &str, key: &str| -> Result<usize> {
        let rest = line
            .strip_prefix(key)
            .ok_or_else(|| parse_err(ln, format!("expected `{key} <n>`")))?;
        rest.trim().parse().map_err(|_| parse_err(ln, format!("bad integer in `{line}`")))
    };
    let (ln, l) = next("rank")?;
    let rank = keyword(ln, l, "rank")?;
    if rank == 0 {
        return Err(parse_err(ln, "rank must be at least 1"));
    }
    let (ln, l) = next("flags")?;
    let m = keyword(ln, l, "flags")?;
    if m == 0 {
        return Err(parse_err(ln, "flag count must be at least 1"));
    }

    let mut adjacency = Vec::with_capacity(rank);
    for i in 0..rank {
        let (ln, l) = next("adjacency line")?;
        let (head, body) = l
            .split_once(':')
            .ok_or_else(|| parse_err(ln, format!("expected `adj {i}: ...`")))?;
        if head.split_whitespace().collect::<Vec<_>>() != ["adj", &i.to_string()] {
            return Err(parse_err(ln, format!("expected `adj {i}:`, found `{head}:`")));
        }
        let row = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad flag `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != m {
            return Err(parse_err(ln, format!("{} images for {m} flags", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= m) {
            return Err(parse_err(ln, format!("flag {x} out of range")));
        }
        if let Some(f) = (0..m).find(|&f| row[row[f]] != f) {
            return Err(parse_err(ln, format!("color {i} is not an involution at flag {f}")));
        }
        adjacency.push(row);
    }
    if let Some((ln, l)) = lines.next() {
        return Err(parse_err(ln, format!("trailing content `{l}`")));
    }
    Premaniplex::from_raw(rank, adjacency)
}

pub fn write_mpx(p: &Premaniplex) -> String {
    let mut out = format!("mpx 1\nrank {}\nflags {}\n", p.rank(), p.num_flags());
    for i in 0..p.rank() {
        out.push_str(&format!("adj {i}:"));
        for &x in p.adjacency(i) {
            out.push(' ');
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn load_mpx(path: impl AsRef<Path>) -> Result<Premaniplex> {
    parse_mpx(&std::fs::read_to_string(path)?)
}

pub fn save_mpx(p: &Premaniplex, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_mpx(p))?;
    Ok(())
}
