//! Extender and coextender files.
//!
//! ```text
//! extender
//! base square.mpx
//! rn: 4 5 6 7 0 1 2 3
//! group cyclic 3
//! xi 0 c
//! xi 2 c^-1
//! ```
//!
//! The `rn:` line is omitted for the canonical pairing. A facet is named by
//! any of its flags and written back with its smallest flag; the voltage of
//! the paired facet is the inverse and need not be given. A coextender file
//! starts with `coextender`, uses `r-1:` for the vertex pairing and labels
//! vertices instead of facets.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extender::{CayleyExtender, Coextender, PreExtender};
use crate::groups::{parse_group_spec, GroupModel};
use crate::maniplex::Premaniplex;
use crate::perm::Perm;

use super::mpx::load_mpx;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtenderKind {
    Extender,
    Coextender,
}

/// The syntax of an extender file, before the base is loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtenderFile {
    pub kind: ExtenderKind,
    pub base: String,
    /// `(line, images)`; `None` for the canonical pairing.
    pub pairing: Option<(usize, Vec<usize>)>,
    pub group: Option<(usize, String)>,
    /// `(line, label flag, element word)`.
    pub xi: Vec<(usize, usize, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

impl ExtenderFile {
    pub fn parse(text: &str) -> Result<ExtenderFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty extender file"))?;
        let kind = match header {
            "extender" => ExtenderKind::Extender,
            "coextender" => ExtenderKind::Coextender,
            other => return Err(parse_err(ln, format!("expected `extender` or `coextender`, found `{other}`"))),
        };
        let pairing_key = match kind {
            ExtenderKind::Extender => "rn:",
            ExtenderKind::Coextender => "r-1:",
        };
        let mut file = ExtenderFile { kind, base: String::new(), pairing: None, group: None, xi: vec![] };
        for (ln, line) in lines {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "base" if file.base.is_empty() && !rest.is_empty() => file.base = rest.to_string(),
                k if k == pairing_key && file.pairing.is_none() => {
                    let images = rest
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| parse_err(ln, format!("bad flag `{t}`"))))
                        .collect::<Result<Vec<usize>>>()?;
                    file.pairing = Some((ln, images));
                }
                "group" if file.group.is_none() && !rest.is_empty() => file.group = Some((ln, rest.to_string())),
                "xi" => {
                    let (label, word) = rest
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| parse_err(ln, "expected `xi <flag> <element>`"))?;
                    let label = label.parse().map_err(|_| parse_err(ln, format!("bad flag label `{label}`")))?;
                    file.xi.push((ln, label, word.trim().to_string()));
                }
                _ => return Err(parse_err(ln, format!("unexpected line `{line}`"))),
            }
        }
        if file.base.is_empty() {
            return Err(parse_err(0, "missing `base` line"));
        }
        if file.group.is_none() && !file.xi.is_empty() {
            return Err(parse_err(file.xi[0].0, "voltages given without a `group` line"));
        }
        Ok(file)
    }

    fn pairing_perm(&self, flags: usize) -> Result<Perm> {
        match &self.pairing {
            None => Ok(Perm::identity(flags)),
            Some((ln, images)) => {
                if images.len() != flags {
                    return Err(parse_err(*ln, format!("{} images for {flags} flags", images.len())));
                }
                Perm::from_images(images.clone()).map_err(|e| parse_err(*ln, e.to_string()))
            }
        }
    }

    /// The pre-extender (for a coextender file, on the dual of the base).
    pub fn pre_extender(&self, base: &Premaniplex) -> Result<PreExtender> {
        let rn = self.pairing_perm(base.num_flags())?;
        let line = self.pairing.as_ref().map_or(0, |p| p.0);
        let k = match self.kind {
            ExtenderKind::Extender => base.clone(),
            ExtenderKind::Coextender => base.dual(),
        };
        PreExtender::new(k, rn).map_err(|e| parse_err(line, e.to_string()))
    }

    fn cayley(&self, base: &Premaniplex) -> Result<CayleyExtender> {
        let pre = self.pre_extender(base)?;
        let (gl, spec) = self.group.as_ref().ok_or_else(|| parse_err(0, "missing `group` line"))?;
        let group = Arc::new(parse_group_spec(spec).map_err(|e| parse_err(*gl, e.to_string()))?);
        let mut given = Vec::with_capacity(self.xi.len());
        for (ln, label, word) in &self.xi {
            if *label >= base.num_flags() {
                return Err(parse_err(*ln, format!("flag {label} out of range")));
            }
            let g = group.parse_element(word).map_err(|e| parse_err(*ln, e.to_string()))?;
            given.push((pre.facet_of(*label), g));
        }
        CayleyExtender::from_partial(pre, group, &given).map_err(|e| parse_err(0, e.to_string()))
    }

    pub fn extender(&self, base: &Premaniplex) -> Result<CayleyExtender> {
        if self.kind != ExtenderKind::Extender {
            return Err(parse_err(1, "expected an extender file"));
        }
        self.cayley(base)
    }

    pub fn coextender(&self, base: &Premaniplex) -> Result<Coextender> {
        if self.kind != ExtenderKind::Coextender {
            return Err(parse_err(1, "expected a coextender file"));
        }
        let dual = self.cayley(base)?;
        Coextender::new(base.clone(), dual.pre().rn().clone(), dual.group().clone(), dual.xi().to_vec())
    }
}

fn write_file(kind: ExtenderKind, base_path: &str, rn: &Perm, group: &GroupModel, xi: &[usize], blocks: &[Vec<usize>], pair: impl Fn(usize) -> usize) -> String {
    let mut out = String::new();
    out.push_str(match kind {
        ExtenderKind::Extender => "extender\n",
        ExtenderKind::Coextender => "coextender\n",
    });
    out.push_str(&format!("base {base_path}\n"));
    if !rn.is_identity() {
        out.push_str(match kind {
            ExtenderKind::Extender => "rn:",
            ExtenderKind::Coextender => "r-1:",
        });
        for x in rn.images() {
            out.push_str(&format!(" {x}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("group {}\n", group.spec()));
    for (f, block) in blocks.iter().enumerate() {
        if pair(f) >= f {
            out.push_str(&format!("xi {} {}\n", block[0], group.render(xi[f])));
        }
    }
    out
}

/// Canonical text of an extender; `base_path` is written verbatim.
pub fn write_extender(ext: &CayleyExtender, base_path: &str) -> String {
    let pre = ext.pre();
    write_file(
        ExtenderKind::Extender,
        base_path,
        pre.rn(),
        ext.group(),
        ext.xi(),
        pre.facets().blocks(),
        |f| pre.pairing().pair(f),
    )
}

pub fn write_coextender(co: &Coextender, base_path: &str) -> String {
    let dual = co.as_dual_extender();
    let pre = dual.pre();
    write_file(
        ExtenderKind::Coextender,
        base_path,
        pre.rn(),
        dual.group(),
        dual.xi(),
        pre.facets().blocks(),
        |f| pre.pairing().pair(f),
    )
}

/// Reads an extender-like file and the MPX base it names, resolved relative
/// to the file's directory.
pub fn load_with_base(path: impl AsRef<Path>) -> Result<(ExtenderFile, Premaniplex)> {
    let path = path.as_ref();
    let file = ExtenderFile::parse(&std::fs::read_to_string(path)?)?;
    let base_path = resolve(path, &file.base);
    let base = load_mpx(&base_path).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", base_path.display()),
        },
        other => other,
    })?;
    Ok((file, base))
}

fn resolve(file: &Path, base: &str) -> PathBuf {
    let p = Path::new(base);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        file.parent().unwrap_or(Path::new(".")).join(p)
    }
}

pub fn load_pre_extender(path: impl AsRef<Path>) -> Result<PreExtender> {
    let (file, base) = load_with_base(path)?;
    file.pre_extender(&base)
}

pub fn load_extender(path: impl AsRef<Path>) -> Result<CayleyExtender> {
    let (file, base) = load_with_base(path)?;
    file.extender(&base)
}

pub fn load_coextender(path: impl AsRef<Path>) -> Result<Coextender> {
    let (file, base) = load_with_base(path)?;
    file.coextender(&base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{polygon, toroid_44, two_hat};

    #[test]
    fn extender_round_trip() {
        for ext in [toroid_44(3, 2).unwrap(), two_hat(&polygon(4).unwrap()).unwrap()] {
            let text = write_extender(&ext, "base.mpx");
            let file = ExtenderFile::parse(&text).unwrap();
            assert_eq!(file.base, "base.mpx");
            let back = file.extender(ext.base()).unwrap();
            assert_eq!(back.xi(), ext.xi());
            assert_eq!(back.pre().rn(), ext.pre().rn());
            assert_eq!(write_extender(&back, "base.mpx"), text);
        }
    }

    #[test]
    fn canonical_files_omit_the_pairing() {
        let ext = two_hat(&polygon(4).unwrap()).unwrap();
        let text = write_extender(&ext, "sq.mpx");
        assert!(!text.contains("rn:"));
        assert_eq!(text.lines().filter(|l| l.starts_with("xi ")).count(), 4);
    }

    #[test]
    fn paired_voltages_are_inferred() {
        let sq = polygon(4).unwrap();
        let text = "extender\nbase sq.mpx\nrn: 4 5 6 7 0 1 2 3\ngroup cyclic 3\nxi 0 c\nxi 2 c\n";
        let ext = ExtenderFile::parse(text).unwrap().extender(&sq).unwrap();
        let f = ext.pre().facet_of(0);
        let g = ext.pre().pairing().pair(f);
        assert_eq!(ext.xi()[g], ext.group().invert(ext.xi()[f]));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let sq = polygon(4).unwrap();
        let bad_word = "extender\nbase sq.mpx\ngroup cyclic 2\nxi 0 y\n";
        let err = ExtenderFile::parse(bad_word).unwrap().extender(&sq).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let bad_rn = "extender\nbase sq.mpx\nrn: 2 1 0 3 4 5 6 7\ngroup cyclic 2\n";
        let err = ExtenderFile::parse(bad_rn).unwrap().pre_extender(&sq).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(matches!(ExtenderFile::parse("extender\nbogus\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn coextender_round_trip() {
        let sq = polygon(4).unwrap();
        let text = "coextender\nbase sq.mpx\ngroup cyclic 2\nxi 0 c\nxi 1 c\nxi 3 c\nxi 5 c\n";
        let file = ExtenderFile::parse(text).unwrap();
        let co = file.coextender(&sq).unwrap();
        assert_eq!(co.coextension().num_flags(), 16);
        let again = write_coextender(&co, "sq.mpx");
        let co2 = ExtenderFile::parse(&again).unwrap().coextender(&sq).unwrap();
        assert_eq!(co2.xi(), co.xi());
        assert_eq!(write_coextender(&co2, "sq.mpx"), again);
    }
}
