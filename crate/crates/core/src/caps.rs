//! Enumeration caps.
//!
//! Every exhaustive procedure in the crate refuses to run past a cap instead of
//! silently approximating. Defaults can be overridden with the `FORGE_CAPS`
//! environment variable, e.g. `FORGE_CAPS=group=2000000,subgroups=96`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group produced by permutation closure.
    pub group_order: usize,
    /// Largest group handed to the subgroup enumerator.
    pub subgroup_oracle: usize,
    /// Largest number of reduced words in a universal ball.
    pub ball_words: usize,
    /// Largest maniplex handed to the face-lattice oracle.
    pub face_lattice_flags: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: 1_000_000,
            subgroup_oracle: 48,
            ball_words: 100_000,
            face_lattice_flags: 10_000,
        }
    }
}

impl Caps {
    /// Parses a `key=value,key=value` override list on top of the defaults.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("cap `{item}` has a non-integer value")))?;
            match key.trim() {
                "group" => caps.group_order = value,
                "subgroups" => caps.subgroup_oracle = value,
                "ball" => caps.ball_words = value,
                "lattice" => caps.face_lattice_flags = value,
                other => return Err(Error::InvalidParameter(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    /// Caps from `FORGE_CAPS`, read once per process. A malformed variable
    /// falls back to the defaults.
    pub fn global() -> Caps {
        static CAPS: OnceLock<Caps> = OnceLock::new();
        *CAPS.get_or_init(|| {
            std::env::var("FORGE_CAPS")
                .ok()
                .and_then(|s| Caps::parse(&s).ok())
                .unwrap_or_default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let caps = Caps::parse("group=10, subgroups=96").unwrap();
        assert_eq!(caps.group_order, 10);
        assert_eq!(caps.subgroup_oracle, 96);
        assert_eq!(caps.ball_words, Caps::default().ball_words);
        assert!(Caps::parse("nope=1").is_err());
        assert!(Caps::parse("group").is_err());
    }
}
