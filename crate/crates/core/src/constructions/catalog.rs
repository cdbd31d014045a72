use serde::Serialize;

use crate::error::{Error, Result};
use crate::extender::CayleyExtender;
use crate::maniplex::Premaniplex;

use super::extensions::{color_coded, ditope, flat_extension, toroid_cubic, two_hat, two_hat_s_minus1};
use super::seeds::{cube, cube_flags, cuboctahedron, polygon, simplex, square_pyramid};

/// Looks up a seed by name: `square`, `triangle`, `hexagon`, `polygon<k>`,
/// `cube<n>`, `simplex<n>`, `pyramid`, `cuboctahedron`.
pub fn seed(name: &str) -> Result<Premaniplex> {
    let numbered = |prefix: &str| -> Option<Result<usize>> {
        name.strip_prefix(prefix).map(|rest| {
            rest.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad seed size in `{name}`")))
        })
    };
    match name {
        "square" => polygon(4),
        "triangle" => polygon(3),
        "hexagon" => polygon(6),
        "pyramid" => Ok(square_pyramid()),
        "cuboctahedron" => Ok(cuboctahedron()),
        _ => {
            if let Some(k) = numbered("polygon") {
                polygon(k?)
            } else if let Some(n) = numbered("cube") {
                cube(n?)
            } else if let Some(n) = numbered("simplex") {
                simplex(n?)
            } else {
                Err(Error::InvalidParameter(format!("unknown seed `{name}`")))
            }
        }
    }
}

/// A named extension with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Ditope { seed: String },
    ColorCoded { seed: String, coloring: Vec<usize> },
    TwoHat { seed: String },
    TwoHatSMinus1 { seed: String, s: usize },
    Flat { seed: String, two_m: usize },
    Toroid { periods: Vec<usize> },
}

impl Construction {
    pub fn build(&self) -> Result<CayleyExtender> {
        match self {
            Construction::Ditope { seed: s } => ditope(&seed(s)?),
            Construction::ColorCoded { seed: s, coloring } => color_coded(&seed(s)?, coloring),
            Construction::TwoHat { seed: s } => two_hat(&seed(s)?),
            Construction::TwoHatSMinus1 { seed: s, s: order } => two_hat_s_minus1(&seed(s)?, *order),
            Construction::Flat { seed: s, two_m } => flat_extension(&seed(s)?, *two_m),
            Construction::Toroid { periods } => toroid_cubic(periods),
        }
    }

    /// Parses the CLI form: `kind` plus positional parameters, with the seed
    /// given separately for constructions that need one.
    pub fn parse(kind: &str, seed: Option<&str>, params: &[usize]) -> Result<Construction> {
        let need_seed = || {
            seed.map(str::to_string)
                .ok_or_else(|| Error::InvalidParameter(format!("`{kind}` needs a seed")))
        };
        let one = |what: &str| match params {
            [x] => Ok(*x),
            _ => Err(Error::InvalidParameter(format!("`{kind}` takes one parameter ({what})"))),
        };
        Ok(match kind {
            "ditope" => Construction::Ditope { seed: need_seed()? },
            "color-coded" => Construction::ColorCoded { seed: need_seed()?, coloring: params.to_vec() },
            "two-hat" => Construction::TwoHat { seed: need_seed()? },
            "two-hat-s" => Construction::TwoHatSMinus1 { seed: need_seed()?, s: one("s")? },
            "flat" => Construction::Flat { seed: need_seed()?, two_m: one("2m")? },
            "toroid44" => match params {
                [a, b] => Construction::Toroid { periods: vec![*a, *b] },
                _ => return Err(Error::InvalidParameter("`toroid44` takes two periods".into())),
            },
            "toroid" => Construction::Toroid { periods: params.to_vec() },
            other => return Err(Error::InvalidParameter(format!("unknown construction `{other}`"))),
        })
    }
}

/// A catalog extension with the invariants it is expected to satisfy.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    pub expected_flags: usize,
    pub polytopal: bool,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<CayleyExtender> {
        self.construction.build()
    }
}

/// Coloring of the cube's facets by the axis they are orthogonal to, with
/// axes `>= classes - 1` merged into the last class.
fn cube_axis_coloring(n: usize, classes: usize) -> Vec<usize> {
    let k = cube(n).expect("cube");
    let flags = cube_flags(n);
    k.facets()
        .blocks()
        .iter()
        .map(|b| flags[b[0]][n - 1].0.min(classes - 1))
        .collect()
}

/// The finite extensions exercised by the test and acceptance suites.
pub fn catalog() -> Vec<CatalogEntry> {
    let seed_s = |s: &str| s.to_string();
    let entry = |name: &str, construction: Construction, expected_flags: usize| CatalogEntry {
        name: name.to_string(),
        construction,
        expected_flags,
        polytopal: true,
    };
    vec![
        entry("ditope-square", Construction::Ditope { seed: seed_s("square") }, 16),
        entry("ditope-cube3", Construction::Ditope { seed: seed_s("cube3") }, 96),
        entry("ditope-pyramid", Construction::Ditope { seed: seed_s("pyramid") }, 64),
        entry(
            "color-coded-square-2",
            Construction::ColorCoded { seed: seed_s("square"), coloring: vec![0, 1, 0, 1] },
            32,
        ),
        entry(
            "color-coded-cube3-2",
            Construction::ColorCoded { seed: seed_s("cube3"), coloring: cube_axis_coloring(3, 2) },
            192,
        ),
        entry(
            "color-coded-cube3-3",
            Construction::ColorCoded { seed: seed_s("cube3"), coloring: cube_axis_coloring(3, 3) },
            384,
        ),
        entry("two-hat-square", Construction::TwoHat { seed: seed_s("square") }, 128),
        entry("two-hat-cube3", Construction::TwoHat { seed: seed_s("cube3") }, 3072),
        entry("two-hat-s-square-2", Construction::TwoHatSMinus1 { seed: seed_s("square"), s: 2 }, 128),
        entry("two-hat-s-square-3", Construction::TwoHatSMinus1 { seed: seed_s("square"), s: 3 }, 432),
        entry("flat-square-4", Construction::Flat { seed: seed_s("square"), two_m: 4 }, 32),
        entry("flat-square-6", Construction::Flat { seed: seed_s("square"), two_m: 6 }, 48),
        entry("toroid44-3x2", Construction::Toroid { periods: vec![3, 2] }, 48),
        entry("toroid44-4x4", Construction::Toroid { periods: vec![4, 4] }, 128),
        entry("toroid44-5x3", Construction::Toroid { periods: vec![5, 3] }, 120),
        entry("toroid-2x2x2", Construction::Toroid { periods: vec![2, 2, 2] }, 384),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_by_name() {
        assert_eq!(seed("square").unwrap().num_flags(), 8);
        assert_eq!(seed("polygon7").unwrap().num_flags(), 14);
        assert_eq!(seed("cube4").unwrap().num_flags(), 384);
        assert_eq!(seed("simplex3").unwrap().num_flags(), 24);
        assert_eq!(seed("pyramid").unwrap().num_flags(), 32);
        assert!(seed("cubeX").is_err());
        assert!(seed("dodecahedron").is_err());
    }

    #[test]
    fn axis_colorings() {
        let c = cube_axis_coloring(3, 3);
        assert_eq!(c.len(), 6);
        for class in 0..3 {
            assert_eq!(c.iter().filter(|&&x| x == class).count(), 2);
        }
        let c2 = cube_axis_coloring(3, 2);
        assert_eq!(c2.iter().filter(|&&x| x == 0).count(), 2);
    }

    #[test]
    fn parse_constructions() {
        assert_eq!(
            Construction::parse("toroid44", None, &[3, 2]).unwrap(),
            Construction::Toroid { periods: vec![3, 2] }
        );
        assert!(Construction::parse("two-hat", None, &[]).is_err());
        assert!(Construction::parse("flat", Some("square"), &[]).is_err());
    }

    #[test]
    fn catalog_flag_counts() {
        for e in catalog().iter().filter(|e| e.expected_flags <= 500) {
            let ext = e.build().unwrap();
            assert_eq!(ext.derived_flag_count(), e.expected_flags, "{}", e.name);
            assert!(ext.derive().is_maniplex(), "{}", e.name);
        }
    }
}
