use crate::error::{Error, Result};
use crate::perm::Perm;

use super::GroupModel;

/// Parses the group mini-language:
/// `cyclic 4`, `dihedral 5`, `elemabelian2 6`, `semidirect-inv 3 4`,
/// `product <spec> ; <spec>` (parenthesize nested products), and
/// `perm (0 1)(2 3), (1 2)`.
pub fn parse_group_spec(text: &str) -> Result<GroupModel> {
    let text = strip_parens(text.trim());
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let ints = || -> Result<Vec<usize>> {
        rest.split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::InvalidParameter(format!("bad integer `{t}` in group `{text}`"))))
            .collect()
    };
    let exactly = |n: usize| -> Result<Vec<usize>> {
        let v = ints()?;
        if v.len() != n {
            return Err(Error::InvalidParameter(format!("group `{head}` takes {n} integer(s)")));
        }
        Ok(v)
    };
    match head {
        "cyclic" => GroupModel::cyclic(exactly(1)?[0]),
        "dihedral" => GroupModel::dihedral(exactly(1)?[0]),
        "elemabelian2" => GroupModel::elem_abelian_2(exactly(1)?[0]),
        "semidirect-inv" => {
            let v = exactly(2)?;
            GroupModel::semidirect_zs_inversion(v[0], v[1])
        }
        "product" => {
            let factors = split_top_level(rest)?
                .into_iter()
                .map(parse_group_spec)
                .collect::<Result<Vec<_>>>()?;
            GroupModel::direct_product(&factors)
        }
        "perm" => {
            let pieces: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let degree = pieces
                .iter()
                .flat_map(|p| p.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()))
                .max()
                .map_or(0, |m| m + 1);
            let gens = pieces.iter().map(|p| Perm::from_cycles(p, degree)).collect::<Result<Vec<_>>>()?;
            let names = (0..gens.len()).map(|k| format!("g{k}")).collect();
            GroupModel::from_named_permutations(gens, names, format!("perm {rest}"))
        }
        _ => Err(Error::InvalidParameter(format!("unknown group `{text}`"))),
    }
}

fn strip_parens(mut s: &str) -> &str {
    while s.starts_with('(') && s.ends_with(')') && matching_close(s) == Some(s.len() - 1) {
        s = s[1..s.len() - 1].trim();
    }
    s
}

fn matching_close(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    if depth != 0 || out.iter().any(|p| p.is_empty()) {
        return Err(Error::InvalidParameter(format!("malformed product `{s}`")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        assert_eq!(parse_group_spec("cyclic 4").unwrap().order(), 4);
        assert_eq!(parse_group_spec("dihedral 5").unwrap().order(), 10);
        assert_eq!(parse_group_spec("elemabelian2 3").unwrap().order(), 8);
        assert_eq!(parse_group_spec("semidirect-inv 3 4").unwrap().order(), 54);
        assert_eq!(parse_group_spec("product cyclic 3 ; cyclic 2").unwrap().order(), 6);
        assert_eq!(parse_group_spec("perm (0 1)(2 3), (1 2)").unwrap().order(), 8);
        let nested = parse_group_spec("product (product cyclic 2 ; cyclic 2) ; dihedral 3").unwrap();
        assert_eq!(nested.order(), 24);
        assert_eq!(parse_group_spec(nested.spec()).unwrap(), nested);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_group_spec("cyclic").is_err());
        assert!(parse_group_spec("cyclic x").is_err());
        assert!(parse_group_spec("quaternion 8").is_err());
        assert!(parse_group_spec("product cyclic 2 ;").is_err());
    }
}
