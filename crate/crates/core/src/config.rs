//! Textual group and parameter specifications, shared by the CLI and
//! any batch driver.
//!
//! Group specs use the display names of the built-in families: `Z/4`,
//! `I2(5)`, `S3`.  Parameter specs are either a single rational such as
//! `1/5` (equal parameters in every slot) or a JSON array of per-orbit
//! entries `[{"orbit": "H0", "k": ["1/5", "2/5"]}]` covering each orbit
//! exactly once.

use crate::error::Error;
use crate::group::ReflectionGroup;
use crate::params::CherednikParams;
use crate::scalar::Rat;
use serde::Deserialize;
use std::str::FromStr;

/// Build a reflection group from its display name.
pub fn parse_group(spec: &str) -> Result<ReflectionGroup, Error> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("Z/") {
        let e: usize = rest
            .parse()
            .map_err(|_| Error::Config(format!("group: bad cyclic order in {s:?}")))?;
        return ReflectionGroup::cyclic(e);
    }
    if let Some(rest) = s.strip_prefix("I2(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Config(format!("group: missing ')' in {s:?}")))?;
        let m: usize = inner
            .parse()
            .map_err(|_| Error::Config(format!("group: bad dihedral order in {s:?}")))?;
        return ReflectionGroup::dihedral(m);
    }
    if let Some(rest) = s.strip_prefix('S') {
        if let Ok(n) = rest.parse::<usize>() {
            return ReflectionGroup::symmetric(n, true);
        }
    }
    Err(Error::Config(format!(
        "group: unrecognized spec {s:?}; expected Z/<e>, I2(<m>) or S<n>"
    )))
}

#[derive(Deserialize)]
struct OrbitParam {
    orbit: String,
    k: Vec<String>,
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s.trim()).map_err(|_| Error::Config(format!("param: bad rational {s:?}")))
}

/// Parse a parameter spec against a fixed group.
pub fn parse_params(g: &ReflectionGroup, spec: &str) -> Result<CherednikParams, Error> {
    let s = spec.trim();
    if !s.starts_with('[') {
        return Ok(CherednikParams::equal(g, parse_rat(s)?));
    }
    let entries: Vec<OrbitParam> = serde_json::from_str(s)
        .map_err(|e| Error::Config(format!("param: {e}")))?;
    let mut k: Vec<Option<Vec<Rat>>> = vec![None; g.orbits.len()];
    for entry in &entries {
        let idx = entry
            .orbit
            .strip_prefix('H')
            .and_then(|t| t.parse::<usize>().ok())
            .filter(|&i| i < g.orbits.len())
            .ok_or_else(|| {
                Error::Config(format!(
                    "param: orbit {:?} not in H0..H{}",
                    entry.orbit,
                    g.orbits.len() - 1
                ))
            })?;
        if k[idx].is_some() {
            return Err(Error::Config(format!("param: orbit {:?} given twice", entry.orbit)));
        }
        let vals = entry.k.iter().map(|v| parse_rat(v)).collect::<Result<Vec<_>, _>>()?;
        k[idx] = Some(vals);
    }
    let k = k
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Config(format!("param: orbit H{i} missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    CherednikParams::new(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn group_specs_round_trip() {
        assert_eq!(parse_group("Z/4").unwrap().name, "Z/4");
        assert_eq!(parse_group(" I2(5) ").unwrap().name, "I2(5)");
        assert_eq!(parse_group("S3").unwrap().name, "S3");
        for bad in ["Z/1", "Z/x", "I2(5", "S9", "G4", ""] {
            assert!(parse_group(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn param_specs() {
        let g = parse_group("I2(4)").unwrap();
        let eq = parse_params(&g, "1/5").unwrap();
        assert_eq!(eq.k, vec![vec![rat(1, 5)], vec![rat(1, 5)]]);
        let per = parse_params(
            &g,
            r#"[{"orbit": "H1", "k": ["-2/3"]}, {"orbit": "H0", "k": ["1/2"]}]"#,
        )
        .unwrap();
        assert_eq!(per.k, vec![vec![rat(1, 2)], vec![rat(-2, 3)]]);
        for bad in [
            "1/0",
            "x",
            r#"[{"orbit": "H0", "k": ["1/2"]}]"#,
            r#"[{"orbit": "H2", "k": ["1/2"]}, {"orbit": "H0", "k": ["1"]}]"#,
            r#"[{"orbit": "H0", "k": ["1/2", "1/3"]}, {"orbit": "H1", "k": ["1"]}]"#,
        ] {
            assert!(parse_params(&g, bad).is_err(), "{bad:?}");
        }
        let z3 = parse_group("Z/3").unwrap();
        let two = parse_params(&z3, r#"[{"orbit": "H0", "k": ["1/5", "2/5"]}]"#).unwrap();
        assert_eq!(two.k, vec![vec![rat(1, 5), rat(2, 5)]]);
    }
}
