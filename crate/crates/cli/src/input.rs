//! Polytope sources: JSON polytope files and `name:params` family specs.

use std::path::Path;

use num_bigint::BigInt;
use polydisc::{gen_family, Family, LatticePolytope};
use serde::de::{self, Deserializer};
use serde::Deserialize;

use crate::CliError;

/// On-disk polytope description:
///
/// ```json
/// { "name": "unit square", "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]] }
/// ```
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    #[serde(default)]
    pub name: Option<String>,
    pub vertices: Vec<Vec<Coordinate>>,
}

/// An integer coordinate of arbitrary size; anything else is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinate(pub BigInt);

impl<'de> Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let number = serde_json::Number::deserialize(deserializer)?;
        let text = number.as_str();
        text.parse::<BigInt>()
            .map(Coordinate)
            .map_err(|_| de::Error::custom(format!("coordinate {text} is not an integer")))
    }
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            let location = format!("line {} column {}", inner.line(), inner.column());
            let message = if path == "." || path.is_empty() {
                format!("{inner}")
            } else {
                format!("{path}: {inner}")
            };
            CliError::Parse(if message.contains("line ") { message } else { format!("{message} at {location}") })
        })
    }

    pub fn into_polytope(self) -> Result<LatticePolytope, CliError> {
        let vertices = self
            .vertices
            .into_iter()
            .map(|v| v.into_iter().map(|c| c.0).collect())
            .collect();
        let p = LatticePolytope::new(vertices).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(match self.name {
            Some(name) => p.with_name(name),
            None => p,
        })
    }
}

pub fn read_polytope_file(path: &Path) -> Result<LatticePolytope, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = PolytopeFile::parse(&text)
        .map_err(|e| CliError::Parse(format!("{}: {}", path.display(), e.message())))?;
    let p = parsed.into_polytope()?;
    Ok(if p.name().is_some() {
        p
    } else {
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        p.with_name(stem)
    })
}

/// Parses `name:p1:p2` or `name:p1,p2`, e.g. `cube:3`, `simplex:2:3`,
/// `product:2,3`, `segment:5`, `prism:3`.
pub fn parse_family_spec(spec: &str) -> Result<LatticePolytope, CliError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let family: Family = name.parse().map_err(|e: polydisc::Error| CliError::Usage(e.to_string()))?;
    let params = rest
        .split([':', ','])
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("family parameter '{s}' is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    gen_family(family, &params).map_err(|e| CliError::Usage(e.to_string()))
}
