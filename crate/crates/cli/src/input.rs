//! Group and matrix input files.

use std::collections::BTreeMap;

use serde::Deserialize;

use hyperconifold::classify::IntMatrix4;
use hyperconifold::transition::FiniteGroup;
use hyperconifold::{Error, Result};

/// Group file contents. Element indices in tables and permutations are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cayley {
        table: Vec<Vec<usize>>,
        /// Optional names for elements, usable in seeds and words.
        #[serde(default)]
        generators: BTreeMap<String, usize>,
    },
    Presentation {
        generators: Vec<String>,
        relators: Vec<String>,
    },
    Permutations {
        generators: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

fn zero_based(v: &[usize], what: &str) -> Result<Vec<usize>> {
    v.iter()
        .map(|&x| {
            x.checked_sub(1).ok_or_else(|| Error::InvalidGroup(format!("{what} uses index 0; indices are 1-based")))
        })
        .collect()
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidGroup(format!("malformed group file: {e}")))
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cayley { table, generators } => {
                let table = table.iter().map(|row| zero_based(row, "table")).collect::<Result<Vec<_>>>()?;
                let group = FiniteGroup::from_cayley(table)?;
                let names: Vec<String> = generators.keys().cloned().collect();
                let elements = zero_based(&generators.values().copied().collect::<Vec<_>>(), "generator")?;
                group.with_generators(names, elements)
            }
            GroupSpec::Presentation { generators, relators } => FiniteGroup::from_presentation(generators, relators),
            GroupSpec::Permutations { generators, names } => {
                let perms = generators.iter().map(|p| zero_based(p, "permutation")).collect::<Result<Vec<_>>>()?;
                if let Some(names) = names {
                    if names.len() != perms.len() {
                        return Err(Error::InvalidGroup("names and generators differ in length".into()));
                    }
                }
                FiniteGroup::from_permutations(&perms, names.clone())
            }
        }
    }
}

/// Resolves a seed: a 1-based element index, or a word in the named generators.
pub fn parse_seed(group: &FiniteGroup, seed: &str) -> Result<usize> {
    let s = seed.trim();
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
        let i: usize = s.parse().map_err(|_| Error::InvalidElement(s.into()))?;
        if i == 0 || i > group.order() {
            return Err(Error::InvalidElement(format!("{i} (group has order {})", group.order())));
        }
        return Ok(i - 1);
    }
    group.element_of_word(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub matrix: IntMatrix4,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidAction(format!("malformed matrix file: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_file() {
        let spec = GroupSpec::parse(
            r#"{"type": "presentation", "generators": ["g3", "g4"], "relators": ["g3^3", "g4^4", "g4^-1*g3*g4*g3^-2"]}"#,
        )
        .unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(parse_seed(&g, "1").unwrap(), 0);
        assert!(parse_seed(&g, "13").is_err());
        assert!(parse_seed(&g, "0").is_err());
        assert_eq!(parse_seed(&g, "g4^4").unwrap(), 0);
    }

    #[test]
    fn cayley_and_permutation_files() {
        let spec =
            GroupSpec::parse(r#"{"type": "cayley", "table": [[1,2,3],[2,3,1],[3,1,2]], "generators": {"g": 2}}"#)
                .unwrap();
        let g = spec.build().unwrap();
        assert_eq!(parse_seed(&g, "g^2").unwrap(), 2);
        let spec = GroupSpec::parse(r#"{"type": "permutations", "generators": [[2,1,3],[2,3,1]]}"#).unwrap();
        assert_eq!(spec.build().unwrap().order(), 6);
    }

    #[test]
    fn malformed_files() {
        for bad in [
            r#"{"type": "cayley"}"#,
            r#"{"type": "matrix", "table": []}"#,
            r#"{"type": "cayley", "table": [[0]]}"#,
            r#"{"type": "cayley", "table": [[1,2],[1,2]]}"#,
            r#"{"type": "presentation", "generators": ["a"], "relators": ["b^2"]}"#,
            r#"not json"#,
        ] {
            let res = GroupSpec::parse(bad).and_then(|s| s.build());
            assert!(res.is_err(), "{bad}");
        }
        assert!(MatrixFile::parse(r#"{"matrix": [[1,0,0],[0,1,0],[0,0,1]]}"#).is_err());
    }
}
