//! On-disk poset documents.
//!
//! A document is JSON of the form
//! `{"elements": ["BOT", "a", "TOP"], "relations": [["BOT", "a"], ["a", "TOP"]]}`.
//! Relations are generators: the order is their reflexive transitive closure.
//! Saving writes only the cover pairs.
//!
//! A plain 0/1 matrix, one row per line, is accepted as an alternative
//! input. Entry `(i, j) = 1` reads as `i <= j`, and elements are named by
//! their row index.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use intrank_core::{Error as CoreError, Poset};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub relations: Vec<[String; 2]>,
}

impl PosetDocument {
    pub fn from_poset(p: &Poset) -> Self {
        PosetDocument {
            elements: p.labels().to_vec(),
            relations: p
                .covers()
                .pairs()
                .iter()
                .map(|&(a, b)| [p.label(a).to_string(), p.label(b).to_string()])
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset, CliError> {
        let mut index = HashMap::new();
        for (i, name) in self.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(CoreError::DuplicateLabel(name.clone()).into());
            }
        }
        let lookup = |name: &str| {
            index.get(name).copied().ok_or_else(|| {
                CliError::Invalid(format!("relation mentions unknown element {name:?}"))
            })
        };
        let gens = self
            .relations
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Poset::from_relation(
            self.elements.len(),
            &gens,
            Some(self.elements.clone()),
        )?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Invalid(format!("malformed document: {e}")))
    }
}

/// Reads a 0/1 matrix; whitespace between entries is optional.
pub fn parse_matrix(text: &str) -> Result<Poset, CliError> {
    let rows: Vec<Vec<bool>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(CliError::Invalid(format!(
                        "unexpected matrix entry {other:?}"
                    ))),
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if let Some(bad) = rows.iter().position(|r| r.len() != n) {
        return Err(CliError::Invalid(format!(
            "matrix row {bad} has {} entries, expected {n}",
            rows[bad].len()
        )));
    }
    let gens: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && rows[i][j])
        .collect();
    Ok(Poset::from_relation(n, &gens, None)?)
}

/// Loads a document, or a matrix when `matrix` is set.
pub fn load(path: &Path, matrix: bool) -> Result<Poset, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    if matrix {
        parse_matrix(&text)
    } else {
        PosetDocument::from_json(&text)?.to_poset()
    }
}

/// Writes through a temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

pub fn save(path: &Path, p: &Poset) -> Result<(), CliError> {
    let mut text = PosetDocument::from_poset(p).to_json();
    text.push('\n');
    write_atomic(path, &text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use intrank_core::poset::named::{chain, n5};

    #[test]
    fn round_trip_keeps_labels_and_order() {
        let p = n5();
        let doc = PosetDocument::from_poset(&p);
        assert_eq!(doc.relations.len(), 5);
        let back = PosetDocument::from_json(&doc.to_json())
            .unwrap()
            .to_poset()
            .unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn generators_are_closed() {
        let doc = PosetDocument::from_json(
            r#"{"elements": ["a", "b", "c"], "relations": [["a", "b"], ["b", "c"]]}"#,
        )
        .unwrap();
        let p = doc.to_poset().unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(
            p,
            chain(3)
                .with_labels(vec!["a".into(), "b".into(), "c".into()])
                .unwrap()
        );
    }

    #[test]
    fn rejects_bad_documents() {
        let dup = PosetDocument {
            elements: vec!["a".into(), "a".into()],
            relations: vec![],
        };
        assert!(matches!(
            dup.to_poset(),
            Err(CliError::Core(CoreError::DuplicateLabel(_)))
        ));
        let unknown = PosetDocument {
            elements: vec!["a".into()],
            relations: vec![["a".into(), "b".into()]],
        };
        assert!(matches!(unknown.to_poset(), Err(CliError::Invalid(_))));
        let cycle = PosetDocument {
            elements: vec!["a".into(), "b".into()],
            relations: vec![["a".into(), "b".into()], ["b".into(), "a".into()]],
        };
        assert!(matches!(
            cycle.to_poset(),
            Err(CliError::Core(CoreError::Cycle(..)))
        ));
        assert!(PosetDocument::from_json("{").is_err());
    }

    #[test]
    fn matrix_import() {
        let p = parse_matrix("1 1 1\n0 1 1\n0 0 1\n").unwrap();
        assert!(p.is_chain());
        assert!(parse_matrix("1 1\n1 1\n").is_err());
        assert!(parse_matrix("1 0\n0\n").is_err());
        assert!(parse_matrix("1 2\n0 1\n").is_err());
    }
}
