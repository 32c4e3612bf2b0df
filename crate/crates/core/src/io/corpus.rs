use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{group_from_permutations, Group};

/// Invariants an entry asserts about itself.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rdim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl Expected {
    pub fn is_empty(&self) -> bool {
        self.order.is_none() && self.rdim.is_none() && self.family.is_none()
    }
}

/// A group given by permutation generators (0-based image lists).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub groups: Vec<CorpusEntry>,
}

impl CorpusEntry {
    /// Regular permutation realization of `g` (degree = order).
    pub fn from_group(id: impl Into<String>, g: &Group) -> Self {
        CorpusEntry {
            id: id.into(),
            degree: g.order(),
            generators: g
                .regular_generators()
                .into_iter()
                .map(|p| p.into_iter().map(|x| x as usize).collect())
                .collect(),
            expected: None,
        }
    }

    /// Generators must be permutations of `0..degree`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.degree == 0 {
            return Err("degree must be positive".into());
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(format!(
                    "generator {i} has {} images, expected {}",
                    g.len(),
                    self.degree
                ));
            }
            let mut seen = vec![false; self.degree];
            for &x in g {
                if x >= self.degree {
                    return Err(format!(
                        "generator {i} maps to {x}, outside 0..{}",
                        self.degree
                    ));
                }
                if seen[x] {
                    return Err(format!("generator {i} repeats image {x}"));
                }
                seen[x] = true;
            }
        }
        Ok(())
    }

    /// Builds the group and checks `expected.order`.
    pub fn build(&self) -> Result<Group> {
        self.validate()
            .map_err(|m| entry_error(&self.id, None, m))?;
        let g = group_from_permutations(self.degree, &self.generators)?;
        if let Some(order) = self.expected.as_ref().and_then(|e| e.order) {
            if order != g.order() {
                return Err(Error::Mismatch(format!(
                    "entry {}: expected order {order}, generated {}",
                    self.id,
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

fn entry_error(id: &str, line: Option<usize>, message: String) -> Error {
    Error::Parse {
        context: format!("entry {id:?}"),
        line,
        column: None,
        message,
    }
}

/// Parses corpus JSON; `context` names the source in error messages.
pub fn parse_corpus(text: &str, context: &str) -> Result<Vec<CorpusEntry>> {
    let corpus: Corpus = serde_json::from_str(text).map_err(|e| Error::Parse {
        context: context.to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    for entry in &corpus.groups {
        if let Err(m) = entry.validate() {
            let needle = serde_json::to_string(&entry.id).unwrap_or_default();
            let line = text
                .find(&needle)
                .map(|pos| text[..pos].lines().count().max(1));
            return Err(entry_error(&entry.id, line, m));
        }
    }
    Ok(corpus.groups)
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_corpus(&text, &path.display().to_string())
}

/// Pretty JSON with a trailing newline, written through a temporary file.
pub fn write_json<T: Serialize + ?Sized>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.into()))?;
    text.push('\n');
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("out"),
        std::process::id()
    ));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn save_corpus(path: impl AsRef<Path>, entries: &[CorpusEntry]) -> Result<()> {
    write_json(
        path,
        &Corpus {
            groups: entries.to_vec(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn empty_corpus() {
        assert!(parse_corpus(r#"{"groups": []}"#, "inline")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn repeated_image_names_the_entry() {
        let text = r#"{"groups": [
  {"id": "ok", "degree": 2, "generators": [[1, 0]]},
  {"id": "broken", "degree": 3, "generators": [[1, 1, 0]]}
]}"#;
        let err = parse_corpus(text, "inline").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("broken"), "{msg}");
        assert!(matches!(err, Error::Parse { line: Some(3), .. }), "{err:?}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_corpus("{\"groups\": [\n  {\"id\": 1}\n]}", "inline").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: Some(2),
                column: Some(_),
                ..
            }
        ));
    }

    #[test]
    fn expected_order_checked() {
        let mut e = CorpusEntry::from_group("c3", &cyclic(3).unwrap());
        e.expected = Some(Expected {
            order: Some(4),
            ..Default::default()
        });
        assert!(matches!(e.build(), Err(Error::Mismatch(_))));
    }

    #[test]
    fn regular_round_trip() {
        let g = quaternion8();
        let h1 = CorpusEntry::from_group("q8", &g).build().unwrap();
        let h2 = CorpusEntry::from_group("q8", &h1).build().unwrap();
        assert!(is_isomorphic(&g, &h1));
        assert_eq!(h1.content_hash(), h2.content_hash());
    }
}
