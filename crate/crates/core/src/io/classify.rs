use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{classify_group, ClassificationVerdict};
use crate::io::cache::{Cache, CacheRecord};
use crate::io::corpus::CorpusEntry;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub id: String,
    #[serde(flatten)]
    pub verdict: ClassificationVerdict,
    /// Disagreement with the entry's own `expected` block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expectation_mismatch: Option<String>,
}

impl ClassifyRecord {
    pub fn is_clean(&self) -> bool {
        self.verdict.consistent && self.expectation_mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResults {
    pub degree: u64,
    pub verdicts: Vec<ClassifyRecord>,
}

impl ClassifyResults {
    pub fn all_consistent(&self) -> bool {
        self.verdicts.iter().all(ClassifyRecord::is_clean)
    }
}

fn classify_entry(
    entry: &CorpusEntry,
    degree: u64,
    cache: Option<&Cache>,
) -> Result<ClassifyRecord> {
    let g = entry.build()?;
    let record = match cache {
        Some(c) => c.record(&g)?,
        None => CacheRecord::compute(&g)?,
    };
    let minimal = record.is_minimally_faithful && record.rdim == degree;
    let matched = record.family.clone().filter(|f| f.tag.degree() == degree);
    let consistent = record.ambiguous_family.is_none() && minimal == matched.is_some();
    let verdict = if consistent {
        ClassificationVerdict {
            group_hash: record.content_hash,
            order: record.order,
            rdim: record.rdim,
            minimally_faithful: minimal,
            matched_family: matched,
            consistent,
            dump: None,
        }
    } else {
        classify_group(&g, degree)?
    };
    let mut mismatches = Vec::new();
    if let Some(exp) = &entry.expected {
        if let Some(r) = exp.rdim.filter(|&r| r != record.rdim) {
            mismatches.push(format!("rdim {} (expected {r})", record.rdim));
        }
        if let Some(tag) = &exp.family {
            let got = record.family.as_ref().map(|f| f.tag.as_str());
            if got != Some(tag.as_str()) {
                mismatches.push(format!("family {} (expected {tag})", got.unwrap_or("none")));
            }
        }
    }
    Ok(ClassifyRecord {
        id: entry.id.clone(),
        verdict,
        expectation_mismatch: (!mismatches.is_empty()).then(|| mismatches.join("; ")),
    })
}

/// Classifies every entry; `jobs` sets the worker count (0 = rayon default).
/// Output order follows input order.
pub fn classify_corpus(
    entries: &[CorpusEntry],
    degree: u64,
    cache: Option<&Cache>,
    jobs: usize,
) -> Result<ClassifyResults> {
    if degree != 2 && degree != 3 {
        return Err(Error::BadParameter(format!(
            "degree must be 2 or 3, got {degree}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameter(e.to_string()))?;
    let verdicts = pool.install(|| {
        entries
            .par_iter()
            .map(|e| classify_entry(e, degree, cache))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(ClassifyResults { degree, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    fn entries() -> Vec<CorpusEntry> {
        let c2 = cyclic(2).unwrap();
        vec![
            CorpusEntry::from_group("C4", &cyclic(4).unwrap()),
            CorpusEntry::from_group("C2xC2", &direct_product(&c2, &c2).unwrap()),
            CorpusEntry::from_group("D8", &dihedral(8).unwrap()),
            CorpusEntry::from_group("Q8", &quaternion8()),
            CorpusEntry::from_group("S3", &dihedral(6).unwrap()),
        ]
    }

    #[test]
    fn degree_two_small() {
        let r = classify_corpus(&entries(), 2, None, 2).unwrap();
        assert!(r.all_consistent());
        let minimal: Vec<&str> = r
            .verdicts
            .iter()
            .filter(|v| v.verdict.minimally_faithful)
            .map(|v| v.id.as_str())
            .collect();
        assert_eq!(minimal, vec!["C2xC2", "Q8", "S3"]);
    }

    #[test]
    fn cache_and_jobs_do_not_change_output() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let plain = classify_corpus(&entries(), 3, None, 1).unwrap();
        let cold = classify_corpus(&entries(), 3, Some(&cache), 4).unwrap();
        let warm = classify_corpus(&entries(), 3, Some(&cache), 3).unwrap();
        let s = |r: &ClassifyResults| serde_json::to_string_pretty(r).unwrap();
        assert_eq!(s(&plain), s(&cold));
        assert_eq!(s(&cold), s(&warm));
    }

    #[test]
    fn expectation_mismatch_reported() {
        let mut e = entries();
        e[0].expected = Some(crate::io::corpus::Expected {
            rdim: Some(2),
            ..Default::default()
        });
        let r = classify_corpus(&e[..1], 2, None, 1).unwrap();
        assert!(!r.all_consistent());
        assert!(r.verdicts[0]
            .expectation_mismatch
            .as_deref()
            .unwrap()
            .contains("rdim 1"));
    }
}
