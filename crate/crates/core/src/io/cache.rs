use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::families::{identify_family, FamilySpec};
use crate::group::{ContentHash, Group};
use crate::io::corpus::write_json;
use crate::repdim::{is_minimally_faithful, rdim_for_table};

/// Everything the pipeline derives from a multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub content_hash: ContentHash,
    pub order: usize,
    pub class_count: usize,
    pub irreducible_degrees: Vec<u64>,
    pub rdim: u64,
    pub witness_degrees: Vec<u64>,
    pub is_minimally_faithful: bool,
    pub max_subgroup_rdims: Vec<(usize, u64)>,
    pub family: Option<FamilySpec>,
    /// Set when several families match.
    pub ambiguous_family: Option<Vec<String>>,
}

impl CacheRecord {
    pub fn compute(g: &Group) -> Result<CacheRecord> {
        let table = character_table(g)?;
        let cert = rdim_for_table(g, &table)?;
        let report = is_minimally_faithful(g)?;
        let (family, ambiguous_family) = match identify_family(g) {
            Ok(f) => (f, None),
            Err(Error::AmbiguousFamily(tags)) => (None, Some(tags)),
            Err(e) => return Err(e),
        };
        Ok(CacheRecord {
            content_hash: g.content_hash(),
            order: g.order(),
            class_count: table.len(),
            irreducible_degrees: table.degrees(),
            rdim: cert.value,
            witness_degrees: cert.witness_degrees(&table),
            is_minimally_faithful: report.is_minimally_faithful,
            max_subgroup_rdims: report.max_subgroup_rdims,
            family,
            ambiguous_family,
        })
    }
}

/// Directory of `<content hash>.json` records, written once per hash.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Cache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    fn path(&self, hash: &ContentHash) -> PathBuf {
        self.dir.join(format!("{}.json", hash.to_hex()))
    }

    pub fn get(&self, hash: &ContentHash) -> Result<Option<CacheRecord>> {
        let path = self.path(hash);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let record: CacheRecord = serde_json::from_str(&text).map_err(|e| Error::Parse {
            context: path.display().to_string(),
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string(),
        })?;
        if record.content_hash != *hash {
            return Err(Error::Mismatch(format!(
                "cache record {} is stored under the wrong hash",
                path.display()
            )));
        }
        Ok(Some(record))
    }

    pub fn put(&self, record: &CacheRecord) -> Result<()> {
        let path = self.path(&record.content_hash);
        if path.exists() {
            return Ok(());
        }
        write_json(path, record)
    }

    /// Cached record for `g`, computing and storing it on a miss.
    pub fn record(&self, g: &Group) -> Result<CacheRecord> {
        if let Some(r) = self.get(&g.content_hash())? {
            return Ok(r);
        }
        let r = CacheRecord::compute(g)?;
        self.put(&r)?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn hit_equals_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let g = dihedral(8).unwrap();
        let cold = cache.record(&g).unwrap();
        assert!(cache.get(&g.content_hash()).unwrap().is_some());
        let warm = cache.record(&g).unwrap();
        assert_eq!(cold, warm);
        assert_eq!(
            serde_json::to_string(&cold).unwrap(),
            serde_json::to_string(&warm).unwrap()
        );
        assert_eq!(warm.rdim, 2);
        assert_eq!(warm.irreducible_degrees, vec![1, 1, 1, 1, 2]);
    }
}
