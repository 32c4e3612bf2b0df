//! Corpus files, the per-hash result cache and the classification pipeline.

pub mod cache;
pub mod classify;
pub mod corpus;

pub use cache::{Cache, CacheRecord};
pub use classify::{classify_corpus, ClassifyRecord, ClassifyResults};
pub use corpus::{
    load_corpus, parse_corpus, save_corpus, write_json, Corpus, CorpusEntry, Expected,
};

/// Writes classification results as pretty JSON.
pub fn save_results(
    path: impl AsRef<std::path::Path>,
    results: &ClassifyResults,
) -> crate::error::Result<()> {
    write_json(path, results)
}
