//! Classify the bundled corpus at degrees 2 and 3 with a result cache.
//!
//! cargo run --release --example classify_corpus

use minfaith::error::Result;
use minfaith::io::{classify_corpus, load_corpus, Cache};

fn main() -> Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/bundled.json");
    let entries = load_corpus(path)?;
    let dir = std::env::temp_dir().join("minfaith-example-cache");
    let cache = Cache::open(&dir)?;
    for degree in [2, 3] {
        let results = classify_corpus(&entries, degree, Some(&cache), 0)?;
        let members: Vec<String> = results
            .verdicts
            .iter()
            .filter(|v| v.verdict.minimally_faithful)
            .map(|v| match &v.verdict.matched_family {
                Some(f) => format!("{} [{f}]", v.id),
                None => v.id.clone(),
            })
            .collect();
        println!(
            "degree {degree}: {} groups, consistent {}",
            results.verdicts.len(),
            results.all_consistent()
        );
        for m in members {
            println!("  {m}");
        }
    }
    println!("cache at {}", dir.display());
    Ok(())
}
