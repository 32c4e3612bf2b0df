use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use minfaith::chartab::character_table;
use minfaith::error::{Error, Result};
use minfaith::families::{construct_family, FamilySpec, FamilyTag};
use minfaith::group::{abelian_invariants, Group};
use minfaith::io::{
    classify_corpus, load_corpus, save_corpus, save_results, write_json, Cache, CorpusEntry,
};
use minfaith::repdim::{is_minimally_faithful, rdim_bruteforce_for_table, rdim_for_table};

#[derive(Parser)]
#[command(
    name = "minfaith",
    version,
    about = "Representation dimension and minimally faithful groups"
)]
struct Cli {
    /// Directory for the persistent per-group result cache.
    #[arg(long = "cache", global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and emit it as a corpus entry.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write the corpus file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Order, center, derived series, classes and irreducible degrees.
    Invariants(SourceArgs),
    /// Full character table.
    Chartab(SourceArgs),
    /// Representation dimension with a witness.
    Rdim {
        #[command(flatten)]
        source: SourceArgs,
        /// Also run the exhaustive search and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Minimal-faithfulness report.
    Minimal(SourceArgs),
    /// Check a corpus against the degree-2 or degree-3 classification.
    Classify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
        degree: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family tag: deg2.p-p, deg2.Q8, deg2.p-cyc2m or a through k.
    #[arg(long)]
    family: String,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let mut spec = FamilySpec::new(self.family.parse::<FamilyTag>()?);
        for (name, v) in [
            ("p", self.p),
            ("q", self.q),
            ("k", self.k),
            ("m", self.m),
            ("n", self.n),
        ] {
            if let Some(v) = v {
                spec = spec.with(name, v);
            }
        }
        Ok(spec)
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Corpus file; every entry is processed.
    #[arg(
        long = "in",
        conflicts_with = "family",
        required_unless_present = "family"
    )]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, requires = "family")]
    p: Option<u64>,
    #[arg(long, requires = "family")]
    q: Option<u64>,
    #[arg(long, requires = "family")]
    k: Option<u64>,
    #[arg(long, requires = "family")]
    m: Option<u64>,
    #[arg(long, requires = "family")]
    n: Option<u64>,
}

impl SourceArgs {
    fn groups(&self) -> Result<Vec<(String, Group)>> {
        if let Some(path) = &self.input {
            return load_corpus(path)?
                .iter()
                .map(|e| Ok((e.id.clone(), e.build()?)))
                .collect();
        }
        let fam = FamilyArgs {
            family: self.family.clone().expect("clap enforces a source"),
            p: self.p,
            q: self.q,
            k: self.k,
            m: self.m,
            n: self.n,
        };
        let spec = fam.spec()?;
        Ok(vec![(spec.to_string(), construct_family(&spec)?)])
    }
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => write_json(path, value),
        None => {
            let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.into()))?;
            match writeln!(std::io::stdout(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

/// Exit status: 0 ok, 1 inconsistency, 2 usage, 3 cap exceeded, 4 I/O or parse.
fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_cap() => 3,
        Error::Io(_) | Error::Parse { .. } => 4,
        Error::BadParameter(_)
        | Error::ParameterConstraintViolated { .. }
        | Error::NotA2Group(_) => 2,
        _ => 1,
    }
}

fn invariants(g: &Group) -> Result<serde_json::Value> {
    let (z, _) = g.subgroup_group(&g.center())?;
    let table = character_table(g)?;
    Ok(json!({
        "content_hash": g.content_hash(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "center_invariants": abelian_invariants(&z)?,
        "derived_series": g.derived_series().iter().map(|h| h.order()).collect::<Vec<_>>(),
        "class_count": table.len(),
        "irreducible_degrees": table.degrees(),
    }))
}

fn run(cli: Cli) -> Result<bool> {
    let cache = cli.cache.as_ref().map(Cache::open).transpose()?;
    match cli.command {
        Command::Construct { family, out } => {
            let spec = family.spec()?;
            let g = construct_family(&spec)?;
            let mut entry = CorpusEntry::from_group(spec.to_string(), &g);
            entry.expected = Some(minfaith::io::Expected {
                order: Some(g.order()),
                rdim: None,
                family: Some(spec.tag.to_string()),
            });
            match out {
                Some(path) => save_corpus(path, &[entry])?,
                None => emit(
                    &minfaith::io::Corpus {
                        groups: vec![entry],
                    },
                    None,
                )?,
            }
            Ok(true)
        }
        Command::Invariants(src) => {
            let rows = src
                .groups()?
                .iter()
                .map(|(id, g)| Ok(json!({ "id": id, "invariants": invariants(g)? })))
                .collect::<Result<Vec<_>>>()?;
            emit(&rows, None)?;
            Ok(true)
        }
        Command::Chartab(src) => {
            let rows = src
                .groups()?
                .iter()
                .map(|(id, g)| Ok(json!({ "id": id, "table": character_table(g)? })))
                .collect::<Result<Vec<_>>>()?;
            emit(&rows, None)?;
            Ok(true)
        }
        Command::Rdim { source, oracle } => {
            let mut ok = true;
            let mut rows = Vec::new();
            for (id, g) in source.groups()? {
                let table = character_table(&g)?;
                let cert = rdim_for_table(&g, &table)?;
                let mut row = json!({
                    "id": id,
                    "certificate": cert,
                    "witness_degrees": cert.witness_degrees(&table),
                });
                if oracle {
                    let brute = rdim_bruteforce_for_table(&g, &table)?;
                    let agree = brute.value == cert.value && brute.verify(&table);
                    ok &= agree;
                    row["oracle"] = json!({ "value": brute.value, "agrees": agree });
                }
                if let Some(c) = &cache {
                    c.record(&g)?;
                }
                rows.push(row);
            }
            emit(&rows, None)?;
            Ok(ok)
        }
        Command::Minimal(src) => {
            let rows = src
                .groups()?
                .iter()
                .map(|(id, g)| Ok(json!({ "id": id, "report": is_minimally_faithful(g)? })))
                .collect::<Result<Vec<_>>>()?;
            emit(&rows, None)?;
            Ok(true)
        }
        Command::Classify {
            corpus,
            degree,
            jobs,
            out,
        } => {
            let entries = load_corpus(&corpus)?;
            let results = classify_corpus(&entries, degree, cache.as_ref(), jobs)?;
            match &out {
                Some(path) => save_results(path, &results)?,
                None => emit(&results, None)?,
            }
            for v in results.verdicts.iter().filter(|v| !v.is_clean()) {
                eprintln!("inconsistent: {} (order {})", v.id, v.verdict.order);
            }
            Ok(results.all_consistent())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
