use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orkernel::generators::{generate, Family, FamilyParams};
use orkernel::io::{to_dimacs, to_edge_list};
use orkernel::pipeline::{
    bench, emit_queries, generate_corpus, run_file, write_rows_csv, write_rows_json, BenchOptions,
    CorpusEntry, CorpusManifest, CorpusSpec, FailureKind, RunOptions, RunReport, Verification,
};
use orkernel::{Answer, Kernel, PipelineError};

const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "orkernel",
    version,
    about = "Decide Clique through OR-kernels with query batching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize, batch and solve one graph.
    Run {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = Kernel::NAMES)]
        kernel: String,
        /// Degree cap for the dbd kernel.
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Batching exponent: groups of ceil((log2 n)^c) queries.
        #[arg(long, default_value_t = 0)]
        c: u32,
        /// Check the answer against the brute-force oracle.
        #[arg(long)]
        verify: bool,
        /// Write the batched queries and a manifest into this directory.
        #[arg(long)]
        emit_queries: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Report wall_time_ms as 0.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run kernels over a corpus directory with a manifest.json.
    Bench {
        dir: PathBuf,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "degeneracy,oct,dbd,chordal,loc"
        )]
        kernels: Vec<String>,
        #[arg(long = "c", value_delimiter = ',', default_value = "0,1,2")]
        cs: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Output file; `.json` selects JSON, anything else CSV. Stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        no_timing: bool,
    },
    /// Generate one graph.
    Gen {
        family: String,
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Degree cap for bounded-degree.
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Planted clique size.
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Same-side edges for bipartite-plus-edges.
        #[arg(long, default_value_t = 2)]
        extra: usize,
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
        /// Output file. Its directory's manifest.json gains an entry when
        /// the family is planted-clique or --record-k is given.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        record_k: Option<usize>,
    },
    /// Generate a seeded corpus with its manifest.
    GenCorpus {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "12,20,30")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        per_family: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    El,
    Dimacs,
}

fn exit_code(e: &PipelineError) -> u8 {
    match e {
        PipelineError::Invariant(_) | PipelineError::TreeDecomposition(_) => EXIT_INVARIANT,
        _ => EXIT_INPUT,
    }
}

fn print_report(r: &RunReport) {
    println!("answer            {}", r.answer);
    match r.d {
        Some(d) => println!("kernel            {} (d = {d})", r.kernel),
        None => println!("kernel            {}", r.kernel),
    }
    println!("{:<17} {}", r.parameter_name, r.parameter_value);
    println!(
        "queries           {} raw, {} batched (group size {})",
        r.query_count_raw, r.query_count_batched, r.group_size
    );
    println!(
        "largest query     {} vertices, size {}",
        r.max_query_vertices, r.max_query_encoding_size
    );
    println!(
        "input             n_G = {}, m_G = {}, n = {}",
        r.n_g, r.m_g, r.n
    );
    if r.immediate_answer {
        println!("note              answered without queries");
    }
    if r.direct_solve {
        println!("note              solved directly, queries were not smaller than the input");
    }
    if let Some(v) = r.verified {
        println!("verified          {}", v.as_str());
    }
    println!("time              {} ms", r.wall_time_ms);
}

fn write_out(
    path: Option<&Path>,
    f: impl FnOnce(&mut dyn Write) -> Result<(), PipelineError>,
) -> Result<(), PipelineError> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| PipelineError::Io {
                path: p.to_path_buf(),
                source: e,
            })?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|e| PipelineError::Io {
                path: p.to_path_buf(),
                source: e,
            })
        }
        None => f(&mut io::stdout().lock()),
    }
}

fn parse_kernels(names: &[String], d: usize) -> Result<Vec<Kernel>, PipelineError> {
    names.iter().map(|s| Kernel::parse(s.trim(), d)).collect()
}

fn execute(cmd: Command) -> Result<u8, PipelineError> {
    match cmd {
        Command::Run {
            file,
            k,
            kernel,
            d,
            c,
            verify,
            emit_queries: emit,
            json,
            no_timing,
        } => {
            let opts = RunOptions {
                kernel: Kernel::parse(&kernel, d)?,
                c,
                verify,
                timing: !no_timing,
            };
            let out = run_file(&file, k, &opts)?;
            if let Some(dir) = emit {
                emit_queries(&dir, &out)?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&out.report)?);
            } else {
                print_report(&out.report);
            }
            Ok(match out.report.verified {
                Some(Verification::Disagree) => EXIT_DISAGREE,
                _ => 0,
            })
        }
        Command::Bench {
            dir,
            kernels,
            cs,
            d,
            out,
            verify,
            no_timing,
        } => {
            let opts = BenchOptions {
                kernels: parse_kernels(&kernels, d)?,
                cs,
                verify,
                timing: !no_timing,
            };
            let outcome = bench(&dir, &opts)?;
            let json = out
                .as_ref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "json"));
            write_out(out.as_deref(), |w| {
                if json {
                    write_rows_json(&outcome.rows, w)
                } else {
                    write_rows_csv(&outcome.rows, w)
                }
            })?;
            for f in &outcome.failures {
                eprintln!("error: {}: {}", f.file, f.message);
            }
            Ok(outcome
                .failures
                .iter()
                .map(|f| match f.kind {
                    FailureKind::Unreadable => EXIT_INPUT,
                    FailureKind::Disagree | FailureKind::Expected => EXIT_DISAGREE,
                    FailureKind::Invariant => EXIT_INVARIANT,
                })
                .max()
                .unwrap_or(0))
        }
        Command::Gen {
            family,
            n,
            seed,
            p,
            d,
            k,
            extra,
            format,
            out,
            record_k,
        } => {
            let family: Family = family.parse()?;
            let generated = generate(family, n, seed, &FamilyParams { p, d, k, extra });
            let text = match format {
                Format::El => to_edge_list(&generated.graph),
                Format::Dimacs => to_dimacs(&generated.graph),
            };
            let Some(path) = out else {
                print!("{text}");
                return Ok(0);
            };
            fs::write(&path, text).map_err(|e| PipelineError::Io {
                path: path.clone(),
                source: e,
            })?;
            let entry_k = match (&generated.planted, record_k) {
                (_, Some(k)) => Some(k),
                (Some(planted), None) if !planted.is_empty() => Some(planted.len()),
                _ => None,
            };
            if let Some(entry_k) = entry_k {
                let dir = path
                    .parent()
                    .filter(|p| !p.as_os_str().is_empty())
                    .unwrap_or(Path::new("."));
                let mut manifest = CorpusManifest::load_or_new(dir)?;
                let planted_k = generated.planted.as_ref().map_or(0, Vec::len);
                manifest.upsert(CorpusEntry {
                    file: path
                        .file_name()
                        .expect("written file has a name")
                        .to_string_lossy()
                        .into_owned(),
                    k: entry_k,
                    family: Some(family),
                    seed: Some(seed),
                    expected: (planted_k >= entry_k).then_some(Answer::Yes),
                });
                manifest.save(dir)?;
            }
            Ok(0)
        }
        Command::GenCorpus {
            dir,
            seed,
            sizes,
            per_family,
        } => {
            let spec = CorpusSpec {
                seed,
                sizes,
                per_family,
                ..CorpusSpec::default()
            };
            let manifest = generate_corpus(&dir, &spec)?;
            println!(
                "wrote {} graphs to {}",
                manifest.instances.len(),
                dir.display()
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
