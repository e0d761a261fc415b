use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use schurmatch_cli::checks::{run_all, VerifyBounds};
use schurmatch_cli::commands::{self, ExpandTarget};
use schurmatch_cli::config::{OutputFormat, RunConfig};
use schurmatch_cli::report::{write_verify_report, VerifyReport};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

/// Exact combinatorics of matchings: short chords, Schur expansions, the
/// core bijection, move classes, pattern avoidance, Bessel identities, and
/// the Schreier graph of adjacent transpositions on perfect matchings.
#[derive(Parser)]
#[command(name = "schurmatch", version)]
struct Cli {
    /// Directory for per-shape descent-vector cache files
    /// (default: in-memory only).
    #[arg(long, global = true, env = "SCHURMATCH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads (0 or absent = automatic).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized-order reduction checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Bound for full sweeps over matchings (hard guard 16).
    #[arg(long, global = true, default_value_t = 12)]
    max_n: usize,

    /// Bound for the Schreier graph vertex count (hard guard 14).
    #[arg(long = "max-2n", global = true, default_value_t = 12)]
    max_2n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the matchings on [N] with f unmatched vertices.
    Enumerate { n: usize, f: usize },
    /// Short-chord set of a matching, e.g. "{(1,3),(2,6),(4,5)}".
    Short { matching: String },
    /// Core and stable vertices of a matching.
    Core { matching: String },
    /// Core and two-row tableau of a matching.
    Forward { matching: String },
    /// Rebuild the matching from a short-chord-free core and a two-row
    /// tableau, e.g. inverse "{(1,3),(2,4)}" "[1,2,3,4,7,8,10/5,6,9]".
    Inverse { core: String, tableau: String },
    /// Move classes of M_{N,f}: one row per class with core, size, shape.
    Classes { n: usize, f: usize },
    /// Schur-expand the short-chord vector of M_{N,f} (--set matchings) or
    /// the descent vector of the tableaux of a shape (--set syt).
    Expand {
        #[arg(long, default_value = "matchings")]
        set: String,
        #[arg(long = "N", alias = "n")]
        n: Option<usize>,
        #[arg(long)]
        f: Option<usize>,
        /// Shape for --set syt, e.g. "3,3".
        #[arg(long)]
        shape: Option<String>,
    },
    /// Bessel polynomial theta_n and its coefficients at x = -1.
    Bessel {
        n: usize,
        /// Also recount the distribution by brute force over matchings.
        #[arg(long)]
        brute_force: bool,
    },
    /// Matchings of M_{N,f} avoiding every given pattern, with the Schur
    /// expansion of the avoider set.
    Avoid {
        n: usize,
        f: usize,
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
    },
    /// Partition M_{N,f} by an intersection invariant and expand each cell.
    Refine {
        n: usize,
        f: usize,
        /// iso-class, crossing, pair-count, intersecting-chords, or max-I.
        #[arg(long)]
        key: String,
    },
    /// Build the Schreier graph on perfect matchings of [2n].
    Schreier {
        n2: usize,
        /// Emit the graph in DOT format (edges labeled by generator).
        #[arg(long, value_parser = ["dot"])]
        export: Option<String>,
        /// Drop loop edges from the DOT export.
        #[arg(long)]
        omit_loops: bool,
        /// Print ascent/descent/loop sets of one vertex instead.
        #[arg(long)]
        stats: Option<String>,
    },
    /// Compare the ascent and descent distributions over all of PM_{2n}.
    Conjecture { n2: usize },
    /// Run the whole verification suite within the configured bounds.
    VerifyAll,
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let cfg = RunConfig {
        cache_dir: cli.cache_dir,
        threads: cli.threads,
        format: cli.format.into(),
        seed: cli.seed,
        max_n: cli.max_n,
        max_2n: cli.max_2n,
    };
    cfg.validate()?;
    let pool = cfg.thread_pool()?;
    let stdout = std::io::stdout();
    pool.install(move || -> anyhow::Result<bool> {
        let mut out = stdout.lock();
        match cli.command {
            Command::Enumerate { n, f } => commands::enumerate(&mut out, &cfg, n, f)?,
            Command::Short { matching } => {
                commands::reject_csv(&cfg, "short")?;
                commands::short(&mut out, &cfg, &matching)?
            }
            Command::Core { matching } => {
                commands::reject_csv(&cfg, "core")?;
                commands::core(&mut out, &cfg, &matching)?
            }
            Command::Forward { matching } => {
                commands::reject_csv(&cfg, "forward")?;
                commands::forward_cmd(&mut out, &cfg, &matching)?
            }
            Command::Inverse { core, tableau } => {
                commands::reject_csv(&cfg, "inverse")?;
                commands::inverse_cmd(&mut out, &cfg, &core, &tableau)?
            }
            Command::Classes { n, f } => commands::classes(&mut out, &cfg, n, f)?,
            Command::Expand { set, n, f, shape } => {
                commands::reject_csv(&cfg, "expand")?;
                let target = match set.as_str() {
                    "matchings" => {
                        let n = n.ok_or_else(|| anyhow::anyhow!("--set matchings needs --N"))?;
                        let f = f.ok_or_else(|| anyhow::anyhow!("--set matchings needs --f"))?;
                        ExpandTarget::Matchings { n, f }
                    }
                    "syt" => {
                        let shape = shape
                            .ok_or_else(|| anyhow::anyhow!("--set syt needs --shape"))?
                            .parse()?;
                        ExpandTarget::Syt { shape }
                    }
                    other => anyhow::bail!("unknown set '{other}'; expected matchings or syt"),
                };
                commands::expand(&mut out, &cfg, target)?
            }
            Command::Bessel { n, brute_force } => {
                commands::reject_csv(&cfg, "bessel")?;
                commands::bessel(&mut out, &cfg, n)?;
                if brute_force {
                    commands::bessel_brute_force(&mut out, n)?;
                }
            }
            Command::Avoid { n, f, patterns } => {
                commands::avoid(&mut out, &cfg, n, f, &patterns)?
            }
            Command::Refine { n, f, key } => commands::refine(&mut out, &cfg, n, f, &key)?,
            Command::Schreier {
                n2,
                export,
                omit_loops,
                stats,
            } => {
                if let Some(text) = stats {
                    commands::reject_csv(&cfg, "schreier --stats")?;
                    commands::schreier_stats(&mut out, &cfg, n2, &text)?
                } else {
                    commands::reject_csv(&cfg, "schreier")?;
                    commands::schreier(&mut out, &cfg, n2, export.is_some(), omit_loops)?
                }
            }
            Command::Conjecture { n2 } => {
                commands::reject_csv(&cfg, "conjecture")?;
                commands::conjecture(&mut out, &cfg, n2)?
            }
            Command::VerifyAll => {
                let bounds = VerifyBounds {
                    max_n: cfg.max_n,
                    max_2n: cfg.max_2n,
                    seed: cfg.seed,
                };
                let cache = cfg.open_cache()?;
                let started = Instant::now();
                let mut checks = Vec::new();
                for (i, check) in run_all(&bounds, &cache).into_iter().enumerate() {
                    // Timings are diagnostic only; they stay off the report
                    // so its bytes are reproducible.
                    eprintln!(
                        "[{}] {} {} after {:.1?}",
                        i + 1,
                        check.id,
                        if check.passed { "pass" } else { "FAIL" },
                        started.elapsed()
                    );
                    checks.push(check);
                }
                let passed = checks.iter().all(|c| c.passed);
                let report = VerifyReport {
                    op: "verify-all",
                    bounds: format!("N <= {}, 2n <= {}", bounds.max_n, bounds.max_2n),
                    seed: bounds.seed,
                    passed,
                    checks: &checks,
                };
                write_verify_report(&mut out, cfg.format, &report)?;
                out.flush()?;
                return Ok(passed);
            }
        }
        out.flush()?;
        Ok(true)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
