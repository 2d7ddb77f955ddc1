use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nilcommute::commutant::PatternEntry;
use nilcommute::exec::with_jobs;
use nilcommute::field::{next_prime, parse_matrix};
use nilcommute::nb_digraph::{build, vertex_labels};
use nilcommute::oracle::{shape_set, ValueMode};
use nilcommute::partitions::basili_indices;
use nilcommute::path_cover::verify_gansner_saks;
use nilcommute::suite::example_suite;
use nilcommute::{
    b_path, max_nilpotency_index, rp_of_partition, rp_set, rpt, witness_pattern, AcyclicDigraph,
    CommutantPattern, Execution, Partition, Prime,
};
use rand::Rng;

#[derive(Parser)]
#[command(
    name = "nilcommute",
    version,
    about = "Nilpotent matrices commuting with a nilpotent Jordan matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest nilpotency index in the nilpotent commutant, with candidates.
    Maxnil {
        partition: Partition,
        #[arg(long)]
        json: bool,
    },
    /// The balanced partitions rpt(n, t) for t = 1..n, or a single t.
    Rp { n: usize, t: Option<usize> },
    /// The set R(n) in reverse-lexicographic order.
    Rpset {
        n: usize,
        /// Exit 1 unless this partition belongs to R(n).
        #[arg(long, value_name = "PARTITION")]
        check: Option<Partition>,
    },
    /// The set R(mu) of merged balanced partitions.
    Rpof { partition: Partition },
    /// Basili's index count r_B and the indices k_1 < k_2 < ...
    Basili { partition: Partition },
    /// Toeplitz parameters of the nilpotent commutant as JSON.
    Pattern { partition: Partition },
    /// Jordan shape of a nilpotent integer matrix read from a file.
    Shape {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Delta sequence of a digraph file via path covers.
    Delta {
        file: PathBuf,
        /// Also print d_hat_0, ..., d_hat_n.
        #[arg(long)]
        profile: bool,
        /// Write the digraph in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Number of vertices on a longest path of a digraph file.
    Longest { file: PathBuf },
    /// The B_k-path of a partition: s, w, z, V_B, vertices and length.
    Bpath {
        partition: Partition,
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// A parameter set whose digraph attains the maximal index.
    Witness {
        partition: Partition,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Shape census of the commutant by sampling or enumeration.
    Sample(SampleArgs),
    /// Compare Delta of a digraph with shapes of random matrices on its support.
    VerifyGs {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run every worked example and print a pass/fail table.
    PaperSuite {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Digraph of a partition and a parameter set given as pattern JSON.
    Nbgraph {
        partition: Partition,
        #[arg(long, value_name = "FILE")]
        params: PathBuf,
        /// Print DOT instead of the edge list.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// A prime below 2^32, or "random" for a fresh 31-bit prime.
    #[arg(long, default_value = "2147483647")]
    prime: String,
}

impl FieldArgs {
    fn prime(&self) -> Result<Prime> {
        if self.prime == "random" {
            let start = rand::rng().random_range(1u64 << 30..1u64 << 31);
            return Ok(next_prime(start)?);
        }
        let value: u64 = self
            .prime
            .parse()
            .with_context(|| format!("invalid prime `{}`", self.prime))?;
        Prime::new(value).with_context(|| format!("invalid prime `{}`", self.prime))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Random,
    Exhaustive,
    Subsample,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_name = "PARTITION")]
    shape: Partition,
    #[arg(long, value_enum, default_value = "random")]
    mode: Mode,
    /// Integer values for exhaustive and subsample modes.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "-1,0,1"
    )]
    values: Vec<i64>,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draws in random and subsample modes.
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Largest number of assignments exhaustive mode may enumerate.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    jobs: Option<usize>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))
}

fn jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => with_jobs(j, f),
        None => f(),
    }
}

fn header(p: Prime, seed: u64) -> String {
    format!("# prime={p} seed={seed}")
}

fn load_digraph(path: &Path) -> Result<AcyclicDigraph> {
    AcyclicDigraph::parse(&read(path)?).with_context(|| format!("in `{}`", path.display()))
}

/// Returns whether every verification in the command held.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Maxnil { partition, json } => {
            let report = max_nilpotency_index(&partition);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{}", report.value);
                println!("i\tr\tvalue");
                for c in &report.candidates {
                    println!("{}\t{}\t{}", c.i, c.r, c.value);
                }
            }
        }
        Command::Rp { n, t } => match t {
            Some(t) => println!("{}", rpt(n, t)?),
            None => {
                if n == 0 {
                    bail!("invalid n `0`");
                }
                for t in 1..=n {
                    println!("{}", rpt(n, t)?);
                }
            }
        },
        Command::Rpset { n, check } => {
            let set = rp_set(n);
            match check {
                Some(m) => {
                    let member = set.contains(&m);
                    println!("{}", if member { "member" } else { "not a member" });
                    return Ok(member);
                }
                None => set.iter().for_each(|m| println!("{m}")),
            }
        }
        Command::Rpof { partition } => {
            for m in rp_of_partition(&partition) {
                println!("{m}");
            }
        }
        Command::Basili { partition } => {
            let (r, ks) = basili_indices(&partition);
            let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
            println!("r_B={r}");
            println!("k={}", ks.join(","));
        }
        Command::Pattern { partition } => {
            let entries = CommutantPattern::full(&partition).to_entries(None);
            println!("{}", serde_json::to_string_pretty(&entries)?);
        }
        Command::Shape { file, field } => {
            let p = field.prime()?;
            let m = parse_matrix(&read(&file)?, p)
                .with_context(|| format!("in `{}`", file.display()))?;
            println!("{}", m.shape()?);
        }
        Command::Delta { file, profile, dot } => {
            let g = load_digraph(&file)?;
            let d = g.delta_sequence();
            println!("{}", d.delta);
            if profile {
                let dhat: Vec<String> = d.dhat.iter().map(|x| x.to_string()).collect();
                println!("d_hat={}", dhat.join(","));
            }
            if let Some(path) = dot {
                fs::write(&path, g.to_dot(None))
                    .with_context(|| format!("cannot write `{}`", path.display()))?;
            }
        }
        Command::Longest { file } => println!("{}", load_digraph(&file)?.longest_path()),
        Command::Bpath { partition, k, json } => {
            let r = b_path(&partition, k)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                let list = |vs: &[nilcommute::BlockVertex]| {
                    vs.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("k\ts\tw\tz\tlength");
                println!("{}\t{}\t{}\t{}\t{}", r.k, r.width, r.w, r.z, r.length);
                println!("V_B: {}", list(&r.v_b));
                println!("vertices: {}", list(&r.table_listing()));
                println!("path: {}", list(&r.vertices));
            }
        }
        Command::Witness { partition, dot } => {
            let pattern = witness_pattern(&partition);
            let g = build(&pattern);
            let params: Vec<String> = pattern
                .params()
                .iter()
                .map(|q| format!("({},{},{})", q.x, q.y, q.k))
                .collect();
            println!("longest={}", g.longest_path());
            println!("params: {}", params.join(" "));
            if let Some(path) = dot {
                let labels = vertex_labels(&partition);
                fs::write(&path, g.to_dot(Some(&labels)))
                    .with_context(|| format!("cannot write `{}`", path.display()))?;
            }
        }
        Command::Sample(args) => return sample(args),
        Command::VerifyGs {
            file,
            trials,
            field,
            seed,
            jobs: j,
        } => {
            let g = load_digraph(&file)?;
            let p = field.prime()?;
            println!("{}", header(p, seed));
            let r = jobs(j, || {
                verify_gansner_saks(&g, p, trials, seed, Execution::Parallel)
            });
            println!(
                "delta={} shape={} trials={} violations={}",
                r.delta, r.shape, r.trials, r.violations
            );
            println!("{}", if r.agree { "agree" } else { "DISAGREE" });
            return Ok(r.agree);
        }
        Command::PaperSuite {
            field,
            seed,
            jobs: j,
        } => {
            let p = field.prime()?;
            println!("{}", header(p, seed));
            let checks = jobs(j, || example_suite(p, seed, Execution::Parallel));
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                println!("{mark}  {:width$}  {}", c.name, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", checks.len());
            return Ok(failed == 0);
        }
        Command::Nbgraph {
            partition,
            params,
            dot,
        } => {
            let text = read(&params)?;
            let entries: Vec<PatternEntry> = serde_json::from_str(&text)
                .with_context(|| format!("in `{}`", params.display()))?;
            let (pattern, _) = CommutantPattern::from_entries(&partition, &entries)?;
            let g = build(&pattern);
            if dot {
                print!("{}", g.to_dot(Some(&vertex_labels(&partition))));
            } else {
                print!("{}", g.to_text());
            }
        }
    }
    Ok(true)
}

fn sample(args: SampleArgs) -> Result<bool> {
    let p = args.field.prime()?;
    let mode = match args.mode {
        Mode::Random => ValueMode::Random,
        Mode::Exhaustive => ValueMode::Exhaustive(args.values.clone()),
        Mode::Subsample => ValueMode::Subsample(args.values.clone()),
    };
    let budget = match args.mode {
        Mode::Exhaustive => args.budget,
        _ => args.trials,
    };
    let head = header(p, args.seed);
    if args.json {
        eprintln!("{head}");
    } else {
        println!("{head}");
    }
    let report = jobs(args.jobs, || {
        shape_set(&args.shape, mode, budget, p, args.seed, Execution::Parallel)
    })?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json_value())?);
    } else {
        println!(
            "# trials={} shapes={}",
            report.trials,
            report.observed.len()
        );
        for (shape, w) in &report.observed {
            println!("{shape}\ttrial {}", w.trial);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
