use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use leafdiam::oracle::{self, build_table_capped, verify_sweep_with, Formulas};
use leafdiam::{
    is_diametral_by_lemma1, lesniak_bound, max_diameter, max_diameter_tree, max_leaf_tree,
    max_leaves, min_diameter, min_diameter_spider, min_leaf_spider, min_leaves, read_tree,
    spiderize, Error, Tree, TreePath,
};

/// Extremal leaf-count and diameter trade-offs in trees.
#[derive(Debug, Parser)]
#[command(name = "leafdiam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum number of leaves of a tree with order N and diameter D.
    MinLeaves { n: usize, d: usize },
    /// The lower bound ceil(2(N-1)/D) on the minimum number of leaves.
    LesniakBound { n: usize, d: usize },
    /// Maximum number of leaves of a tree with order N and diameter D.
    MaxLeaves { n: usize, d: usize },
    /// Minimum diameter of a tree with order N and exactly F leaves.
    MinDiameter { n: usize, f: usize },
    /// Maximum diameter of a tree with order N and exactly F leaves.
    MaxDiameter { n: usize, f: usize },
    /// Print a tree attaining one of the extremal values.
    Witness(WitnessArgs),
    /// Rewire a tree into a spider with the same order, diameter and leaves.
    Spiderize {
        /// Append one `# step ...` comment line per rewiring step.
        #[arg(long)]
        trace: bool,
        /// Tree file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Test whether a path is diametral using hanging depths along it.
    CheckDiametral {
        /// Comma-separated vertex ids, e.g. "0,1,2".
        #[arg(long)]
        path: String,
        input: Option<PathBuf>,
    },
    /// Compare every formula against exhaustive enumeration.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest order allowed (at most 11).
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
    },
    /// Print the enumerated extremal table for one order.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("kind").required(true)))]
struct WitnessArgs {
    #[arg(long, num_args = 2, value_names = ["N", "D"], group = "kind")]
    min_leaves: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["N", "F"], group = "kind")]
    min_diameter: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["N", "D"], group = "kind")]
    max_leaves: Option<Vec<usize>>,
    #[arg(long, num_args = 2, value_names = ["N", "F"], group = "kind")]
    max_diameter: Option<Vec<usize>>,
    /// Graphviz output instead of the edge-list format.
    #[arg(long)]
    dot: bool,
}

enum Failure {
    Invalid(String),
    Discrepancy(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn read_input(input: Option<&PathBuf>) -> Result<Tree, Failure> {
    let text = match input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            text
        }
    };
    Ok(read_tree(&text)?)
}

fn witness(args: &WitnessArgs) -> Result<Tree, Error> {
    if let Some(v) = &args.min_leaves {
        let (n, d) = (v[0], v[1]);
        if d == 1 {
            // The only tree of diameter 1.
            min_leaves(n, d)?;
            return Tree::path(2);
        }
        return Ok(min_leaf_spider(n, d)?.to_tree());
    }
    if let Some(v) = &args.min_diameter {
        return Ok(min_diameter_spider(v[0], v[1])?.to_tree());
    }
    if let Some(v) = &args.max_leaves {
        return max_leaf_tree(v[0], v[1]);
    }
    let v = args
        .max_diameter
        .as_ref()
        .expect("clap enforces one witness kind");
    max_diameter_tree(v[0], v[1])
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Invalid("--jobs must be at least 1".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn warn_cap(cap: usize) {
    if cap > oracle::DEFAULT_CAP && cap <= oracle::HARD_CAP {
        eprintln!(
            "warning: cap {cap} allows up to {cap}^{} sequences per order",
            cap - 2
        );
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let number = |v: leafdiam::Result<usize>| Ok(format!("{}\n", v?));
    match cli.command {
        Command::MinLeaves { n, d } => number(min_leaves(n, d)),
        Command::LesniakBound { n, d } => number(lesniak_bound(n, d)),
        Command::MaxLeaves { n, d } => number(max_leaves(n, d)),
        Command::MinDiameter { n, f } => number(min_diameter(n, f)),
        Command::MaxDiameter { n, f } => number(max_diameter(n, f)),
        Command::Witness(args) => {
            let t = witness(&args)?;
            Ok(if args.dot { t.to_dot() } else { t.to_string() })
        }
        Command::Spiderize { trace, input } => {
            let t = read_input(input.as_ref())?;
            let run = spiderize(&t)?;
            let mut out = run.result.to_string();
            if trace {
                for step in &run.steps {
                    out.push_str(&format!("{step}\n"));
                }
            }
            Ok(out)
        }
        Command::CheckDiametral { path, input } => {
            let t = read_input(input.as_ref())?;
            let vertices = path
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Invalid(format!("invalid --path {path:?}")))?;
            let p = TreePath::new(&t, vertices)?;
            Ok(format!("{}\n", is_diametral_by_lemma1(&t, &p)?))
        }
        Command::Verify { max_n, jobs, cap } => {
            warn_cap(cap);
            let report = with_jobs(jobs, || verify_sweep_with(max_n, cap, &Formulas::default()))??;
            if report.is_clean() {
                Ok(report.to_string())
            } else {
                Err(Failure::Discrepancy(report.to_string()))
            }
        }
        Command::Table { n, csv, jobs, cap } => {
            warn_cap(cap);
            let table = with_jobs(jobs, || build_table_capped(n, cap))??;
            let mut out = String::new();
            if csv {
                out.push_str("n,d,min_leaves,max_leaves\n");
                for (d, e) in &table.by_diameter {
                    out.push_str(&format!("{n},{d},{},{}\n", e.min, e.max));
                }
                out.push_str("n,f,min_diam,max_diam\n");
                for (f, e) in &table.by_leaves {
                    out.push_str(&format!("{n},{f},{},{}\n", e.min, e.max));
                }
            } else {
                out.push_str(&format!("order {n}: {} labeled trees\n", table.trees));
                out.push_str(&format!(
                    "{:>4} {:>10} {:>10}\n",
                    "d", "min_leaves", "max_leaves"
                ));
                for (d, e) in &table.by_diameter {
                    out.push_str(&format!("{d:>4} {:>10} {:>10}\n", e.min, e.max));
                }
                out.push_str(&format!(
                    "{:>4} {:>10} {:>10}\n",
                    "f", "min_diam", "max_diam"
                ));
                for (f, e) in &table.by_leaves {
                    out.push_str(&format!("{f:>4} {:>10} {:>10}\n", e.min, e.max));
                }
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Discrepancy(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
    }
}
