//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check finds violations (the witnesses
//! are still written), 2 on usage, budget or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dimension::{count_in_boxes, fit_dimension, write_csv, Generator};
use crate::error::{Error, Result};
use crate::format::{read_set_file, write_set};
use crate::fractal::{build_xinf_box, build_xk, build_xplus_box, unit_vectors};
use crate::gf2::laplace_symbol;
use crate::lattice::{dilate, LatticeBox, LatticePoint};
use crate::minweight::{min_support_with_budget, SOLUTION_BUDGET};
use crate::verify::{check_with, Predicate, Strategy};
use crate::walk::{collision_census, lemma42_trials, write_census_csv, write_trials_csv, CensusConfig, Walker};

#[derive(Parser, Debug)]
#[command(name = "z2harm", version, about = "Fractal supports of Z2-harmonic functions on the integer lattice")]
struct Cli {
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a fractal point set.
    Generate {
        #[command(subcommand)]
        set: GenerateCmd,
    },
    /// Check a predicate on a set file and list the failing points.
    Verify(VerifyArgs),
    /// GF(2) Laurent polynomial computations.
    Poly {
        #[command(subcommand)]
        op: PolyCmd,
    },
    /// Box counts and log-log slope.
    Dimension(DimensionArgs),
    /// Smallest pinned harmonic support inside a box.
    Minweight(MinweightArgs),
    /// Supportive walks on X_inf.
    Walk {
        #[command(subcommand)]
        op: WalkCmd,
    },
}

#[derive(Subcommand, Debug)]
enum GenerateCmd {
    /// X_k.
    Xk {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// X_inf within max-distance `radius` of the origin.
    Xinf {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// X_plus within max-distance `radius` of the origin.
    Xplus {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PredicateArg {
    Harmonic,
    Cross,
    Supportive,
    Harmonic2,
}

impl From<PredicateArg> for Predicate {
    fn from(p: PredicateArg) -> Self {
        match p {
            PredicateArg::Harmonic => Predicate::Harmonic,
            PredicateArg::Cross => Predicate::Cross,
            PredicateArg::Supportive => Predicate::Supportive,
            PredicateArg::Harmonic2 => Predicate::Harmonic2,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Auto,
    Dense,
    Footprint,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Dense => Strategy::Dense,
            StrategyArg::Footprint => Strategy::Footprint,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    predicate: PredicateArg,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    radius: u64,
    /// Region centre, e.g. `3,0,-1`; the origin by default.
    #[arg(long, allow_hyphen_values = true)]
    center: Option<LatticePoint>,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// Support of S^n.
    Spow {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare S^(2^k - 1) with X_k and S^(2^k) with the 2^k-scaled unit vectors.
    CheckXk {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GeneratorArg {
    Xinf,
    Xk,
    Xplus,
    File,
}

#[derive(Args, Debug)]
struct DimensionArgs {
    #[arg(long, value_enum)]
    generator: GeneratorArg,
    /// Required except for `--generator file`, where it defaults to the file's dimension.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    radii: Vec<u64>,
    /// Fixed level for `--generator xk`; by default each radius gets its own truncation level.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MinweightArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    radius: u64,
    /// Cap on the number of solutions enumerated.
    #[arg(long, default_value_t = SOLUTION_BUDGET)]
    budget: u128,
    /// Write the witness set here instead of after the summary.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum WalkCmd {
    /// Random long walks, each checked against its displacement guarantees.
    Lemma42 {
        #[arg(long)]
        d: usize,
        /// Radius of the X_inf truncation the walks run in.
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        max_r: u64,
        #[arg(long)]
        seed: u64,
        /// Starts are drawn from X_inf within this distance of the origin.
        #[arg(long, default_value_t = 4)]
        start_radius: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Endpoints of chained walks over k-good direction sequences.
    Census {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        radius: u64,
        /// Full enumeration up to this many sequences, otherwise this many samples.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Start point, e.g. `1,0`; the first unit vector by default.
        #[arg(long, allow_hyphen_values = true)]
        start: Option<LatticePoint>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command against the process streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = BufWriter::new(std::io::stdout());
    let mut err = std::io::stderr();
    let code = run_with(args, &mut out, &mut err);
    if out.flush().is_err() {
        return 2;
    }
    code
}

/// As [`run`], with explicit output and diagnostic streams.
pub fn run_with<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write + Send,
    E: Write + Send,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code();
        }
    };
    let threads = cli.threads.unwrap_or_else(rayon::current_num_threads);
    let _ = writeln!(
        err,
        "# z2harm {} threads={} config={:?}",
        env!("CARGO_PKG_VERSION"),
        threads,
        cli.command
    );
    let result = match cli.threads {
        Some(0) => Err(Error::InvalidArgument("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start thread pool: {e}")))
            .and_then(|pool| pool.install(|| execute(&cli.command, out, err))),
        None => execute(&cli.command, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Runs `body` against the file at `path`, or against `out` when no path is given.
fn with_output<O: Write, T>(path: Option<&Path>, out: &mut O, body: impl FnOnce(&mut dyn Write) -> Result<T>) -> Result<T> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            let v = body(&mut w)?;
            w.flush()?;
            Ok(v)
        }
        None => body(out),
    }
}

fn origin_box(d: usize, radius: u64) -> Result<LatticeBox> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    Ok(LatticeBox::centered(d, radius))
}

fn execute<O: Write, E: Write>(command: &Command, out: &mut O, err: &mut E) -> Result<i32> {
    match command {
        Command::Generate { set } => {
            let (points, path) = match set {
                GenerateCmd::Xk { d, k, out } => (build_xk(*d, *k)?.points, out),
                GenerateCmd::Xinf { d, radius, out } => (build_xinf_box(*d, *radius)?, out),
                GenerateCmd::Xplus { d, radius, out } => (build_xplus_box(*d, *radius)?, out),
            };
            with_output(path.as_deref(), out, |mut w| write_set(&mut w, &points))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let set = read_set_file(&args.input)?;
            let center = args.center.clone().unwrap_or_else(|| LatticePoint::origin(set.dim()));
            let region = LatticeBox::new(center, args.radius);
            let report = check_with(args.predicate.into(), &set, &region, args.strategy.into())?;
            with_output(args.out.as_deref(), out, |mut w| report.write(&mut w))?;
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Poly { op } => match op {
            PolyCmd::Spow { d, n, out: path } => {
                origin_box(*d, 0)?;
                let p = laplace_symbol(*d).pow(*n)?;
                with_output(path.as_deref(), out, |mut w| write_set(&mut w, p.support()))?;
                Ok(0)
            }
            PolyCmd::CheckXk { d, k } => {
                let xk = build_xk(*d, *k)?.points;
                let s = laplace_symbol(*d);
                let odd = s.pow((1u64 << k) - 1)?;
                let even = s.pow(1u64 << k)?;
                let scaled = dilate(&unit_vectors(*d), 1i64 << k)?;
                let odd_ok = odd.support() == &xk;
                let even_ok = even.support() == &scaled;
                writeln!(out, "support(S^(2^{k}-1)) == X_{k}: {odd_ok} ({} points)", xk.len())?;
                writeln!(out, "support(S^(2^{k})) == 2^{k}*units: {even_ok}")?;
                Ok(if odd_ok && even_ok { 0 } else { 1 })
            }
        },
        Command::Dimension(args) => {
            let (generator, d) = match args.generator {
                GeneratorArg::File => {
                    let path = args
                        .input
                        .as_ref()
                        .ok_or_else(|| Error::InvalidArgument("--generator file needs --in".into()))?;
                    let set = read_set_file(path)?;
                    let d = args.d.unwrap_or(set.dim());
                    (Generator::Set(set), d)
                }
                g => {
                    let d = args
                        .d
                        .ok_or_else(|| Error::InvalidArgument("--d is required for generated sets".into()))?;
                    origin_box(d, 0)?;
                    let gen = match g {
                        GeneratorArg::Xinf => Generator::Xinf,
                        GeneratorArg::Xplus => Generator::Xplus,
                        _ => Generator::Xk { k: args.k },
                    };
                    (gen, d)
                }
            };
            let series = count_in_boxes(&generator, d, &args.radii)?;
            let fit = match fit_dimension(&series) {
                Ok(f) => Some(f),
                Err(Error::DegenerateFit(why)) => {
                    writeln!(err, "warning: no slope fitted: {why}")?;
                    None
                }
                Err(e) => return Err(e),
            };
            with_output(args.out.as_deref(), out, |mut w| write_csv(&mut w, &series, fit.as_ref()))?;
            Ok(0)
        }
        Command::Minweight(args) => {
            origin_box(args.d, 0)?;
            let best = min_support_with_budget(args.d, args.radius, args.budget)?;
            writeln!(out, "{}", best.summary_line())?;
            writeln!(out, "# relaxed: only points strictly inside the box are constrained, so this is a lower bound")?;
            match &args.out {
                Some(p) => with_output(Some(p), out, |mut w| write_set(&mut w, &best.witness))?,
                None => write_set(out, &best.witness)?,
            }
            Ok(0)
        }
        Command::Walk { op } => match op {
            WalkCmd::Lemma42 {
                d,
                radius,
                trials,
                max_r,
                seed,
                start_radius,
                out: path,
            } => {
                let region = origin_box(*d, *radius)?;
                let set = build_xinf_box(*d, *radius)?;
                let walker = Walker::new(&set, region)?;
                let results = lemma42_trials(&walker, *trials, *max_r, *start_radius, *seed)?;
                with_output(path.as_deref(), out, |mut w| write_trials_csv(&mut w, &results))?;
                Ok(if results.iter().all(|t| t.holds()) { 0 } else { 1 })
            }
            WalkCmd::Census {
                d,
                n,
                k,
                radius,
                budget,
                seed,
                start,
                out: path,
            } => {
                let region = origin_box(*d, *radius)?;
                let set = build_xinf_box(*d, *radius)?;
                let x = match start {
                    Some(p) => p.clone(),
                    None => LatticePoint::unit(*d, 0, true),
                };
                let walker = Walker::new(&set, region)?;
                let config = CensusConfig {
                    n: *n,
                    k: *k,
                    sample_budget: *budget,
                    seed: *seed,
                };
                let census = collision_census(&walker, &x, &config)?;
                with_output(path.as_deref(), out, |mut w| write_census_csv(&mut w, &census))?;
                Ok(if census.is_consistent() { 0 } else { 1 })
            }
        },
    }
}
