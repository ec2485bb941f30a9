use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use gpiq_core::mc::{estimate_prob, MC_CSV_HEADER};
use gpiq_core::meijer::exact::{jk_gamma_form, jk_pi_form};
use gpiq_core::meijer::{
    check_3f2_identity, derivative_recursion_check, meijer_g_jk, meijer_g_unit,
};
use gpiq_core::prob::{plot_series, probability_table, KernelCache, TABLE_CSV_HEADER};
use gpiq_core::{JkIndex, MeijerParams};

mod svg;

/// Exact Meijer G kernel values and the probability that every eigenvalue of
/// a product of two real Gaussian matrices is real.
#[derive(Debug, Parser)]
#[command(name = "gpiq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact kernel entry G(j, k) and its value to 6 significant digits.
    EvalG {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// One table row: N, exact probability, 6-digit value, ratio statistic.
    Prob {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// CSV rows `N,exact,float,ratio` for N = 1..=nmax.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        nmax: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Monte Carlo estimate of the all-real probability for dimension n.
    Mc {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Base seed; per-trial streams are derived from it.
        #[arg(long, env = "GPIQ_SEED", default_value_t = 0)]
        seed: u64,
        /// Worker threads [default: available parallelism].
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exact and numerical identity checks for 1 <= j <= J, 1 <= k <= K.
    CheckIdentities {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Absolute tolerance for the 3F2 sum residual.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// log10 p_N and the large-N asymptote for N = 1..=nmax.
    Plot {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutArg {
    fn open(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

/// Relative tolerance of the derivative recursion check.
const DERIVATIVE_TOL: f64 = 1e-6;

fn six(x: f64) -> String {
    gpiq_core::exact::Scientific::from_f64(x, 6).map_or_else(|| x.to_string(), |s| s.to_string())
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::EvalG { j, k } => {
            let value = meijer_g_jk(JkIndex::new(j, k)?)?;
            println!("{value} = {}", value.to_float(6));
        }
        Command::Prob { n } => {
            let rows = probability_table(n, &KernelCache::new())?;
            let row = &rows[n as usize - 1];
            let [_, _, float, ratio] = row.csv_fields();
            println!("{}", TABLE_CSV_HEADER.join("\t"));
            println!(
                "{n}\t{}\t{float}\t{ratio}",
                row.probability.value.display_pow2()
            );
        }
        Command::Table { nmax, out } => {
            let rows = probability_table(nmax, &KernelCache::new())?;
            let mut w = csv::Writer::from_writer(out.open()?);
            w.write_record(TABLE_CSV_HEADER)?;
            for row in &rows {
                w.write_record(row.csv_fields())?;
            }
            w.flush()?;
        }
        Command::Mc {
            n,
            trials,
            seed,
            workers,
            out,
        } => {
            let workers = match workers {
                Some(w) => w as usize,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let est = estimate_prob(n as usize, trials, seed, workers)?;
            let mut w = csv::Writer::from_writer(out.open()?);
            w.write_record(MC_CSV_HEADER)?;
            w.write_record(est.csv_fields())?;
            w.flush()?;
        }
        Command::CheckIdentities { j, k, tol } => {
            if tol.is_nan() || tol <= 0.0 {
                bail!(gpiq_core::Error::Domain(format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
            return check_identities(j, k, tol);
        }
        Command::Plot { nmax, format, out } => {
            let points = plot_series(nmax, &KernelCache::new())?;
            let mut sink = out.open()?;
            match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(sink);
                    w.write_record(["N", "log10_exact", "log10_asymptotic"])?;
                    for p in &points {
                        w.write_record([
                            p.n.to_string(),
                            six(p.log10_exact),
                            six(p.log10_asymptotic),
                        ])?;
                    }
                    w.flush()?;
                }
                Format::Svg => {
                    sink.write_all(svg::render(&points).as_bytes())?;
                    sink.flush()?;
                }
            }
        }
    }
    Ok(true)
}

struct Report {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    worst: f64,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report {
            name,
            cases: 0,
            failures: Vec::new(),
            worst: 0.0,
        }
    }

    fn print(&self) -> bool {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{status}\t{}\t{} cases\tworst {:.3e}",
            self.name, self.cases, self.worst
        );
        for f in &self.failures {
            println!("\t{f}");
        }
        self.failures.is_empty()
    }
}

fn check_identities(max_j: u32, max_k: u32, tol: f64) -> anyhow::Result<bool> {
    let mut forms = Report::new("gamma-sum form = pi^2 form");
    let mut unit = Report::new("unit-argument G = G(j,k)");
    let mut series = Report::new("3F2 sum rule (absolute residual)");
    let mut derivative = Report::new("derivative recursion (relative)");
    for j in 1..=max_j {
        for k in 1..=max_k {
            let idx = JkIndex::new(j, k)?;
            let pi = jk_pi_form(idx);
            forms.cases += 1;
            let gamma = jk_gamma_form(idx)?;
            if gamma != pi {
                forms.failures.push(format!("({j},{k}): {gamma} vs {pi}"));
            }
            unit.cases += 1;
            let u = meijer_g_unit(&MeijerParams::from_jk(idx))?;
            if u != pi {
                unit.failures.push(format!("({j},{k}): {u} vs {pi}"));
            }
            series.cases += 1;
            let c = check_3f2_identity(idx, tol)?;
            series.worst = series.worst.max(c.residual);
            if !c.passed {
                series
                    .failures
                    .push(format!("({j},{k}): residual {:e}", c.residual));
            }
            let base = MeijerParams {
                n: 0,
                ..MeijerParams::from_jk(idx)
            };
            for z in [0.5, 0.9, 1.2] {
                derivative.cases += 1;
                let c = derivative_recursion_check(&base, z, 1e-5, DERIVATIVE_TOL)?;
                derivative.worst = derivative.worst.max(c.relative);
                if !c.passed {
                    derivative
                        .failures
                        .push(format!("({j},{k}) z = {z}: relative {:e}", c.relative));
                }
            }
        }
    }
    let mut ok = true;
    for r in [&forms, &unit, &series, &derivative] {
        ok &= r.print();
    }
    Ok(ok)
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<gpiq_core::Error>() {
        Some(e) if e.is_numeric() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: identity checks failed");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
