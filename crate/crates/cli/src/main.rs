use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use grolat_cli::{emit_report, run_suite, Format, SuiteConfig, REGISTRY};
use grolat_core::pushforward::Mode;

#[derive(Parser)]
#[command(name = "grolat", version, about = "Exact checks of lattice-model and Grothendieck pushforward identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Sample,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite over a parameter sweep and write a report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        l_max: usize,
        /// Rows of the partition box for shape-ranging suites.
        #[arg(long, default_value_t = 3)]
        box_rows: usize,
        /// Columns of the partition box for shape-ranging suites.
        #[arg(long, default_value_t = 3)]
        box_cols: u32,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Record wall time per case (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print the suite registry.
    ListSuites,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::ListSuites => {
            for s in REGISTRY {
                println!("{:<20} {}", s.name, s.description);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            m_max,
            n_max,
            k_max,
            l_max,
            box_rows,
            box_cols,
            mode,
            trials,
            seed,
            out,
            format,
            timings,
        } => {
            let cfg = SuiteConfig {
                suite,
                m_max,
                n_max,
                k_max,
                l_max,
                box_rows,
                box_cols,
                mode: match mode {
                    ModeArg::Symbolic => Mode::Symbolic,
                    ModeArg::Sample => Mode::Sample,
                },
                trials,
                seed,
                timings,
            };
            let report = match run_suite(&cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("usage error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let bytes = emit_report(
                &report,
                match format {
                    FormatArg::Json => Format::Json,
                    FormatArg::Markdown => Format::Markdown,
                },
            );
            match out {
                Some(path) => std::fs::write(&path, &bytes).with_context(|| format!("writing {}", path.display()))?,
                None => std::io::stdout().write_all(&bytes).context("writing report")?,
            }
            eprintln!(
                "{}: pass {} fail {} skip {}",
                report.suite, report.summary.pass, report.summary.fail, report.summary.skip
            );
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
