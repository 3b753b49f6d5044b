use std::io::Write;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use mbaudit_cli::commands::{cmd_audit, cmd_fixtures_list, cmd_fixtures_show, cmd_homology, cmd_morse, cmd_thom};
use mbaudit_cli::report::Style;
use mbaudit_cli::{CliError, Outcome};
use mbaudit_core::CoefficientMode;

/// Exact Morse-Bott inequality auditor.
///
/// Exit codes: 0 holds, 1 inequality fails, 2 parse error,
/// 3 inadmissible orientation character, 4 inconsistent sign twist.
#[derive(Parser)]
#[command(name = "mbaudit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integer homology and Poincaré polynomial of a catalog space
    Homology {
        /// `point`, `sphere:n`, `rp:n` or `torus2`
        space: String,
        /// Use the canonical nontrivial orientation character as coefficients
        #[arg(long)]
        twisted: bool,
    },
    /// Morse-Bott polynomial, inequality verdict and E2 ledger of a document
    Audit {
        /// Document path or shipped fixture name
        file: String,
        #[arg(long, value_enum, default_value_t = Mode::Local)]
        mode: Mode,
        /// Also print the E2 ledger recomputed with trivial characters
        #[arg(long)]
        naive: bool,
    },
    /// Homology of the disc bundle modulo the sphere bundle
    Thom {
        /// `base,rank,character`, e.g. `sphere:1,1,twisted`
        bundle: String,
    },
    /// Morse homology before and after stabilization
    Morse {
        /// Document path or shipped fixture name
        file: String,
        /// Rank of E⁻ (index shift)
        #[arg(long)]
        stabilize: Option<usize>,
        /// Named sign twist from the document's morse block
        #[arg(long)]
        twist: Option<String>,
    },
    /// Shipped fixtures
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    List,
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Untwisted,
    Local,
}

impl From<Mode> for CoefficientMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Untwisted => CoefficientMode::Untwisted,
            Mode::Local => CoefficientMode::Local,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let style = Style::from_env();
    match cli.command {
        Command::Homology { space, twisted } => cmd_homology(&space, twisted),
        Command::Audit { file, mode, naive } => cmd_audit(&file, mode.into(), naive, style),
        Command::Thom { bundle } => cmd_thom(&bundle, style),
        Command::Morse { file, stabilize, twist } => cmd_morse(&file, stabilize, twist.as_deref(), style),
        Command::Fixtures { action: FixturesAction::List } => cmd_fixtures_list(),
        Command::Fixtures { action: FixturesAction::Show { name } } => cmd_fixtures_show(&name),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.report.as_bytes());
            let _ = stdout.flush();
            process::exit(outcome.code.as_i32());
        }
        Err(e) => {
            eprintln!("mbaudit: {e}");
            process::exit(e.code.as_i32());
        }
    }
}
