use clap::{Args, Parser, Subcommand, ValueEnum};

use solvlie::analysis::{AnalysisOptions, DEFAULT_SEED, DEFAULT_TRIALS};
use solvlie::FLOAT_TOL;
use solvlie_cli::{admissible, analyze_cmd, corpus_list, corpus_run, validate, Format, Output};

#[derive(Parser)]
#[command(
    name = "solvlie",
    version,
    about = "Orbit parameters and quasiregular admissibility for exponential solvable Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Tolerance for float-mode comparisons.
    #[arg(long, default_value_t = FLOAT_TOL)]
    tolerance: f64,
}

impl Common {
    fn opts(&self) -> AnalysisOptions {
        AnalysisOptions { seed: self.seed, trials: self.trials, tolerance: self.tolerance }
    }

    fn format(&self) -> Format {
        match self.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the standing hypotheses of a spec file.
    Validate {
        path: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the full pipeline and print the report.
    Analyze {
        path: String,
        #[command(flatten)]
        common: Common,
    },
    /// One-line admissibility verdict.
    Admissible {
        path: String,
        #[command(flatten)]
        common: Common,
    },
    /// The bundled example corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    List {
        #[command(flatten)]
        common: Common,
    },
    Run {
        id: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() {
    let cli = Cli::parse();
    let out: Output = match &cli.cmd {
        Cmd::Validate { path, common } => validate(path, common.format()),
        Cmd::Analyze { path, common } => analyze_cmd(path, &common.opts(), common.format()),
        Cmd::Admissible { path, common } => admissible(path, &common.opts(), common.format()),
        Cmd::Corpus { action: CorpusCmd::List { common } } => corpus_list(common.format()),
        Cmd::Corpus { action: CorpusCmd::Run { id, common } } => {
            corpus_run(id.as_deref(), &common.opts(), common.format())
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
