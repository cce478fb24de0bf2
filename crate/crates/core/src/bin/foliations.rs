//! Thin command-line front end; all logic lives in [`foliations::driver`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use foliations::driver::{
    cmd_analyze, cmd_blowup, cmd_chow_verify, cmd_count, cmd_deform, cmd_formulas, DriverError,
    OutputFormat, Report,
};

#[derive(Parser)]
#[command(
    name = "foliations",
    version,
    about = "Exact singularity counts for foliations with curves in their singular locus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Problem file to read.
    #[arg(long)]
    input: PathBuf,
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
    /// Accepted for interface stability; every computation is exact and
    /// deterministic, so the value is ignored.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the field and classify its curve.
    Analyze(CommonArgs),
    /// Transform the field in one blowup chart.
    Blowup {
        #[command(flatten)]
        common: CommonArgs,
        /// 1-based variable position of the chart (a direction normal to
        /// the curve).
        #[arg(long)]
        chart: usize,
    },
    /// Count singularities exactly and compare with the closed forms.
    Count(CommonArgs),
    /// Evaluate the closed-form counts for the file's numeric data.
    Formulas(CommonArgs),
    /// Check the closed forms against intersection-theory integrals.
    ChowVerify {
        /// Optional problem file contributing extra parameter points.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output rendering.
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
        /// Accepted for interface stability and ignored.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build and check a deformation family.
    Deform(CommonArgs),
}

#[derive(ValueEnum, Clone, Copy)]
enum OutputArg {
    Text,
    Json,
}

impl From<OutputArg> for OutputFormat {
    fn from(o: OutputArg) -> OutputFormat {
        match o {
            OutputArg::Text => OutputFormat::Text,
            OutputArg::Json => OutputFormat::Json,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn run() -> Result<(Report, OutputFormat), (String, u8)> {
    let cli = Cli::try_parse().map_err(|e| {
        let code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
            _ => 1,
        };
        let _ = e.print();
        (String::new(), code)
    })?;

    let run_with = |common: &CommonArgs,
                    f: &dyn Fn(&str) -> Result<Report, DriverError>|
     -> Result<(Report, OutputFormat), (String, u8)> {
        let text = read_input(&common.input).map_err(|m| (m, 1))?;
        let report = f(&text).map_err(|e| (e.to_string(), e.exit_code() as u8))?;
        Ok((report, common.output.into()))
    };

    match &cli.command {
        Command::Analyze(common) => run_with(common, &cmd_analyze),
        Command::Blowup { common, chart } => {
            run_with(common, &|text| cmd_blowup(text, *chart))
        }
        Command::Count(common) => run_with(common, &cmd_count),
        Command::Formulas(common) => run_with(common, &cmd_formulas),
        Command::ChowVerify { input, output, .. } => {
            let text = match input {
                Some(path) => Some(read_input(path).map_err(|m| (m, 1))?),
                None => None,
            };
            let report =
                cmd_chow_verify(text.as_deref()).map_err(|e| (e.to_string(), e.exit_code() as u8))?;
            Ok((report, (*output).into()))
        }
        Command::Deform(common) => run_with(common, &cmd_deform),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok((report, format)) => {
            // Tolerate a closed pipe (e.g. `foliations ... | head`).
            use std::io::Write;
            let mut stdout = std::io::stdout();
            let _ = writeln!(stdout, "{}", report.render(format));
            ExitCode::SUCCESS
        }
        Err((message, code)) => {
            if !message.is_empty() {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
