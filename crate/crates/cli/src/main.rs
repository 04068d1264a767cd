use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use tropdual::Sign;
use tropdual_cli::{run, Command, JobSpec};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CommandArg {
    Subdivide,
    Curve,
    Dual,
    Regularity,
    OracleCheck,
    Render,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Examples,
    Kapranov,
}

/// Tropical subdivisions, curves and quadric duality in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "tropdual", version)]
struct Args {
    command: CommandArg,
    /// JSON input document.
    input: PathBuf,
    /// Lifting convention for subdivisions and curves.
    #[arg(long, value_enum, default_value = "examples")]
    sign: SignArg,
    /// Write an SVG rendering here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; --help and --version succeed
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let command = match args.command {
        CommandArg::Subdivide => Command::Subdivide,
        CommandArg::Curve => Command::Curve,
        CommandArg::Dual => Command::Dual,
        CommandArg::Regularity => Command::Regularity,
        CommandArg::OracleCheck => Command::OracleCheck,
        CommandArg::Render => Command::Render,
    };
    let sign = match args.sign {
        SignArg::Examples => Sign::Examples,
        SignArg::Kapranov => Sign::Kapranov,
    };
    let job = JobSpec { command, input: args.input, sign, svg: args.svg, out: args.out };
    match run(&job) {
        Ok(output) => {
            if command == Command::Render && job.svg.is_none() {
                print!("{}", output.svg.unwrap_or_default());
            } else if job.out.is_none() {
                print!("{}", output.report);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tropdual: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
