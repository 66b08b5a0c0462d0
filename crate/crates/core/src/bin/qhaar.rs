use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use qhaar::cli::{exit_code, parse_triple, run_command, Command, Config, Format};
use qhaar::corep::{Comodule, DominantWeight, Form, Method};
use qhaar::Error;

#[derive(Parser)]
#[command(name = "qhaar", version, about = "Exact Haar state computations on O(U_q(n))")]
struct Cli {
    /// Rank of the quantum group.
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    /// Also evaluate at an exact rational q, e.g. 1/2.
    #[arg(long, global = true)]
    at_q: Option<BigRational>,
    #[arg(long, global = true)]
    override_feasibility: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComoduleArg {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Direct,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Haar state of an expression, e.g. "c e g det^-1".
    Eval { expr: String },
    /// Haar values of the pseudo-basis of order m.
    Table {
        #[arg(long)]
        m: u32,
    },
    /// Gram matrix of a weight space.
    Gram {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = SideArg::L)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = ComoduleArg::Right)]
        comodule: ComoduleArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Orthogonal basis of a weight space.
    Ortho {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = SideArg::L)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = ComoduleArg::Right)]
        comodule: ComoduleArg,
    },
    /// Dimension, quantum dimension and weight multiplicities.
    Dim {
        #[arg(long)]
        lambda: String,
    },
    /// Solve the linear system of order m.
    Solve {
        #[arg(long)]
        m: u32,
    },
    /// Reference value h(x_{sigma0}^m) from the Source matrix.
    Source {
        #[arg(long)]
        m: u32,
    },
    /// Run an identity suite.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

fn weight(s: &str) -> Result<DominantWeight, Error> {
    let [a, b, c] = parse_triple(s)?;
    DominantWeight::new(a, b, c)
}

fn build(cli: &Cli) -> Result<Command, Error> {
    let form = |s: SideArg| match s {
        SideArg::L => Form::L,
        SideArg::R => Form::R,
    };
    let side = |c: ComoduleArg| match c {
        ComoduleArg::Right => Comodule::Right,
        ComoduleArg::Left => Comodule::Left,
    };
    Ok(match &cli.cmd {
        Cmd::Eval { expr } => Command::Eval { expr: expr.clone() },
        Cmd::Table { m } => Command::Table { m: *m },
        Cmd::Gram { lambda, mu, side: s, comodule, method } => Command::Gram {
            lambda: weight(lambda)?,
            mu: parse_triple(mu)?,
            form: form(*s),
            side: side(*comodule),
            method: match method {
                MethodArg::Closed => Some(Method::Closed),
                MethodArg::Direct => Some(Method::Direct),
                MethodArg::Both => None,
            },
        },
        Cmd::Ortho { lambda, mu, side: s, comodule } => {
            Command::Ortho { lambda: weight(lambda)?, mu: parse_triple(mu)?, form: form(*s), side: side(*comodule) }
        }
        Cmd::Dim { lambda } => Command::Dim { lambda: weight(lambda)? },
        Cmd::Solve { m } => Command::Solve { n: cli.n, m: *m },
        Cmd::Source { m } => Command::Source { n: cli.n, m: *m },
        Cmd::Verify { suite, bound } => Command::Verify { suite: suite.clone(), bound: *bound },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config {
        n: cli.n,
        format: match cli.format {
            Fmt::Json => Format::Json,
            Fmt::Csv => Format::Csv,
            Fmt::Latex => Format::Latex,
            Fmt::Text => Format::Text,
        },
        at_q: cli.at_q.clone(),
        override_feasibility: cli.override_feasibility,
    };
    let result = build(&cli).and_then(|cmd| run_command(&cmd, &cfg));
    match result {
        Ok(outcome) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.output) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", outcome.output),
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
