use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use ghc_core::cli::{error_json, run, run_text, CommandRequest, Config};
use ghc_core::Error;

/// Root-system computations for generalized Harish-Chandra modules.
///
/// Every command prints one JSON document on standard output. Exit codes:
/// 0 success, 2 input error, 3 unsupported case, 1 internal error.
#[derive(Parser)]
#[command(name = "ghc", version)]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Root system series: A, B, C, D, E, F or G.
    #[arg(long)]
    series: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct SubalgebraArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Comma-separated canonical root indices (see `root-system`).
    #[arg(long, value_delimiter = ',', default_value = "")]
    subalgebra: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, heights and Cartan data.
    RootSystem(TypeArgs),
    /// Shadow decomposition of a closed root subset.
    Shadow(SubalgebraArgs),
    /// Singular-weight cone test (type A only).
    FkTest(SubalgebraArgs),
    /// Finite-type test for a solvable subalgebra.
    SolvableTest(SubalgebraArgs),
    /// Primality of a reductive subalgebra.
    PrimalTest {
        #[command(flatten)]
        sub: SubalgebraArgs,
        /// A spanning vector of the toral part (comma-separated rationals);
        /// repeat for more. Defaults to the whole Cartan subalgebra.
        #[arg(long)]
        toral: Vec<String>,
    },
    /// Bounded-multiplicity predicates and degrees.
    Mathieu {
        /// C (default) or A.
        #[arg(long)]
        series: Option<String>,
        /// Highest weight in ε-coordinates, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Fiber coordinates for the irreducibility test.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// K-type multiplicities of A¹(λ) over a principal sl(2).
    KtypeSeries {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda_h")]
        lambda: Option<String>,
        /// Value λ(h); a non-integral λ with this value is chosen.
        #[arg(long, allow_hyphen_values = true)]
        lambda_h: Option<String>,
        #[arg(long, default_value_t = 20)]
        max_m: u64,
    },
    /// Exponents of a simple root system.
    Exponents(TypeArgs),
    /// Every closed root subset of sl(n+1) with its finite-type verdict.
    Census {
        #[command(flatten)]
        ty: TypeArgs,
        /// Keep one subset per orbit of the Weyl group and negation.
        #[arg(long)]
        dedup: bool,
    },
    /// Run a JSON request {"command", "parameters"} from a file or stdin.
    Request {
        #[arg(default_value = "-")]
        file: String,
    },
}

fn type_params(ty: &TypeArgs) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("series".into(), json!(ty.series));
    m.insert("rank".into(), json!(ty.rank));
    m
}

fn subalgebra_params(sub: &SubalgebraArgs) -> Result<Map<String, Value>, Error> {
    let mut m = type_params(&sub.ty);
    let indices = sub
        .subalgebra
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("invalid root index {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    m.insert("subalgebra".into(), json!(indices));
    Ok(m)
}

fn request(command: &Command) -> Result<Option<CommandRequest>, Error> {
    let (name, params) = match command {
        Command::RootSystem(ty) => ("root-system", type_params(ty)),
        Command::Shadow(sub) => ("shadow", subalgebra_params(sub)?),
        Command::FkTest(sub) => ("fk-test", subalgebra_params(sub)?),
        Command::SolvableTest(sub) => ("solvable-test", subalgebra_params(sub)?),
        Command::PrimalTest { sub, toral } => {
            let mut m = subalgebra_params(sub)?;
            if !toral.is_empty() {
                m.insert("toral".into(), json!(toral));
            }
            ("primal-test", m)
        }
        Command::Mathieu { series, lambda, eta } => {
            let mut m = Map::new();
            if let Some(s) = series {
                m.insert("series".into(), json!(s));
            }
            m.insert("lambda".into(), json!(lambda));
            if let Some(e) = eta {
                m.insert("eta".into(), json!(e));
            }
            ("mathieu", m)
        }
        Command::KtypeSeries {
            ty,
            lambda,
            lambda_h,
            max_m,
        } => {
            let mut m = type_params(ty);
            if let Some(l) = lambda {
                m.insert("lambda".into(), json!(l));
            }
            if let Some(h) = lambda_h {
                m.insert("lambda_h".into(), json!(h));
            }
            m.insert("max_m".into(), json!(max_m));
            ("ktype-series", m)
        }
        Command::Exponents(ty) => ("exponents", type_params(ty)),
        Command::Census { ty, dedup } => {
            let mut m = type_params(ty);
            m.insert("dedup".into(), json!(dedup));
            ("census", m)
        }
        Command::Request { .. } => return Ok(None),
    };
    Ok(Some(CommandRequest {
        command: name.into(),
        parameters: Value::Object(params),
    }))
}

fn read_source(file: &str) -> std::io::Result<String> {
    let mut text = String::new();
    if file == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(file)?;
    }
    Ok(text)
}

fn execute(cli: &Cli) -> (Value, i32) {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(e) => return (error_json(&e), e.exit_code()),
    };
    match (&cli.command, request(&cli.command)) {
        (Command::Request { file }, _) => match read_source(file) {
            Ok(text) => run_text(&text, &config),
            Err(e) => {
                let err = Error::Input(format!("cannot read {file}: {e}"));
                (error_json(&err), err.exit_code())
            }
        },
        (_, Ok(Some(req))) => run(&req, &config),
        (_, Ok(None)) => unreachable!("only `request` has no direct parameters"),
        (_, Err(e)) => (error_json(&e), e.exit_code()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = execute(&cli);
    if let Some(msg) = value.get("error").and_then(|e| e.get("message")).and_then(Value::as_str) {
        eprintln!("ghc: {msg}");
    }
    let text = format!("{value}\n");
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("ghc: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
