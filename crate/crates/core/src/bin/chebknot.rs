use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chebknot::cli::{self, Report};
use chebknot::invariants::DEFAULT_CAP;
use chebknot::Error;

#[derive(Parser)]
#[command(name = "chebknot", version, about = "Polynomial embeddings and knots from Chebyshev curves")]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest crossing count for which the Jones polynomial is computed.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether (T_i, T_j, T_k) is an embedding and print a witness.
    Embed { i: u64, j: u64, k: u64 },
    /// Reduce a Chebyshev triple by polynomial automorphisms.
    Reduce { i: u64, j: u64, k: u64 },
    /// Remnant degrees for coprime pairs with few nodes.
    Table1 {
        #[arg(default_value_t = 16)]
        max_nodes: u64,
    },
    /// Knot diagram and Jones polynomial of (T_i, T_j, T_k) or of the alternating (i,j)-knot.
    Knot {
        #[arg(num_args = 2..=3, required = true)]
        degrees: Vec<u64>,
        #[arg(long)]
        alternating: bool,
    },
    /// Parametrization of the alternating (i,j)-knot.
    Param { i: u64, j: u64 },
    /// Draw (T_i, T_j), with crossings when k is given. A trailing non-numeric argument is the output path.
    Svg {
        #[arg(num_args = 2..=4, required = true)]
        args: Vec<String>,
    },
    /// Jones polynomials of (T_i, T_j, T_k) for every remnant degree k.
    Conjecture2 { i: u64, j: u64 },
}

fn emit(args: &Args, body: &str) -> Result<(), ExitCode> {
    match &args.out {
        Some(path) => std::fs::write(path, body).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            ExitCode::from(4)
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn render<R: Report>(format: Format, r: &R) -> String {
    match format {
        Format::Json => r.json() + "\n",
        _ => r.text(),
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn run(args: &Args) -> Result<ExitCode, ExitCode> {
    let f = args.format;
    let body = match &args.command {
        Command::Embed { i, j, k } => {
            let r = cli::cmd_embed(*i, *j, *k).map_err(fail)?;
            emit(args, &render(f, &r))?;
            let capped = r.witness.as_ref().is_some_and(|w| !w.verified);
            return Ok(if capped { ExitCode::from(3) } else { ExitCode::SUCCESS });
        }
        Command::Reduce { i, j, k } => render(f, &cli::cmd_reduce(*i, *j, *k).map_err(fail)?),
        Command::Table1 { max_nodes } => render(f, &cli::cmd_table1(*max_nodes).map_err(fail)?),
        Command::Param { i, j } => render(f, &cli::cmd_param(*i, *j).map_err(fail)?),
        Command::Knot { degrees, alternating } => {
            let k = match (degrees.len(), alternating) {
                (2, true) => None,
                (3, false) => Some(degrees[2]),
                _ => return Err(fail(Error::InvalidArgument("give i j k, or i j --alternating".into()))),
            };
            let r = cli::cmd_knot(degrees[0], degrees[1], k, args.cap).map_err(fail)?;
            emit(args, &render(f, &r))?;
            return Ok(if r.cap_exceeded { ExitCode::from(3) } else { ExitCode::SUCCESS });
        }
        Command::Conjecture2 { i, j } => {
            let r = cli::cmd_conjecture2(*i, *j, args.cap).map_err(fail)?;
            emit(args, &render(f, &r))?;
            return Ok(if r.complete { ExitCode::SUCCESS } else { ExitCode::from(3) });
        }
        Command::Svg { args: raw } => {
            let mut nums = Vec::new();
            let mut path = args.out.clone();
            for (n, a) in raw.iter().enumerate() {
                match a.parse::<u64>() {
                    Ok(v) => nums.push(v),
                    Err(_) if n + 1 == raw.len() && n >= 2 => path = Some(PathBuf::from(a)),
                    Err(_) => return Err(fail(Error::InvalidArgument(format!("not a degree: {a}")))),
                }
            }
            if !(2..=3).contains(&nums.len()) {
                return Err(fail(Error::InvalidArgument("give i j [k] [path]".into())));
            }
            let (doc, mut r) = cli::render_svg(nums[0], nums[1], nums.get(2).copied()).map_err(fail)?;
            match path {
                Some(p) => {
                    std::fs::write(&p, &doc).map_err(|e| {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        ExitCode::from(4)
                    })?;
                    r.path = Some(p.display().to_string());
                    match f {
                        Format::Json => print!("{}", r.json() + "\n"),
                        _ => print!("{}", r.text()),
                    }
                }
                None => print!("{doc}"),
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    emit(args, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let args = Args::parse();
    run(&args).unwrap_or_else(|code| code)
}
