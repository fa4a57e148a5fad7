use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hodge_cli::commands::{self, Check};
use hodge_cli::{emit, load_problem, Diagnostic, EXIT_EXISTS, EXIT_INPUT, EXIT_NOT_EXISTS};

/// Quantum Schubert calculus on Grassmannians and existence checks for
/// parabolic systems of Hodge bundles on the projective line.
#[derive(Parser)]
#[command(name = "hodge", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Out {
    /// Emit the machine-readable JSON form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Problem file, or `-` for stdin.
    file: PathBuf,
    /// Require strict inequalities (stability rather than semistability).
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    out: Out,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quantum product of two Schubert classes in QH*(Gr(r, n)), e.g. `qprod 1 3 (2) (2)`.
    Qprod {
        r: usize,
        n: usize,
        lambda: String,
        mu: String,
        #[command(flatten)]
        out: Out,
    },
    /// Gromov-Witten number of Schubert classes in Gr(r, n).
    Gw {
        r: usize,
        n: usize,
        #[arg(required = true, num_args = 2..)]
        classes: Vec<String>,
        /// Curve degree; solved from the dimension count when omitted.
        #[arg(long = "d", allow_negative_numbers = true)]
        d: Option<i64>,
        #[command(flatten)]
        out: Out,
    },
    /// Generalized Gromov-Witten number inside a generic bundle of degree -D.
    Ggw {
        r: usize,
        n: usize,
        #[arg(required = true, num_args = 1..)]
        classes: Vec<String>,
        #[arg(long = "d", allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long = "D", allow_negative_numbers = true, default_value_t = 0)]
        big_d: i64,
        #[command(flatten)]
        out: Out,
    },
    /// Type (1, n) systems (schema hodge1n).
    #[command(name = "check-1n")]
    Check1n(CheckArgs),
    /// Type (1, 2) systems (schema hodge12).
    #[command(name = "check-12")]
    Check12(CheckArgs),
    /// Type (1, 1) systems (schema hodge11).
    #[command(name = "check-11")]
    Check11(CheckArgs),
    /// Type (1, 1, 1) systems (schema hodge111).
    #[command(name = "check-111")]
    Check111 {
        #[command(flatten)]
        args: CheckArgs,
        /// Ignore the degrees in the file and search for every admissible triple.
        #[arg(long)]
        search_degrees: bool,
    },
    /// Chains of line bundles (schema chain).
    #[command(name = "check-chain")]
    CheckChain(CheckArgs),
    /// Unitary parabolic bundles, theta = 0 (schema unitary).
    #[command(name = "check-unitary")]
    CheckUnitary(CheckArgs),
    /// Rank-two unitary criterion over odd subsets (schema unitary, n = 2).
    Biswas(CheckArgs),
}

fn fail(d: &Diagnostic, json: bool) -> i32 {
    if json {
        print!("{}", emit::diagnostic_json(d));
    }
    eprintln!("{d}");
    EXIT_INPUT
}

fn check(kind: Check, args: &CheckArgs) -> i32 {
    let run = load_problem(&args.file).and_then(|f| commands::run_check(kind, &f, args.strict));
    match run {
        Ok(rep) => {
            let text = if args.out.json { emit::report_json(&rep) } else { emit::report_text(&rep) };
            print!("{text}");
            if rep.exists {
                EXIT_EXISTS
            } else {
                EXIT_NOT_EXISTS
            }
        }
        Err(d) => fail(&d, args.out.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.cmd {
        Cmd::Qprod { r, n, lambda, mu, out } => match commands::qprod(*r, *n, lambda, mu) {
            Ok(c) if out.json => {
                print!("{}", emit::quantum_json(&c));
                0
            }
            Ok(c) => {
                println!("{c}");
                0
            }
            Err(d) => fail(&d, out.json),
        },
        Cmd::Gw { r, n, classes, d, out } => match commands::gw(*r, *n, classes, *d) {
            Ok((v, d)) if out.json => {
                print!("{}", emit::number_json(&v, d, None));
                0
            }
            Ok((v, _)) => {
                println!("{v}");
                0
            }
            Err(e) => fail(&e, out.json),
        },
        Cmd::Ggw { r, n, classes, d, big_d, out } => match commands::ggw(*r, *n, classes, *d, *big_d) {
            Ok((v, d)) if out.json => {
                print!("{}", emit::number_json(&v, d, Some(*big_d)));
                0
            }
            Ok((v, _)) => {
                println!("{v}");
                0
            }
            Err(e) => fail(&e, out.json),
        },
        Cmd::Check1n(a) => check(Check::OneN, a),
        Cmd::Check12(a) => check(Check::OneTwo, a),
        Cmd::Check11(a) => check(Check::OneOne, a),
        Cmd::Check111 { args, search_degrees } => check(Check::OneOneOne { search: *search_degrees }, args),
        Cmd::CheckChain(a) => check(Check::Chain, a),
        Cmd::CheckUnitary(a) => check(Check::Unitary, a),
        Cmd::Biswas(a) => check(Check::Biswas, a),
    };
    ExitCode::from(code as u8)
}
