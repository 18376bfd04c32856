use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hopf_pqr::group::table_threshold_from_env;
use hopf_pqr::numbers::MetacyclicParams;
use hopf_pqr::report::{self, GroupSelector, Options};
use hopf_pqr::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;

/// Classify semisimple Hopf algebras of dimension pqr.
#[derive(Parser)]
#[command(name = "hopf-pqr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a human-readable table on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Also run the structured G4 check at (331, 11, 5).
    #[arg(long, global = true)]
    extended: bool,
    /// Largest group order given a Cayley table (default: $HOPF_PQR_TABLE_THRESHOLD or 5000).
    #[arg(long, global = true, value_name = "N")]
    threshold: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog, Galois-object counts and Morita classes for r < q < p.
    Classify(Triple),
    /// Run every consistency check for a triple.
    Verify(Triple),
    /// Second cohomology by the linear solver and by the closed form.
    Cohomology(Selector),
}

#[derive(Args)]
struct Triple {
    p: u64,
    q: u64,
    r: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selector {
    /// G(m, n, r, λ) = <a, b | a^m = 1, b^n = a^λ, b a b^-1 = a^r>.
    #[arg(long, num_args = 4, value_names = ["M", "N", "R", "LAMBDA"], allow_negative_numbers = true)]
    metacyclic: Option<Vec<i64>>,
    /// A named group such as Z6, S3, D5 or Z2xZ2.
    #[arg(long, value_name = "NAME")]
    group: Option<String>,
    /// A catalog group: G1..G6 or G4:n, followed by p q r.
    #[arg(long, num_args = 4, value_names = ["ID", "P", "Q", "R"])]
    catalog: Option<Vec<String>>,
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::Misordered { .. }
            | Error::InvalidParameters(_)
            | Error::NotSquareFree(_)
            | Error::NoElementOfOrder { .. }
    )
}

/// Writes the document to stdout; a closed pipe is not an error.
fn emit(doc: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{doc}").and_then(|_| out.flush());
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if is_usage(&e) { EXIT_USAGE } else { EXIT_FAILED })
}

fn selector(s: Selector) -> Result<GroupSelector, Error> {
    if let Some(v) = s.metacyclic {
        let bad = || Error::InvalidParameters("m and n must be positive".into());
        let m = u64::try_from(v[0]).map_err(|_| bad())?;
        let n = u64::try_from(v[1]).map_err(|_| bad())?;
        return Ok(GroupSelector::Metacyclic(MetacyclicParams::new(m, n, v[2], v[3])?));
    }
    if let Some(name) = s.group {
        return Ok(GroupSelector::Named(name));
    }
    let v = s.catalog.expect("clap requires one selector");
    let num = |x: &str| {
        x.parse::<u64>()
            .map_err(|_| Error::InvalidParameters(format!("not a number: {x}")))
    };
    Ok(GroupSelector::Catalog {
        kind: report::parse_catalog_kind(&v[0])?,
        p: num(&v[1])?,
        q: num(&v[2])?,
        r: num(&v[3])?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let opts = Options {
        threshold: cli.threshold.unwrap_or_else(table_threshold_from_env),
        extended: cli.extended,
    };
    let result = match cli.command {
        Command::Classify(t) => report::classify(t.p, t.q, t.r, opts),
        Command::Verify(t) => report::verify(t.p, t.q, t.r, opts),
        Command::Cohomology(s) => {
            let rep = match selector(s).and_then(|s| report::cohomology(&s, opts.threshold)) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            emit(&serde_json::to_string_pretty(&rep).expect("report serializes"));
            if cli.pretty {
                eprint!("{}", report::render_cohomology(&rep));
            }
            if !rep.agree {
                eprintln!("error: brute force and formula disagree");
                return ExitCode::from(EXIT_FAILED);
            }
            return ExitCode::SUCCESS;
        }
    };
    let rep = match result {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    emit(&rep.to_json());
    if cli.pretty {
        eprint!("{}", report::render_pretty(&rep));
    }
    let failures = rep.failures();
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in failures {
            eprintln!("FAILED {}: {}", f.name, f.detail);
        }
        ExitCode::from(EXIT_FAILED)
    }
}
