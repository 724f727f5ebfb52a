//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported on stderr),
//! 2 on a usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::alexander::alexander_polynomial;
use crate::enumerator::{annotate_records, enumerate_partitioned, format_record, parse_tsv};
use crate::grid::{
    antidiagonal, diagonal_from_x, format_permutation, parse_permutation, torus_grid, validate,
    GridDiagram, Strand,
};
use crate::simplifier::{
    format_move_log, reduce_crossings, simplify_grid, DEFAULT_DEPTH, DEFAULT_ITERATIONS,
};
use crate::tau::tau_diagonal;

#[derive(Debug, Parser)]
#[command(
    name = "gridknot",
    version,
    about = "Invariants and moves for knot grid diagrams"
)]
struct Cli {
    /// Print human-readable summaries to stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate all diagonal knot diagrams of size n as TSV.
    Gen {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Tau of a diagonal diagram.
    Tau {
        #[arg(long)]
        perm: String,
    },
    /// Canonical Alexander polynomial as an ascending coefficient list.
    Alex {
        #[arg(long)]
        perm: String,
        #[arg(long = "o-perm")]
        o_perm: Option<String>,
    },
    /// Add tau and/or Alexander columns to a TSV file.
    Annotate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tau: bool,
        #[arg(long)]
        alex: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Shrink the grid with destabilizations, or with --min-crossings search
    /// for a diagram with fewer crossings.
    Simplify {
        #[arg(long)]
        perm: String,
        #[arg(long = "o-perm")]
        o_perm: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
        iterations: usize,
        #[arg(long = "min-crossings")]
        min_crossings: bool,
    },
    /// Crossing count, writhe and the individual crossings.
    Crossings {
        #[arg(long)]
        perm: String,
        #[arg(long = "o-perm")]
        o_perm: Option<String>,
    },
    /// X-permutation of the diagonal diagram of the torus knot T(p, q).
    Torus { p: usize, q: usize },
    /// Gauss code, one crossing encounter per line.
    Gauss {
        #[arg(long)]
        perm: String,
        #[arg(long = "o-perm")]
        o_perm: Option<String>,
    },
}

type DomainResult = Result<(), String>;

fn diagram(perm: &str, o_perm: Option<&str>) -> Result<GridDiagram, String> {
    let sigma_x = parse_permutation(perm).map_err(|e| e.to_string())?;
    let n = sigma_x.len();
    let sigma_o = match o_perm {
        Some(text) => parse_permutation(text).map_err(|e| e.to_string())?,
        None => antidiagonal(n),
    };
    validate(n, &sigma_x, &sigma_o).map_err(|e| e.to_string())
}

fn write_out(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> DomainResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn sign_char(sign: i8) -> char {
    if sign > 0 {
        '+'
    } else {
        '-'
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> DomainResult {
    let io = |e: io::Error| e.to_string();
    match cli.command {
        Command::Gen { n, out: path, jobs } => {
            let parts =
                enumerate_partitioned(n, jobs, |x| format!("{n}\t{}\n", format_permutation(x)))
                    .map_err(|e| e.to_string())?;
            let count: usize = parts.iter().map(Vec::len).sum();
            let text: String = parts.into_iter().flatten().collect();
            write_out(path.as_ref(), &text, out)?;
            if cli.verbose {
                writeln!(err, "{count} diagonal knot diagrams of size {n}").map_err(io)?;
            }
        }
        Command::Tau { perm } => {
            let sigma_x = parse_permutation(&perm).map_err(|e| e.to_string())?;
            let g = diagonal_from_x(sigma_x.len(), &sigma_x).map_err(|e| e.to_string())?;
            let tau = tau_diagonal(&g).map_err(|e| e.to_string())?;
            writeln!(out, "{tau}").map_err(io)?;
        }
        Command::Alex { perm, o_perm } => {
            let g = diagram(&perm, o_perm.as_deref())?;
            let p = alexander_polynomial(&g).map_err(|e| e.to_string())?;
            writeln!(out, "{}", p.to_coeff_string().expect("canonical")).map_err(io)?;
            if cli.verbose {
                writeln!(err, "{p}").map_err(io)?;
            }
        }
        Command::Annotate {
            input,
            out: path,
            tau,
            alex,
            jobs,
        } => {
            let mut text = String::new();
            if input.as_os_str() == "-" {
                io::stdin().read_to_string(&mut text).map_err(io)?;
            } else {
                text =
                    fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            }
            let records = parse_tsv(&text).map_err(|e| format!("ParseError: {e}"))?;
            let mut body = String::new();
            let mut failures = 0;
            for result in annotate_records(records, tau, alex, jobs) {
                match result {
                    Ok(r) => body.push_str(&format_record(&r)),
                    Err(e) => {
                        failures += 1;
                        writeln!(err, "line {}: {}", e.index + 1, e.source).map_err(io)?;
                    }
                }
            }
            write_out(path.as_ref(), &body, out)?;
            if failures > 0 {
                return Err(format!("{failures} records could not be annotated"));
            }
        }
        Command::Simplify {
            perm,
            o_perm,
            depth,
            iterations,
            min_crossings,
        } => {
            let g = diagram(&perm, o_perm.as_deref())?;
            let (result, moves) = if min_crossings {
                let r = reduce_crossings(&g, depth);
                (r.diagram, r.moves)
            } else {
                simplify_grid(&g, depth, iterations)
            };
            writeln!(out, "{}", format_permutation(result.sigma_x())).map_err(io)?;
            writeln!(out, "{}", format_permutation(result.sigma_o())).map_err(io)?;
            write!(out, "{}", format_move_log(&moves)).map_err(io)?;
            if cli.verbose {
                writeln!(
                    err,
                    "size {} -> {}, crossings {} -> {}",
                    g.n(),
                    result.n(),
                    g.crossing_count(),
                    result.crossing_count()
                )
                .map_err(io)?;
            }
        }
        Command::Crossings { perm, o_perm } => {
            let g = diagram(&perm, o_perm.as_deref())?;
            let cs = g.crossings();
            writeln!(out, "count\t{}", cs.len()).map_err(io)?;
            writeln!(out, "writhe\t{}", g.writhe()).map_err(io)?;
            for c in cs {
                writeln!(out, "{}\t{}\t{}", c.column, c.row, sign_char(c.sign)).map_err(io)?;
            }
        }
        Command::Torus { p, q } => {
            let g = torus_grid(p, q).map_err(|e| e.to_string())?;
            writeln!(out, "{}", format_permutation(g.sigma_x())).map_err(io)?;
        }
        Command::Gauss { perm, o_perm } => {
            let g = diagram(&perm, o_perm.as_deref())?;
            for e in g.gauss_code().map_err(|e| e.to_string())? {
                let strand = match e.strand {
                    Strand::Over => 'O',
                    Strand::Under => 'U',
                };
                writeln!(out, "{}\t{}\t{}", e.id, strand, sign_char(e.sign)).map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
