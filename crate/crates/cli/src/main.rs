//! `schurpaths` command-line front end.
//!
//! Exit codes: 0 success, 1 an identity or agreement check failed, 2 usage
//! or input error.

mod render;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schurpaths::identities::{fuzz_cases, run_cases, worker_count, GridSpec, Suite};
use schurpaths::paths::{closed_genfunc, count_deviation, enumerate_watermelons};
use schurpaths::planepartitions::{enumerate_box, zq};
use schurpaths::schur::{bialternant, gv_determinant, h_determinant, principal_product, tableau_sum};
use schurpaths::{GeometricPoint, LaurentPoly, Partition};

#[derive(Parser)]
#[command(name = "schurpaths", version, about = "Exact Schur polynomials, watermelons and plane partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate S_λ(1, q, ..., q^{m-1}).
    Schur {
        /// Partition such as `[2,1]`.
        #[arg(long)]
        shape: Partition,
        /// Number of variables m.
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, value_enum, default_value_t = Alg::Bialternant)]
        alg: Alg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity checks over a parameter grid; prints JSON lines and a summary.
    Verify {
        /// `all` or a comma-separated list of suites.
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        suite: Suites,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        /// Box `rows,cols` for the Gessel–Viennot shapes.
        #[arg(long, value_parser = parse_pair)]
        shapes_in_box: Option<(usize, usize)>,
        /// Worker threads (defaults to $SCHURPATHS_WORKERS, then the CPU count).
        #[arg(long)]
        workers: Option<usize>,
        /// Replace the grid by random Binet–Cauchy cases from this seed.
        #[arg(long)]
        fuzz_seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        fuzz_count: usize,
    },
    /// Count watermelons / boxed plane partitions.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = What::Number)]
        what: What,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every watermelon or plane partition of a size as JSON lines.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
    },
    /// Draw a watermelon or plane partition given as JSON (file or `-`).
    Render {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Alg {
    Bialternant,
    Tableaux,
    Product,
    Hdet,
    Gvdet,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Number,
    Genfunc,
    Zq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Watermelons,
    PlanePartitions,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Ascii,
    Svg,
}

#[derive(Clone)]
struct Suites(Vec<Suite>);

fn parse_suites(s: &str) -> Result<Suites, String> {
    Suite::parse_list(s).map(Suites)
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `rows,cols`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}

enum Failure {
    Usage(String),
    Check,
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Schur { shape, vars, alg, format } => cmd_schur(&mut out, &shape, vars, alg, format),
        Command::Verify { suite, max_n, max_m, shapes_in_box, workers, fuzz_seed, fuzz_count } => {
            let grid = GridSpec { suites: suite.0, max_n, max_m, shapes_in_box };
            cmd_verify(&mut out, &grid, workers.unwrap_or_else(worker_count), fuzz_seed.map(|s| (s, fuzz_count)))
        }
        Command::Count { n, l, m, what, format } => cmd_count(&mut out, n, l, m, what, format),
        Command::Enumerate { kind, n, l, m } => cmd_enumerate(&mut out, kind, n, l, m),
        Command::Render { input, style } => cmd_render(&mut out, &input, style),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_io(r: io::Result<()>) -> CmdResult {
    match r {
        // reader went away (e.g. `| head`); nothing left to report to
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Failure::Usage(format!("write failed: {e}"))),
        Ok(()) => Ok(()),
    }
}

fn cmd_schur(out: &mut impl Write, shape: &Partition, vars: usize, alg: Alg, format: Format) -> CmdResult {
    let pt = GeometricPoint::principal(vars);
    let routes: Vec<(&str, Alg)> = vec![
        ("bialternant", Alg::Bialternant),
        ("tableaux", Alg::Tableaux),
        ("product", Alg::Product),
        ("hdet", Alg::Hdet),
        ("gvdet", Alg::Gvdet),
    ];
    let mut results: Vec<(&str, LaurentPoly)> = Vec::new();
    for (name, a) in routes {
        if alg != Alg::All && alg != a {
            continue;
        }
        let value = match a {
            Alg::Bialternant => bialternant(shape, &pt),
            Alg::Tableaux => tableau_sum(shape, &pt),
            Alg::Product => principal_product(shape, vars),
            Alg::Hdet => h_determinant(shape, vars),
            Alg::Gvdet => gv_determinant(shape, vars),
            Alg::All => unreachable!(),
        }
        .map_err(usage)?;
        results.push((name, value));
    }
    let agree = results.iter().all(|(_, v)| v == &results[0].1);
    let single = alg != Alg::All;
    let written = match format {
        Format::Text if single => writeln!(out, "{}", results[0].1),
        Format::Text => (|| {
            for (name, v) in &results {
                writeln!(out, "{name}: {v}")?;
            }
            writeln!(out, "verdict: {}", if agree { "OK" } else { "MISMATCH" })
        })(),
        Format::Csv => (|| {
            writeln!(out, "algorithm,exponent,coefficient")?;
            for (name, v) in &results {
                for (e, c) in v.terms() {
                    writeln!(out, "{name},{e},{c}")?;
                }
            }
            Ok(())
        })(),
        Format::Json => {
            let map: serde_json::Map<_, _> =
                results.iter().map(|(n, v)| (n.to_string(), serde_json::to_value(v).unwrap())).collect();
            let doc = json!({"shape": shape.trimmed(), "vars": vars, "results": map, "agree": agree});
            writeln!(out, "{doc}")
        }
    };
    write_io(written)?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_verify(out: &mut impl Write, grid: &GridSpec, workers: usize, fuzz: Option<(u64, usize)>) -> CmdResult {
    let cases = match fuzz {
        Some((seed, count)) => fuzz_cases(seed, count, grid.max_n, grid.max_m),
        None => grid.cases(),
    };
    let (mut passed, mut total) = (0usize, 0usize);
    for result in run_cases(&cases, workers) {
        match result {
            Ok(reports) => {
                for r in reports {
                    total += 1;
                    passed += r.equal as usize;
                    write_io(writeln!(out, "{}", r.to_json_line()))?;
                }
            }
            Err(e) => {
                total += 1;
                eprintln!("case failed: {e}");
            }
        }
    }
    write_io(writeln!(out, "summary: {passed}/{total} passed"))?;
    if passed == total {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_count(out: &mut impl Write, n: usize, l: usize, m: usize, what: What, format: Format) -> CmdResult {
    let written = match what {
        What::Number => {
            let a = count_deviation(n, l, m);
            match format {
                Format::Text => writeln!(out, "{a}"),
                Format::Csv => writeln!(out, "N,L,M,count\n{n},{l},{m},{a}"),
                Format::Json => writeln!(out, "{}", json!({"N": n, "L": l, "M": m, "count": a.to_string()})),
            }
        }
        What::Genfunc | What::Zq => {
            let (key, poly) = match what {
                What::Genfunc => ("genfunc", closed_genfunc(n, l, m)),
                _ => ("zq", zq(n, l, m)),
            };
            match format {
                Format::Text => writeln!(out, "{poly}"),
                Format::Csv => (|| {
                    writeln!(out, "exponent,coefficient")?;
                    for (e, c) in poly.terms() {
                        writeln!(out, "{e},{c}")?;
                    }
                    Ok(())
                })(),
                Format::Json => writeln!(out, "{}", json!({"N": n, "L": l, "M": m, key: poly})),
            }
        }
    };
    write_io(written)
}

fn cmd_enumerate(out: &mut impl Write, kind: Kind, n: usize, l: usize, m: usize) -> CmdResult {
    match kind {
        Kind::Watermelons => {
            let k = n.checked_sub(l).ok_or_else(|| usage(format!("L = {l} exceeds N = {n}")))?;
            for w in enumerate_watermelons(n, m, k).map_err(usage)? {
                write_io(writeln!(out, "{}", serde_json::to_string(&w).unwrap()))?;
            }
        }
        Kind::PlanePartitions => {
            for pp in enumerate_box(n, l, m) {
                write_io(writeln!(out, "{}", serde_json::to_string(&pp).unwrap()))?;
            }
        }
    }
    Ok(())
}

fn cmd_render(out: &mut impl Write, input: &str, style: Style) -> CmdResult {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(usage)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))?
    };
    let figure = render::Figure::parse(&text).map_err(usage)?;
    let drawing = match style {
        Style::Ascii => figure.ascii(),
        Style::Svg => figure.svg(),
    };
    write_io(out.write_all(drawing.as_bytes()))
}
