use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use linord::facets::{facet_report, FacetReport};
use linord::polytope::{
    lop_vertices, permutahedron_vertices, project_to_permutahedron, project_to_previous,
    PermutahedronReport, PreviousReport, VertexSet,
};
use linord::repdecomp::decomposition_report;
use linord::verify::run_verify;
use linord::{Basis, Error};

#[derive(Parser)]
#[command(
    name = "linord",
    version,
    about = "Exact computations on the linear ordering polytope"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the vertices of P_n or of the permutahedron.
    Vertices {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::K)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = PolytopeArg::Lop)]
        polytope: PolytopeArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every certificate check for one n (3..=6).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate and classify the facets of P_n.
    Facets {
        #[arg(long)]
        n: usize,
        /// Annotate every inequality with its class and tight-vertex count.
        #[arg(long)]
        classify: bool,
        /// Required for n = 6.
        #[arg(long)]
        allow_long_running: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Project the vertices of P_n onto the permutahedron or onto P_{n-1}.
    Project {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the decomposition U_Inv = V_0 + V_1 + V_2.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "TK", alias = "tk")]
    Tk,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolytopeArg {
    Lop,
    Permutahedron,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Permutahedron,
    Previous,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = format!("{}: {e}", e.code());
        if e.is_usage() {
            Self::Usage(msg)
        } else {
            Self::Check(msg)
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_n(n: usize, min: usize, max: usize) -> Outcome {
    if n > max {
        Err(Error::NTooLarge { n, max }.into())
    } else if n < min {
        Err(Error::NOutOfRange { n, min, max }.into())
    } else {
        Ok(())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Check(format!("write failed: {e}")))
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn vertex_text(vs: &VertexSet) -> String {
    let mut s = String::new();
    for (label, point) in vs.labels.iter().zip(&vs.points) {
        let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
        s.push_str(&format!("[{label}] {}\n", coords.join(" ")));
    }
    s
}

fn cmd_vertices(
    n: usize,
    basis: BasisArg,
    polytope: PolytopeArg,
    format: Format,
    out: &Option<PathBuf>,
) -> Outcome {
    check_n(n, 2, 8)?;
    let vs = match polytope {
        PolytopeArg::Lop => lop_vertices(
            n,
            match basis {
                BasisArg::K => Basis::K,
                BasisArg::Tk => Basis::TK,
            },
        )?,
        PolytopeArg::Permutahedron => permutahedron_vertices(n)?,
    };
    let text = match format {
        Format::Csv => vs.to_csv(),
        Format::Text => vertex_text(&vs),
        Format::Json => json(&vs.to_json_rows()),
    };
    emit(out, &text)
}

fn cmd_verify(n: usize, format: Format, out: &Option<PathBuf>) -> Outcome {
    check_n(n, 3, 6)?;
    let report = run_verify(n)?;
    let text = match format {
        Format::Json => json(&report),
        Format::Text => report.to_text(),
        Format::Csv => return Err(usage("verify supports --format json or text")),
    };
    emit(out, &text)?;
    match report.first_failure() {
        Some(c) => Err(Failure::Check(format!("check failed: {}", c.name))),
        None => Ok(()),
    }
}

fn facets_text(report: &FacetReport, annotate: bool) -> String {
    let mut text = format!("# lop n={} basis=K\n", report.n);
    for f in &report.facets {
        text.push_str(&f.inequality.to_string());
        if annotate {
            text.push_str(&format!("  # {} tight={}", f.class, f.tight_vertices));
        }
        text.push('\n');
    }
    if annotate {
        text.push_str(&format!("# facets={}", report.facet_count));
        for (class, count) in &report.class_counts {
            text.push_str(&format!(" {class}={count}"));
        }
        text.push('\n');
    }
    text
}

fn cmd_facets(
    n: usize,
    annotate: bool,
    allow_long: bool,
    format: Format,
    out: &Option<PathBuf>,
) -> Outcome {
    check_n(n, 3, 6)?;
    if n == 6 && !allow_long {
        return Err(usage(
            "facet enumeration at n = 6 requires --allow-long-running",
        ));
    }
    let report = facet_report(n)?;
    let text = match format {
        Format::Json => json(&report),
        Format::Text => facets_text(&report, annotate),
        Format::Csv => return Err(usage("facets supports --format json or text")),
    };
    emit(out, &text)?;
    for c in [&report.census, &report.closure] {
        if c.failed() {
            return Err(Failure::Check(format!("check failed: {}", c.name)));
        }
    }
    Ok(())
}

fn cmd_project(n: usize, target: Target, format: Format, out: &Option<PathBuf>) -> Outcome {
    check_n(n, 3, 6)?;
    let text = match target {
        Target::Permutahedron => {
            let proj = project_to_permutahedron(n)?;
            match format {
                Format::Json => json(&PermutahedronReport::new(n, &proj)),
                Format::Csv => proj.images.to_csv(),
                Format::Text => vertex_text(&proj.images),
            }
        }
        Target::Previous => {
            let proj = project_to_previous(n)?;
            match format {
                Format::Json => json(&PreviousReport::new(n, &proj)?),
                Format::Csv => proj.images.to_csv(),
                Format::Text => {
                    let mut s = String::new();
                    for f in &proj.fibers.fibers {
                        let sources: Vec<String> =
                            f.sources.iter().map(ToString::to_string).collect();
                        s.push_str(&format!("{} <- {}\n", f.target, sources.join(" | ")));
                    }
                    s
                }
            }
        }
    };
    emit(out, &text)
}

fn cmd_decompose(n: usize, format: Format, out: &Option<PathBuf>) -> Outcome {
    check_n(n, 3, 6)?;
    if format != Format::Json {
        return Err(usage("decompose supports --format json"));
    }
    emit(out, &json(&decomposition_report(n)?))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Vertices {
            n,
            basis,
            polytope,
            format,
            out,
        } => cmd_vertices(n, basis, polytope, format, &out),
        Command::Verify { n, format, out } => cmd_verify(n, format, &out),
        Command::Facets {
            n,
            classify,
            allow_long_running,
            format,
            out,
        } => cmd_facets(n, classify, allow_long_running, format, &out),
        Command::Project {
            n,
            target,
            format,
            out,
        } => cmd_project(n, target, format, &out),
        Command::Decompose { n, format, out } => cmd_decompose(n, format, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
