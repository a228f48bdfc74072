use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commgraph::formulas::PredictionReport;
use commgraph::graph::{self, ExportFormat, GraphOptions, InvariantReport, DOT_VERTEX_CAP};
use commgraph::verify::{self, ConjectureRow, VerifyOptions};
use commgraph::{trimat, Error, Ring};

#[derive(Parser)]
#[command(
    name = "commgraph",
    version,
    about = "Commuting graphs of 2x2 upper-triangular matrix rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the commuting graph and report its invariants.
    Analyze(RunConfig),
    /// Check every applicable closed-form claim; exits 1 on any mismatch.
    Verify(RunConfig),
    /// Compare the conjectured independence number of Tr(Z_n) with the exact one.
    Conjecture(ConjectureArgs),
    /// Write the graph as DOT, a degree CSV or a JSON report.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Args)]
struct Common {
    /// Solver time limit per extremal quantity, in seconds.
    #[arg(long, default_value_t = 60.0, value_parser = positive_seconds)]
    budget: f64,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest vertex count kept as a dense adjacency matrix.
    #[arg(long, default_value_t = graph::DEFAULT_DENSE_CAP)]
    cap: u64,
}

#[derive(Args)]
struct RunConfig {
    /// Ring spec: zmod:n, gf:p^k[:modulus] or prod:a,b.
    #[arg(long)]
    ring: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Largest modulus to test.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(4..))]
    max_n: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    ring: String,
    /// dot, csv-degrees or json-report.
    #[arg(long)]
    format: String,
    #[command(flatten)]
    common: Common,
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number of seconds")),
    }
}

impl Common {
    fn budget(&self) -> Duration {
        Duration::from_secs_f64(self.budget)
    }

    fn graph_options(&self) -> GraphOptions {
        GraphOptions {
            dense_cap: self.cap,
            allow_implicit: true,
            ..GraphOptions::default()
        }
    }

    fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn extremal_cell(e: &graph::Extremal) -> String {
    match e.upper_bound {
        Some(ub) if !e.exact => format!("[{}, {ub}] (budget exceeded)", e.value),
        _ => e.value.to_string(),
    }
}

fn render_invariants(r: &InvariantReport) -> String {
    let mut out = String::new();
    let hist: Vec<String> = r
        .degree_histogram
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    let comps: Vec<String> = r.components.iter().map(u64::to_string).collect();
    let rows = [
        ("ring", r.ring.clone()),
        ("vertices", r.vertices.to_string()),
        ("edges", r.edges.to_string()),
        ("degrees", hist.join(" ")),
        (
            "min degree",
            r.min_degree().map_or("-".into(), |d| d.to_string()),
        ),
        (
            "max degree",
            r.max_degree().map_or("-".into(), |d| d.to_string()),
        ),
        ("regular", r.regular.to_string()),
        (
            "components",
            format!("{} ({})", r.components.len(), comps.join(", ")),
        ),
        ("diameter", r.diameter.to_string()),
        ("clique number", extremal_cell(&r.omega)),
        ("independence number", extremal_cell(&r.alpha)),
        (
            "maximum cliques",
            r.max_clique_count
                .map_or("unknown".into(), |c| c.to_string()),
        ),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<20} {v}").unwrap();
    }
    out
}

fn render_predictions(rep: &PredictionReport) -> String {
    let mut out = render_invariants(&rep.report);
    out.push('\n');
    for p in &rep.predictions {
        let verdict = match (p.matches, p.conjecture) {
            (_, true) => "conjecture",
            (Some(true), _) => "ok",
            (Some(false), _) => "MISMATCH",
            (None, _) => "open",
        };
        let measured = p.measured.as_ref().map_or("-".into(), |m| m.to_string());
        writeln!(
            out,
            "{verdict:<10} {:<52} predicted {:<12} measured {measured}",
            p.name,
            p.predicted.to_string()
        )
        .unwrap();
        if let Some(note) = &p.erratum {
            writeln!(out, "{:<10} erratum: {note}", "").unwrap();
        }
    }
    writeln!(
        out,
        "\n{}",
        if rep.all_pass() {
            "all claims hold"
        } else {
            "some claims fail"
        }
    )
    .unwrap();
    out
}

fn render_conjecture(rows: &[ConjectureRow]) -> String {
    let mut out = format!(
        "{:>4} {:>12} {:>16}  verdict\n",
        "n", "conjectured", "independence"
    );
    for r in rows {
        let verdict = match r.consistent {
            Some(true) => "CONSISTENT",
            Some(false) => "INCONSISTENT",
            None => "OPEN (bounds only)",
        };
        writeln!(
            out,
            "{:>4} {:>12} {:>16}  {verdict}",
            r.n,
            r.conjectured.to_string(),
            r.measured.to_string()
        )
        .unwrap();
    }
    out
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze(cfg) => {
            let ring = Ring::parse(&cfg.ring)?;
            let g = graph::build_graph_with(&ring, cfg.common.graph_options())?;
            let report = graph::invariants(&g, cfg.common.budget());
            cfg.common.emit(&match cfg.format {
                OutputFormat::Table => render_invariants(&report),
                OutputFormat::Json => json(&report),
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(cfg) => {
            let ring = Ring::parse(&cfg.ring)?;
            let opts = VerifyOptions {
                budget: cfg.common.budget(),
                graph: cfg.common.graph_options(),
                ..VerifyOptions::default()
            };
            let rep = verify::verify(&ring, opts)?;
            cfg.common.emit(&match cfg.format {
                OutputFormat::Table => render_predictions(&rep),
                OutputFormat::Json => json(&rep),
            })?;
            Ok(if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Conjecture(args) => {
            let rows = verify::conjecture_table(
                args.max_n,
                args.common.budget(),
                args.common.graph_options(),
            )?;
            args.common.emit(&match args.format {
                OutputFormat::Table => render_conjecture(&rows),
                OutputFormat::Json => json(&rows),
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export(args) => {
            let format: ExportFormat = args.format.parse()?;
            let ring = Ring::parse(&args.ring)?;
            let n = trimat::vertex_count(&ring);
            if format == ExportFormat::Dot && n > DOT_VERTEX_CAP as u64 {
                return Err(Error::CapExceeded {
                    what: "DOT vertex count",
                    size: n as u128,
                    cap: DOT_VERTEX_CAP as u128,
                });
            }
            let g = graph::build_graph_with(&ring, args.common.graph_options())?;
            let bytes = graph::export(&g, format, args.common.budget())?;
            args.common
                .emit(&String::from_utf8(bytes).expect("exports are UTF-8"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
