//! DOT, degree CSV and JSON report serialisation.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use super::invariants::invariants;
use super::CommutingGraph;
use crate::error::{Error, Result};

pub const DOT_VERTEX_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    CsvDegrees,
    JsonReport,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "csv-degrees" => Ok(ExportFormat::CsvDegrees),
            "json-report" => Ok(ExportFormat::JsonReport),
            _ => Err(Error::Parse(format!(
                "unknown export format `{s}` (expected dot, csv-degrees or json-report)"
            ))),
        }
    }
}

pub fn to_dot(graph: &CommutingGraph<'_>) -> Result<String> {
    let n = graph.vertex_count();
    if n > DOT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "DOT vertex count",
            size: n as u128,
            cap: DOT_VERTEX_CAP as u128,
        });
    }
    let ring = graph.ring();
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", ring.spec()).unwrap();
    for (i, m) in graph.vertices().iter().enumerate() {
        writeln!(
            out,
            "  v{i} [label=\"{}\\n{}\"];",
            m.literal(ring),
            graph.class_of(i)
        )
        .unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if graph.is_adjacent(u, v) {
                writeln!(out, "  v{u} -- v{v};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn to_csv_degrees(graph: &CommutingGraph<'_>) -> String {
    let mut out = String::from("vertex_index,class,degree\n");
    for v in 0..graph.vertex_count() {
        writeln!(out, "{v},{},{}", graph.class_of(v), graph.degree(v)).unwrap();
    }
    out
}

/// Serialises `graph` in `format`; the JSON report runs the invariant
/// solvers under `budget`.
pub fn export(
    graph: &CommutingGraph<'_>,
    format: ExportFormat,
    budget: Duration,
) -> Result<Vec<u8>> {
    Ok(match format {
        ExportFormat::Dot => to_dot(graph)?.into_bytes(),
        ExportFormat::CsvDegrees => to_csv_degrees(graph).into_bytes(),
        ExportFormat::JsonReport => {
            let mut s = invariants(graph, budget).to_json();
            s.push('\n');
            s.into_bytes()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::ring::Ring;

    #[test]
    fn z2_dot() {
        let r = Ring::parse("zmod:2").unwrap();
        let g = build_graph(&r).unwrap();
        let dot = to_dot(&g).unwrap();
        assert_eq!(dot.matches(" [label=").count(), 6);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("v0 [label=\"[[0,0],[0,1]]\\nA1\"];"));
        assert_eq!(dot, to_dot(&g).unwrap());
    }

    #[test]
    fn csv_header_and_rows() {
        let r = Ring::parse("zmod:3").unwrap();
        let g = build_graph(&r).unwrap();
        let csv = to_csv_degrees(&g);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("vertex_index,class,degree"));
        assert_eq!(lines.count(), 24);
    }

    #[test]
    fn format_names() {
        assert_eq!(
            "csv-degrees".parse::<ExportFormat>().unwrap(),
            ExportFormat::CsvDegrees
        );
        assert!("png".parse::<ExportFormat>().is_err());
    }
}
