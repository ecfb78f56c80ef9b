//! JSON and table renderings of solver and trap results.

use serde::Serialize;

use brittle_core::parameters::{Certificate, ParameterReport};
use brittle_core::traps::TrapRecord;
use brittle_core::{Graph, VertexSet};

use crate::format::{edge_pair, to_graph6};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportJson {
    pub parameter: &'static str,
    pub class: String,
    pub graph6: String,
    pub value: usize,
    pub certificate: CertificateJson,
    /// `None` unless timing was requested, so output is reproducible.
    pub elapsed_ms: Option<u64>,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateJson {
    Deletion { edges: Vec<[usize; 2]> },
    VertexPartition { parts: Vec<Vec<usize>> },
    EdgePartition { boundary: Vec<usize>, parts: Vec<Vec<[usize; 2]>> },
    Packing { witnesses: Vec<WitnessJson> },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub pattern: usize,
    pub branch: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

fn members(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

impl CertificateJson {
    pub fn new(c: &Certificate) -> CertificateJson {
        match c {
            Certificate::Deletion(f) => CertificateJson::Deletion { edges: f.iter().map(|&e| edge_pair(e)).collect() },
            Certificate::VertexPartition(parts) => {
                CertificateJson::VertexPartition { parts: parts.iter().map(|&p| members(p)).collect() }
            }
            Certificate::EdgePartition { boundary, parts } => CertificateJson::EdgePartition {
                boundary: members(*boundary),
                parts: parts.iter().map(|p| p.iter().map(|&e| edge_pair(e)).collect()).collect(),
            },
            Certificate::Packing(ws) => CertificateJson::Packing {
                witnesses: ws
                    .iter()
                    .map(|w| WitnessJson {
                        pattern: w.pattern,
                        branch: w.embedding.branch.clone(),
                        edges: w.edges.iter().map(|&e| edge_pair(e)).collect(),
                    })
                    .collect(),
            },
        }
    }
}

impl ReportJson {
    pub fn new(class: &str, g: &Graph, r: &ParameterReport, elapsed_ms: Option<u64>) -> ReportJson {
        ReportJson {
            parameter: r.parameter.symbol(),
            class: class.to_string(),
            graph6: to_graph6(g),
            value: r.value,
            certificate: CertificateJson::new(&r.certificate),
            elapsed_ms,
            nodes_expanded: r.nodes_expanded,
        }
    }
}

/// Short text form of a certificate for tables.
pub fn certificate_summary(c: &Certificate) -> String {
    let edges =
        |f: &[brittle_core::Edge]| f.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect::<Vec<_>>().join(" ");
    let set = |s: VertexSet| format!("{{{}}}", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    match c {
        Certificate::Deletion(f) => format!("delete {}", if f.is_empty() { "nothing".into() } else { edges(f) }),
        Certificate::VertexPartition(parts) => parts.iter().map(|&p| set(p)).collect::<Vec<_>>().join(" "),
        Certificate::EdgePartition { boundary, parts } => {
            format!("boundary {} in {} parts", set(*boundary), parts.len())
        }
        Certificate::Packing(ws) => ws.iter().map(|w| format!("[{}]", edges(&w.edges))).collect::<Vec<_>>().join(" "),
    }
}

pub fn table(rows: &[(String, String, String, String)], header: [&str; 4]) -> String {
    let mut widths = header.map(str::len);
    for r in rows {
        for (w, cell) in widths.iter_mut().zip([&r.0, &r.1, &r.2, &r.3]) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 4]| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = widths[i]));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line([&r.0, &r.1, &r.2, &r.3]));
    }
    out
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TrapJson {
    pub j_graph6: String,
    pub s_vertices: Vec<usize>,
    pub h_name: String,
    pub status: &'static str,
}

impl TrapJson {
    pub fn new(h_name: &str, r: &TrapRecord) -> TrapJson {
        TrapJson {
            j_graph6: to_graph6(&r.candidate.j),
            s_vertices: members(r.candidate.s),
            h_name: h_name.to_string(),
            status: r.status.as_str(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use brittle_core::constructions::named::complete;
    use brittle_core::parameters::{edge_brittleness, edit_distance, Limits};
    use brittle_core::GraphClass;

    #[test]
    fn json_shape() {
        let g = complete(3);
        let r = edit_distance(&GraphClass::forests(), &g).unwrap();
        let j = serde_json::to_string(&ReportJson::new("forests", &g, &r, None)).unwrap();
        assert_eq!(
            j,
            r#"{"parameter":"e","class":"forests","graph6":"Bw","value":1,"certificate":{"kind":"deletion","edges":[[0,1]]},"elapsed_ms":null,"nodes_expanded":2}"#
        );
        let r = edge_brittleness(&GraphClass::forests(), &g, &Limits::default()).unwrap();
        let v = serde_json::to_value(ReportJson::new("forests", &g, &r, Some(3))).unwrap();
        assert_eq!(v["certificate"]["kind"], "vertex-partition");
        assert_eq!(v["elapsed_ms"], 3);
    }

    #[test]
    fn tables_align() {
        let t =
            table(&[("e".into(), "1".into(), "2".into(), "x".into())], ["parameter", "value", "nodes", "certificate"]);
        assert_eq!(t, "parameter  value  nodes  certificate\ne          1      2      x\n");
    }
}
