//! Graph names and construction families accepted on the command line.

use std::fmt;

use brittle_core::constructions::named::*;
use brittle_core::constructions::{fan, prop_example_family, FanSpec};
use brittle_core::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyError(pub String);

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FamilyError {}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError(msg.into())
}

/// Parses a graph name, case-insensitively: `k<n>`, `k<m>,<n>`, `c<n>`,
/// `p<n>`, `d` or `diamond`, `k23-plus`, `w-plus-<k>`, `fig3`, `fig4`.
/// `k23` is `K2,3`.
pub fn named_graph(name: &str) -> Result<Graph, FamilyError> {
    let lower = name.to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(format!("unknown graph `{name}`")));
    let sized = |n: usize| -> Result<usize, FamilyError> {
        if n > brittle_core::graph::MAX_VERTICES {
            Err(bad(format!("`{name}` has more than {} vertices", brittle_core::graph::MAX_VERTICES)))
        } else {
            Ok(n)
        }
    };
    match lower.as_str() {
        "d" | "diamond" => return Ok(diamond()),
        "k23" => return Ok(complete_bipartite(2, 3)),
        "k23-plus" | "k23+" => return Ok(k23_plus()),
        "fig3" => return Ok(theta_fig3()),
        "fig4" => return Ok(fig4()),
        _ => {}
    }
    if let Some(k) = lower.strip_prefix("w-plus-") {
        return w_plus(num(k)?).map_err(|e| bad(e.to_string()));
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((m, n)) = rest.split_once(',') {
            let (m, n) = (num(m)?, num(n)?);
            sized(m + n)?;
            return Ok(complete_bipartite(m, n));
        }
        return Ok(complete(sized(num(rest)?)?));
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return Ok(cycle(sized(num(rest)?)?));
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return Ok(path(sized(num(rest)?)?));
    }
    Err(bad(format!("unknown graph `{name}`")))
}

/// Parses a vertex set of `g`: `empty`, `v` (vertex 0), `all-deg2`, or a
/// comma-separated list of vertices.
pub fn vertex_set(g: &Graph, spec: &str) -> Result<VertexSet, FamilyError> {
    let s = match spec {
        "empty" | "" => VertexSet::EMPTY,
        "v" => VertexSet::singleton(0),
        "all-deg2" => degree_two_vertices(g),
        list => list
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad(format!("bad vertex `{x}`"))))
            .collect::<Result<Vec<usize>, _>>()?
            .into_iter()
            .map(|v| if v < g.n() { Ok(v) } else { Err(bad(format!("vertex {v} out of range"))) })
            .collect::<Result<VertexSet, _>>()?,
    };
    Ok(s)
}

/// Parameters shared by the families.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub base: Option<String>,
    pub s: Option<String>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub contract: bool,
}

/// Builds a family member: `fan`, `w-plus`, `fig3`, `fig4`, `prop-example`,
/// or any name accepted by [`named_graph`]. `--contract` applies to `fig3`
/// and `fig4` and contracts their distinguished edge.
pub fn build(family: &str, p: &FamilyParams) -> Result<Graph, FamilyError> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| bad(format!("{family} needs --{flag}")));
    match family {
        "fan" => {
            let base_name = p.base.as_deref().ok_or_else(|| bad("fan needs --base"))?;
            let base = named_graph(base_name)?;
            let s = vertex_set(&base, p.s.as_deref().unwrap_or("empty"))?;
            let spec = FanSpec::new(base, s, need(p.k, "k")?).map_err(|e| bad(e.to_string()))?;
            fan(&spec).map_err(|e| bad(e.to_string()))
        }
        "w-plus" => w_plus(need(p.k, "k")?).map_err(|e| bad(e.to_string())),
        "fig3" if p.contract => Ok(theta_fig3().contract_edge(theta_fig3_edge()).unwrap()),
        "fig4" if p.contract => Ok(fig4().contract_edge(fig4_edge()).unwrap()),
        "prop-example" => {
            let (h, _) = prop_example_family(need(p.l, "l")?).map_err(|e| bad(e.to_string()))?;
            Ok(h.graph)
        }
        other => named_graph(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use brittle_core::canon::are_isomorphic;

    #[test]
    fn names() {
        assert_eq!(named_graph("K4").unwrap(), complete(4));
        assert_eq!(named_graph("k2,5").unwrap(), complete_bipartite(2, 5));
        assert_eq!(named_graph("D").unwrap(), diamond());
        assert_eq!(named_graph("w-plus-4").unwrap().n(), 9);
        assert!(named_graph("k99").is_err());
        assert!(named_graph("petersen").is_err());
    }

    #[test]
    fn fans() {
        let p = FamilyParams { base: Some("K3".into()), s: Some("v".into()), k: Some(5), ..Default::default() };
        let g = build("fan", &p).unwrap();
        assert_eq!((g.n(), g.edge_count()), (11, 15));
        assert_eq!(g.degree(0), 10);
        let bad_s = FamilyParams { s: Some("0,1,2".into()), ..p };
        assert!(build("fan", &bad_s).is_err());
    }

    #[test]
    fn fig3_and_fig4() {
        let p = FamilyParams { contract: true, ..Default::default() };
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(are_isomorphic(&build("fig3", &p).unwrap(), &bowtie));
        assert_eq!(build("prop-example", &FamilyParams { l: Some(3), ..Default::default() }).unwrap().n(), 13);
    }
}
