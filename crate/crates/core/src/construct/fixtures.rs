//! Hand-transcribed colorings of small base graphs, stored as data files.
//!
//! File format: `#` comments, then `name N`, `params k s`, `vertex NAME color`
//! lines (vertex ids follow declaration order) and `edge X Y cXY cYX` lines
//! giving the colors of the incidences `(X,Y)` and `(Y,X)`.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::coloring::{Color, ViColoring};
use crate::graph::Graph;
use crate::iso::{embeddings, isomorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    /// Comment lines at the top of the file.
    pub provenance: String,
    pub k: usize,
    pub s: usize,
    pub vertex_names: Vec<String>,
    pub graph: Graph,
    pub coloring: ViColoring,
}

pub fn parse_fixture(text: &str) -> Result<Fixture, FixtureError> {
    let mut name = String::new();
    let mut provenance = Vec::new();
    let mut params = None;
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut vcolors: Vec<Color> = Vec::new();
    let mut edges: Vec<(usize, usize, Color, Color)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: &str| FixtureError::Parse {
            line,
            msg: msg.to_string(),
        };
        let t = raw.trim();
        if let Some(c) = t.strip_prefix('#') {
            provenance.push(c.trim().to_string());
            continue;
        }
        if t.is_empty() {
            continue;
        }
        let f: Vec<&str> = t.split_whitespace().collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| err("expected a number"));
        match f.as_slice() {
            ["name", n] => name = n.to_string(),
            ["params", k, s] => params = Some((num(k)? as usize, num(s)? as usize)),
            ["vertex", v, c] => {
                if ids.insert(v.to_string(), names.len()).is_some() {
                    return Err(err("vertex declared twice"));
                }
                names.push(v.to_string());
                vcolors.push(num(c)?);
            }
            ["edge", x, y, cxy, cyx] => {
                let a = *ids.get(*x).ok_or_else(|| err("unknown vertex"))?;
                let b = *ids.get(*y).ok_or_else(|| err("unknown vertex"))?;
                edges.push((a, b, num(cxy)?, num(cyx)?));
            }
            _ => return Err(err("unrecognized line")),
        }
    }
    let (k, s) = params.ok_or(FixtureError::Parse {
        line: 0,
        msg: "missing params".into(),
    })?;
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _, _)| (a, b)).collect();
    let graph = Graph::new(names.len(), &pairs).map_err(|e| FixtureError::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    let mut coloring = ViColoring::uncolored(&graph);
    coloring.vertex_colors = vcolors;
    for (a, b, cab, cba) in edges {
        coloring.set_incidence(&graph, a, b, cab);
        coloring.set_incidence(&graph, b, a, cba);
    }
    Ok(Fixture {
        name,
        provenance: provenance.join("\n"),
        k,
        s,
        vertex_names: names,
        graph,
        coloring,
    })
}

const SOURCES: [&str; 9] = [
    include_str!("../../fixtures/domino.txt"),
    include_str!("../../fixtures/triangle_6_1.txt"),
    include_str!("../../fixtures/triangle_5_2.txt"),
    include_str!("../../fixtures/diamond.txt"),
    include_str!("../../fixtures/fan5.txt"),
    include_str!("../../fixtures/hexagon_chord.txt"),
    include_str!("../../fixtures/order8_d4_g4.txt"),
    include_str!("../../fixtures/order14_d4_g6.txt"),
    include_str!("../../fixtures/order10_d5_g4.txt"),
];

/// Every stored fixture, in a fixed order.
pub fn fixtures() -> &'static [Fixture] {
    static TABLE: OnceLock<Vec<Fixture>> = OnceLock::new();
    TABLE.get_or_init(|| {
        SOURCES
            .iter()
            .map(|s| parse_fixture(s).expect("bundled fixture parses"))
            .collect()
    })
}

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    fixtures().iter().find(|f| f.name == name)
}

/// The fixture's coloring carried over to `g`, when `g` is isomorphic to the
/// fixture graph.
pub fn transfer_isomorphic(f: &Fixture, g: &Graph) -> Option<ViColoring> {
    let map = isomorphism(g, &f.graph)?;
    Some(pull_back(f, g, &map))
}

/// The fixture's coloring restricted to a copy of `g` inside the fixture
/// graph, when one exists.
pub fn transfer_subgraph(f: &Fixture, g: &Graph) -> Option<ViColoring> {
    let map = embeddings(g, &f.graph, false, 1, |_, _| true).pop()?;
    Some(pull_back(f, g, &map))
}

fn pull_back(f: &Fixture, g: &Graph, map: &[usize]) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    for v in 0..g.n() {
        c.vertex_colors[v] = f.coloring.vertex(map[v]);
        for &u in g.neighbors(v) {
            c.set_incidence(g, v, u, f.coloring.incidence(&f.graph, map[v], map[u]));
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify;
    use crate::structure::girth;

    #[test]
    fn every_fixture_verifies_with_its_parameters() {
        assert_eq!(fixtures().len(), 9);
        for f in fixtures() {
            let r = verify(&f.graph, &f.coloring).unwrap();
            assert!(r.satisfies(f.k, f.s), "{}: {:?}", f.name, r.violations);
            assert!(!f.provenance.is_empty());
        }
    }

    #[test]
    fn fixture_graph_shapes() {
        let shape = |name: &str| {
            let f = fixture(name).unwrap();
            (f.graph.n(), f.graph.max_degree(), girth(&f.graph))
        };
        assert_eq!(shape("diamond"), (4, 3, Some(3)));
        assert_eq!(shape("fan5"), (5, 4, Some(3)));
        assert_eq!(shape("hexagon_chord"), (6, 3, Some(4)));
        assert_eq!(shape("order8_d4_g4"), (8, 4, Some(4)));
        assert_eq!(shape("order14_d4_g6"), (14, 4, Some(6)));
        assert_eq!(shape("order10_d5_g4"), (10, 5, Some(4)));
        assert_eq!(shape("domino"), (6, 3, Some(4)));
    }

    #[test]
    fn subgraph_transfer_restricts() {
        let f = fixture("fan5").unwrap();
        let star = Graph::star(4);
        let c = transfer_subgraph(f, &star).unwrap();
        assert!(verify(&star, &c).unwrap().valid);
        assert!(transfer_isomorphic(f, &star).is_none());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "params 4 1\nvertex a 1\nedge a b 2 3\n";
        assert_eq!(
            parse_fixture(bad).unwrap_err(),
            FixtureError::Parse {
                line: 3,
                msg: "unknown vertex".into()
            }
        );
    }
}
