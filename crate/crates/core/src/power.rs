//! Subdivisions, powers and the 3/3-power `(G^{1/3})^3`.

use crate::graph::{element_count, ElementId, Graph, Incidence};
use crate::structure::bfs_distances;

/// Replaces every edge by a path of length `parts`. Original vertices keep
/// their ids; the internal vertices of edge number `e` (in sorted edge order)
/// get ids `n + e*(parts-1) ..`, numbered from the smaller endpoint.
pub fn subdivide(g: &Graph, parts: usize) -> Graph {
    assert!(parts >= 1, "subdivision needs a positive number of parts");
    let n = g.n();
    let inner = parts - 1;
    let total = n + g.m() * inner;
    let mut edges = Vec::with_capacity(g.m() * parts);
    for (e, (x, y)) in g.edges().enumerate() {
        let mut prev = x;
        for k in 0..inner {
            let s = n + e * inner + k;
            edges.push((prev, s));
            prev = s;
        }
        edges.push((prev, y));
    }
    Graph::new(total, &edges).expect("subdivision is simple")
}

/// Joins every pair of vertices at distance at most `m`.
pub fn power(g: &Graph, m: usize) -> Graph {
    assert!(m >= 1, "power needs a positive exponent");
    let adj = (0..g.n())
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .enumerate()
                .filter(|&(v, d)| v != s && d <= m)
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// `G^{3/3}` together with the bijection between its vertices and the
/// elements of `G`.
#[derive(Debug, Clone)]
pub struct ThreeThirds {
    pub graph: Graph,
    /// Element represented by each vertex of the power graph.
    pub element_of: Vec<ElementId>,
    /// Power-graph vertex for each dense element index of `G`.
    pub vertex_of: Vec<usize>,
}

pub fn three_thirds_power(g: &Graph) -> ThreeThirds {
    let graph = power(&subdivide(g, 3), 3);
    let n = g.n();
    let mut element_of = vec![ElementId::Vertex(0); graph.n()];
    let mut vertex_of = vec![0; element_count(g)];
    for v in 0..n {
        element_of[v] = ElementId::Vertex(v);
        vertex_of[v] = v;
    }
    for (e, (x, y)) in g.edges().enumerate() {
        let near_x = n + 2 * e;
        let near_y = near_x + 1;
        for (pv, inc) in [(near_x, Incidence::new(x, y)), (near_y, Incidence::new(y, x))] {
            element_of[pv] = ElementId::Incidence(inc);
            vertex_of[ElementId::Incidence(inc).index(g).unwrap()] = pv;
        }
    }
    ThreeThirds {
        graph,
        element_of,
        vertex_of,
    }
}

/// `power(subdivide(g, parts), m)`.
pub fn fractional_power(g: &Graph, m: usize, parts: usize) -> Graph {
    power(&subdivide(g, parts), m)
}

/// The incidence graph: incidences adjacent under the three incidence rules,
/// numbered in canonical incidence order.
pub fn incidence_graph(g: &Graph) -> Graph {
    let n = g.n();
    let adj = (0..g.incidence_count())
        .map(|k| {
            crate::graph::element_neighbors(g, n + k)
                .into_iter()
                .filter(|&x| x >= n)
                .map(|x| x - n)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// DOT rendering of `G^{3/3}` with i-vertices drawn as boxes.
pub fn three_thirds_dot(g: &Graph) -> String {
    let tt = three_thirds_power(g);
    let mut out = String::from("graph three_thirds {\n");
    for (pv, el) in tt.element_of.iter().enumerate() {
        match el {
            ElementId::Vertex(v) => out.push_str(&format!("  {pv} [label=\"{v}\", shape=circle];\n")),
            ElementId::Incidence(i) => out.push_str(&format!("  {pv} [label=\"{i}\", shape=box];\n")),
        }
    }
    for (u, v) in tt.graph.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the incidence graph, labels in `(v,u)` notation.
pub fn incidence_graph_dot(g: &Graph) -> String {
    let ig = incidence_graph(g);
    let mut out = String::from("graph incidence {\n");
    for k in 0..ig.n() {
        out.push_str(&format!("  {k} [label=\"{}\", shape=box];\n", g.incidence_at(k)));
    }
    for (u, v) in ig.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{conflict, incidences_adjacent};
    use crate::structure::girth;

    #[test]
    fn subdivision_examples() {
        assert_eq!(subdivide(&Graph::complete(2), 3), Graph::path(4).relabel(&[0, 2, 3, 1]));
        let c12 = subdivide(&Graph::cycle(4), 3);
        assert_eq!(c12.n(), 12);
        assert_eq!(c12.m(), 12);
        assert!((0..12).all(|v| c12.degree(v) == 2));
        assert_eq!(girth(&c12), Some(12));
        assert_eq!(subdivide(&Graph::fan(5), 1), Graph::fan(5));
    }

    #[test]
    fn power_identity_and_counts() {
        assert_eq!(power(&Graph::path(4), 1), Graph::path(4));
        let c12_3 = power(&Graph::cycle(12), 3);
        assert!((0..12).all(|v| c12_3.degree(v) == 6));
    }

    #[test]
    fn k2_three_thirds_is_k4() {
        let tt = three_thirds_power(&Graph::complete(2));
        assert_eq!(tt.graph, Graph::complete(4));
    }

    #[test]
    fn c4_three_thirds_is_c12_cubed() {
        let tt = three_thirds_power(&Graph::cycle(4));
        assert_eq!(tt.graph.n(), 12);
        assert!((0..12).all(|v| tt.graph.degree(v) == 6));
        let t = tt.element_of.iter().filter(|e| matches!(e, ElementId::Vertex(_))).count();
        assert_eq!(t, 4);
    }

    #[test]
    fn p3_incidence_graph_by_rules() {
        // brute force over every incidence pair of the path 0-1-2
        let g = Graph::path(3);
        let ig = incidence_graph(&g);
        assert_eq!(ig.n(), 4);
        let incs = crate::graph::incidences(&g);
        let mut expected = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                let (x, y) = (incs[a], incs[b]);
                let rule = x.vertex == y.vertex
                    || (x.vertex == y.other && x.other == y.vertex)
                    || ({
                        let vw = (x.vertex.min(y.vertex), x.vertex.max(y.vertex));
                        let e = (x.vertex.min(x.other), x.vertex.max(x.other));
                        let f = (y.vertex.min(y.other), y.vertex.max(y.other));
                        vw == e || vw == f
                    });
                assert_eq!(ig.has_edge(a, b), rule, "{x} {y}");
                expected += rule as usize;
            }
        }
        assert_eq!(ig.m(), expected);
        // (0,1)~(1,2) through the third rule
        assert!(incidences_adjacent(Incidence::new(0, 1), Incidence::new(1, 2)));
    }

    #[test]
    fn c3_incidence_graph_misses_only_opposite_pairs() {
        let g = Graph::cycle(3);
        let ig = incidence_graph(&g);
        // (v,u) and (w,u) pointing at the same vertex are the only non-adjacent pairs
        assert_eq!(ig.m(), 15 - 3);
        for a in 0..6 {
            for b in a + 1..6 {
                let (x, y) = (g.incidence_at(a), g.incidence_at(b));
                assert_eq!(ig.has_edge(a, b), x.other != y.other);
            }
        }
    }

    #[test]
    fn pull_back_matches_direct_relation() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let tt = three_thirds_power(&g);
        for a in 0..tt.graph.n() {
            for b in 0..tt.graph.n() {
                if a == b {
                    continue;
                }
                let direct = conflict(&g, tt.element_of[a], tt.element_of[b]).is_some();
                assert_eq!(tt.graph.has_edge(a, b), direct);
            }
        }
    }
}
