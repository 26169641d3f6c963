//! `Δ+3` colors with spread 2 for every outerplanar graph.

use crate::graph::Graph;
use crate::outerplanar::{is_outerplanar, reduction_by_degrees, ReductionCase};

use super::basic::color_path_or_cycle;
use super::degenerate::color_degenerate;
use super::fixtures::{fixture, transfer_subgraph};
use super::subcubic::{color_subcubic, PALETTE};
use super::work::WorkGraph;
use super::{by_components, certify, ConstructError, Construction, Run, StepKind};

/// A `(Δ+3, 2)`-coloring of an outerplanar graph (six colors when `Δ = 3`).
///
/// `Δ ≤ 2` uses the path and cycle colorings, `Δ = 3` the subcubic end-face
/// induction, and `Δ ≥ 4` peels pendant vertices, adjacent 2-vertices and
/// 2-vertices in triangles until the maximum degree drops to 3, where the
/// degeneracy greedy with `k = 2` takes over.
pub fn color_outerplanar(g: &Graph) -> Result<Construction, ConstructError> {
    is_outerplanar(g)?;
    let delta = g.max_degree();
    let mut trace = Vec::new();
    let (coloring, bound, algorithm) = match delta {
        0..=2 => (
            by_components(g, |h| Ok(color_path_or_cycle(h, 2)))?,
            match delta {
                0 => 1,
                1 => 4,
                _ => 5,
            },
            "paths-and-cycles",
        ),
        3 => (color_subcubic(g, &mut trace)?, PALETTE, "subcubic-end-faces"),
        _ => (reduce(g, delta + 3, &mut trace)?, delta + 3, "low-degree-reductions"),
    };
    certify(g, &coloring, bound, 2, algorithm)?;
    Ok(Construction {
        coloring,
        bound,
        spread_cap: 2,
        algorithm: algorithm.to_string(),
        trace,
    })
}

fn reduce(g: &Graph, palette: usize, trace: &mut Vec<super::TraceStep>) -> Result<crate::ViColoring, ConstructError> {
    let mut run = Run::new(WorkGraph::from_graph(g), 2);
    loop {
        let isolated: Vec<usize> = run.w.vertices().filter(|&v| run.w.degree(v) == 0).collect();
        for v in isolated {
            run.reduce(StepKind::Isolated { v }, palette);
        }
        let (h, ids) = run.w.to_graph();
        if h.n() == 0 {
            run.base("empty", palette, |h| Ok(crate::ViColoring::uncolored(h)))?;
            break;
        }
        if h.max_degree() <= 3 {
            run.base("degeneracy-greedy", palette, |h| Ok(color_degenerate(h, 2)?.coloring))?;
            break;
        }
        if h.n() <= 5 {
            let fan = fixture("fan5").expect("bundled fixture");
            if let Some(c) = transfer_subgraph(fan, &h) {
                run.base("fan5", palette, |_| Ok(c))?;
                break;
            }
        }
        let step = match reduction_by_degrees(&h).ok_or(ConstructError::NotOuterplanar)? {
            ReductionCase::PendantVertex(v) => StepKind::Pendant {
                v: ids[v],
                u: ids[h.neighbors(v)[0]],
            },
            ReductionCase::AdjacentTwoVertices(v, u) => {
                let other = |x: usize, y: usize| *h.neighbors(x).iter().find(|&&z| z != y).unwrap();
                StepKind::AdjacentPair {
                    x: ids[other(v, u)],
                    v: ids[v],
                    u: ids[u],
                    y: ids[other(u, v)],
                }
            }
            ReductionCase::TriangulatedTwoVertex(v, u, w) => StepKind::Triangulated {
                v: ids[v],
                u: ids[u],
                w: ids[w],
            },
        };
        run.reduce(step, palette);
    }
    run.unwind()?;
    trace.append(&mut run.trace);
    Ok(run.into_coloring(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify;

    fn check(g: &Graph, want: usize) {
        let c = color_outerplanar(g).unwrap();
        let r = verify(g, &c.coloring).unwrap();
        assert!(r.satisfies(want, 2), "{:?}", r.violations);
    }

    #[test]
    fn small_families() {
        check(&Graph::cycle(7), 5);
        check(&Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(), 6);
        check(&Graph::fan(5), 7);
        check(&Graph::fan(9), 11);
        check(&Graph::star(6), 9);
    }

    #[test]
    fn rejects_k4() {
        assert_eq!(color_outerplanar(&Graph::complete(4)).unwrap_err(), ConstructError::NotOuterplanar);
    }

    #[test]
    fn fans_glued_with_paths() {
        let mut e = Vec::new();
        for i in 1..8 {
            e.push((0, i));
        }
        for i in 1..7 {
            e.push((i, i + 1));
        }
        e.extend([(7, 8), (8, 9), (9, 10), (10, 8), (3, 11), (11, 12)]);
        check(&Graph::new(13, &e).unwrap(), 10);
    }
}
