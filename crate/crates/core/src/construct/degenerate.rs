//! Greedy coloring along a degeneracy order.

use crate::checker::lower_bound;
use crate::graph::Graph;
use crate::structure::degeneracy_order;

use super::work::WorkGraph;
use super::{certify, ConstructError, Construction, Run, StepKind};

/// A `(Δ+2k, k)`-coloring of a `k`-degenerate graph: vertices are removed
/// smallest-last and added back one at a time; each returning vertex sees at
/// most `k` colored neighbors.
pub fn color_degenerate(g: &Graph, k: usize) -> Result<Construction, ConstructError> {
    let (order, found) = degeneracy_order(g);
    if found > k || k == 0 {
        return Err(ConstructError::NotDegenerate { k, found });
    }
    let bound = (g.max_degree() + 2 * k).max(lower_bound(g));
    let mut run = Run::new(WorkGraph::from_graph(g), k);
    for &v in &order {
        let nbrs: Vec<usize> = run.w.neighbors(v).collect();
        run.reduce(StepKind::Greedy { v, nbrs }, bound);
    }
    run.base("empty", bound, |h| Ok(crate::coloring::ViColoring::uncolored(h)))?;
    run.unwind()?;
    let trace = std::mem::take(&mut run.trace);
    let coloring = run.into_coloring(g);
    certify(g, &coloring, bound, k, "degeneracy greedy")?;
    Ok(Construction {
        coloring,
        bound,
        spread_cap: k,
        algorithm: format!("degeneracy-greedy(k={k})"),
        trace,
    })
}
