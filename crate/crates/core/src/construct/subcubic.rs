//! Six colors with spread 2 for outerplanar graphs of maximum degree 3:
//! end-face induction on 2-connected graphs, pendant vertices and cut edges
//! in general.

use crate::coloring::{Color, ViColoring};
use crate::graph::Graph;
use crate::iso::isomorphism;
use crate::outerplanar::{embed_two_connected, end_faces};
use crate::structure::{blocks, components, is_two_connected};

use super::basic::color_path_or_cycle;
use super::compose::{compose_cut_edge, Part};
use super::fixtures::{fixture, transfer_isomorphic};
use super::work::{complete, El, Resolution, Rule, WorkGraph};
use super::{by_components, ConstructError, Run, StepKind};

pub(crate) const PALETTE: usize = 6;
const CAP: usize = 2;

/// Extends over a triangular end face `[a, b, c]` after `b` was attached.
pub(crate) fn extend_triangle(run: &mut Run, a: usize, b: usize, c: usize, palette: usize) -> Result<Resolution, ConstructError> {
    use El::{I, T};
    use Rule::*;
    let new = [I(a, b), I(b, a), I(b, c), I(c, b), T(b)];
    // a direct look at the five new elements settles most cases
    if complete(&run.w, &mut run.col, &new, palette, run.cap, 10_000) {
        return Ok(Resolution::Completion(0));
    }
    let (ca, cac, cca, cc) = (
        run.col.get(T(a)),
        run.col.get(I(a, c)),
        run.col.get(I(c, a)),
        run.col.get(T(c)),
    );
    let rest: Vec<Color> = (1..=palette as Color).filter(|k| ![ca, cac, cca, cc].contains(k)).collect();
    let mut patches = vec![vec![
        (I(a, b), SmallestOf(rest.clone())),
        (I(c, b), SmallestOf(rest.clone())),
        (I(b, c), Fixed(cac)),
        (I(b, a), Fixed(cca)),
        (T(b), Smallest),
    ]];
    // recolor (a,c) with the color of an incidence pointing at c from outside
    for &f in &rest {
        patches.push(vec![
            (I(a, c), Fixed(f)),
            (I(a, b), Fixed(cac)),
            (I(c, b), Fixed(cac)),
            (I(b, a), Fixed(cca)),
            (I(b, c), Fixed(f)),
            (T(b), Smallest),
        ]);
    }
    run.settle("end-face-triangle", &patches, &new, &[I(a, c)], &[a, b, c], palette)
}

/// Six colors, spread at most 2, for a 2-connected outerplanar graph with
/// maximum degree at most 3.
fn color_block(g: &Graph, run_trace: &mut Vec<super::TraceStep>) -> Result<ViColoring, ConstructError> {
    let mut run = Run::new(WorkGraph::from_graph(g), CAP);
    loop {
        let (h, ids) = run.w.to_graph();
        if h.max_degree() <= 2 {
            run.base("cycle", PALETTE, |h| Ok(color_path_or_cycle(h, CAP)))?;
            break;
        }
        let diamond = fixture("diamond").expect("bundled fixture");
        if isomorphism(&h, &diamond.graph).is_some() {
            run.base("diamond", PALETTE, |h| Ok(transfer_isomorphic(diamond, h).unwrap()))?;
            break;
        }
        let emb = embed_two_connected(&h)?;
        let face = end_faces(&emb, &h)?.into_iter().next().ok_or(ConstructError::NotOuterplanar)?;
        let v: Vec<usize> = face.boundary.iter().map(|&x| ids[x]).collect();
        match v.len() {
            3 => run.reduce(StepKind::EndTriangle { a: v[0], b: v[1], c: v[2] }, PALETTE),
            4 => run.reduce(
                StepKind::EndQuad {
                    a: v[0],
                    b: v[1],
                    c: v[2],
                    d: v[3],
                },
                PALETTE,
            ),
            _ => {
                run.reduce(StepKind::AddedEdge { u: v[1], v: v[3] }, PALETTE);
                run.reduce(StepKind::EndTriangle { a: v[1], b: v[2], c: v[3] }, PALETTE);
            }
        }
    }
    run.unwind()?;
    run_trace.append(&mut run.trace);
    Ok(run.into_coloring(g))
}

/// Six colors, spread at most 2, for any outerplanar graph with maximum
/// degree at most 3.
pub(crate) fn color_subcubic(g: &Graph, trace: &mut Vec<super::TraceStep>) -> Result<ViColoring, ConstructError> {
    by_components(g, |h| color_connected(h, trace))
}

fn color_connected(g: &Graph, trace: &mut Vec<super::TraceStep>) -> Result<ViColoring, ConstructError> {
    if g.max_degree() <= 2 {
        return Ok(color_path_or_cycle(g, CAP));
    }
    if is_two_connected(g) {
        return color_block(g, trace);
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        let u = g.neighbors(v)[0];
        let mut run = Run::new(WorkGraph::from_graph(g), CAP);
        run.reduce(StepKind::Pendant { v, u }, PALETTE);
        let mut inner = Vec::new();
        run.base("rest", PALETTE, |h| color_connected(h, &mut inner))?;
        run.unwind()?;
        trace.append(&mut run.trace);
        trace.append(&mut inner);
        return Ok(run.into_coloring(g));
    }
    // no leaf and not 2-connected: with degrees at most 3 some cut edge
    // joins two vertices of degree at least 2
    let (u, v) = *blocks(g).cut_edges.first().ok_or(ConstructError::NotOuterplanar)?;
    let split = components(&g.subgraph_without_edge(u, v));
    let side = |x: usize| {
        let mut s = split.iter().find(|c| c.contains(&x)).unwrap().clone();
        s.push(if x == u { v } else { u });
        s.sort_unstable();
        s
    };
    let (su, sv) = (side(u), side(v));
    let a = Part::induced(g, &su, color_connected(&g.induced(&su).0, trace)?);
    let b = Part::induced(g, &sv, color_connected(&g.induced(&sv).0, trace)?);
    compose_cut_edge(g, (u, v), &a, &b)
}
