//! Merging colorings of the two sides of a cut edge or a cut vertex.

use std::collections::BTreeSet;

use crate::coloring::{Color, ViColoring};
use crate::graph::Graph;
use crate::structure::components;

use super::ConstructError;

/// A colored subgraph: `graph` is the induced subgraph of the host on
/// `to_host`, and `coloring` colors `graph`.
#[derive(Debug, Clone)]
pub struct Part {
    pub graph: Graph,
    pub to_host: Vec<usize>,
    pub coloring: ViColoring,
}

impl Part {
    /// Restricts `host` to `keep` and attaches `coloring` of the result.
    pub fn induced(host: &Graph, keep: &[usize], coloring: ViColoring) -> Part {
        let (graph, to_host) = host.induced(keep);
        Part {
            graph,
            to_host,
            coloring,
        }
    }

    fn local(&self, host_v: usize) -> Option<usize> {
        self.to_host.iter().position(|&x| x == host_v)
    }

    fn color_at(&self, v: usize, u: Option<usize>) -> Color {
        match u {
            None => self.coloring.vertex(v),
            Some(u) => self.coloring.incidence(&self.graph, v, u),
        }
    }
}

/// Checks that the parts are induced, cover `g`, and meet exactly in
/// `shared`.
fn check_cover(g: &Graph, a: &Part, b: &Part, shared: &[usize]) -> Result<(), ConstructError> {
    let sa: BTreeSet<usize> = a.to_host.iter().copied().collect();
    let sb: BTreeSet<usize> = b.to_host.iter().copied().collect();
    let common: Vec<usize> = sa.intersection(&sb).copied().collect();
    let mut want = shared.to_vec();
    want.sort_unstable();
    if common != want || sa.union(&sb).count() != g.n() || sa.len() != a.graph.n() || sb.len() != b.graph.n() {
        return Err(ConstructError::PartsMismatch);
    }
    for p in [a, b] {
        if p.to_host.iter().any(|&x| x >= g.n()) {
            return Err(ConstructError::PartsMismatch);
        }
        for (x, y) in p.graph.edges() {
            if !g.has_edge(p.to_host[x], p.to_host[y]) {
                return Err(ConstructError::PartsMismatch);
            }
        }
    }
    // every host edge lies inside one part
    for (x, y) in g.edges() {
        let inside = |p: &Part, s: &BTreeSet<usize>| {
            s.contains(&x) && s.contains(&y) && p.graph.has_edge(p.local(x).unwrap(), p.local(y).unwrap())
        };
        if !inside(a, &sa) && !inside(b, &sb) {
            return Err(ConstructError::PartsMismatch);
        }
    }
    Ok(())
}

/// Copies both parts onto `g`, translating `b`'s colors through `perm`.
fn assemble(g: &Graph, a: &Part, b: &Part, perm: &[Color]) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    let mut bc = b.coloring.clone();
    bc.permute(perm);
    for (p, col) in [(b, &bc), (a, &a.coloring)] {
        for x in 0..p.graph.n() {
            let hx = p.to_host[x];
            c.vertex_colors[hx] = col.vertex(x);
            for &y in p.graph.neighbors(x) {
                c.set_incidence(g, hx, p.to_host[y], col.incidence(&p.graph, x, y));
            }
        }
    }
    c
}

/// Completes a partial color map `perm` (0 = unassigned) on `1..=kb`
/// injectively, using colors in `1..=k` not yet taken.
fn fill_injective(perm: &mut [Color], k: usize) {
    let taken: BTreeSet<Color> = perm.iter().copied().filter(|&x| x != 0).collect();
    let mut free = (1..=k as Color).filter(|x| !taken.contains(x));
    for slot in perm.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = free.next().expect("palette has room for every color");
        }
    }
}

/// Joins colorings of `C_1 + e` and `C_2 + e` at the cut edge `e = {u, v}`.
/// The colors of `b` are permuted so that `u`, `v`, `(u,v)`, `(v,u)` agree
/// with `a`; the result uses `max(k_a, k_b)` colors.
pub fn compose_cut_edge(g: &Graph, (u, v): (usize, usize), a: &Part, b: &Part) -> Result<ViColoring, ConstructError> {
    if !g.has_edge(u, v) || components(&g.subgraph_without_edge(u, v)).len() == components(g).len() {
        return Err(ConstructError::NotCutEdge((u, v)));
    }
    check_cover(g, a, b, &[u, v])?;
    let (au, av) = (a.local(u).unwrap(), a.local(v).unwrap());
    let (bu, bv) = (b.local(u).unwrap(), b.local(v).unwrap());
    let ka = a.coloring.k() as usize;
    let kb = b.coloring.k() as usize;
    let k = ka.max(kb);
    let mut perm = vec![0 as Color; kb + 1];
    for (x, y, xa, ya) in [(bu, None, au, None), (bv, None, av, None), (bu, Some(bv), au, Some(av)), (bv, Some(bu), av, Some(au))] {
        perm[b.color_at(x, y) as usize] = a.color_at(xa, ya);
    }
    fill_injective(&mut perm, k);
    Ok(assemble(g, a, b, &perm))
}

/// Joins spread-1 colorings of two parts sharing only the cut vertex `v`.
/// Uses `max(k_a, k_b, deg(v) + 2)` colors and keeps spread 1 at `v`.
pub fn compose_cut_vertex(g: &Graph, v: usize, a: &Part, b: &Part) -> Result<ViColoring, ConstructError> {
    check_cover(g, a, b, &[v])?;
    let (la, lb) = (a.local(v).unwrap(), b.local(v).unwrap());
    if a.graph.degree(la) == 0 || b.graph.degree(lb) == 0 {
        return Err(ConstructError::NotCutVertex(v));
    }
    let second = |p: &Part, x: usize| -> BTreeSet<Color> {
        p.graph.neighbors(x).iter().map(|&y| p.coloring.incidence(&p.graph, y, x)).collect()
    };
    let (s2a, s2b) = (second(a, la), second(b, lb));
    if s2a.len() > 1 || s2b.len() > 1 {
        return Err(ConstructError::SpreadViolation(v));
    }
    let (sa, sb) = (*s2a.first().unwrap(), *s2b.first().unwrap());
    let ka = a.coloring.k() as usize;
    let kb = b.coloring.k() as usize;
    let k = ka.max(kb).max(g.degree(v) + 2);
    let mut perm = vec![0 as Color; kb + 1];
    perm[b.coloring.vertex(lb) as usize] = a.coloring.vertex(la);
    perm[sb as usize] = sa;
    let mut avoid: BTreeSet<Color> = [a.coloring.vertex(la), sa].into();
    avoid.extend(a.graph.neighbors(la).iter().map(|&y| a.coloring.incidence(&a.graph, la, y)));
    let mut fresh = (1..=k as Color).filter(|x| !avoid.contains(x));
    for &y in b.graph.neighbors(lb) {
        let cb = b.coloring.incidence(&b.graph, lb, y);
        perm[cb as usize] = fresh.next().expect("deg(v) + 2 colors cover the incidences at v");
    }
    fill_injective(&mut perm, k);
    Ok(assemble(g, a, b, &perm))
}
