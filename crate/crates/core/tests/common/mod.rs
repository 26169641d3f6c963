//! Brute-force oracles written straight from the definitions, sharing no
//! code with the library beyond the graph type.

#![allow(dead_code)]

use vic::{Color, ElementId, Graph, ViColoring};

/// Vertices first, then incidences `(v, u)` for every ordered edge.
pub fn elements(g: &Graph) -> Vec<ElementId> {
    let mut out: Vec<ElementId> = (0..g.n()).map(ElementId::Vertex).collect();
    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            out.push(ElementId::Incidence(vic::Incidence::new(v, u)));
        }
    }
    out
}

/// Whether two distinct elements must get different colors: adjacent
/// vertices; a vertex and an incidence on an edge at it; incidences at the
/// same vertex, on the same edge, or chained as `(v,u),(u,x)`.
pub fn conflicts(g: &Graph, a: ElementId, b: ElementId) -> bool {
    use ElementId::{Incidence as I, Vertex as V};
    if a == b {
        return false;
    }
    match (a, b) {
        (V(x), V(y)) => g.has_edge(x, y),
        (V(x), I(i)) | (I(i), V(x)) => i.vertex == x || i.other == x,
        (I(p), I(q)) => p.vertex == q.vertex || q.other == p.vertex || q.vertex == p.other,
    }
}

pub fn color_of(g: &Graph, c: &ViColoring, e: ElementId) -> Color {
    match e {
        ElementId::Vertex(v) => c.vertex(v),
        ElementId::Incidence(i) => c.incidence(g, i.vertex, i.other),
    }
}

pub fn spread(g: &Graph, c: &ViColoring, v: usize) -> usize {
    let mut s: Vec<Color> = g.neighbors(v).iter().map(|&u| c.incidence(g, u, v)).collect();
    s.sort_unstable();
    s.dedup();
    s.len()
}

pub fn proper(g: &Graph, c: &ViColoring) -> bool {
    let els = elements(g);
    els.iter().all(|&e| color_of(g, c, e) > 0)
        && els.iter().enumerate().all(|(i, &a)| {
            els[i + 1..]
                .iter()
                .all(|&b| !conflicts(g, a, b) || color_of(g, c, a) != color_of(g, c, b))
        })
}

/// Plain backtracking over the elements in order, colors `1..=k`, with an
/// optional cap on every spread.
pub fn colorable(g: &Graph, k: usize, cap: Option<usize>) -> bool {
    let els = elements(g);
    let mut colors = vec![0 as Color; els.len()];
    fn go(g: &Graph, els: &[ElementId], colors: &mut [Color], i: usize, k: usize, cap: Option<usize>) -> bool {
        if i == els.len() {
            let c = to_coloring(g, els, colors);
            return cap.is_none_or(|s| (0..g.n()).all(|v| spread(g, &c, v) <= s));
        }
        for col in 1..=k as Color {
            if (0..i).any(|j| colors[j] == col && conflicts(g, els[i], els[j])) {
                continue;
            }
            colors[i] = col;
            // spread at the vertex this incidence points to, among colored ones
            if let (Some(s), ElementId::Incidence(inc)) = (cap, els[i]) {
                let mut seen: Vec<Color> = (0..=i)
                    .filter_map(|j| match els[j] {
                        ElementId::Incidence(q) if q.other == inc.other => Some(colors[j]),
                        _ => None,
                    })
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() > s {
                    continue;
                }
            }
            if go(g, els, colors, i + 1, k, cap) {
                return true;
            }
        }
        colors[i] = 0;
        false
    }
    go(g, &els, &mut colors, 0, k, cap)
}

fn to_coloring(g: &Graph, els: &[ElementId], colors: &[Color]) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    for (e, &col) in els.iter().zip(colors) {
        match *e {
            ElementId::Vertex(v) => c.vertex_colors[v] = col,
            ElementId::Incidence(i) => c.set_incidence(g, i.vertex, i.other, col),
        }
    }
    c
}

/// Smallest `k` admitting a coloring, for tiny graphs only.
pub fn chi(g: &Graph, cap: Option<usize>) -> usize {
    if g.m() == 0 {
        return usize::from(g.n() > 0);
    }
    (1..).find(|&k| colorable(g, k, cap)).unwrap()
}

/// Outerplanar iff the vertices can be placed on a circle so that no two
/// edges, drawn as chords, cross.
pub fn outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 3 {
        return true;
    }
    let edges = g.edge_list();
    let mut pos: Vec<usize> = (0..n).collect();
    let crosses = |pos: &[usize], (a, b): (usize, usize), (c, d): (usize, usize)| {
        let (a, b) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        let inside = |x: usize| a < pos[x] && pos[x] < b;
        let (pc, pd) = (pos[c], pos[d]);
        let shared = [a, b].contains(&pc) || [a, b].contains(&pd);
        !shared && inside(c) != inside(d)
    };
    // vertex 0 fixed at position 0; permute the rest
    fn perms(k: usize, pos: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == pos.len() {
            return f(pos);
        }
        for i in k..pos.len() {
            pos.swap(k, i);
            if perms(k + 1, pos, f) {
                return true;
            }
            pos.swap(k, i);
        }
        false
    }
    perms(1, &mut pos, &mut |pos| {
        edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !crosses(pos, e, f)))
    })
}

/// Girth by trying every edge: the shortest cycle through `uv` is one more
/// than the distance from `u` to `v` without that edge.
pub fn girth(g: &Graph) -> Option<usize> {
    g.edge_list()
        .into_iter()
        .filter_map(|(u, v)| {
            let h = g.subgraph_without_edge(u, v);
            let mut dist = vec![usize::MAX; h.n()];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in h.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            (dist[v] != usize::MAX).then(|| dist[v] + 1)
        })
        .min()
}

/// Largest minimum degree over all nonempty vertex subsets.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    (1u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| g.neighbors(v).iter().filter(|&&u| mask >> u & 1 == 1).count())
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

/// 2-connected: at least three vertices, connected, and no vertex whose
/// removal disconnects.
pub fn two_connected(g: &Graph) -> bool {
    g.n() >= 3
        && g.is_connected()
        && (0..g.n()).all(|v| {
            let keep: Vec<usize> = (0..g.n()).filter(|&x| x != v).collect();
            g.induced(&keep).0.is_connected()
        })
}
