//! Outerplanarity: recognition, outer cycles and faces of 2-connected blocks,
//! end faces, and the low-degree configurations every outerplanar graph has.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::structure::blocks;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OuterplanarError {
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("a chordless cycle has no end face")]
    EmptyIfCycle,
    #[error("graph has no vertex of degree one or two")]
    NoReduction,
    #[error("no end face has an endpoint of degree below 5")]
    NoLowDegreeEndFace,
}

/// Embedding of one block: its outer cycle, chords and inner faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OuterplanarEmbedding {
    /// Hamiltonian outer cycle of the block (a single edge for bridges).
    pub outer_order: Vec<usize>,
    /// Chords as `(u, v)` with `u < v`, sorted.
    pub chords: Vec<(usize, usize)>,
    /// Inner faces, each listed along the outer order.
    pub faces: Vec<Vec<usize>>,
}

impl OuterplanarEmbedding {
    pub fn is_bridge(&self) -> bool {
        self.outer_order.len() == 2
    }
}

/// Per-block embeddings of an outerplanar graph. Isolated vertices have no
/// block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OuterplanarLayout {
    pub blocks: Vec<OuterplanarEmbedding>,
    pub cut_vertices: Vec<usize>,
}

/// An inner face `[v_i, …, v_j]` whose interior vertices all have degree 2;
/// `v_j v_i` is its only chord.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EndFace {
    pub boundary: Vec<usize>,
}

impl EndFace {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    pub fn first(&self) -> usize {
        self.boundary[0]
    }

    pub fn last(&self) -> usize {
        *self.boundary.last().unwrap()
    }

    /// The degree-2 vertices strictly between the chord endpoints.
    pub fn interior(&self) -> &[usize] {
        &self.boundary[1..self.boundary.len() - 1]
    }

    pub fn reversed(&self) -> EndFace {
        let mut b = self.boundary.clone();
        b.reverse();
        EndFace { boundary: b }
    }
}

/// Low-degree configurations of outerplanar graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReductionCase {
    /// `v` has degree 1.
    PendantVertex(usize),
    /// Adjacent vertices `u`, `v` both of degree 2.
    AdjacentTwoVertices(usize, usize),
    /// `v` has degree 2 and its neighbors `u`, `w` are adjacent.
    TriangulatedTwoVertex(usize, usize, usize),
}

/// Outer cycle of a 2-connected block given as a local graph, or `None` when
/// the block is not outerplanar.
///
/// Degree-2 vertices are removed one at a time, each replaced by an edge
/// between its neighbors, down to a triangle; reinserting them in reverse
/// rebuilds the unique Hamiltonian outer cycle. The result is then validated
/// directly, so a success is always a genuine outerplanar embedding.
fn outer_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 2 {
        return Some(vec![0, 1]);
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    while alive > 3 {
        let v = loop {
            let v = queue.pop_first()?;
            if !removed[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter();
        let (u, w) = (*it.next().unwrap(), *it.next().unwrap());
        removed[v] = true;
        alive -= 1;
        adj[u].remove(&v);
        adj[w].remove(&v);
        adj[u].insert(w);
        adj[w].insert(u);
        for x in [u, w] {
            if adj[x].len() == 2 {
                queue.insert(x);
            }
        }
        order.push((v, u, w));
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if rest.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(v, u, w) in order.iter().rev() {
        let (a, b) = if next[u] == w {
            (u, w)
        } else if next[w] == u {
            (w, u)
        } else {
            return None;
        };
        next[a] = v;
        prev[v] = a;
        next[v] = b;
        prev[b] = v;
    }
    let mut cycle = Vec::with_capacity(n);
    let start = 0;
    let mut x = start;
    loop {
        cycle.push(x);
        x = next[x];
        if x == start {
            break;
        }
    }
    (cycle.len() == n).then_some(cycle)
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

/// Inner faces of a polygon `0..len` cut by non-crossing chords (positions).
fn polygon_faces(len: usize, chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    let mut stack = vec![(0..len).collect::<Vec<_>>()];
    while let Some(poly) = stack.pop() {
        let k = poly.len();
        let split = chords.iter().find_map(|&(a, b)| {
            let ia = poly.binary_search(&a).ok()?;
            let ib = poly.binary_search(&b).ok()?;
            let gap = ib - ia;
            (gap != 1 && gap != k - 1).then_some((ia, ib))
        });
        match split {
            None => faces.push(poly),
            Some((ia, ib)) => {
                let inner = poly[ia..=ib].to_vec();
                let mut outer = poly[..=ia].to_vec();
                outer.extend_from_slice(&poly[ib..]);
                stack.push(outer);
                stack.push(inner);
            }
        }
    }
    faces.sort();
    faces
}

/// Embeds a 2-connected block (or bridge) given by its vertex set in `g`.
pub fn embed_block(g: &Graph, vertices: &[usize]) -> Option<OuterplanarEmbedding> {
    let (local, back) = g.induced(vertices);
    let cycle = outer_cycle(&local)?;
    let len = cycle.len();
    if len == 2 {
        return Some(OuterplanarEmbedding {
            outer_order: vec![back[cycle[0]], back[cycle[1]]],
            chords: Vec::new(),
            faces: Vec::new(),
        });
    }
    let mut pos = vec![0; len];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    for i in 0..len {
        if !local.has_edge(cycle[i], cycle[(i + 1) % len]) {
            return None;
        }
    }
    let mut chord_pos = Vec::new();
    for (u, v) in local.edges() {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        if b - a != 1 && b - a != len - 1 {
            chord_pos.push((a, b));
        }
    }
    for i in 0..chord_pos.len() {
        for j in i + 1..chord_pos.len() {
            if crosses(chord_pos[i], chord_pos[j]) {
                return None;
            }
        }
    }
    let faces = polygon_faces(len, &chord_pos)
        .into_iter()
        .map(|f| f.into_iter().map(|p| back[cycle[p]]).collect())
        .collect();
    let mut chords: Vec<(usize, usize)> = chord_pos
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (back[cycle[a]], back[cycle[b]]);
            (x.min(y), x.max(y))
        })
        .collect();
    chords.sort_unstable();
    Some(OuterplanarEmbedding {
        outer_order: cycle.into_iter().map(|v| back[v]).collect(),
        chords,
        faces,
    })
}

/// Recognizes outerplanar graphs block by block.
pub fn is_outerplanar(g: &Graph) -> Result<OuterplanarLayout, OuterplanarError> {
    let decomposition = blocks(g);
    let mut out = Vec::with_capacity(decomposition.blocks.len());
    for b in &decomposition.blocks {
        out.push(embed_block(g, b).ok_or(OuterplanarError::NotOuterplanar)?);
    }
    Ok(OuterplanarLayout {
        blocks: out,
        cut_vertices: decomposition.cut_vertices,
    })
}

/// Embedding of a 2-connected outerplanar graph.
pub fn embed_two_connected(g: &Graph) -> Result<OuterplanarEmbedding, OuterplanarError> {
    let all: Vec<usize> = (0..g.n()).collect();
    embed_block(g, &all).ok_or(OuterplanarError::NotOuterplanar)
}

fn end_face_of(face: &[usize], g: &Graph) -> Option<EndFace> {
    let len = face.len();
    let high: Vec<usize> = (0..len).filter(|&i| g.degree(face[i]) != 2).collect();
    if high.len() != 2 {
        return None;
    }
    let (p, q) = (high[0], high[1]);
    // the two high-degree vertices must be consecutive on the face (the chord)
    let start = if q == p + 1 {
        q
    } else if p == 0 && q == len - 1 {
        p
    } else {
        return None;
    };
    let boundary = (0..len).map(|t| face[(start + t) % len]).collect();
    Some(EndFace { boundary })
}

/// All end faces of a block embedding, ordered by smallest vertex then
/// lexicographically. `g` supplies the degrees.
pub fn end_faces(emb: &OuterplanarEmbedding, g: &Graph) -> Result<Vec<EndFace>, OuterplanarError> {
    if emb.chords.is_empty() {
        return Err(OuterplanarError::EmptyIfCycle);
    }
    let mut faces: Vec<EndFace> = emb.faces.iter().filter_map(|f| end_face_of(f, g)).collect();
    faces.sort_by_key(|f| (*f.boundary.iter().min().unwrap(), f.boundary.clone()));
    Ok(faces)
}

/// An end face with an endpoint of degree below 5, oriented so that
/// `boundary[0]` is such an endpoint.
pub fn low_degree_end_face(emb: &OuterplanarEmbedding, g: &Graph) -> Result<EndFace, OuterplanarError> {
    for f in end_faces(emb, g)? {
        if g.degree(f.first()) < 5 {
            return Ok(f);
        }
        if g.degree(f.last()) < 5 {
            return Ok(f.reversed());
        }
    }
    Err(OuterplanarError::NoLowDegreeEndFace)
}

/// Scans for a reducible configuration by degrees alone, preferring a pendant
/// vertex, then two adjacent 2-vertices, then a 2-vertex in a triangle.
pub fn reduction_by_degrees(g: &Graph) -> Option<ReductionCase> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
        return Some(ReductionCase::PendantVertex(v));
    }
    for v in (0..n).filter(|&v| g.degree(v) == 2) {
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| g.degree(u) == 2) {
            return Some(ReductionCase::AdjacentTwoVertices(v.min(u), v.max(u)));
        }
    }
    for v in (0..n).filter(|&v| g.degree(v) == 2) {
        let (u, w) = (g.neighbors(v)[0], g.neighbors(v)[1]);
        if g.has_edge(u, w) {
            return Some(ReductionCase::TriangulatedTwoVertex(v, u, w));
        }
    }
    None
}

/// A reducible configuration of an outerplanar graph.
pub fn find_reduction(g: &Graph) -> Result<ReductionCase, OuterplanarError> {
    is_outerplanar(g)?;
    reduction_by_degrees(g).ok_or(OuterplanarError::NoReduction)
}
