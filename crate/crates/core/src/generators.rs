//! Seeded random outerplanar graphs and exhaustive enumeration of small
//! graphs up to isomorphism.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::structure::girth;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible generator spec: {0}")]
    Infeasible(String),
    #[error("enumeration is limited to 8 vertices (asked for {0})")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub delta_max: usize,
    pub girth_min: usize,
    pub two_connected: bool,
    /// Retry until the maximum degree is exactly `delta_max`.
    pub exact_delta: bool,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, delta_max: usize, girth_min: usize, seed: u64) -> Self {
        GenSpec {
            n,
            delta_max,
            girth_min,
            two_connected: false,
            exact_delta: false,
            seed,
        }
    }
}

const RETRIES: u64 = 200;

/// A random outerplanar graph meeting `spec`: a polygon on `n` vertices
/// (randomly labeled) with random non-crossing chords that respect the
/// degree and girth limits; unless 2-connectivity is requested, some outer
/// edges are then deleted while keeping the graph connected.
pub fn gen_outerplanar(spec: &GenSpec) -> Result<Graph, GenError> {
    let GenSpec {
        n,
        delta_max,
        girth_min,
        two_connected,
        exact_delta,
        ..
    } = *spec;
    let bad = |m: &str| Err(GenError::Infeasible(m.to_string()));
    if girth_min < 3 {
        return bad("girth_min must be at least 3");
    }
    if n <= 2 {
        if two_connected && n < 3 {
            return bad("2-connected graphs need 3 vertices");
        }
        let want = n.saturating_sub(1);
        if delta_max < want || exact_delta && delta_max != want {
            return bad("degree limit unreachable");
        }
        return Ok(Graph::path(n));
    }
    if delta_max < 2 && two_connected {
        return bad("2-connected graphs need degree 2");
    }
    if delta_max < 1 {
        return bad("connected graphs on 2+ vertices need an edge");
    }
    if delta_max == 1 {
        return bad("a connected graph on 3+ vertices has a vertex of degree 2");
    }
    if two_connected && n < girth_min {
        return bad("the outer cycle is shorter than girth_min");
    }
    for attempt in 0..RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_mul(0x9E37_79B9).wrapping_add(attempt));
        let g = if n < girth_min {
            // only a tree fits
            random_tree(n, delta_max, &mut rng)
        } else {
            let mut g = polygon_with_chords(n, delta_max, girth_min, &mut rng);
            if !two_connected {
                g = thin_out(g, &mut rng);
            }
            g
        };
        if exact_delta && g.max_degree() != delta_max {
            continue;
        }
        debug_assert!(girth(&g).is_none_or(|x| x >= girth_min));
        return Ok(g);
    }
    bad("no graph met the degree constraint after bounded retries")
}

fn relabel_randomly(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn random_tree(n: usize, delta_max: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < delta_max).collect();
        let u = open[rng.gen_range(0..open.len())];
        deg[u] += 1;
        deg[v] += 1;
        edges.push((u, v));
    }
    relabel_randomly(&Graph::new(n, &edges).unwrap(), rng)
}

fn polygon_with_chords(n: usize, delta_max: usize, girth_min: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![2usize; n];
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut faces: Vec<Vec<usize>> = vec![(0..n).collect()];
    let want = rng.gen_range(0..=n.saturating_sub(3));
    let mut added = 0;
    let tries = 30 * n;
    for _ in 0..tries {
        if added >= want {
            break;
        }
        let big: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].len() >= 2 * girth_min - 2).collect();
        if big.is_empty() {
            break;
        }
        let fi = big[rng.gen_range(0..big.len())];
        let face = &faces[fi];
        let len = face.len();
        let open: Vec<usize> = (0..len).filter(|&i| deg[face[i]] < delta_max).collect();
        if open.len() < 2 {
            continue;
        }
        // half the time favour the busiest endpoint so high degrees appear
        let i = if rng.gen_bool(0.5) {
            *open.iter().max_by_key(|&&i| (deg[face[i]], i)).unwrap()
        } else {
            open[rng.gen_range(0..open.len())]
        };
        let j = open[rng.gen_range(0..open.len())];
        let (i, j) = (i.min(j), i.max(j));
        let inner = j - i + 1;
        let outer = len - (j - i) + 1;
        if j - i < 2 || len - (j - i) < 2 || inner < girth_min || outer < girth_min {
            continue;
        }
        let (a, b) = (face[i], face[j]);
        let f1: Vec<usize> = face[i..=j].to_vec();
        let f2: Vec<usize> = face[j..].iter().chain(face[..=i].iter()).copied().collect();
        deg[a] += 1;
        deg[b] += 1;
        edges.push((a, b));
        faces[fi] = f1;
        faces.push(f2);
        added += 1;
    }
    relabel_randomly(&Graph::new(n, &edges).unwrap(), rng)
}

fn thin_out(g: Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = g;
    let mut edges = g.edge_list();
    edges.shuffle(rng);
    let budget = rng.gen_range(0..=g.n() / 2);
    let mut removed = 0;
    for (u, v) in edges {
        if removed >= budget {
            break;
        }
        let h = g.subgraph_without_edge(u, v);
        if h.is_connected() {
            g = h;
            removed += 1;
        }
    }
    g
}

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over labelings that respect a degree-based refinement.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are for small graphs");
    let mut color: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    loop {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut s: Vec<u64> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut keys = sig.clone();
        keys.sort();
        keys.dedup();
        let next: Vec<u64> = sig.iter_mut().map(|s| keys.binary_search(s).unwrap() as u64).collect();
        let classes = |c: &[u64]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&color) {
            color = next;
            break;
        }
        color = next;
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    for v in order {
        match cells.last_mut() {
            Some(c) if color[c[0]] == color[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut pos = Vec::with_capacity(n);
    search_labelings(g, &cells, 0, &mut vec![false; n], &mut pos, &mut best);
    best
}

fn code_of(g: &Graph, pos: &[usize]) -> u64 {
    // pos[i] = vertex placed at position i
    let n = pos.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(pos[i], pos[j]) as u64;
        }
    }
    code
}

fn search_labelings(g: &Graph, cells: &[Vec<usize>], ci: usize, used: &mut Vec<bool>, pos: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        *best = (*best).min(code_of(g, pos));
        return;
    }
    let cell = &cells[ci];
    let placed = pos.len() - cells[..ci].iter().map(|c| c.len()).sum::<usize>();
    if placed == cell.len() {
        search_labelings(g, cells, ci + 1, used, pos, best);
        return;
    }
    for &v in cell {
        if !used[v] {
            used[v] = true;
            pos.push(v);
            search_labelings(g, cells, ci, used, pos, best);
            pos.pop();
            used[v] = false;
        }
    }
}

/// All graphs on `n ≤ 8` vertices up to isomorphism that pass `keep`.
/// `keep` must be closed under deleting vertices: graphs are grown one
/// vertex at a time and rejected prefixes are not extended.
pub fn enumerate_graphs<F: Fn(&Graph) -> bool + Sync>(n: usize, keep: F) -> Result<Vec<Graph>, GenError> {
    if n > 8 {
        return Err(GenError::TooLarge(n));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (size - 1) {
                let mut edges = g.edge_list();
                edges.extend((0..size - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, size - 1)));
                let h = Graph::new(size, &edges).unwrap();
                if !keep(&h) {
                    continue;
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Connected graphs on `1..=n` vertices up to isomorphism.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>, GenError> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_graphs(k, |_| true)?.into_iter().filter(|g| g.is_connected()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::is_outerplanar;
    use crate::structure::is_two_connected;

    #[test]
    fn published_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, |_| true).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, |_| true).unwrap().iter().filter(|g| g.is_connected()).count())
            .collect();
        assert_eq!(conn, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&Graph::cycle(6)), canonical_code(&Graph::path(6)));
    }

    #[test]
    fn spec_examples() {
        let mut s = GenSpec::new(8, 3, 4, 1);
        s.two_connected = true;
        let g = gen_outerplanar(&s).unwrap();
        assert!(is_two_connected(&g) && g.max_degree() <= 3 && girth(&g).unwrap() >= 4);
        assert!(is_outerplanar(&g).is_ok());
        let mut s = GenSpec::new(14, 4, 6, 3);
        s.two_connected = true;
        let g = gen_outerplanar(&s).unwrap();
        assert!(g.max_degree() <= 4 && girth(&g).unwrap() >= 6);
        let mut s = GenSpec::new(3, 2, 3, 0);
        s.two_connected = true;
        let g = gen_outerplanar(&s).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn exact_delta_and_infeasible() {
        let mut s = GenSpec::new(40, 6, 4, 11);
        s.exact_delta = true;
        assert_eq!(gen_outerplanar(&s).unwrap().max_degree(), 6);
        let mut s = GenSpec::new(4, 3, 5, 0);
        s.two_connected = true;
        assert!(matches!(gen_outerplanar(&s), Err(GenError::Infeasible(_))));
    }

    #[test]
    fn same_seed_same_graph() {
        let s = GenSpec::new(30, 5, 3, 42);
        assert_eq!(gen_outerplanar(&s).unwrap(), gen_outerplanar(&s).unwrap());
    }
}
