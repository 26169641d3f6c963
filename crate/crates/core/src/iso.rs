//! Backtracking subgraph matching for small pattern graphs.

use crate::graph::Graph;

/// Order in which pattern vertices are matched: each vertex after the first
/// of its component has an already-matched neighbor where possible.
fn match_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (p.degree(v), usize::MAX - v))
            .unwrap();
        placed[start] = true;
        order.push(start);
        loop {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .filter(|&v| p.neighbors(v).iter().any(|&u| placed[u]))
                .max_by_key(|&v| {
                    let back = p.neighbors(v).iter().filter(|&&u| placed[u]).count();
                    (back, p.degree(v), usize::MAX - v)
                });
            match next {
                Some(v) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
    }
    order
}

struct Matcher<'a, F> {
    p: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    accept: F,
    induced: bool,
    limit: usize,
    out: Vec<Vec<usize>>,
}

impl<F: Fn(usize, usize) -> bool> Matcher<'_, F> {
    fn fits(&self, pv: usize, hv: usize) -> bool {
        if self.used[hv] || self.h.degree(hv) < self.p.degree(pv) || !(self.accept)(pv, hv) {
            return false;
        }
        for &q in &self.order {
            let hq = self.map[q];
            if hq == usize::MAX {
                continue;
            }
            let pe = self.p.has_edge(pv, q);
            let he = self.h.has_edge(hv, hq);
            if pe && !he || self.induced && he && !pe {
                return false;
            }
        }
        true
    }

    fn go(&mut self, depth: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.out.push(self.map.clone());
            return;
        }
        let pv = self.order[depth];
        let anchor = self.p.neighbors(pv).iter().copied().find(|&q| self.map[q] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(q) => self.h.neighbors(self.map[q]).to_vec(),
            None => (0..self.h.n()).collect(),
        };
        for hv in candidates {
            if self.fits(pv, hv) {
                self.map[pv] = hv;
                self.used[hv] = true;
                self.go(depth + 1);
                self.used[hv] = false;
                self.map[pv] = usize::MAX;
                if self.out.len() >= self.limit {
                    return;
                }
            }
        }
    }
}

/// Injective maps from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge (and, if `induced`, non-edges onto
/// non-edges). `accept(p, h)` can veto individual vertex pairs.
pub fn embeddings<F: Fn(usize, usize) -> bool>(
    pattern: &Graph,
    host: &Graph,
    induced: bool,
    limit: usize,
    accept: F,
) -> Vec<Vec<usize>> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Vec::new();
    }
    let mut m = Matcher {
        p: pattern,
        h: host,
        order: match_order(pattern),
        map: vec![usize::MAX; pattern.n()],
        used: vec![false; host.n()],
        accept,
        induced,
        limit,
        out: Vec::new(),
    };
    m.go(0);
    m.out
}

/// A bijection `a -> b` preserving adjacency, if the graphs are isomorphic.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    embeddings(a, b, true, 1, |x, y| a.degree(x) == b.degree(y)).pop()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles_in_k4() {
        let all = embeddings(&Graph::cycle(3), &Graph::complete(4), false, usize::MAX, |_, _| true);
        // 4 triangles, 6 automorphisms each
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn induced_paths_in_c5() {
        let all = embeddings(&Graph::path(3), &Graph::cycle(5), true, usize::MAX, |_, _| true);
        assert_eq!(all.len(), 10);
        let none = embeddings(&Graph::path(3), &Graph::complete(4), true, usize::MAX, |_, _| true);
        assert!(none.is_empty());
    }

    #[test]
    fn isomorphism_of_relabeled_graph() {
        let g = Graph::fan(6);
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.relabel(&perm);
        let f = isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(f[u], f[v]));
        }
        assert!(isomorphism(&Graph::cycle(6), &Graph::path(6)).is_none());
        let two_triangles = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(isomorphism(&Graph::cycle(6), &two_triangles).is_none());
    }
}
