//! Mutable graphs over stable vertex ids, colorings keyed by element, and the
//! local repair machinery shared by the inductive colorers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::coloring::{Color, ViColoring};
use crate::exact::{solve, Outcome, Problem, MAX_COLORS};
use crate::graph::Graph;

/// An element of `V ∪ I` in host vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum El {
    T(usize),
    I(usize, usize),
}

#[derive(Debug, Clone)]
pub(crate) struct WorkGraph {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl WorkGraph {
    pub fn from_graph(g: &Graph) -> Self {
        WorkGraph {
            adj: (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect(),
            alive: vec![true; g.n()],
        }
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.adj.len()).filter(|&v| self.alive[v])
    }

    pub fn order(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.alive[u] && self.alive[v] && u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn remove_vertex(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
        for u in nbrs {
            self.adj[u].remove(&v);
        }
        self.adj[v].clear();
        self.alive[v] = false;
    }

    pub fn revive(&mut self, v: usize) {
        self.alive[v] = true;
    }

    /// Compact copy with ids `0..order`, plus the host id of each vertex.
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = self.vertices().collect();
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &ids {
            for &u in &self.adj[v] {
                if v < u {
                    edges.push((local[v], local[u]));
                }
            }
        }
        (Graph::new(ids.len(), &edges).expect("work graph is simple"), ids)
    }

    /// Every element adjacent or incident to `e`.
    pub fn conflicts(&self, e: El) -> Vec<El> {
        let mut out = Vec::new();
        match e {
            El::T(v) => {
                for u in self.neighbors(v) {
                    out.push(El::T(u));
                    out.push(El::I(v, u));
                    out.push(El::I(u, v));
                }
            }
            El::I(v, u) => {
                out.push(El::T(v));
                out.push(El::T(u));
                for x in self.neighbors(v) {
                    if x != u {
                        out.push(El::I(v, x));
                    }
                    out.push(El::I(x, v));
                }
                for x in self.neighbors(u) {
                    if x != v {
                        out.push(El::I(u, x));
                    }
                }
            }
        }
        out
    }

    /// `I_2(v)`.
    pub fn second(&self, v: usize) -> impl Iterator<Item = El> + '_ {
        self.neighbors(v).map(move |u| El::I(u, v))
    }

    /// `v`, `I_1(v)` and `I_2(v)`.
    pub fn elements_at(&self, v: usize) -> Vec<El> {
        let mut out = vec![El::T(v)];
        for u in self.neighbors(v) {
            out.push(El::I(v, u));
            out.push(El::I(u, v));
        }
        out
    }
}

/// A partial coloring keyed by element; absent means uncolored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct WorkColoring {
    map: HashMap<El, Color>,
}

impl WorkColoring {
    pub fn get(&self, e: El) -> Color {
        self.map.get(&e).copied().unwrap_or(0)
    }

    pub fn set(&mut self, e: El, c: Color) {
        if c == 0 {
            self.map.remove(&e);
        } else {
            self.map.insert(e, c);
        }
    }

    pub fn clear(&mut self, e: El) {
        self.map.remove(&e);
    }

    /// Copies a coloring of `g` whose vertex `i` is host vertex `ids[i]`.
    pub fn absorb(&mut self, g: &Graph, ids: &[usize], c: &ViColoring) {
        for v in 0..g.n() {
            self.set(El::T(ids[v]), c.vertex(v));
            for &u in g.neighbors(v) {
                self.set(El::I(ids[v], ids[u]), c.incidence(g, v, u));
            }
        }
    }

    pub fn to_coloring(&self, g: &Graph, ids: &[usize]) -> ViColoring {
        let mut out = ViColoring::uncolored(g);
        for v in 0..g.n() {
            out.vertex_colors[v] = self.get(El::T(ids[v]));
            for &u in g.neighbors(v) {
                out.set_incidence(g, v, u, self.get(El::I(ids[v], ids[u])));
            }
        }
        out
    }

    /// Colors of the colored members of `I_2(v)`, without repeats.
    pub fn second_colors(&self, w: &WorkGraph, v: usize) -> BTreeSet<Color> {
        w.second(v).map(|e| self.get(e)).filter(|&c| c != 0).collect()
    }
}

/// Colors in `1..=palette` that `e` may take given the colored elements
/// around it, honoring the spread cap at the vertex an incidence points to.
pub(crate) fn legal_colors(w: &WorkGraph, c: &WorkColoring, e: El, palette: usize, cap: usize) -> Vec<Color> {
    let mut bad = vec![false; palette + 1];
    for f in w.conflicts(e) {
        let x = c.get(f) as usize;
        if x != 0 && x <= palette {
            bad[x] = true;
        }
    }
    let spread_ok: Option<BTreeSet<Color>> = match e {
        El::I(x, v) => {
            let others: BTreeSet<Color> =
                w.second(v).filter(|&f| f != El::I(x, v)).map(|f| c.get(f)).filter(|&k| k != 0).collect();
            (others.len() >= cap).then_some(others)
        }
        El::T(_) => None,
    };
    (1..=palette as Color)
        .filter(|&k| !bad[k as usize])
        .filter(|k| spread_ok.as_ref().is_none_or(|s| s.contains(k)))
        .collect()
}

/// The colored elements among `els` conflict with nothing, stay within the
/// palette, and every touched `I_2` set respects the cap.
pub(crate) fn locally_valid(w: &WorkGraph, c: &WorkColoring, els: &[El], palette: usize, cap: usize) -> bool {
    let mut targets = BTreeSet::new();
    for &e in els {
        let k = c.get(e);
        if k == 0 || k as usize > palette {
            return false;
        }
        if w.conflicts(e).into_iter().any(|f| c.get(f) == k) {
            return false;
        }
        match e {
            El::I(_, v) => {
                targets.insert(v);
            }
            El::T(v) => {
                targets.insert(v);
            }
        }
    }
    targets.into_iter().all(|v| c.second_colors(w, v).len() <= cap)
}

/// How a reduction step was resolved, for traces and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Resolution {
    /// The transcribed recoloring verified as is.
    Patch,
    /// Exhaustive completion over the given widening level.
    Completion(u8),
    /// A stored coloring (or closed form) supplied the colors.
    Base,
}

/// Recolors exactly the elements of `free` (everything else stays) by
/// exhaustive search. Restores the old colors on failure.
pub(crate) fn complete(
    w: &WorkGraph,
    c: &mut WorkColoring,
    free: &[El],
    palette: usize,
    cap: usize,
    node_limit: u64,
) -> bool {
    if palette > MAX_COLORS {
        return false;
    }
    let free: Vec<El> = free.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let index: HashMap<El, usize> = free.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let saved: Vec<Color> = free.iter().map(|&e| c.get(e)).collect();
    for &e in &free {
        c.clear(e);
    }
    let mut adj = vec![Vec::new(); free.len()];
    let mut forbidden = vec![0u64; free.len()];
    for (i, &e) in free.iter().enumerate() {
        for f in w.conflicts(e) {
            if let Some(&j) = index.get(&f) {
                adj[i].push(j);
            } else {
                let k = c.get(f);
                if k != 0 {
                    forbidden[i] |= 1 << k;
                }
            }
        }
        adj[i].sort_unstable();
        adj[i].dedup();
    }
    let mut p = Problem::new(adj);
    p.forbidden = forbidden;
    if cap < usize::MAX {
        p.cap = cap;
        let mut groups: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &e) in free.iter().enumerate() {
            if let El::I(_, v) = e {
                let next = groups.len();
                p.group_of[i] = *groups.entry(v).or_insert(next);
            }
        }
        p.group_init = vec![0; groups.len()];
        for (&v, &g) in &groups {
            for f in w.second(v) {
                if !index.contains_key(&f) {
                    let k = c.get(f);
                    if k != 0 {
                        p.group_init[g] |= 1 << k;
                    }
                }
            }
        }
    }
    match solve(&p, palette, Some(node_limit), 0).0 {
        Outcome::Found(colors) => {
            for (&e, &k) in free.iter().zip(&colors) {
                c.set(e, k);
            }
            true
        }
        _ => {
            for (&e, &k) in free.iter().zip(&saved) {
                c.set(e, k);
            }
            false
        }
    }
}

/// Completion with a widening free set: the new elements, then the
/// prescribed recolor set, then everything at the key vertices, then
/// everything at their closed neighborhoods, then the distance-2 ball.
pub(crate) fn repair(
    w: &WorkGraph,
    c: &mut WorkColoring,
    new: &[El],
    recolor: &[El],
    keys: &[usize],
    palette: usize,
    cap: usize,
) -> Option<Resolution> {
    const LIMIT: u64 = 200_000;
    let mut free: Vec<El> = new.to_vec();
    if complete(w, c, &free, palette, cap, LIMIT) {
        return Some(Resolution::Completion(0));
    }
    free.extend_from_slice(recolor);
    if !recolor.is_empty() && complete(w, c, &free, palette, cap, LIMIT) {
        return Some(Resolution::Completion(1));
    }
    let mut ring: BTreeSet<usize> = keys.iter().copied().filter(|&v| w.is_alive(v)).collect();
    for level in 2..=4u8 {
        for &v in &ring {
            free.extend(w.elements_at(v));
        }
        if complete(w, c, &free, palette, cap, LIMIT) {
            return Some(Resolution::Completion(level));
        }
        let grown: BTreeSet<usize> = ring.iter().flat_map(|&v| w.neighbors(v)).chain(ring.iter().copied()).collect();
        ring = grown;
    }
    None
}

/// One assignment of a transcribed recoloring.
#[derive(Debug, Clone)]
pub(crate) enum Rule {
    /// The color another element has at this point of the patch.
    Same(El),
    /// A fixed color.
    Fixed(Color),
    /// The smallest legal color.
    Smallest,
    /// The smallest legal color among these.
    SmallestOf(Vec<Color>),
    /// The smallest legal color not used by any of these elements.
    SmallestNot(Vec<El>),
}

/// Applies `steps` in order and checks the touched elements. On failure the
/// touched elements are restored to their previous colors.
pub(crate) fn apply_patch(
    w: &WorkGraph,
    c: &mut WorkColoring,
    steps: &[(El, Rule)],
    palette: usize,
    cap: usize,
) -> bool {
    let saved: Vec<(El, Color)> = steps.iter().map(|&(e, _)| (e, c.get(e))).collect();
    for (e, _) in steps {
        c.clear(*e);
    }
    let mut ok = true;
    for (e, rule) in steps {
        let k = match rule {
            Rule::Same(f) => c.get(*f),
            Rule::Fixed(k) => *k,
            Rule::Smallest => legal_colors(w, c, *e, palette, cap).first().copied().unwrap_or(0),
            Rule::SmallestOf(set) => legal_colors(w, c, *e, palette, cap)
                .into_iter()
                .find(|k| set.contains(k))
                .unwrap_or(0),
            Rule::SmallestNot(els) => {
                let taken: Vec<Color> = els.iter().map(|&f| c.get(f)).collect();
                legal_colors(w, c, *e, palette, cap)
                    .into_iter()
                    .find(|k| !taken.contains(k))
                    .unwrap_or(0)
            }
        };
        if k == 0 {
            ok = false;
            break;
        }
        c.set(*e, k);
    }
    let touched: Vec<El> = steps.iter().map(|&(e, _)| e).collect();
    if ok && locally_valid(w, c, &touched, palette, cap) {
        return true;
    }
    for (e, k) in saved {
        c.set(e, k);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    impl WorkGraph {
        fn all_elements(&self) -> Vec<El> {
            let mut out = Vec::new();
            for v in self.vertices() {
                out.push(El::T(v));
                out.extend(self.neighbors(v).map(|u| El::I(v, u)));
            }
            out
        }
    }

    fn fully_valid(w: &WorkGraph, c: &WorkColoring, palette: usize, cap: usize) -> bool {
        locally_valid(w, c, &w.all_elements(), palette, cap)
    }

    #[test]
    fn conflicts_match_graph_relation() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let w = WorkGraph::from_graph(&g);
        let as_id = |e: El| match e {
            El::T(v) => crate::graph::ElementId::Vertex(v),
            El::I(v, u) => crate::graph::ElementId::Incidence(crate::graph::Incidence::new(v, u)),
        };
        let all = w.all_elements();
        for &a in &all {
            let mine: BTreeSet<El> = w.conflicts(a).into_iter().collect();
            let theirs: BTreeSet<El> = all
                .iter()
                .copied()
                .filter(|&b| b != a && crate::graph::conflict(&g, as_id(a), as_id(b)).is_some())
                .collect();
            assert_eq!(mine, theirs, "{a:?}");
        }
    }

    #[test]
    fn completion_respects_fixed_colors() {
        let g = Graph::path(3);
        let w = WorkGraph::from_graph(&g);
        let mut c = WorkColoring::default();
        c.set(El::T(0), 1);
        c.set(El::I(0, 1), 2);
        c.set(El::I(1, 0), 3);
        c.set(El::T(1), 4);
        let new = [El::I(1, 2), El::I(2, 1), El::T(2)];
        assert!(complete(&w, &mut c, &new, 4, 1, 1000));
        assert!(fully_valid(&w, &c, 4, 1));
        // with three colors nothing fits around vertex 1
        let mut d = WorkColoring::default();
        d.set(El::T(0), 1);
        assert!(!complete(&w, &mut d, &w.all_elements()[1..], 3, usize::MAX, 1000));
        assert_eq!(d.get(El::T(0)), 1);
    }
}
