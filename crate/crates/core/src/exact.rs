//! Exact vi-chromatic numbers by DSATUR-style branch and bound.
//!
//! The same engine decides plain vertex colorability (used on power graphs)
//! and completes partial colorings for the constructive algorithms. Colors are
//! bitmasks, so at most 63 colors are supported.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::checker::lower_bound;
use crate::coloring::{Color, ViColoring};
use crate::graph::{element_adjacency, element_count, Graph};

pub const MAX_COLORS: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("search hit the node limit of {limit} while testing {k} colors")]
    NodeLimit { k: usize, limit: u64 },
    #[error("no coloring with at most {0} colors")]
    ExceedsMax(usize),
    #[error("at most {MAX_COLORS} colors are supported")]
    TooManyColors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_colors: usize,
    pub spread_cap: Option<usize>,
    pub node_limit: Option<u64>,
    /// 0 keeps the natural tie-breaking order; anything else shuffles it.
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_colors: MAX_COLORS,
            spread_cap: None,
            node_limit: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Colorable(ViColoring),
    Unsat,
    NodeLimit,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactResult {
    pub k: usize,
    #[serde(skip)]
    pub witness: ViColoring,
    pub nodes: u64,
}

/// A list-coloring instance: variables with pairwise conflicts, forbidden
/// colors per variable, and groups whose members may use at most `cap`
/// distinct colors.
#[derive(Debug, Clone, Default)]
pub(crate) struct Problem {
    pub adj: Vec<Vec<usize>>,
    pub forbidden: Vec<u64>,
    /// Group id per variable, `usize::MAX` when ungrouped.
    pub group_of: Vec<usize>,
    /// Colors already present in each group from outside the instance.
    pub group_init: Vec<u64>,
    pub cap: usize,
    /// Variables fixed before the search starts.
    pub precolor: Vec<(usize, Color)>,
    /// Only allow one fresh color beyond the largest used so far. Sound only
    /// when no variable has color-specific restrictions.
    pub symmetric: bool,
}

impl Problem {
    pub fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Problem {
            adj,
            forbidden: vec![0; n],
            group_of: vec![usize::MAX; n],
            group_init: Vec::new(),
            cap: usize::MAX,
            precolor: Vec::new(),
            symmetric: false,
        }
    }
}

pub(crate) enum Outcome {
    Found(Vec<Color>),
    Unsat,
    NodeLimit,
}

struct Search<'a> {
    p: &'a Problem,
    k: usize,
    full: u64,
    color: Vec<Color>,
    count: Vec<u16>,
    sat: Vec<u64>,
    group_count: Vec<u16>,
    group_mask: Vec<u64>,
    rank: Vec<usize>,
    nodes: u64,
    limit: u64,
    max_used: usize,
}

impl<'a> Search<'a> {
    fn new(p: &'a Problem, k: usize, limit: Option<u64>, seed: u64) -> Self {
        let n = p.adj.len();
        let mut rank: Vec<usize> = (0..n).collect();
        if seed != 0 {
            rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let groups = p.group_init.len();
        let mut group_count = vec![0u16; groups * (MAX_COLORS + 1)];
        for (g, &mask) in p.group_init.iter().enumerate() {
            for c in 1..=MAX_COLORS {
                if mask >> c & 1 == 1 {
                    group_count[g * (MAX_COLORS + 1) + c] = 1;
                }
            }
        }
        Search {
            p,
            k,
            full: ((1u128 << (k + 1)) - 2) as u64,
            color: vec![0; n],
            count: vec![0; n * (MAX_COLORS + 1)],
            sat: vec![0; n],
            group_count,
            group_mask: p.group_init.clone(),
            rank,
            nodes: 0,
            limit: limit.unwrap_or(u64::MAX),
            max_used: 0,
        }
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.color[v] = c;
        let ci = c as usize;
        for &u in &self.p.adj[v] {
            let slot = &mut self.count[u * (MAX_COLORS + 1) + ci];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= 1 << ci;
            }
        }
        let g = self.p.group_of[v];
        if g != usize::MAX {
            let slot = &mut self.group_count[g * (MAX_COLORS + 1) + ci];
            *slot += 1;
            if *slot == 1 {
                self.group_mask[g] |= 1 << ci;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let ci = self.color[v] as usize;
        self.color[v] = 0;
        for &u in &self.p.adj[v] {
            let slot = &mut self.count[u * (MAX_COLORS + 1) + ci];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !(1 << ci);
            }
        }
        let g = self.p.group_of[v];
        if g != usize::MAX {
            let slot = &mut self.group_count[g * (MAX_COLORS + 1) + ci];
            *slot -= 1;
            if *slot == 0 {
                self.group_mask[g] &= !(1 << ci);
            }
        }
    }

    fn options(&self, v: usize) -> u64 {
        let mut m = self.full & !(self.p.forbidden[v] | self.sat[v]);
        let g = self.p.group_of[v];
        if g != usize::MAX && self.group_mask[g].count_ones() as usize >= self.p.cap {
            m &= self.group_mask[g];
        }
        if self.p.symmetric {
            let fresh = (self.max_used + 1).min(self.k);
            m &= ((1u128 << (fresh + 1)) - 2) as u64;
        }
        m
    }

    fn run(&mut self) -> Outcome {
        for &(v, c) in &self.p.precolor {
            if c as usize > self.k || self.options(v) >> c & 1 == 0 {
                return Outcome::Unsat;
            }
            self.assign(v, c);
            self.max_used = self.max_used.max(c as usize);
        }
        match self.dfs() {
            Some(true) => Outcome::Found(self.color.clone()),
            Some(false) => Outcome::Unsat,
            None => Outcome::NodeLimit,
        }
    }

    /// `Some(found)` or `None` when the node budget ran out.
    fn dfs(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return None;
        }
        let mut best: Option<(usize, u32, usize, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            let opts = self.options(v).count_ones();
            if opts == 0 {
                return Some(false);
            }
            let key = (opts, usize::MAX - self.p.adj[v].len(), self.rank[v]);
            if best.is_none_or(|b| (b.1, b.2, b.3) > key) {
                best = Some((v, key.0, key.1, key.2));
            }
        }
        let Some((v, ..)) = best else {
            return Some(true);
        };
        let mut opts = self.options(v);
        while opts != 0 {
            let c = opts.trailing_zeros();
            opts &= opts - 1;
            let prev_max = self.max_used;
            self.max_used = self.max_used.max(c as usize);
            self.assign(v, c);
            let r = self.dfs();
            if r != Some(false) {
                if r.is_none() {
                    self.unassign(v);
                    self.max_used = prev_max;
                }
                return r;
            }
            self.unassign(v);
            self.max_used = prev_max;
        }
        Some(false)
    }
}

pub(crate) fn solve(p: &Problem, k: usize, node_limit: Option<u64>, seed: u64) -> (Outcome, u64) {
    if k == 0 {
        return (if p.adj.is_empty() { Outcome::Found(Vec::new()) } else { Outcome::Unsat }, 0);
    }
    let mut s = Search::new(p, k.min(MAX_COLORS), node_limit, seed);
    let out = s.run();
    (out, s.nodes)
}

/// The vi-coloring instance of `g` with the clique `{v} ∪ I_1(v) ∪ {(u,v)}`
/// at a maximum-degree vertex `v` precolored `1..=Δ+2`.
fn vi_problem(g: &Graph, spread_cap: Option<usize>) -> Problem {
    let mut p = Problem::new(element_adjacency(g));
    p.symmetric = true;
    let n = g.n();
    if let Some(s) = spread_cap {
        p.cap = s;
        p.group_init = vec![0; n];
        for v in 0..n {
            for &u in g.neighbors(v) {
                p.group_of[n + g.incidence_index(u, v).unwrap()] = v;
            }
        }
    }
    if g.m() > 0 {
        let v = (0..n).max_by_key(|&v| (g.degree(v), usize::MAX - v)).unwrap();
        let u = g.neighbors(v)[0];
        let mut clique = vec![v];
        clique.extend(g.first_incidences(v).map(|k| n + k));
        clique.push(n + g.incidence_index(u, v).unwrap());
        p.precolor = clique.into_iter().zip(1..).collect();
    }
    p
}

fn to_vi_coloring(g: &Graph, colors: &[Color]) -> ViColoring {
    ViColoring {
        vertex_colors: colors[..g.n()].to_vec(),
        incidence_colors: colors[g.n()..].to_vec(),
    }
}

/// Decides whether `g` has a vi-coloring with colors `1..=k` and, when
/// `spread_cap` is set, at most that many colors on every `I_2(v)`.
pub fn is_colorable(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<(Decision, u64), ExactError> {
    if k > MAX_COLORS {
        return Err(ExactError::TooManyColors);
    }
    let p = vi_problem(g, cfg.spread_cap);
    let (out, nodes) = solve(&p, k, cfg.node_limit, cfg.seed);
    Ok((
        match out {
            Outcome::Found(colors) => Decision::Colorable(to_vi_coloring(g, &colors)),
            Outcome::Unsat => Decision::Unsat,
            Outcome::NodeLimit => Decision::NodeLimit,
        },
        nodes,
    ))
}

/// Smallest `k` admitting a vi-coloring (with spread cap `s` if given),
/// scanning upward from `Δ + 2`.
pub fn chi_vi(g: &Graph, cfg: &SearchConfig) -> Result<ExactResult, ExactError> {
    if element_count(g) == 0 {
        return Ok(ExactResult {
            k: 0,
            witness: ViColoring::uncolored(g),
            nodes: 0,
        });
    }
    let mut total = 0;
    let top = cfg.max_colors.min(MAX_COLORS);
    for k in lower_bound(g)..=top {
        let (d, nodes) = is_colorable(g, k, cfg)?;
        total += nodes;
        match d {
            Decision::Colorable(w) => {
                return Ok(ExactResult {
                    k,
                    witness: w,
                    nodes: total,
                })
            }
            Decision::Unsat => continue,
            Decision::NodeLimit => {
                return Err(ExactError::NodeLimit {
                    k,
                    limit: cfg.node_limit.unwrap_or(u64::MAX),
                })
            }
        }
    }
    Err(ExactError::ExceedsMax(top))
}

/// Greedy large clique: for each start vertex, repeatedly add the
/// highest-degree common neighbor.
fn greedy_clique(h: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for s in 0..h.n() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = h.neighbors(s).to_vec();
        while !cand.is_empty() {
            let &pick = cand.iter().max_by_key(|&&x| (h.degree(x), usize::MAX - x)).unwrap();
            clique.push(pick);
            cand.retain(|&x| x != pick && h.has_edge(x, pick));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Plain chromatic number of `h`, with the proper coloring found.
pub fn chromatic_number(h: &Graph, node_limit: Option<u64>) -> Result<(usize, Vec<Color>), ExactError> {
    if h.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let mut p = Problem::new((0..h.n()).map(|v| h.neighbors(v).to_vec()).collect());
    p.symmetric = true;
    let clique = greedy_clique(h);
    p.precolor = clique.iter().copied().zip(1..).collect();
    for k in clique.len().max(1)..=MAX_COLORS {
        match solve(&p, k, node_limit, 0).0 {
            Outcome::Found(c) => return Ok((k, c)),
            Outcome::Unsat => continue,
            Outcome::NodeLimit => {
                return Err(ExactError::NodeLimit {
                    k,
                    limit: node_limit.unwrap_or(u64::MAX),
                })
            }
        }
    }
    Err(ExactError::ExceedsMax(MAX_COLORS))
}

/// Chromatic number of a power graph (or any graph) as plain vertex coloring.
pub fn chi_of_power(h: &Graph) -> Result<usize, ExactError> {
    chromatic_number(h, None).map(|(k, _)| k)
}
