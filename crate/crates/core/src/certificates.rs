//! Lower-bound certificates and vi-class classification.

use serde::Serialize;

use crate::checker::{lower_bound, verify};
use crate::coloring::ViColoring;
use crate::construct::{color_degenerate, color_outerplanar, color_outerplanar_girth};
use crate::exact::{is_colorable, Decision, ExactError, SearchConfig};
use crate::graph::Graph;
use crate::iso::embeddings;
use crate::outerplanar::is_outerplanar;
use crate::structure::degeneracy_order;

/// The four subcubic configurations that rule out five colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    G1,
    G2,
    G3,
    G4,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::G1, Pattern::G2, Pattern::G3, Pattern::G4];

    /// Vertex letters in id order.
    pub fn letters(self) -> &'static [char] {
        match self {
            Pattern::G1 => &['a', 'b', 'c', 'd'],
            Pattern::G2 | Pattern::G3 => &['a', 'b', 'c', 'd', 'e', 'f'],
            Pattern::G4 => &['a', 'b', 'c', 'd', 'e', 'f', 'h', 'k'],
        }
    }

    fn edge_letters(self) -> &'static [(char, char)] {
        match self {
            Pattern::G1 => &[('a', 'b'), ('b', 'c'), ('c', 'a'), ('a', 'd'), ('d', 'b')],
            Pattern::G2 => &[('c', 'd'), ('c', 'a'), ('a', 'b'), ('b', 'c'), ('a', 'e'), ('b', 'f')],
            Pattern::G3 => &[
                ('e', 'd'),
                ('d', 'a'),
                ('a', 'b'),
                ('b', 'e'),
                ('e', 'f'),
                ('a', 'c'),
                ('c', 'b'),
            ],
            Pattern::G4 => &[
                ('k', 'e'),
                ('e', 'f'),
                ('f', 'd'),
                ('d', 'h'),
                ('e', 'b'),
                ('b', 'a'),
                ('a', 'd'),
                ('a', 'c'),
                ('c', 'b'),
            ],
        }
    }

    pub fn graph(self) -> Graph {
        let l = self.letters();
        let id = |c: char| l.iter().position(|&x| x == c).unwrap();
        let edges: Vec<(usize, usize)> = self.edge_letters().iter().map(|&(x, y)| (id(x), id(y))).collect();
        Graph::new(l.len(), &edges).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenEmbedding {
    pub pattern: Pattern,
    /// `mapping[i]` is the host vertex of pattern vertex `i`.
    pub mapping: Vec<usize>,
}

/// Every embedding of `G1`..`G4` into a host of maximum degree 3 that sends
/// each pattern vertex of degree 3 to a host vertex of degree 3. Empty for
/// other hosts.
pub fn detect_forbidden(g: &Graph) -> Vec<ForbiddenEmbedding> {
    if g.max_degree() != 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for pattern in Pattern::ALL {
        let p = pattern.graph();
        let maps = embeddings(&p, g, false, usize::MAX, |x, y| p.degree(x) < 3 || g.degree(y) == 3);
        out.extend(maps.into_iter().map(|mapping| ForbiddenEmbedding { pattern, mapping }));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// `χ_vi ≥ Δ + 2`.
    DegreeBound { k: usize },
    /// A forbidden configuration forces six colors.
    ForbiddenSubgraph { embedding: ForbiddenEmbedding },
    /// A verified coloring with `k` colors.
    WitnessColoring { k: usize, source: String },
    /// No `k`-coloring exists; the search visited `nodes` nodes.
    ExhaustedSearch { k: usize, nodes: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCertificate {
    pub lo: usize,
    pub hi: usize,
    /// `s` with `χ_vi = Δ + 1 + s`, once `lo = hi`.
    pub class: Option<usize>,
    pub evidence: Vec<Evidence>,
    #[serde(skip)]
    pub witness: ViColoring,
}

impl ClassCertificate {
    pub fn is_tight(&self) -> bool {
        self.lo == self.hi
    }
}

/// Brackets `χ_vi(g)` using the degree bound, forbidden configurations,
/// constructive colorings, and exact search limited to `budget` nodes per
/// decision.
pub fn classify(g: &Graph, budget: Option<u64>) -> Result<ClassCertificate, ExactError> {
    let delta = g.max_degree();
    let mut evidence = Vec::new();
    let mut lo = lower_bound(g);
    evidence.push(Evidence::DegreeBound { k: lo });
    if let Some(e) = detect_forbidden(g).into_iter().next() {
        lo = lo.max(6);
        evidence.push(Evidence::ForbiddenSubgraph { embedding: e });
    }
    // constructive upper bounds
    let mut candidates: Vec<(ViColoring, String)> = Vec::new();
    if is_outerplanar(g).is_ok() {
        if let Ok(c) = color_outerplanar(g) {
            candidates.push((c.coloring, c.algorithm));
        }
        if let Ok(c) = color_outerplanar_girth(g) {
            candidates.push((c.coloring, c.algorithm));
        }
    }
    if let Ok(c) = color_degenerate(g, degeneracy_order(g).1.max(1)) {
        candidates.push((c.coloring, c.algorithm));
    }
    let (mut witness, source) = candidates
        .into_iter()
        .filter(|(c, _)| verify(g, c).is_ok_and(|r| r.valid))
        .min_by_key(|(c, _)| c.k())
        .expect("the degeneracy greedy always applies");
    let mut hi = witness.k() as usize;
    if g.m() == 0 {
        hi = 1;
        lo = 1;
    }
    let mut found_by_search = false;
    let cfg = SearchConfig {
        node_limit: budget,
        ..SearchConfig::default()
    };
    while lo < hi {
        let (d, nodes) = is_colorable(g, lo, &cfg)?;
        match d {
            Decision::Colorable(c) => {
                witness = c;
                hi = lo;
                found_by_search = true;
            }
            Decision::Unsat => {
                evidence.push(Evidence::ExhaustedSearch { k: lo, nodes });
                lo += 1;
            }
            Decision::NodeLimit => break,
        }
    }
    evidence.push(Evidence::WitnessColoring {
        k: hi,
        source: if found_by_search { "exact-search".into() } else { source },
    });
    Ok(ClassCertificate {
        lo,
        hi,
        class: (lo == hi && g.m() > 0).then(|| hi - delta - 1),
        evidence,
        witness,
    })
}
