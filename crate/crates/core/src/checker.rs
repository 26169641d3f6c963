//! Verification of vi-colorings straight from the graph's relations.
//!
//! Nothing here goes through the power graph: the element relation is
//! re-derived pair by pair, so the checker and `three_thirds_power` are two
//! independent routes to the same answer.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, ViColoring};
use crate::graph::{ElementId, Graph, Incidence, Relation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("element {0} has no color")]
    PartialColoring(ElementId),
    #[error("coloring does not match the graph's size")]
    SizeMismatch,
    #[error("spread lemma applies to ({expected})-colorings only, coloring uses {found} colors")]
    NotApplicable { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a: ElementId,
    pub b: ElementId,
    pub relation: Relation,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub k: Color,
    pub violations: Vec<Violation>,
    /// `|c(I_2(v))|` per vertex (0 for isolated vertices).
    pub spread: Vec<usize>,
}

impl CheckReport {
    pub fn max_spread(&self) -> usize {
        self.spread.iter().copied().max().unwrap_or(0)
    }

    /// Valid, at most `k` colors, and spread at most `s` everywhere.
    pub fn satisfies(&self, k: usize, s: usize) -> bool {
        self.valid && self.k as usize <= k && self.max_spread() <= s
    }
}

fn check_sizes(g: &Graph, c: &ViColoring) -> Result<(), CheckError> {
    if c.vertex_colors.len() != g.n() || c.incidence_colors.len() != g.incidence_count() {
        return Err(CheckError::SizeMismatch);
    }
    Ok(())
}

fn require_total(g: &Graph, c: &ViColoring) -> Result<(), CheckError> {
    check_sizes(g, c)?;
    if let Some(v) = c.vertex_colors.iter().position(|&x| x == 0) {
        return Err(CheckError::PartialColoring(ElementId::Vertex(v)));
    }
    if let Some(k) = c.incidence_colors.iter().position(|&x| x == 0) {
        return Err(CheckError::PartialColoring(ElementId::Incidence(g.incidence_at(k))));
    }
    Ok(())
}

/// Checks every adjacent or incident pair of elements and reports all
/// conflicts, each unordered pair once.
pub fn verify(g: &Graph, c: &ViColoring) -> Result<CheckReport, CheckError> {
    require_total(g, c)?;
    let mut violations = Vec::new();
    let inc_color = |i: Incidence| c.incidence(g, i.vertex, i.other);
    let mut push = |a: ElementId, b: ElementId, relation: Relation, color: Color| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        violations.push(Violation { a, b, relation, color });
    };

    for (u, v) in g.edges() {
        if c.vertex(u) == c.vertex(v) {
            push(ElementId::Vertex(u), ElementId::Vertex(v), Relation::AdjacentTt, c.vertex(u));
        }
    }
    // t-vertex v against I(v) = I_1(v) ∪ I_2(v)
    for v in 0..g.n() {
        for &u in g.neighbors(v) {
            for inc in [Incidence::new(v, u), Incidence::new(u, v)] {
                if c.vertex(v) == inc_color(inc) {
                    push(ElementId::Vertex(v), ElementId::Incidence(inc), Relation::IncidentTi, c.vertex(v));
                }
            }
        }
    }
    // incidence pairs, enumerated by the rule that makes them adjacent
    let all: Vec<Incidence> = crate::graph::incidences(g);
    for &a in &all {
        let ca = inc_color(a);
        let mut partners: Vec<Incidence> = Vec::new();
        // same first vertex
        partners.extend(g.neighbors(a.vertex).iter().map(|&x| Incidence::new(a.vertex, x)));
        // same edge
        partners.push(a.reversed());
        // the edge joining the two first vertices is one of the two edges
        partners.extend(g.neighbors(a.other).iter().map(|&x| Incidence::new(a.other, x)));
        partners.extend(g.neighbors(a.vertex).iter().map(|&x| Incidence::new(x, a.vertex)));
        partners.sort_unstable();
        partners.dedup();
        for b in partners {
            if b > a && ca == inc_color(b) {
                push(ElementId::Incidence(a), ElementId::Incidence(b), Relation::AdjacentIi, ca);
            }
        }
    }
    violations.sort_by_key(|x| (x.a, x.b));
    violations.dedup();
    let spread = (0..g.n()).map(|v| spread_of(g, c, v)).collect();
    Ok(CheckReport {
        valid: violations.is_empty(),
        k: c.k(),
        violations,
        spread,
    })
}

fn spread_of(g: &Graph, c: &ViColoring, v: usize) -> usize {
    let mut colors: Vec<Color> = g.neighbors(v).iter().map(|&u| c.incidence(g, u, v)).collect();
    colors.sort_unstable();
    colors.dedup();
    colors.len()
}

/// `|c(I_2(v))|`, the number of colors on incidences pointing at `v`.
/// Reported as 0 for isolated vertices.
pub fn spread(g: &Graph, c: &ViColoring, v: usize) -> usize {
    spread_of(g, c, v)
}

/// For a valid coloring using exactly the colors `1..=Δ+2`, checks
/// `|c(I_2(v))| ≤ Δ - d(v) + 1` at every non-isolated vertex.
pub fn verify_spread_lemma(g: &Graph, c: &ViColoring) -> Result<bool, CheckError> {
    require_total(g, c)?;
    let delta = g.max_degree();
    let expected = delta + 2;
    if c.k() as usize != expected {
        return Err(CheckError::NotApplicable {
            expected,
            found: c.k() as usize,
        });
    }
    Ok((0..g.n())
        .filter(|&v| g.degree(v) > 0)
        .all(|v| spread_of(g, c, v) + g.degree(v) <= delta + 1))
}

/// `Δ + 2` from the clique `I_1[v] ∪ {(u,v)}` at a maximum-degree vertex, and
/// never below 4 since a single edge already yields four mutually conflicting
/// elements. Edgeless graphs need one color.
pub fn lower_bound(g: &Graph) -> usize {
    if g.m() == 0 {
        1
    } else {
        (g.max_degree() + 2).max(4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_all_ones() -> (Graph, ViColoring) {
        let g = Graph::complete(2);
        let c = ViColoring {
            vertex_colors: vec![1, 1],
            incidence_colors: vec![1, 1],
        };
        (g, c)
    }

    #[test]
    fn k2_monochrome_has_six_violations() {
        let (g, c) = k2_all_ones();
        let r = verify(&g, &c).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations.len(), 6);
        let tt = r.violations.iter().filter(|v| v.relation == Relation::AdjacentTt).count();
        let ti = r.violations.iter().filter(|v| v.relation == Relation::IncidentTi).count();
        let ii = r.violations.iter().filter(|v| v.relation == Relation::AdjacentIi).count();
        assert_eq!((tt, ti, ii), (1, 4, 1));
    }

    #[test]
    fn partial_coloring_rejected() {
        let g = Graph::path(3);
        let c = ViColoring::uncolored(&g);
        assert_eq!(verify(&g, &c), Err(CheckError::PartialColoring(ElementId::Vertex(0))));
    }

    #[test]
    fn k2_proper_four_coloring() {
        let g = Graph::complete(2);
        let c = ViColoring {
            vertex_colors: vec![1, 4],
            incidence_colors: vec![2, 3],
        };
        let r = verify(&g, &c).unwrap();
        assert!(r.valid);
        assert_eq!(r.spread, vec![1, 1]);
        // Δ + 2 = 3 colors are impossible on an edge, so the lemma never applies
        assert!(verify_spread_lemma(&g, &c).is_err());
    }

    #[test]
    fn spread_lemma_guard() {
        let g = Graph::cycle(4);
        let mut c = ViColoring::uncolored(&g);
        c.vertex_colors = vec![1, 2, 3, 5];
        c.incidence_colors.iter_mut().for_each(|x| *x = 4);
        assert_eq!(
            verify_spread_lemma(&g, &c),
            Err(CheckError::NotApplicable { expected: 4, found: 5 })
        );
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&Graph::complete(2)), 4);
        assert_eq!(lower_bound(&Graph::cycle(7)), 4);
        assert_eq!(lower_bound(&Graph::star(5)), 7);
        assert_eq!(lower_bound(&Graph::empty(3)), 1);
    }

    #[test]
    fn isolated_vertex_spread_is_zero() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let c = ViColoring {
            vertex_colors: vec![1, 4, 1],
            incidence_colors: vec![2, 3],
        };
        let r = verify(&g, &c).unwrap();
        assert!(r.valid);
        assert_eq!(r.spread, vec![1, 1, 0]);
    }
}
