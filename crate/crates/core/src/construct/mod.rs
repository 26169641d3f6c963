//! Constructive colorers: closed forms for small families, the degeneracy
//! greedy, block composition, and the end-face inductions for outerplanar
//! graphs.
//!
//! The inductive colorers share one driver. A reduction deletes a few
//! vertices (or adds an edge) from a [`work::WorkGraph`] and is pushed on a
//! stack; once the graph is a base case it is colored directly, and the
//! stack is unwound, each step extending the coloring with its transcribed
//! patch. A patch that fails its local check is replaced by exhaustive
//! completion over a widening set of elements.

mod basic;
mod compose;
mod degenerate;
pub mod fixtures;
mod girth;
mod lemma;
mod subcubic;
pub(crate) mod work;

use serde::Serialize;
use thiserror::Error;

use crate::checker::verify;
use crate::coloring::{Color, ViColoring};
use crate::exact::ExactError;
use crate::graph::Graph;
use crate::outerplanar::{is_outerplanar, OuterplanarError};
use crate::structure::{degeneracy_order, girth};

pub use basic::{color_complete, color_cycle, color_forest, color_path};
pub use compose::{compose_cut_edge, compose_cut_vertex, Part};
pub use degenerate::color_degenerate;
pub use girth::{color_outerplanar_girth, GirthRegime};
pub use lemma::color_outerplanar;
pub use work::Resolution;

use work::{apply_patch, repair, El, Rule, WorkColoring, WorkGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph is {found}-degenerate, not {k}-degenerate")]
    NotDegenerate { k: usize, found: usize },
    #[error("no spread-1 theorem covers this graph (it has a triangle)")]
    NoApplicableTheorem,
    #[error("vertex {0} has spread above 1 in one of the parts")]
    SpreadViolation(usize),
    #[error("{0:?} is not a cut edge")]
    NotCutEdge((usize, usize)),
    #[error("vertex {0} does not separate the two parts")]
    NotCutVertex(usize),
    #[error("parts do not cover the graph")]
    PartsMismatch,
    #[error("could not extend the coloring at step `{0}`")]
    ExtensionFailed(String),
    #[error("exact search ran out of budget")]
    SearchBudget,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl From<OuterplanarError> for ConstructError {
    fn from(_: OuterplanarError) -> Self {
        ConstructError::NotOuterplanar
    }
}

/// One reduction of an inductive run, as shown by `--explain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Order of the graph the step was applied to.
    pub order: usize,
    pub case: String,
    pub vertices: Vec<usize>,
    /// Colors available while extending over this step.
    pub palette: usize,
    pub resolution: Option<Resolution>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    #[serde(skip)]
    pub coloring: ViColoring,
    /// Number of colors the applied result guarantees.
    pub bound: usize,
    pub spread_cap: usize,
    pub algorithm: String,
    pub trace: Vec<TraceStep>,
}

impl Construction {
    pub fn colors_used(&self) -> usize {
        self.coloring.k() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Outerplanar,
    Girth,
    Degenerate,
}

/// Entry point behind `vic color`. `Auto` prefers the spread-1 girth
/// colorers on triangle-free outerplanar graphs, the spread-2 colorer on
/// other outerplanar graphs and the degeneracy greedy elsewhere.
pub fn color(g: &Graph, strategy: Strategy, spread: Option<usize>) -> Result<Construction, ConstructError> {
    let outerplanar = is_outerplanar(g).is_ok();
    let triangle_free = girth(g).is_none_or(|x| x >= 4);
    let out = match strategy {
        Strategy::Outerplanar => color_outerplanar(g)?,
        Strategy::Girth => color_outerplanar_girth(g)?,
        Strategy::Degenerate => {
            let k = degeneracy_order(g).1.max(spread.unwrap_or(1)).max(1);
            color_degenerate(g, k)?
        }
        Strategy::Auto if outerplanar && (triangle_free || spread == Some(1)) => color_outerplanar_girth(g)?,
        Strategy::Auto if outerplanar => color_outerplanar(g)?,
        Strategy::Auto => {
            let k = degeneracy_order(g).1.max(1);
            color_degenerate(g, k)?
        }
    };
    if let Some(s) = spread {
        if out.spread_cap > s {
            return Err(ConstructError::NoApplicableTheorem);
        }
    }
    Ok(out)
}

/// A reduction step. Vertex names follow the end face or configuration
/// they came from.
#[derive(Debug, Clone)]
pub(crate) enum StepKind {
    /// `v` is isolated.
    Isolated { v: usize },
    /// `v` is a leaf at `u`.
    Pendant { v: usize, u: usize },
    /// `x - v - u - y` with `v`, `u` of degree 2 (`x` may equal `y`).
    AdjacentPair { x: usize, v: usize, u: usize, y: usize },
    /// `v` of degree 2 with adjacent neighbors `u`, `w`.
    Triangulated { v: usize, u: usize, w: usize },
    /// Triangular end face `[a, b, c]`, `b` removed (spread 2, six colors).
    EndTriangle { a: usize, b: usize, c: usize },
    /// Quadrilateral end face `[a, b, c, d]`, `b` and `c` removed (spread 2).
    EndQuad { a: usize, b: usize, c: usize, d: usize },
    /// Edge added inside a long end face; removed again on the way back.
    AddedEdge { u: usize, v: usize },
    /// Quadrilateral end face, interior removed, spread 1.
    GirthQuad { a: usize, b: usize, c: usize, d: usize },
    /// Hexagonal end face `[v0..v5]`, interior removed, spread 1.
    GirthHexagon { v: [usize; 6] },
    /// Long end face `[a, b, c, d, …]`: `b` removed and `a c` added.
    Contract { a: usize, b: usize, c: usize, d: usize },
    /// Vertex added back by the degeneracy greedy, with its neighbors at
    /// that point.
    Greedy { v: usize, nbrs: Vec<usize> },
}

impl StepKind {
    fn label(&self) -> &'static str {
        match self {
            StepKind::Isolated { .. } => "isolated-vertex",
            StepKind::Pendant { .. } => "pendant-vertex",
            StepKind::AdjacentPair { .. } => "adjacent-two-vertices",
            StepKind::Triangulated { .. } => "triangulated-two-vertex",
            StepKind::EndTriangle { .. } => "end-face-triangle",
            StepKind::EndQuad { .. } => "end-face-quadrilateral",
            StepKind::AddedEdge { .. } => "long-face-add-edge",
            StepKind::GirthQuad { .. } => "end-face-quadrilateral",
            StepKind::GirthHexagon { .. } => "end-face-hexagon",
            StepKind::Contract { .. } => "long-face-contract",
            StepKind::Greedy { .. } => "degeneracy-greedy",
        }
    }

    fn vertices(&self) -> Vec<usize> {
        match *self {
            StepKind::Isolated { v } => vec![v],
            StepKind::Greedy { v, ref nbrs } => std::iter::once(v).chain(nbrs.iter().copied()).collect(),
            StepKind::Pendant { v, u } => vec![v, u],
            StepKind::AdjacentPair { x, v, u, y } => vec![x, v, u, y],
            StepKind::Triangulated { v, u, w } => vec![v, u, w],
            StepKind::EndTriangle { a, b, c } => vec![a, b, c],
            StepKind::EndQuad { a, b, c, d }
            | StepKind::GirthQuad { a, b, c, d }
            | StepKind::Contract { a, b, c, d } => vec![a, b, c, d],
            StepKind::AddedEdge { u, v } => vec![u, v],
            StepKind::GirthHexagon { v } => v.to_vec(),
        }
    }
}

struct Step {
    kind: StepKind,
    palette: usize,
    trace: usize,
}

/// The reduction stack over a work graph.
pub(crate) struct Run {
    pub w: WorkGraph,
    pub col: WorkColoring,
    pub cap: usize,
    stack: Vec<Step>,
    pub trace: Vec<TraceStep>,
}

impl Run {
    pub fn new(w: WorkGraph, cap: usize) -> Self {
        Run {
            w,
            col: WorkColoring::default(),
            cap,
            stack: Vec::new(),
            trace: Vec::new(),
        }
    }

    /// Applies the reduction to the work graph and records it.
    pub fn reduce(&mut self, kind: StepKind, palette: usize) {
        self.trace.push(TraceStep {
            order: self.w.order(),
            case: kind.label().to_string(),
            vertices: kind.vertices(),
            palette,
            resolution: None,
        });
        match kind.clone() {
            StepKind::Isolated { v } | StepKind::Pendant { v, .. } | StepKind::Triangulated { v, .. } => {
                self.w.remove_vertex(v)
            }
            StepKind::Greedy { v, .. } => self.w.remove_vertex(v),
            StepKind::AdjacentPair { v, u, .. } => {
                self.w.remove_vertex(v);
                self.w.remove_vertex(u);
            }
            StepKind::EndTriangle { b, .. } => self.w.remove_vertex(b),
            StepKind::EndQuad { b, c, .. } | StepKind::GirthQuad { b, c, .. } => {
                self.w.remove_vertex(b);
                self.w.remove_vertex(c);
            }
            StepKind::AddedEdge { u, v } => self.w.add_edge(u, v),
            StepKind::GirthHexagon { v } => {
                for &x in &v[1..5] {
                    self.w.remove_vertex(x);
                }
            }
            StepKind::Contract { a, b, c, .. } => {
                self.w.remove_vertex(b);
                self.w.add_edge(a, c);
            }
        }
        self.stack.push(Step {
            kind,
            palette,
            trace: self.trace.len() - 1,
        });
    }

    /// Colors what is left of the work graph with `f` (on its compact copy).
    pub fn base<F>(&mut self, label: &str, palette: usize, f: F) -> Result<(), ConstructError>
    where
        F: FnOnce(&Graph) -> Result<ViColoring, ConstructError>,
    {
        let (g, ids) = self.w.to_graph();
        let c = f(&g)?;
        self.col.absorb(&g, &ids, &c);
        self.trace.push(TraceStep {
            order: g.n(),
            case: format!("base:{label}"),
            vertices: ids,
            palette,
            resolution: Some(Resolution::Base),
        });
        Ok(())
    }

    /// Pops every step, extending the coloring.
    pub fn unwind(&mut self) -> Result<(), ConstructError> {
        while let Some(step) = self.stack.pop() {
            let res = self.extend(&step.kind, step.palette)?;
            self.trace[step.trace].resolution = Some(res);
        }
        Ok(())
    }

    fn attach(&mut self, v: usize, nbrs: &[usize]) {
        self.w.revive(v);
        for &u in nbrs {
            self.w.add_edge(v, u);
        }
    }

    fn second_colors(&self, v: usize) -> Vec<Color> {
        self.col.second_colors(&self.w, v).into_iter().collect()
    }

    /// Tries `patches` in order, then completion.
    fn settle(
        &mut self,
        label: &str,
        patches: &[Vec<(El, Rule)>],
        new: &[El],
        recolor: &[El],
        keys: &[usize],
        palette: usize,
    ) -> Result<Resolution, ConstructError> {
        for p in patches {
            if apply_patch(&self.w, &mut self.col, p, palette, self.cap) {
                return Ok(Resolution::Patch);
            }
        }
        repair(&self.w, &mut self.col, new, recolor, keys, palette, self.cap)
            .ok_or_else(|| ConstructError::ExtensionFailed(label.to_string()))
    }

    fn extend(&mut self, kind: &StepKind, palette: usize) -> Result<Resolution, ConstructError> {
        use El::{I, T};
        use Rule::*;
        let label = kind.label();
        match *kind {
            StepKind::Isolated { v } => {
                self.w.revive(v);
                self.col.set(T(v), 1);
                Ok(Resolution::Base)
            }
            StepKind::Pendant { v, u } => {
                let second = self.second_colors(u);
                self.attach(v, &[u]);
                let back = if second.is_empty() { Smallest } else { SmallestOf(second) };
                let patch = vec![(I(u, v), Smallest), (I(v, u), back), (T(v), Smallest)];
                let new = [I(u, v), I(v, u), T(v)];
                self.settle(label, &[patch], &new, &[], &[u, v], palette)
            }
            StepKind::AdjacentPair { x, v, u, y } => {
                let sx = self.second_colors(x);
                let sy = self.second_colors(y);
                self.attach(v, &[x]);
                self.attach(u, &[y, v]);
                let of = |s: Vec<Color>| if s.is_empty() { Smallest } else { SmallestOf(s) };
                let patch = vec![
                    (I(x, v), Smallest),
                    (I(y, u), Smallest),
                    (I(v, x), of(sx)),
                    (I(u, y), of(sy)),
                    (T(v), Smallest),
                    (I(v, u), Smallest),
                    (I(u, v), Smallest),
                    (T(u), Smallest),
                ];
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                self.settle(label, &[patch], &new, &[], &[x, v, u, y], palette)
            }
            StepKind::Triangulated { v, u, w } => {
                self.attach(v, &[u, w]);
                let patch = vec![
                    (I(v, w), Same(I(u, w))),
                    (I(v, u), Same(I(w, u))),
                    (I(u, v), Smallest),
                    (I(w, v), Smallest),
                    (T(v), Smallest),
                ];
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                self.settle(label, &[patch], &new, &[], &[u, v, w], palette)
            }
            StepKind::EndTriangle { a, b, c } => {
                self.attach(b, &[a, c]);
                subcubic::extend_triangle(self, a, b, c, palette)
            }
            StepKind::EndQuad { a, b, c, d } => {
                self.attach(b, &[a]);
                self.attach(c, &[b, d]);
                let (ca, cad, cda, cd) = (
                    self.col.get(T(a)),
                    self.col.get(I(a, d)),
                    self.col.get(I(d, a)),
                    self.col.get(T(d)),
                );
                let patch = vec![
                    (I(b, a), Fixed(cda)),
                    (T(c), Fixed(cda)),
                    (T(b), Fixed(cad)),
                    (I(c, d), Fixed(cad)),
                    (I(b, c), Fixed(ca)),
                    (I(c, b), Fixed(cd)),
                    (I(a, b), Smallest),
                    (I(d, c), Smallest),
                ];
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                self.settle(label, &[patch], &new, &[], &[a, b, c, d], palette)
            }
            StepKind::AddedEdge { u, v } => {
                self.col.clear(I(u, v));
                self.col.clear(I(v, u));
                self.w.remove_edge(u, v);
                Ok(Resolution::Patch)
            }
            StepKind::GirthQuad { a, b, c, d } => {
                self.attach(b, &[a]);
                self.attach(c, &[b, d]);
                let patch = vec![
                    (I(b, a), Same(I(d, a))),
                    (I(c, d), Same(I(a, d))),
                    (I(a, b), Smallest),
                    (I(d, c), SmallestNot(vec![I(a, b)])),
                    (I(c, b), Same(I(a, b))),
                    // printed with a repeated index; the spread-1 reading is (d,c)
                    (I(b, c), Same(I(d, c))),
                    (T(b), Smallest),
                    (T(c), Smallest),
                ];
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                self.settle(label, &[patch], &new, &[], &[a, b, c, d], palette)
            }
            StepKind::GirthHexagon { v } => {
                for i in 1..5 {
                    self.attach(v[i], &[v[i - 1]]);
                }
                self.w.add_edge(v[4], v[5]);
                let patch = vec![
                    (I(v[1], v[0]), Same(I(v[5], v[0]))),
                    (I(v[4], v[5]), Same(I(v[0], v[5]))),
                    (I(v[0], v[1]), Smallest),
                    (I(v[5], v[4]), SmallestNot(vec![I(v[0], v[1])])),
                    (I(v[2], v[1]), Same(I(v[0], v[1]))),
                    (I(v[3], v[4]), Same(I(v[5], v[4]))),
                    (I(v[1], v[2]), Smallest),
                    (I(v[4], v[3]), SmallestNot(vec![I(v[1], v[2])])),
                    // the middle edge copies its neighbors so I_2 stays monochromatic
                    (I(v[3], v[2]), Same(I(v[1], v[2]))),
                    (I(v[2], v[3]), Same(I(v[4], v[3]))),
                    (T(v[1]), Smallest),
                    (T(v[4]), Smallest),
                    (T(v[2]), Smallest),
                    (T(v[3]), Smallest),
                ];
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                self.settle(label, &[patch], &new, &[], &v, palette)
            }
            StepKind::Contract { a, b, c, d } => {
                let r = self.col.get(I(a, c));
                let s = self.col.get(I(c, a));
                self.col.clear(I(a, c));
                self.col.clear(I(c, a));
                self.w.remove_edge(a, c);
                self.attach(b, &[a, c]);
                let patch = vec![
                    (I(a, b), Fixed(r)),
                    (I(b, a), Fixed(s)),
                    (I(c, b), Fixed(r)),
                    (I(d, c), Smallest),
                    (I(b, c), Same(I(d, c))),
                    (T(c), Smallest),
                    (T(b), Smallest),
                ];
                let new = [I(a, b), I(b, a), I(c, b), I(b, c), T(b)];
                self.settle(label, &[patch], &new, &[I(d, c), T(c)], &[a, b, c, d], palette)
            }
            StepKind::Greedy { v, ref nbrs } => {
                let nbrs = nbrs.clone();
                self.attach(v, &nbrs);
                let mut patch: Vec<(El, Rule)> = nbrs.iter().map(|&u| (I(u, v), Smallest)).collect();
                patch.extend(nbrs.iter().map(|&u| (I(v, u), Smallest)));
                patch.push((T(v), Smallest));
                let new: Vec<El> = patch.iter().map(|p| p.0).collect();
                let mut keys = nbrs.clone();
                keys.push(v);
                self.settle(label, &[patch], &new, &[], &keys, palette)
            }
        }
    }

    /// The final coloring on `g` (whose vertices are the work graph's ids).
    pub fn into_coloring(self, g: &Graph) -> ViColoring {
        let ids: Vec<usize> = (0..g.n()).collect();
        self.col.to_coloring(g, &ids)
    }
}

/// Colors each connected component with `f` and copies the results back.
pub(crate) fn by_components<F>(g: &Graph, mut f: F) -> Result<ViColoring, ConstructError>
where
    F: FnMut(&Graph) -> Result<ViColoring, ConstructError>,
{
    let comps = crate::structure::components(g);
    if comps.len() == 1 {
        return f(g);
    }
    let mut c = ViColoring::uncolored(g);
    for comp in comps {
        let (h, back) = g.induced(&comp);
        let ch = f(&h)?;
        for v in 0..h.n() {
            c.vertex_colors[back[v]] = ch.vertex(v);
            for &u in h.neighbors(v) {
                c.set_incidence(g, back[v], back[u], ch.incidence(&h, v, u));
            }
        }
    }
    Ok(c)
}

/// Checks a finished construction against its advertised parameters.
pub(crate) fn certify(g: &Graph, c: &ViColoring, bound: usize, cap: usize, what: &str) -> Result<(), ConstructError> {
    let r = verify(g, c).map_err(|e| ConstructError::ExtensionFailed(format!("{what}: {e}")))?;
    if !r.satisfies(bound, cap) {
        return Err(ConstructError::ExtensionFailed(format!(
            "{what}: result has {} colors, spread {}, {} violations",
            r.k,
            r.max_spread(),
            r.violations.len()
        )));
    }
    Ok(())
}
