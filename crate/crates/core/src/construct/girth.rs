//! Spread-1 colorings of triangle-free outerplanar graphs, with a color
//! count depending on maximum degree and girth.

use serde::Serialize;

use crate::coloring::ViColoring;
use crate::graph::Graph;
use crate::iso::isomorphism;
use crate::outerplanar::{embed_two_connected, end_faces, is_outerplanar, low_degree_end_face};
use crate::structure::{blocks, girth};

use super::basic::{color_forest, color_path, color_path_or_cycle};
use super::compose::{compose_cut_vertex, Part};
use super::fixtures::{fixture, transfer_isomorphic};
use super::work::WorkGraph;
use super::{by_components, certify, ConstructError, Construction, Run, StepKind, TraceStep};

/// Which bound applies to a triangle-free outerplanar graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GirthRegime {
    /// No cycles: `Δ + 2` (4 for `Δ = 1`, 1 for a single vertex).
    Forest,
    /// Paths and cycles.
    MaxDegreeTwo,
    /// `Δ = 3`, girth at least 4: six colors.
    Subcubic,
    /// `Δ = 4`, girth 4 or 5: `Δ + 3`.
    DegreeFour,
    /// `Δ = 4`, girth at least 6: `Δ + 2`.
    DegreeFourGirthSix,
    /// `Δ ≥ 5`, girth at least 4: `Δ + 2`.
    HighDegree,
}

impl GirthRegime {
    /// `None` for graphs with a triangle.
    pub fn of(g: &Graph) -> Option<GirthRegime> {
        let gi = girth(g);
        if gi == Some(3) {
            return None;
        }
        let delta = g.max_degree();
        Some(match (gi, delta) {
            (None, _) => GirthRegime::Forest,
            (_, 0..=2) => GirthRegime::MaxDegreeTwo,
            (_, 3) => GirthRegime::Subcubic,
            (Some(x), 4) if x >= 6 => GirthRegime::DegreeFourGirthSix,
            (_, 4) => GirthRegime::DegreeFour,
            _ => GirthRegime::HighDegree,
        })
    }

    /// Colors guaranteed for `g` in this regime.
    pub fn bound(self, g: &Graph) -> usize {
        let delta = g.max_degree();
        match self {
            GirthRegime::Forest if g.m() == 0 => 1,
            GirthRegime::Forest => (delta + 2).max(4),
            GirthRegime::MaxDegreeTwo => {
                let four = crate::structure::components(g).iter().all(|c| {
                    let (h, _) = g.induced(c);
                    h.m() < h.n() || h.n() % 4 == 0
                });
                if four {
                    4
                } else {
                    5
                }
            }
            GirthRegime::Subcubic => 6,
            GirthRegime::DegreeFour => 7,
            GirthRegime::DegreeFourGirthSix | GirthRegime::HighDegree => delta + 2,
        }
    }

    /// Whether the bound equals `Δ + 2`, so it is optimal.
    pub fn is_tight(self) -> bool {
        matches!(self, GirthRegime::DegreeFourGirthSix | GirthRegime::HighDegree)
    }
}

/// A spread-1 coloring of a triangle-free outerplanar graph within its
/// regime's bound. Blocks are colored separately (edges with 4 colors,
/// cycles directly, other blocks by end-face induction) and glued at cut
/// vertices.
pub fn color_outerplanar_girth(g: &Graph) -> Result<Construction, ConstructError> {
    is_outerplanar(g)?;
    let regime = GirthRegime::of(g).ok_or(ConstructError::NoApplicableTheorem)?;
    let bound = regime.bound(g);
    let mut trace = Vec::new();
    let coloring = match regime {
        GirthRegime::Forest => color_forest(g)?,
        GirthRegime::MaxDegreeTwo => by_components(g, |h| Ok(color_path_or_cycle(h, 1)))?,
        _ => by_components(g, |h| color_connected(h, bound, &mut trace))?,
    };
    certify(g, &coloring, bound, 1, "girth induction")?;
    Ok(Construction {
        coloring,
        bound,
        spread_cap: 1,
        algorithm: format!("girth-{}", serde_json::to_value(regime).unwrap().as_str().unwrap()),
        trace,
    })
}

fn color_connected(g: &Graph, palette: usize, trace: &mut Vec<TraceStep>) -> Result<ViColoring, ConstructError> {
    if g.n() == 1 {
        return Ok(color_path(1));
    }
    let bd = blocks(g);
    let mut colored: Vec<Option<ViColoring>> = vec![None; bd.blocks.len()];
    for (i, b) in bd.blocks.iter().enumerate() {
        let (h, _) = g.induced(b);
        colored[i] = Some(if h.n() == 2 {
            color_path(2)
        } else if h.max_degree() == 2 {
            color_path_or_cycle(&h, 1)
        } else {
            color_block(&h, palette, trace)?
        });
    }
    // glue blocks along the block-cut tree
    let mut done = vec![false; bd.blocks.len()];
    done[0] = true;
    let mut set: Vec<usize> = bd.blocks[0].clone();
    let mut col = colored[0].take().unwrap();
    while let Some(i) = (0..bd.blocks.len()).find(|&i| !done[i] && bd.blocks[i].iter().any(|v| set.binary_search(v).is_ok())) {
        let b = &bd.blocks[i];
        let v = *b.iter().find(|v| set.binary_search(v).is_ok()).unwrap();
        let mut union: Vec<usize> = set.iter().chain(b.iter()).copied().collect();
        union.sort_unstable();
        union.dedup();
        let (host, _) = g.induced(&union);
        let local = |xs: &[usize]| -> Vec<usize> { xs.iter().map(|x| union.binary_search(x).unwrap()).collect() };
        let a = Part::induced(&host, &local(&set), col);
        let p = Part::induced(&host, &local(b), colored[i].take().unwrap());
        col = compose_cut_vertex(&host, union.binary_search(&v).unwrap(), &a, &p)?;
        set = union;
        done[i] = true;
    }
    Ok(col)
}

const BASES: [&str; 4] = ["hexagon_chord", "order8_d4_g4", "order14_d4_g6", "order10_d5_g4"];

/// End-face induction on a 2-connected triangle-free outerplanar graph.
fn color_block(g: &Graph, palette: usize, trace: &mut Vec<TraceStep>) -> Result<ViColoring, ConstructError> {
    let mut run = Run::new(WorkGraph::from_graph(g), 1);
    loop {
        let (h, ids) = run.w.to_graph();
        if h.max_degree() <= 2 {
            run.base("cycle", palette, |h| Ok(color_path_or_cycle(h, 1)))?;
            break;
        }
        let base = BASES
            .iter()
            .map(|name| fixture(name).expect("bundled fixture"))
            .filter(|f| f.k <= palette && f.graph.n() == h.n())
            .find_map(|f| isomorphism(&h, &f.graph).map(|_| f));
        if let Some(f) = base {
            run.base(&f.name, palette, |h| Ok(transfer_isomorphic(f, h).unwrap()))?;
            break;
        }
        let emb = embed_two_connected(&h)?;
        let face = if h.max_degree() >= 5 {
            low_degree_end_face(&emb, &h)?
        } else {
            end_faces(&emb, &h)?.into_iter().next().ok_or(ConstructError::NotOuterplanar)?
        };
        let v: Vec<usize> = face.boundary.iter().map(|&x| ids[x]).collect();
        let step = match v.len() {
            4 => StepKind::GirthQuad {
                a: v[0],
                b: v[1],
                c: v[2],
                d: v[3],
            },
            6 if girth(&h).is_some_and(|x| x >= 6) => StepKind::GirthHexagon {
                v: [v[0], v[1], v[2], v[3], v[4], v[5]],
            },
            _ => StepKind::Contract {
                a: v[0],
                b: v[1],
                c: v[2],
                d: v[3],
            },
        };
        run.reduce(step, palette);
    }
    run.unwind()?;
    trace.append(&mut run.trace);
    Ok(run.into_coloring(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify;

    fn check(g: &Graph) -> usize {
        let c = color_outerplanar_girth(g).unwrap();
        let r = verify(g, &c.coloring).unwrap();
        assert!(r.satisfies(c.bound, 1), "{:?}", r.violations);
        c.bound
    }

    #[test]
    fn regimes_of_fixtures() {
        let regime = |n: &str| GirthRegime::of(&fixture(n).unwrap().graph).unwrap();
        assert_eq!(regime("hexagon_chord"), GirthRegime::Subcubic);
        assert_eq!(regime("order8_d4_g4"), GirthRegime::DegreeFour);
        assert_eq!(regime("order14_d4_g6"), GirthRegime::DegreeFourGirthSix);
        assert_eq!(regime("order10_d5_g4"), GirthRegime::HighDegree);
        assert_eq!(GirthRegime::of(&Graph::cycle(3)), None);
    }

    #[test]
    fn fixtures_color_within_bound() {
        for name in BASES {
            let f = fixture(name).unwrap();
            let b = check(&f.graph);
            assert!(b >= f.k);
        }
    }

    #[test]
    fn triangles_are_refused() {
        assert_eq!(
            color_outerplanar_girth(&Graph::fan(5)).unwrap_err(),
            ConstructError::NoApplicableTheorem
        );
    }

    #[test]
    fn squares_sharing_vertices() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        assert_eq!(check(&g), 7);
        assert_eq!(color_outerplanar_girth(&g).unwrap().colors_used(), 6);
    }

    #[test]
    fn ladder_of_squares() {
        let mut e = Vec::new();
        for i in 0..6 {
            e.push((i, i + 1));
            e.push((i + 7, i + 8));
        }
        for i in 0..7 {
            e.push((i, i + 7));
        }
        assert_eq!(check(&Graph::new(14, &e).unwrap()), 6);
    }
}
