//! Closed-form colorers for paths, cycles, forests and complete graphs.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::coloring::{Color, ViColoring};
use crate::exact::{is_colorable, solve, Decision, Outcome, Problem, SearchConfig};
use crate::graph::Graph;
use crate::structure::is_forest;

use super::fixtures::fixture;
use super::ConstructError;

/// Colors along the walk `v_0, (v_0,v_1), (v_1,v_0), v_1, …` of a path or
/// cycle: position `3k` is `v_k`, `3k+1` is `(v_k, v_{k+1})`, `3k+2` is
/// `(v_{k+1}, v_k)`.
fn from_walk(g: &Graph, order: &[usize], walk: &[Color], closed: bool) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    let len = order.len();
    let edges = if closed { len } else { len - 1 };
    for (k, &v) in order.iter().enumerate() {
        c.vertex_colors[v] = walk[3 * k];
    }
    for k in 0..edges {
        let (a, b) = (order[k], order[(k + 1) % len]);
        c.set_incidence(g, a, b, walk[3 * k + 1]);
        c.set_incidence(g, b, a, walk[3 * k + 2]);
    }
    c
}

/// `P_n` with four colors and spread 1: the 3-subdivision is colored
/// `1,2,3,4,1,2,…`, so the two incidences pointing at a vertex, four steps
/// apart, share a color.
pub fn color_path(n: usize) -> ViColoring {
    let g = Graph::path(n);
    if n <= 1 {
        return ViColoring {
            vertex_colors: vec![1; n],
            incidence_colors: Vec::new(),
        };
    }
    let walk: Vec<Color> = (0..3 * n).map(|p| (p % 4) as Color + 1).collect();
    from_walk(&g, &(0..n).collect::<Vec<_>>(), &walk, false)
}

/// Spread-1 five-color walks for `C_5`, `C_6`, `C_7`, each starting
/// `1,2,3,4`. Any two such cyclic walks (and the period-4 walk) can be
/// concatenated.
fn five_color_blocks() -> &'static [Vec<Color>; 3] {
    static BLOCKS: OnceLock<[Vec<Color>; 3]> = OnceLock::new();
    BLOCKS.get_or_init(|| {
        [5, 6, 7].map(|m| {
            let len = 3 * m;
            let adj = (0..len)
                .map(|p| {
                    (1..=3)
                        .flat_map(|d| [(p + d) % len, (p + len - d) % len])
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut p = Problem::new(adj);
            p.cap = 1;
            p.group_init = vec![0; m];
            for k in 0..m {
                p.group_of[(3 * k + len - 2) % len] = k;
                p.group_of[3 * k + 2] = k;
            }
            p.precolor = (0..4).map(|i| (i, i as Color + 1)).collect();
            match solve(&p, 5, None, 0).0 {
                Outcome::Found(colors) => colors,
                _ => unreachable!("five colors suffice on cycles of length 5, 6 and 7 with spread 1"),
            }
        })
    })
}

/// `C_n` with spread at most `s`: 4 colors when `4 | n`, 5 otherwise, and
/// for the triangle 6 colors at `s = 1`, 5 at `s ≥ 2`.
pub fn color_cycle(n: usize, s: usize) -> ViColoring {
    assert!(n >= 3, "cycles have at least three vertices");
    let g = Graph::cycle(n);
    if n == 3 {
        let name = if s <= 1 { "triangle_6_1" } else { "triangle_5_2" };
        let f = fixture(name).expect("triangle fixtures are bundled");
        return super::fixtures::transfer_isomorphic(f, &g).expect("fixture is a triangle");
    }
    let mut walk: Vec<Color> = Vec::with_capacity(3 * n);
    let r = n % 4;
    if r != 0 {
        walk.extend_from_slice(&five_color_blocks()[r - 1]);
    }
    while walk.len() < 3 * n {
        walk.extend([1, 2, 3, 4]);
    }
    from_walk(&g, &(0..n).collect::<Vec<_>>(), &walk, true)
}

/// A `(max(Δ+2, 4), 1)`-coloring of a forest. Each vertex `u` gets one color
/// `a(u)` for all of `I_2(u)`; a child's vertex and first incidences avoid
/// its own `a`, its parent's `a` and the parent's color.
pub fn color_forest(g: &Graph) -> Result<ViColoring, ConstructError> {
    if !is_forest(g) {
        return Err(ConstructError::NotAForest);
    }
    let mut c = ViColoring::uncolored(g);
    let mut seen = vec![false; g.n()];
    let smallest = |avoid: &[Color]| (1..).find(|k| !avoid.contains(k)).unwrap();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        c.vertex_colors[root] = 1;
        // a(root) = 2, first incidences 3, 4, ...
        for (i, &u) in g.neighbors(root).iter().enumerate() {
            c.set_incidence(g, root, u, 3 + i as Color);
            c.set_incidence(g, u, root, 2);
        }
        let mut queue: VecDeque<(usize, usize)> = g.neighbors(root).iter().map(|&u| (u, root)).collect();
        for &u in g.neighbors(root) {
            seen[u] = true;
        }
        while let Some((u, p)) = queue.pop_front() {
            let a_u = c.incidence(g, p, u);
            let a_p = c.incidence(g, u, p);
            let cu = smallest(&[c.vertex(p), a_u, a_p]);
            c.vertex_colors[u] = cu;
            let mut used = vec![cu, a_u, a_p];
            for &x in g.neighbors(u) {
                if x == p {
                    continue;
                }
                let k = smallest(&used);
                used.push(k);
                c.set_incidence(g, u, x, k);
                c.set_incidence(g, x, u, a_u);
                seen[x] = true;
                queue.push_back((x, u));
            }
        }
    }
    Ok(c)
}

/// An `(n+2)`-coloring of `K_n`. Even `n` uses a rotation: vertex `i` gets
/// `i+1`, the incidence `(i,j)` gets the color of vertex `j+1`, except
/// `(i,i-1)` which alternates between the two extra colors. Odd `n` has no
/// such rotation and is solved exactly.
pub fn color_complete(n: usize) -> Result<ViColoring, ConstructError> {
    let g = Graph::complete(n);
    if n <= 1 {
        return Ok(ViColoring {
            vertex_colors: vec![1; n],
            incidence_colors: Vec::new(),
        });
    }
    if n.is_multiple_of(2) {
        let mut c = ViColoring::uncolored(&g);
        let vc = |i: usize| (i % n) as Color + 1;
        for i in 0..n {
            c.vertex_colors[i] = vc(i);
            for j in 0..n {
                if i == j {
                    continue;
                }
                let k = if j == (i + n - 1) % n {
                    n as Color + 1 + (i % 2) as Color
                } else {
                    vc(j + 1)
                };
                c.set_incidence(&g, i, j, k);
            }
        }
        return Ok(c);
    }
    let cfg = SearchConfig {
        node_limit: Some(50_000_000),
        ..SearchConfig::default()
    };
    match is_colorable(&g, n + 2, &cfg)?.0 {
        Decision::Colorable(c) => Ok(c),
        Decision::Unsat => unreachable!("complete graphs are (n+2)-colorable"),
        Decision::NodeLimit => Err(ConstructError::SearchBudget),
    }
}

/// Colors `g` through a map `g -> canon` that carries edges to edges.
pub(crate) fn pull_back(g: &Graph, canon: &Graph, c0: &ViColoring, map: &[usize]) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    for v in 0..g.n() {
        c.vertex_colors[v] = c0.vertex(map[v]);
        for &u in g.neighbors(v) {
            c.set_incidence(g, v, u, c0.incidence(canon, map[v], map[u]));
        }
    }
    c
}

/// A connected graph of maximum degree at most 2, colored as a path or a
/// cycle with spread at most `s`.
pub(crate) fn color_path_or_cycle(g: &Graph, s: usize) -> ViColoring {
    let n = g.n();
    assert!(g.max_degree() <= 2 && g.is_connected());
    if n <= 1 {
        return color_path(n);
    }
    let start = (0..n).find(|&v| g.degree(v) == 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *g.neighbors(cur).iter().find(|&&u| u != prev && u != start).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    let mut map = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        map[v] = k;
    }
    if g.m() == n {
        pull_back(g, &Graph::cycle(n), &color_cycle(n, s), &map)
    } else {
        pull_back(g, &Graph::path(n), &color_path(n), &map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::verify;

    #[test]
    fn paths_use_four_colors_spread_one() {
        for n in 2..12 {
            let c = color_path(n);
            let r = verify(&Graph::path(n), &c).unwrap();
            assert!(r.satisfies(4, 1), "P_{n}");
        }
        assert_eq!(color_path(1).k(), 1);
    }

    #[test]
    fn cycle_color_counts() {
        for n in 3..40 {
            for s in [1, 2] {
                let c = color_cycle(n, s);
                let r = verify(&Graph::cycle(n), &c).unwrap();
                let want = if n == 3 { 7 - s.min(2) } else if n % 4 == 0 { 4 } else { 5 };
                assert!(r.valid, "C_{n}");
                assert_eq!(c.k() as usize, want, "C_{n} s={s}");
                assert!(r.max_spread() <= s);
            }
        }
    }

    #[test]
    fn forests() {
        let star = Graph::star(4);
        let c = color_forest(&star).unwrap();
        assert!(verify(&star, &c).unwrap().satisfies(6, 1));
        let p6 = Graph::path(6);
        assert!(verify(&p6, &color_forest(&p6).unwrap()).unwrap().satisfies(4, 1));
        let one = Graph::empty(1);
        assert_eq!(color_forest(&one).unwrap().k(), 1);
        let spider = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let c = color_forest(&spider).unwrap();
        assert!(verify(&spider, &c).unwrap().satisfies(5, 1));
        assert_eq!(color_forest(&Graph::cycle(4)), Err(ConstructError::NotAForest));
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=7 {
            let c = color_complete(n).unwrap();
            let r = verify(&Graph::complete(n), &c).unwrap();
            assert!(r.valid, "K_{n}");
            assert_eq!(c.k() as usize, n + 2, "K_{n}");
        }
        for n in [8, 10, 12] {
            let c = color_complete(n).unwrap();
            assert!(verify(&Graph::complete(n), &c).unwrap().satisfies(n + 2, 2));
        }
    }
}
