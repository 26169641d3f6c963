//! Library results against brute force on exhaustive small corpora.

mod common;

use std::sync::OnceLock;

use rayon::prelude::*;
use vic::certificates::{classify, detect_forbidden};
use vic::construct::{color, Strategy};
use vic::exact::{chi_of_power, chi_vi, chromatic_number, is_colorable, Decision, SearchConfig};
use vic::generators::{enumerate_graphs, gen_outerplanar, GenSpec};
use vic::outerplanar::{embed_two_connected, end_faces, find_reduction, is_outerplanar, ReductionCase};
use vic::structure::{degeneracy_order, is_two_connected};
use vic::{girth, incidence_graph, subdivide, three_thirds_power, verify, ElementId, Graph, ViColoring};

/// Every graph on at most `n` vertices, up to isomorphism.
fn corpus(n: usize) -> &'static [Graph] {
    static C: [OnceLock<Vec<Graph>>; 9] = [const { OnceLock::new() }; 9];
    C[n].get_or_init(|| (1..=n).flat_map(|k| enumerate_graphs(k, |_| true).unwrap()).collect())
}

#[test]
fn corpus_sizes() {
    // non-isomorphic graphs on 1..=7 vertices: 1+2+4+11+34+156+1044
    assert_eq!(corpus(7).len(), 1252);
}

#[test]
fn recognition_matches_circle_drawings() {
    let bad: Vec<_> = corpus(7)
        .par_iter()
        .filter(|g| is_outerplanar(g).is_ok() != common::outerplanar(g))
        .map(|g| g.edge_list())
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn recognition_on_eight_vertices() {
    // only graphs with few enough edges can be outerplanar; the rest must be refused
    let gs = enumerate_graphs(8, |g| g.m() <= 13).unwrap();
    let bad = gs
        .par_iter()
        .filter(|g| is_outerplanar(g).is_ok() != common::outerplanar(g))
        .count();
    assert_eq!(bad, 0);
}

#[test]
fn girth_and_degeneracy_by_brute_force() {
    for g in corpus(7) {
        assert_eq!(girth(g), common::girth(g), "{:?}", g.edge_list());
        assert_eq!(degeneracy_order(g).1, common::degeneracy(g), "{:?}", g.edge_list());
        assert_eq!(is_two_connected(g), common::two_connected(g), "{:?}", g.edge_list());
    }
}

#[test]
fn subdivision_triples_girth() {
    for g in corpus(6) {
        if let Some(x) = girth(g) {
            assert_eq!(girth(&subdivide(g, 3)), Some(3 * x));
        }
    }
}

#[test]
fn power_adjacency_is_the_conflict_relation() {
    corpus(7).par_iter().for_each(|g| {
        let p = three_thirds_power(g);
        assert_eq!(p.graph.n(), g.n() + 2 * g.m());
        for a in 0..p.graph.n() {
            for b in a + 1..p.graph.n() {
                let want = common::conflicts(g, p.element_of[a], p.element_of[b]);
                assert_eq!(p.graph.has_edge(a, b), want, "{:?} {a} {b}", g.edge_list());
            }
        }
    });
}

#[test]
fn incidence_graph_is_the_power_on_incidences() {
    for g in corpus(6) {
        let p = three_thirds_power(g);
        let ig = incidence_graph(g);
        let inc: Vec<usize> = (0..p.graph.n())
            .filter(|&x| matches!(p.element_of[x], ElementId::Incidence(_)))
            .collect();
        assert_eq!(inc.len(), ig.n());
        for i in 0..ig.n() {
            for j in 0..ig.n() {
                let (a, b) = (p.vertex_of[g.n() + i], p.vertex_of[g.n() + j]);
                assert_eq!(ig.has_edge(i, j), p.graph.has_edge(a, b));
            }
        }
    }
}

/// A deterministic pseudo-random coloring with colors `1..=k`.
fn scrambled(g: &Graph, k: u32, salt: u64) -> ViColoring {
    let mut c = ViColoring::uncolored(g);
    let mut x = salt.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = || {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (x >> 33) as u32 % k + 1
    };
    for v in 0..g.n() {
        c.vertex_colors[v] = next();
    }
    for i in 0..c.incidence_colors.len() {
        c.incidence_colors[i] = next();
    }
    c
}

#[test]
fn verify_agrees_with_the_definition() {
    corpus(6).par_iter().enumerate().for_each(|(i, g)| {
        if g.m() == 0 {
            return;
        }
        let k = (g.max_degree() + 3) as u32;
        for salt in 0..8 {
            let c = scrambled(g, k, (i * 8 + salt) as u64);
            assert_eq!(verify(g, &c).unwrap().valid, common::proper(g, &c));
        }
        let (_, colors) = chromatic_number(&three_thirds_power(g).graph, None).unwrap();
        let p = three_thirds_power(g);
        let mut c = ViColoring::uncolored(g);
        for (x, &col) in colors.iter().enumerate() {
            match p.element_of[x] {
                ElementId::Vertex(v) => c.vertex_colors[v] = col,
                ElementId::Incidence(inc) => c.set_incidence(g, inc.vertex, inc.other, col),
            }
        }
        let r = verify(g, &c).unwrap();
        assert!(r.valid && common::proper(g, &c));
        for v in 0..g.n() {
            assert_eq!(r.spread[v], common::spread(g, &c, v));
            if g.degree(v) > 0 {
                assert!((1..=g.degree(v)).contains(&r.spread[v]));
            }
        }
    });
}

#[test]
fn exact_values_match_plain_backtracking() {
    // element counts up to 5 + 2*6 = 17 keep the naive search fast
    let small: Vec<&Graph> = corpus(5).iter().filter(|g| g.m() <= 6 && g.m() > 0).collect();
    small.par_iter().for_each(|g| {
        for cap in [None, Some(1), Some(2)] {
            let cfg = SearchConfig {
                spread_cap: cap,
                ..SearchConfig::default()
            };
            let r = chi_vi(g, &cfg).unwrap();
            assert_eq!(r.k, common::chi(g, cap), "{:?} cap {cap:?}", g.edge_list());
            assert!(common::proper(g, &r.witness));
        }
    });
}

#[test]
fn power_identity_and_spread_monotonicity() {
    let gs: Vec<&Graph> = corpus(7).iter().filter(|g| g.m() <= 10).collect();
    gs.par_iter().for_each(|g| {
        let free = chi_vi(g, &SearchConfig::default()).unwrap();
        assert_eq!(free.k, chi_of_power(&three_thirds_power(g).graph).unwrap());
        assert!(verify(g, &free.witness).unwrap().valid);
        if g.m() > 0 {
            assert!(free.k >= g.max_degree() + 2);
        }
        if g.n() <= 6 {
            let mut prev = usize::MAX;
            for s in 1..=g.max_degree().max(1) {
                let cfg = SearchConfig {
                    spread_cap: Some(s),
                    ..SearchConfig::default()
                };
                let k = chi_vi(g, &cfg).unwrap().k;
                assert!(k <= prev && k >= free.k);
                prev = k;
            }
            assert_eq!(prev, free.k);
        }
    });
}

#[test]
fn two_connected_embeddings() {
    let mut blocks: Vec<Graph> = corpus(7)
        .iter()
        .filter(|g| is_two_connected(g) && is_outerplanar(g).is_ok())
        .cloned()
        .collect();
    for seed in 0..200 {
        let spec = GenSpec {
            two_connected: true,
            ..GenSpec::new(8 + seed as usize % 3, 4, 3, seed)
        };
        blocks.push(gen_outerplanar(&spec).unwrap());
    }
    for g in &blocks {
        let emb = embed_two_connected(g).unwrap();
        let mut order = emb.outer_order.clone();
        assert_eq!(order.len(), g.n());
        for i in 0..order.len() {
            assert!(g.has_edge(order[i], order[(i + 1) % order.len()]));
        }
        order.sort_unstable();
        order.dedup();
        assert_eq!(order.len(), g.n());
        if !emb.chords.is_empty() {
            assert!(!end_faces(&emb, g).unwrap().is_empty());
        }
        assert!(!matches!(find_reduction(g), Ok(ReductionCase::PendantVertex(_))));
    }
}

#[test]
fn classify_brackets_the_exact_value() {
    corpus(6).par_iter().for_each(|g| {
        let exact = chi_vi(g, &SearchConfig::default()).unwrap().k.max(1);
        let c = classify(g, None).unwrap();
        assert!(c.lo <= exact && exact <= c.hi, "{:?}", g.edge_list());
        assert!(c.is_tight());
        if is_outerplanar(g).is_ok() && g.m() > 0 {
            assert!(c.hi <= g.max_degree() + 3);
        }
    });
}

#[test]
fn forbidden_hosts_on_nine_vertices_need_six() {
    let mut hosts = 0;
    for seed in 0..400 {
        let spec = GenSpec::new(9, 3, 3, seed);
        let g = gen_outerplanar(&spec).unwrap();
        if detect_forbidden(&g).is_empty() {
            continue;
        }
        hosts += 1;
        let (d, _) = is_colorable(&g, 5, &SearchConfig::default()).unwrap();
        assert_eq!(d, Decision::Unsat, "{:?}", g.edge_list());
    }
    assert!(hosts > 50);
}

#[test]
fn constructions_against_exact_values() {
    let cases: Vec<(Graph, bool)> = (0..300u64)
        .filter_map(|seed| {
            let (delta, g0) = [(3, 3), (4, 3), (5, 4), (4, 6), (3, 4), (6, 4)][seed as usize % 6];
            let spec = GenSpec {
                exact_delta: true,
                ..GenSpec::new(6 + seed as usize % 4, delta, g0, seed)
            };
            let g = gen_outerplanar(&spec).ok()?;
            let tight = g0 >= 4 && (delta >= 5 || g0 >= 6 && delta == 4);
            Some((g, tight))
        })
        .collect();
    assert!(cases.len() > 100);
    cases.par_iter().for_each(|(g, tight)| {
        let exact = chi_vi(g, &SearchConfig::default()).unwrap().k;
        assert!(exact >= g.max_degree() + 2);
        let c = color(g, Strategy::Auto, None).unwrap();
        assert!(c.colors_used() >= exact);
        if *tight {
            assert_eq!(c.colors_used(), exact, "{:?}", g.edge_list());
        }
    });
}
