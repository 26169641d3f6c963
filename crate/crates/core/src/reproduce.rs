//! The acceptance suite: ten checks of exact values, constructions and
//! certificates, each reported as one row with expected and observed values.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::certificates::detect_forbidden;
use crate::checker::{verify, verify_spread_lemma};
use crate::coloring::ViColoring;
use crate::construct::fixtures::fixtures;
use crate::construct::{
    color_degenerate, color_outerplanar, color_outerplanar_girth, compose_cut_edge, compose_cut_vertex, Part,
};
use crate::exact::{chi_vi, is_colorable, Decision, ExactError, SearchConfig};
use crate::generators::{connected_graphs_up_to, enumerate_graphs, gen_outerplanar, GenSpec};
use crate::graph::Graph;
use crate::power::three_thirds_power;
use crate::structure::{blocks, components, girth};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Options {
    /// Node limit for every exact search; `None` searches to completion.
    pub node_limit: Option<u64>,
    /// Base seed for generated graphs.
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub id: usize,
    pub title: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
    /// An exact search stopped at the node limit.
    pub limited: bool,
    pub seconds: f64,
    pub budget_seconds: f64,
    /// Failing cases, capped at a few entries.
    pub failures: Vec<String>,
}

pub const CRITERIA: usize = 10;

const TITLES: [&str; CRITERIA] = [
    "exact values of cycles",
    "exact values of complete graphs",
    "identity with the 3/3-power on small connected graphs",
    "stored fixture colorings",
    "Δ+3 colors with spread 2 on outerplanar graphs",
    "girth regimes with spread 1",
    "six colors are needed for subcubic forbidden configurations",
    "spread bound for (Δ+2)-colorings",
    "cut-edge and cut-vertex composition",
    "degeneracy greedy with k = 2",
];

const BUDGETS: [f64; CRITERIA] = [60.0, 300.0, 600.0, 10.0, 300.0, 600.0, 900.0, 600.0, 600.0, 300.0];

/// Outcome of one check before timing is attached.
struct Check {
    expected: String,
    observed: String,
    failures: Vec<String>,
    limited: bool,
}

impl Check {
    fn new(expected: impl Into<String>, observed: impl Into<String>, failures: Vec<String>) -> Check {
        Check {
            expected: expected.into(),
            observed: observed.into(),
            failures,
            limited: false,
        }
    }

    fn limited(expected: impl Into<String>, e: ExactError) -> Check {
        Check {
            expected: expected.into(),
            observed: e.to_string(),
            failures: vec![e.to_string()],
            limited: true,
        }
    }
}

/// Runs criterion `id` (1-based) on the current rayon pool.
pub fn run(id: usize, opts: &Options) -> Row {
    assert!((1..=CRITERIA).contains(&id), "criteria are numbered 1..={CRITERIA}");
    let start = Instant::now();
    let check = match id {
        1 => cycles(opts),
        2 => complete_graphs(opts),
        3 => power_identity(opts),
        4 => fixture_colorings(),
        5 => main_bound(opts),
        6 => girth_regimes(opts),
        7 => subcubic_tightness(opts),
        8 => spread_lemma(opts),
        9 => composition(opts),
        _ => degenerate(opts),
    };
    let seconds = start.elapsed().as_secs_f64();
    let budget = BUDGETS[id - 1];
    let mut failures = check.failures;
    if seconds > budget {
        failures.push(format!("took {seconds:.1}s, budget {budget}s"));
    }
    let passed = failures.is_empty() && !check.limited;
    failures.truncate(8);
    Row {
        id,
        title: TITLES[id - 1].to_string(),
        expected: check.expected,
        observed: check.observed,
        passed,
        limited: check.limited,
        seconds,
        budget_seconds: budget,
        failures,
    }
}

/// Every criterion in order, on a pool of `jobs` threads (0 picks the
/// machine default).
pub fn run_all(opts: &Options, jobs: usize) -> Vec<Row> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| (1..=CRITERIA).map(|id| run(id, opts)).collect())
}

/// Plain-text table, one line per row.
pub fn render(rows: &[Row]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "[{}] {:>2} {:<58} expected {} | observed {} ({:.2}s)\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.expected,
            r.observed,
            r.seconds
        ));
        for f in &r.failures {
            out.push_str(&format!("        {f}\n"));
        }
    }
    out
}

fn cfg(opts: &Options, spread_cap: Option<usize>) -> SearchConfig {
    SearchConfig {
        spread_cap,
        node_limit: opts.node_limit,
        ..SearchConfig::default()
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

type Witnesses = Vec<(Graph, ViColoring)>;

/// Exact values of `C_3..C_10` with their witnesses.
fn cycle_values(opts: &Options) -> Result<(Vec<usize>, Witnesses), ExactError> {
    let mut ks = Vec::new();
    let mut witnesses = Vec::new();
    for n in 3..=10 {
        let g = Graph::cycle(n);
        let r = chi_vi(&g, &cfg(opts, None))?;
        ks.push(r.k);
        witnesses.push((g, r.witness));
    }
    Ok((ks, witnesses))
}

fn cycles(opts: &Options) -> Check {
    let want = [5, 4, 5, 5, 5, 4, 5, 5];
    let want_s1 = [(3, 6), (8, 4), (5, 5)];
    let expected = format!("{} ; spread 1: C3=6 C8=4 C5=5", join(&want));
    let (ks, _) = match cycle_values(opts) {
        Ok(x) => x,
        Err(e) => return Check::limited(expected, e),
    };
    let mut failures = Vec::new();
    if ks != want {
        failures.push(format!("got {}", join(&ks)));
    }
    let mut s1 = Vec::new();
    for (n, k) in want_s1 {
        match chi_vi(&Graph::cycle(n), &cfg(opts, Some(1))) {
            Ok(r) => {
                if r.k != k {
                    failures.push(format!("spread 1 on C{n}: {} instead of {k}", r.k));
                }
                s1.push(format!("C{n}={}", r.k));
            }
            Err(e) => return Check::limited(expected, e),
        }
    }
    Check::new(expected, format!("{} ; spread 1: {}", join(&ks), s1.join(" ")), failures)
}

fn complete_values(opts: &Options) -> Result<Vec<(Graph, usize, ViColoring)>, ExactError> {
    (2..=5)
        .into_par_iter()
        .map(|n| {
            let g = Graph::complete(n);
            let r = chi_vi(&g, &cfg(opts, None))?;
            Ok((g, r.k, r.witness))
        })
        .collect()
}

fn complete_graphs(opts: &Options) -> Check {
    let expected = "4,5,6,7";
    let vals = match complete_values(opts) {
        Ok(v) => v,
        Err(e) => return Check::limited(expected, e),
    };
    let ks: Vec<usize> = vals.iter().map(|v| v.1).collect();
    let failures = vals
        .iter()
        .filter(|(g, k, _)| *k != g.n() + 2)
        .map(|(g, k, _)| format!("K{}: {k}", g.n()))
        .collect();
    Check::new(expected, join(&ks), failures)
}

/// Largest order of the exhaustive corpus: 996 connected graphs.
pub const CORPUS_ORDER: usize = 7;

fn identity_values(opts: &Options) -> Result<Vec<(Graph, usize, usize, ViColoring)>, ExactError> {
    let corpus = connected_graphs_up_to(CORPUS_ORDER).expect("small order");
    corpus
        .into_par_iter()
        .map(|g| {
            let r = chi_vi(&g, &cfg(opts, None))?;
            let p = three_thirds_power(&g).graph;
            let q = crate::exact::chromatic_number(&p, opts.node_limit)?.0;
            Ok((g, r.k, q, r.witness))
        })
        .collect()
}

fn power_identity(opts: &Options) -> Check {
    let expected = "χ_vi = χ(power) on every graph";
    let vals = match identity_values(opts) {
        Ok(v) => v,
        Err(e) => return Check::limited(expected, e),
    };
    let failures: Vec<String> = vals
        .iter()
        .filter(|v| v.1 != v.2)
        .map(|(g, a, b, _)| format!("{:?}: {a} vs {b}", g.edge_list()))
        .collect();
    let agree = vals.len() - failures.len();
    Check::new(
        expected,
        format!("{agree}/{} connected graphs on ≤{CORPUS_ORDER} vertices agree", vals.len()),
        failures,
    )
}

fn fixture_colorings() -> Check {
    let all = fixtures();
    let mut failures = Vec::new();
    for f in all {
        match verify(&f.graph, &f.coloring) {
            Ok(r) if r.satisfies(f.k, f.s) => {}
            Ok(r) => failures.push(format!(
                "{}: {} violations, {} colors, spread {}",
                f.name,
                r.violations.len(),
                f.coloring.k(),
                r.max_spread()
            )),
            Err(e) => failures.push(format!("{}: {e}", f.name)),
        }
    }
    Check::new(
        format!("{0}/{0}", all.len()),
        format!("{}/{}", all.len() - failures.len(), all.len()),
        failures,
    )
}

/// Seeded outerplanar graph meeting `spec`, trying later seeds when the
/// degree target is unreachable.
fn generate(mut spec: GenSpec) -> Option<Graph> {
    for _ in 0..20 {
        if let Ok(g) = gen_outerplanar(&spec) {
            return Some(g);
        }
        spec.seed = spec.seed.wrapping_add(1_000_003);
        spec.n += 1;
    }
    None
}

fn main_bound(opts: &Options) -> Check {
    const COUNT: usize = 500;
    let results: Vec<Result<usize, String>> = (0..COUNT)
        .into_par_iter()
        .map(|i| {
            let delta = 2 + i % 7;
            let n = 5 + (i * 37) % 196;
            let mut spec = GenSpec::new(n, delta, 3, opts.seed.wrapping_add(i as u64));
            spec.exact_delta = true;
            spec.two_connected = i % 3 == 0;
            let g = generate(spec).ok_or_else(|| format!("no graph for n={n} Δ={delta}"))?;
            let want = if g.max_degree() == 3 { 6 } else { g.max_degree() + 3 };
            let c = color_outerplanar(&g).map_err(|e| format!("n={} Δ={}: {e}", g.n(), g.max_degree()))?;
            let r = verify(&g, &c.coloring).map_err(|e| e.to_string())?;
            if r.satisfies(want, 2) {
                Ok(g.max_degree())
            } else {
                Err(format!("n={} Δ={}: {} colors, spread {}", g.n(), g.max_degree(), c.coloring.k(), r.max_spread()))
            }
        })
        .collect();
    let mut failures: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    let deltas: std::collections::BTreeSet<usize> = results.iter().filter_map(|r| r.clone().ok()).collect();
    if !(2..=8).all(|d| deltas.contains(&d)) {
        failures.push(format!("Δ values covered: {deltas:?}"));
    }
    Check::new(
        format!("{COUNT}/{COUNT} verify (≤Δ+3, 6 when Δ=3, spread ≤2)"),
        format!("{}/{COUNT} verify, Δ in {:?}", COUNT - results.iter().filter(|r| r.is_err()).count(), deltas),
        failures,
    )
}

/// One family of the girth check: maximum degrees, girth floor, and the
/// color count required (`exact` demands exactly that many).
struct Regime {
    name: &'static str,
    deltas: &'static [usize],
    girth: usize,
    colors: fn(usize) -> usize,
    exact: bool,
}

const REGIMES: [Regime; 4] = [
    Regime {
        name: "Δ=3 g≥4",
        deltas: &[3],
        girth: 4,
        colors: |_| 6,
        exact: false,
    },
    Regime {
        name: "Δ≥4 g≥4",
        deltas: &[4, 5, 6, 7, 8],
        girth: 4,
        colors: |d| d + 3,
        exact: false,
    },
    Regime {
        name: "Δ≥4 g≥6",
        deltas: &[4, 5, 6, 7, 8],
        girth: 6,
        colors: |d| d + 2,
        exact: true,
    },
    Regime {
        name: "Δ≥5 g≥4",
        deltas: &[5, 6, 7, 8],
        girth: 4,
        colors: |d| d + 2,
        exact: true,
    },
];

fn girth_regimes(opts: &Options) -> Check {
    const PER: usize = 200;
    let mut failures = Vec::new();
    let mut observed = Vec::new();
    for (ri, reg) in REGIMES.iter().enumerate() {
        let errs: Vec<String> = (0..PER)
            .into_par_iter()
            .filter_map(|i| {
                let delta = reg.deltas[i % reg.deltas.len()];
                let n = (6 + (i * 31) % 120).max(2 * reg.girth + 2);
                let mut spec = GenSpec::new(n, delta, reg.girth, opts.seed.wrapping_add((ri * 100_000 + i) as u64));
                spec.exact_delta = true;
                spec.two_connected = i % 2 == 0;
                let Some(g) = generate(spec) else {
                    return Some(format!("{}: no graph for n={n} Δ={delta}", reg.name));
                };
                if g.max_degree() != delta || girth(&g).is_some_and(|x| x < reg.girth) {
                    return Some(format!("{}: generator missed the target", reg.name));
                }
                let c = match color_outerplanar_girth(&g) {
                    Ok(c) => c,
                    Err(e) => return Some(format!("{} n={}: {e}", reg.name, g.n())),
                };
                let want = (reg.colors)(delta);
                let ok = verify(&g, &c.coloring).is_ok_and(|r| r.satisfies(want, 1))
                    && (!reg.exact || c.colors_used() == want);
                (!ok).then(|| format!("{} n={} Δ={delta}: {} colors used", reg.name, g.n(), c.colors_used()))
            })
            .collect();
        observed.push(format!("{} {}/{PER}", reg.name, PER - errs.len()));
        failures.extend(errs);
    }
    Check::new(
        format!("{PER} per regime verify: 6 | ≤Δ+3 | =Δ+2 | =Δ+2, spread 1"),
        observed.join(", "),
        failures,
    )
}

fn subcubic_tightness(opts: &Options) -> Check {
    let expected = "K4-e: 5 unsat, χ_vi=6; every forbidden host needs 6";
    let diamond = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("diamond");
    let mut failures = Vec::new();
    let five = match is_colorable(&diamond, 5, &cfg(opts, None)) {
        Ok((d, _)) => d,
        Err(e) => return Check::limited(expected, e),
    };
    if five != Decision::Unsat {
        failures.push("K4-e has a 5-coloring".to_string());
    }
    let chi = match chi_vi(&diamond, &cfg(opts, None)) {
        Ok(r) => r.k,
        Err(e) => return Check::limited(expected, e),
    };
    if chi != 6 {
        failures.push(format!("χ_vi(K4-e) = {chi}"));
    }
    let hosts: Vec<Graph> = (1..=8)
        .flat_map(|n| enumerate_graphs(n, |g| g.max_degree() <= 3).expect("small order"))
        .filter(|g| !detect_forbidden(g).is_empty())
        .collect();
    let decisions: Vec<(Graph, Decision)> = hosts
        .into_par_iter()
        .map(|g| {
            let d = is_colorable(&g, 5, &cfg(opts, None)).map(|x| x.0).unwrap_or(Decision::NodeLimit);
            (g, d)
        })
        .collect();
    let mut limited = false;
    for (g, d) in &decisions {
        match d {
            Decision::Unsat => {}
            Decision::NodeLimit => limited = true,
            Decision::Colorable(_) => failures.push(format!("5-colorable host {:?}", g.edge_list())),
        }
    }
    let unsat = decisions.iter().filter(|d| d.1 == Decision::Unsat).count();
    let mut check = Check::new(
        expected,
        format!("K4-e: 5 {}, χ_vi={chi}; {unsat}/{} hosts need 6", if five == Decision::Unsat { "unsat" } else { "sat" }, decisions.len()),
        failures,
    );
    check.limited = limited;
    check
}

fn spread_lemma(opts: &Options) -> Check {
    let expected = "lemma holds on every (Δ+2)-witness";
    let mut witnesses: Vec<(Graph, ViColoring)> = Vec::new();
    match cycle_values(opts) {
        Ok((_, w)) => witnesses.extend(w),
        Err(e) => return Check::limited(expected, e),
    }
    for n in [3, 8, 5] {
        match chi_vi(&Graph::cycle(n), &cfg(opts, Some(1))) {
            Ok(r) => witnesses.push((Graph::cycle(n), r.witness)),
            Err(e) => return Check::limited(expected, e),
        }
    }
    match complete_values(opts) {
        Ok(v) => witnesses.extend(v.into_iter().map(|(g, _, c)| (g, c))),
        Err(e) => return Check::limited(expected, e),
    }
    match identity_values(opts) {
        Ok(v) => witnesses.extend(v.into_iter().map(|(g, _, _, c)| (g, c))),
        Err(e) => return Check::limited(expected, e),
    }
    let tight: Vec<&(Graph, ViColoring)> = witnesses
        .iter()
        .filter(|(g, c)| g.m() > 0 && c.k() as usize == g.max_degree() + 2)
        .collect();
    let failures: Vec<String> = tight
        .iter()
        .filter(|(g, c)| !verify_spread_lemma(g, c).unwrap_or(false))
        .map(|(g, _)| format!("{:?}", g.edge_list()))
        .collect();
    Check::new(
        expected,
        format!("{}/{} witnesses", tight.len() - failures.len(), tight.len()),
        failures,
    )
}

/// The two sides of a cut at `v`: one component of `g - v` plus `v`, and
/// everything else.
fn split_at(g: &Graph, v: usize) -> (Vec<usize>, Vec<usize>) {
    let mut rest: Vec<usize> = (0..g.n()).filter(|&x| x != v).collect();
    let (h, map) = g.induced(&rest);
    let comp = &components(&h)[0];
    let mut a: Vec<usize> = comp.iter().map(|&x| map[x]).chain([v]).collect();
    a.sort_unstable();
    rest.retain(|x| a.binary_search(x).is_err());
    rest.push(v);
    rest.sort_unstable();
    (a, rest)
}

fn part(g: &Graph, keep: &[usize], c: SearchConfig) -> Result<(Part, usize), ExactError> {
    let (h, _) = g.induced(keep);
    let r = chi_vi(&h, &c)?;
    Ok((Part::induced(g, keep, r.witness), r.k))
}

/// Composes optimal colorings across one cut and compares the result with
/// the exact value of the whole graph. Returns a failure description.
fn compose_case(g: &Graph, opts: &Options) -> Result<Vec<String>, ExactError> {
    let mut out = Vec::new();
    let bd = blocks(g);
    if let Some(&(u, v)) = bd.cut_edges.first() {
        let split = components(&g.subgraph_without_edge(u, v));
        let side = |x: usize, y: usize| {
            let mut s: Vec<usize> = split.iter().find(|c| c.contains(&x)).unwrap().clone();
            s.push(y);
            s.sort_unstable();
            s
        };
        let (sa, sb) = (side(u, v), side(v, u));
        for cap in [Some(1), None] {
            let c = cfg(opts, cap);
            let (a, ka) = part(g, &sa, c.clone())?;
            let (b, kb) = part(g, &sb, c.clone())?;
            let whole = chi_vi(g, &c)?.k;
            let formula = ka.max(kb);
            match compose_cut_edge(g, (u, v), &a, &b) {
                Ok(col) => {
                    let ok = verify(g, &col).is_ok_and(|r| r.satisfies(formula, cap.unwrap_or(usize::MAX)));
                    if !ok || whole != formula {
                        out.push(format!("cut edge {:?} cap {cap:?}: formula {formula}, exact {whole}, valid {ok}", (u, v)));
                    }
                }
                Err(e) => out.push(format!("cut edge {:?}: {e}", (u, v))),
            }
        }
    }
    if let Some(&v) = bd.cut_vertices.first() {
        let (sa, sb) = split_at(g, v);
        let c = cfg(opts, Some(1));
        let (a, ka) = part(g, &sa, c.clone())?;
        let (b, kb) = part(g, &sb, c.clone())?;
        let whole = chi_vi(g, &c)?.k;
        let formula = ka.max(kb).max(g.degree(v) + 2);
        match compose_cut_vertex(g, v, &a, &b) {
            Ok(col) => {
                let ok = verify(g, &col).is_ok_and(|r| r.satisfies(formula, 1));
                if !ok || whole != formula {
                    out.push(format!("cut vertex {v}: formula {formula}, exact {whole}, valid {ok}"));
                }
            }
            Err(e) => out.push(format!("cut vertex {v}: {e}")),
        }
    }
    Ok(out)
}

fn composition(opts: &Options) -> Check {
    const COUNT: usize = 50;
    let expected = "max of parts (cut edge); max of parts and deg+2 (cut vertex)";
    let mut graphs = Vec::new();
    let mut seed = opts.seed;
    while graphs.len() < COUNT {
        let i = graphs.len();
        let spec = GenSpec::new(5 + i % 5, 3 + i % 2, 3, seed.wrapping_add(7_000_000));
        seed = seed.wrapping_add(1);
        if let Ok(g) = gen_outerplanar(&spec) {
            if !blocks(&g).cut_vertices.is_empty() {
                graphs.push(g);
            }
        }
    }
    let results: Vec<Result<Vec<String>, ExactError>> = graphs.par_iter().map(|g| compose_case(g, opts)).collect();
    let mut failures = Vec::new();
    for (g, r) in graphs.iter().zip(results) {
        match r {
            Ok(errs) => failures.extend(errs.into_iter().map(|e| format!("{:?}: {e}", g.edge_list()))),
            Err(e) => return Check::limited(expected, e),
        }
    }
    let edge_cases = graphs.iter().filter(|g| !blocks(g).cut_edges.is_empty()).count();
    Check::new(
        expected,
        format!(
            "{COUNT} graphs ({edge_cases} with cut edges), {} mismatches",
            failures.len()
        ),
        failures,
    )
}

fn degenerate(opts: &Options) -> Check {
    const COUNT: usize = 100;
    let failures: Vec<String> = (0..COUNT)
        .into_par_iter()
        .filter_map(|i| {
            let mut spec = GenSpec::new(10 + i % 90, 2 + i % 7, 3, opts.seed.wrapping_add(999 + i as u64));
            spec.two_connected = i % 4 == 0;
            let Some(g) = generate(spec) else {
                return Some(format!("no graph for seed {i}"));
            };
            let want = g.max_degree() + 4;
            match color_degenerate(&g, 2) {
                Ok(c) if verify(&g, &c.coloring).is_ok_and(|r| r.satisfies(want, 2)) => None,
                Ok(c) => Some(format!("n={} Δ={}: {} colors", g.n(), g.max_degree(), c.coloring.k())),
                Err(e) => Some(format!("n={}: {e}", g.n())),
            }
        })
        .collect();
    Check::new(
        format!("{COUNT}/{COUNT} within Δ+4, spread ≤2"),
        format!("{}/{COUNT}", COUNT - failures.len()),
        failures,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_at_cut_vertex() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(split_at(&g, 2), (vec![0, 1, 2], vec![2, 3, 4]));
    }

    #[test]
    fn cheap_rows_pass() {
        let opts = Options::default();
        for id in [1, 4] {
            let r = run(id, &opts);
            assert!(r.passed, "{}", render(&[r]));
        }
    }
}
