//! `vic`: thin command-line adapter over the `vic` library.

mod manifest;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use manifest::{sha256_hex, Manifest};
use vic::certificates::{classify, detect_forbidden};
use vic::construct::{color, Strategy};
use vic::exact::{chi_vi, ExactError, SearchConfig};
use vic::generators::{gen_outerplanar, GenError, GenSpec};
use vic::outerplanar::is_outerplanar;
use vic::power::{fractional_power, incidence_graph, three_thirds_power};
use vic::reproduce::{self, Options, CRITERIA};
use vic::{verify, Graph, ViColoring};

#[derive(Parser)]
#[command(name = "vic", version, about = "Vertex-incidence simultaneous colorings")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for batch work (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write the run manifest here instead of to stderr.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Outerplanar,
    Girth,
    Degenerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerKind {
    /// `(G^{1/3})^3`, whose vertices are the vertices and incidences of `G`.
    ThreeThirds,
    /// Incidences adjacent when they conflict.
    Incidence,
    /// `(G^{1/parts})^m`.
    Fractional,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Outer cycle, chords and faces of every block.
    Embed { graph: PathBuf },
    /// Constructive coloring with a guaranteed color count.
    Color {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        spread: Option<u8>,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Print every reduction step and how it was resolved.
        #[arg(long)]
        explain: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact χ_vi by branch and bound.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        spread: Option<usize>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long, env = "VIC_NODE_LIMIT")]
        node_limit: Option<u64>,
        /// Write the optimal coloring here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check one or more colorings of a graph.
    Verify {
        graph: PathBuf,
        #[arg(required = true)]
        colorings: Vec<PathBuf>,
        /// Also require at most this many colors.
        #[arg(long)]
        k: Option<usize>,
        /// Also require at most this spread.
        #[arg(long)]
        spread: Option<usize>,
    },
    /// Bracket χ_vi and report the vi-class when the bracket closes.
    Classify {
        graph: PathBuf,
        #[arg(long, env = "VIC_NODE_LIMIT")]
        budget: Option<u64>,
    },
    /// Random outerplanar graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 3)]
        girth: usize,
        #[arg(long)]
        two_connected: bool,
        /// Require the maximum degree to equal `--delta`.
        #[arg(long)]
        exact_delta: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Power and incidence graphs.
    Power {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "three-thirds")]
        kind: PowerKind,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        parts: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Forbidden subcubic configurations present in the graph.
    Detect { graph: PathBuf },
    /// Run the acceptance suite and print a table.
    Reproduce {
        /// Only these criteria (1-based).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "VIC_NODE_LIMIT")]
        node_limit: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Code {
    Ok = 0,
    Mismatch = 1,
    Usage = 2,
    Limit = 3,
}

/// What a command produced: human text, its JSON form, and a summary for
/// the manifest.
struct Outcome {
    code: Code,
    text: String,
    json: Value,
    summary: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome {
            code: Code::Ok,
            text,
            summary: json.clone(),
            json,
        }
    }

    fn fail(code: Code, msg: impl Into<String>) -> Outcome {
        let msg = msg.into();
        Outcome {
            code,
            json: json!({ "error": msg }),
            summary: json!({ "error": msg }),
            text: format!("error: {msg}"),
        }
    }
}

type Run<T> = Result<T, Outcome>;

/// Inputs read during the run, for the manifest.
#[derive(Default)]
struct Inputs {
    hashes: Vec<(String, String)>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Run<String> {
        let mut text = String::new();
        let res = if path.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|e| Outcome::fail(Code::Usage, format!("{}: {e}", path.display())))?;
        self.hashes.push((path.display().to_string(), sha256_hex(text.as_bytes())));
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Run<Graph> {
        let text = self.read(path)?;
        Graph::parse_any(&text).map_err(|e| Outcome::fail(Code::Usage, format!("{}: {e}", path.display())))
    }
}

fn write_out(path: &Path, text: &str) -> Run<()> {
    std::fs::write(path, text).map_err(|e| Outcome::fail(Code::Usage, format!("{}: {e}", path.display())))
}

fn exact_failure(e: ExactError) -> Outcome {
    match e {
        ExactError::NodeLimit { .. } => Outcome::fail(Code::Limit, e.to_string()),
        ExactError::ExceedsMax(_) => Outcome::fail(Code::Mismatch, e.to_string()),
        ExactError::TooManyColors => Outcome::fail(Code::Usage, e.to_string()),
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn embed(inputs: &mut Inputs, path: &Path) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let layout = is_outerplanar(&g).map_err(|e| Outcome::fail(Code::Mismatch, e.to_string()))?;
    let mut text = String::new();
    for (i, b) in layout.blocks.iter().enumerate() {
        text.push_str(&format!(
            "block {i}: outer {:?} chords {:?} faces {:?}\n",
            b.outer_order, b.chords, b.faces
        ));
    }
    text.push_str(&format!("cut vertices {:?}", layout.cut_vertices));
    Ok(Outcome::ok(text, serde_json::to_value(&layout).unwrap()))
}

fn color_cmd(
    inputs: &mut Inputs,
    path: &Path,
    spread: Option<u8>,
    strategy: StrategyArg,
    explain: bool,
    output: Option<&Path>,
) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let strategy = match strategy {
        StrategyArg::Auto => Strategy::Auto,
        StrategyArg::Outerplanar => Strategy::Outerplanar,
        StrategyArg::Girth => Strategy::Girth,
        StrategyArg::Degenerate => Strategy::Degenerate,
    };
    let c = color(&g, strategy, spread.map(usize::from)).map_err(|e| Outcome::fail(Code::Mismatch, e.to_string()))?;
    let coloring = c.coloring.to_json_string(&g);
    if let Some(p) = output {
        write_out(p, &coloring)?;
    }
    let mut text = format!(
        "{}: {} colors (bound {}), spread ≤ {}",
        c.algorithm,
        c.colors_used(),
        c.bound,
        c.spread_cap
    );
    if explain {
        for s in &c.trace {
            text.push_str(&format!(
                "\n  n={} {} {:?} palette {} {:?}",
                s.order, s.case, s.vertices, s.palette, s.resolution
            ));
        }
    }
    if output.is_none() {
        text = format!("{coloring}\n{text}");
    }
    let summary = json!({
        "algorithm": c.algorithm,
        "bound": c.bound,
        "colors_used": c.colors_used(),
        "spread_cap": c.spread_cap,
    });
    let mut full = summary.clone();
    full["coloring"] = serde_json::to_value(c.coloring.to_json(&g)).unwrap();
    if explain {
        full["trace"] = serde_json::to_value(&c.trace).unwrap();
    }
    Ok(Outcome {
        code: Code::Ok,
        text,
        json: full,
        summary,
    })
}

fn exact_cmd(
    inputs: &mut Inputs,
    path: &Path,
    spread: Option<usize>,
    max_k: Option<usize>,
    node_limit: Option<u64>,
    output: Option<&Path>,
) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let mut cfg = SearchConfig {
        spread_cap: spread,
        node_limit,
        ..SearchConfig::default()
    };
    if let Some(k) = max_k {
        cfg.max_colors = k;
    }
    let r = chi_vi(&g, &cfg).map_err(exact_failure)?;
    if let Some(p) = output {
        write_out(p, &r.witness.to_json_string(&g))?;
    }
    let summary = json!({ "k": r.k, "spread": spread, "nodes": r.nodes });
    let mut full = summary.clone();
    full["witness"] = serde_json::to_value(r.witness.to_json(&g)).unwrap();
    Ok(Outcome {
        code: Code::Ok,
        text: format!("chi_vi = {} ({} search nodes)", r.k, r.nodes),
        json: full,
        summary,
    })
}

fn verify_cmd(
    inputs: &mut Inputs,
    path: &Path,
    colorings: &[PathBuf],
    k: Option<usize>,
    spread: Option<usize>,
    jobs: usize,
) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let texts: Vec<String> = colorings.iter().map(|p| inputs.read(p)).collect::<Run<_>>()?;
    let reports: Vec<Value> = pool(jobs).install(|| {
        texts
            .par_iter()
            .zip(colorings.par_iter())
            .map(|(text, p)| {
                let name = p.display().to_string();
                let c = match ViColoring::from_json_str(&g, text) {
                    Ok(c) => c,
                    Err(e) => return json!({ "file": name, "ok": false, "error": e.to_string() }),
                };
                match verify(&g, &c) {
                    Ok(r) => {
                        let ok = r.satisfies(k.unwrap_or(usize::MAX), spread.unwrap_or(usize::MAX));
                        json!({
                            "file": name,
                            "ok": ok,
                            "valid": r.valid,
                            "k": r.k,
                            "max_spread": r.max_spread(),
                            "violations": r.violations,
                        })
                    }
                    Err(e) => json!({ "file": name, "ok": false, "error": e.to_string() }),
                }
            })
            .collect()
    });
    let all_ok = reports.iter().all(|r| r["ok"] == true);
    let text = reports
        .iter()
        .map(|r| match r.get("error") {
            Some(e) => format!("{}: FAIL {}", r["file"].as_str().unwrap(), e.as_str().unwrap()),
            None => format!(
                "{}: {} valid={} colors={} max spread={} violations={}",
                r["file"].as_str().unwrap(),
                if r["ok"] == true { "OK" } else { "FAIL" },
                r["valid"],
                r["k"],
                r["max_spread"],
                r["violations"].as_array().map_or(0, Vec::len)
            ),
        })
        .collect::<Vec<_>>()
        .join("\n");
    let summary = json!(reports
        .iter()
        .map(|r| json!({ "file": r["file"], "ok": r["ok"], "k": r.get("k") }))
        .collect::<Vec<_>>());
    Ok(Outcome {
        code: if all_ok { Code::Ok } else { Code::Mismatch },
        text,
        json: json!({ "ok": all_ok, "reports": reports }),
        summary,
    })
}

fn classify_cmd(inputs: &mut Inputs, path: &Path, budget: Option<u64>) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let c = classify(&g, budget).map_err(exact_failure)?;
    let kinds: Vec<String> = c
        .evidence
        .iter()
        .map(|e| serde_json::to_value(e).unwrap()["kind"].as_str().unwrap().to_string())
        .collect();
    let text = format!(
        "chi_vi in [{}, {}]{}; evidence: {}",
        c.lo,
        c.hi,
        c.class.map_or(String::new(), |s| format!(", vi-class {s}")),
        kinds.join(", ")
    );
    let mut out = Outcome::ok(text, serde_json::to_value(&c).unwrap());
    out.summary = json!({ "lo": c.lo, "hi": c.hi, "class": c.class });
    if !c.is_tight() {
        out.code = Code::Limit;
    }
    Ok(out)
}

fn render_graph(g: &Graph, format: Format, name: &str) -> String {
    match format {
        Format::Json => g.to_json(),
        Format::Edges => g.to_edge_list_text(),
        Format::Dot => g.to_dot(name),
    }
}

#[allow(clippy::too_many_arguments)]
fn gen_cmd(
    n: usize,
    delta: usize,
    girth: usize,
    two_connected: bool,
    exact_delta: bool,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Run<Outcome> {
    let spec = GenSpec {
        n,
        delta_max: delta,
        girth_min: girth,
        two_connected,
        exact_delta,
        seed,
    };
    let g = gen_outerplanar(&spec).map_err(|e| match e {
        GenError::Infeasible(_) | GenError::TooLarge(_) => Outcome::fail(Code::Usage, e.to_string()),
    })?;
    let text = render_graph(&g, format, "g");
    if let Some(p) = output {
        write_out(p, &text)?;
    }
    let summary = json!({ "n": g.n(), "m": g.m(), "max_degree": g.max_degree(), "girth": vic::girth(&g) });
    let mut full = summary.clone();
    full["spec"] = serde_json::to_value(spec).unwrap();
    full["graph"] = serde_json::from_str(&g.to_json()).unwrap();
    Ok(Outcome {
        code: Code::Ok,
        text: if output.is_some() {
            format!("n={} m={} Δ={}", g.n(), g.m(), g.max_degree())
        } else {
            text
        },
        json: full,
        summary,
    })
}

fn power_cmd(
    inputs: &mut Inputs,
    path: &Path,
    kind: PowerKind,
    m: usize,
    parts: usize,
    format: Format,
    output: Option<&Path>,
) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    if parts == 0 {
        return Err(Outcome::fail(Code::Usage, "--parts must be positive"));
    }
    let (h, name) = match kind {
        PowerKind::ThreeThirds => (three_thirds_power(&g).graph, "three_thirds"),
        PowerKind::Incidence => (incidence_graph(&g), "incidence"),
        PowerKind::Fractional => (fractional_power(&g, m, parts), "power"),
    };
    let text = render_graph(&h, format, name);
    if let Some(p) = output {
        write_out(p, &text)?;
    }
    let summary = json!({ "n": h.n(), "m": h.m() });
    let mut full = summary.clone();
    full["graph"] = serde_json::from_str(&h.to_json()).unwrap();
    Ok(Outcome {
        code: Code::Ok,
        text: if output.is_some() {
            format!("n={} m={}", h.n(), h.m())
        } else {
            text
        },
        json: full,
        summary,
    })
}

fn detect_cmd(inputs: &mut Inputs, path: &Path) -> Run<Outcome> {
    let g = inputs.graph(path)?;
    let found = detect_forbidden(&g);
    let mut text = if g.max_degree() == 3 {
        format!("{} forbidden configurations", found.len())
    } else {
        format!("maximum degree {} is not 3: nothing to detect", g.max_degree())
    };
    for e in &found {
        text.push_str(&format!("\n  {:?} {:?}", e.pattern, e.mapping));
    }
    let mut out = Outcome::ok(text, json!({ "max_degree": g.max_degree(), "embeddings": found }));
    out.summary = json!({ "count": found.len() });
    Ok(out)
}

fn reproduce_cmd(only: &[usize], seed: u64, node_limit: Option<u64>, jobs: usize) -> Run<Outcome> {
    if let Some(bad) = only.iter().find(|&&i| !(1..=CRITERIA).contains(&i)) {
        return Err(Outcome::fail(Code::Usage, format!("criterion {bad} is not in 1..={CRITERIA}")));
    }
    let ids: Vec<usize> = if only.is_empty() { (1..=CRITERIA).collect() } else { only.to_vec() };
    let opts = Options { node_limit, seed };
    let p = pool(jobs);
    let rows: Vec<reproduce::Row> = ids.iter().map(|&id| p.install(|| reproduce::run(id, &opts))).collect();
    let failed = rows.iter().filter(|r| !r.passed && !r.limited).count();
    let limited = rows.iter().filter(|r| r.limited).count();
    let code = if failed > 0 {
        Code::Mismatch
    } else if limited > 0 {
        Code::Limit
    } else {
        Code::Ok
    };
    let passed = rows.len() - failed - limited;
    let text = format!("{}{passed}/{} criteria passed", reproduce::render(&rows), rows.len());
    let summary = json!(rows
        .iter()
        .map(|r| json!({ "id": r.id, "passed": r.passed, "observed": r.observed }))
        .collect::<Vec<_>>());
    Ok(Outcome {
        code,
        text,
        json: json!({ "rows": rows, "passed": passed, "total": rows.len() }),
        summary,
    })
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Run<Outcome> {
    match &cli.cmd {
        Cmd::Embed { graph } => embed(inputs, graph),
        Cmd::Color {
            graph,
            spread,
            strategy,
            explain,
            output,
        } => color_cmd(inputs, graph, *spread, *strategy, *explain, output.as_deref()),
        Cmd::Exact {
            graph,
            spread,
            max_k,
            node_limit,
            output,
        } => exact_cmd(inputs, graph, *spread, *max_k, *node_limit, output.as_deref()),
        Cmd::Verify {
            graph,
            colorings,
            k,
            spread,
        } => verify_cmd(inputs, graph, colorings, *k, *spread, cli.jobs),
        Cmd::Classify { graph, budget } => classify_cmd(inputs, graph, *budget),
        Cmd::Gen {
            n,
            delta,
            girth,
            two_connected,
            exact_delta,
            seed,
            format,
            output,
        } => gen_cmd(*n, *delta, *girth, *two_connected, *exact_delta, *seed, *format, output.as_deref()),
        Cmd::Power {
            graph,
            kind,
            m,
            parts,
            format,
            output,
        } => power_cmd(inputs, graph, *kind, *m, *parts, *format, output.as_deref()),
        Cmd::Detect { graph } => detect_cmd(inputs, graph),
        Cmd::Reproduce { only, seed, node_limit } => reproduce_cmd(only, *seed, *node_limit, cli.jobs),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Embed { .. } => "embed",
        Cmd::Color { .. } => "color",
        Cmd::Exact { .. } => "exact",
        Cmd::Verify { .. } => "verify",
        Cmd::Classify { .. } => "classify",
        Cmd::Gen { .. } => "gen",
        Cmd::Power { .. } => "power",
        Cmd::Detect { .. } => "detect",
        Cmd::Reproduce { .. } => "reproduce",
    }
}

fn seed_of(cmd: &Cmd) -> Option<u64> {
    match cmd {
        Cmd::Gen { seed, .. } | Cmd::Reproduce { seed, .. } => Some(*seed),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Code::Usage as u8 } else { 0 });
        }
    };
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let out = dispatch(&cli, &mut inputs).unwrap_or_else(|e| e);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
    } else if out.code == Code::Ok || out.code == Code::Mismatch && !out.text.starts_with("error:") {
        println!("{}", out.text);
    } else {
        eprintln!("{}", out.text);
    }
    let manifest = Manifest {
        command: command_name(&cli.cmd).to_string(),
        args: std::env::args().skip(1).collect(),
        input_hashes: inputs.hashes,
        seed: seed_of(&cli.cmd),
        versions: manifest::versions(),
        wall_seconds: start.elapsed().as_secs_f64(),
        exit_code: out.code as u8,
        summary: out.summary,
    };
    let line = serde_json::to_string(&manifest).unwrap();
    match &cli.manifest {
        Some(p) => {
            if let Err(e) = std::fs::write(p, line + "\n") {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(Code::Usage as u8);
            }
        }
        None => eprintln!("manifest {line}"),
    }
    ExitCode::from(out.code as u8)
}
