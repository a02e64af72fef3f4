//! WebAssembly bindings for the static demo page in `www/`. Every function
//! returns a JSON string; errors come back as plain messages.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use chrombound::canon::canonical_key;
use chrombound::engine::{chromatic_number_from, chromatic_polynomial, MemoCache};
use chrombound::families::{extremal_form, FamilySpec};
use chrombound::graph::Graph;
use chrombound::verify::{default_points, emit_report, ReportFormat, Verifier};

/// Largest order accepted by `analyze`; keeps the page responsive.
pub const ANALYZE_MAX_N: usize = 24;
/// Largest order accepted by `bound_scan`.
pub const SCAN_MAX_N: usize = 8;
/// Largest evaluation point accepted by `analyze`.
pub const ANALYZE_MAX_X: u32 = 64;

#[derive(Serialize)]
struct Point {
    x: u32,
    pi: String,
    bound: String,
}

#[derive(Serialize)]
struct Analysis {
    input: String,
    graph6: String,
    canonical: String,
    n: usize,
    m: usize,
    connected: bool,
    chromatic_number: usize,
    clique_number: usize,
    independence_number: usize,
    polynomial: String,
    coefficients: Vec<String>,
    factored: Option<String>,
    /// The bound `(x)_k (x-1)^(n-k)` with `k` the chromatic number.
    bound: String,
    /// Connected, independence number at most two, chromatic number >= 4.
    bound_hypotheses: bool,
    equals_bound: bool,
    points: Vec<Point>,
}

fn parse_graph(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    if input.contains(':') {
        let spec: FamilySpec = input.parse().map_err(|e| format!("{e}"))?;
        let mut instances = spec.instances().map_err(|e| format!("{e}"))?;
        if instances.is_empty() {
            return Err(format!("{input} has no members"));
        }
        Ok(instances.swap_remove(0).graph)
    } else {
        Graph::from_graph6(input).map_err(|e| format!("{e}"))
    }
}

/// Chromatic polynomial, basic invariants and a table of `pi(G, x)` against
/// the bound for `x = 0..=x_max`. `input` is graph6 or a family such as
/// `f2:5`.
#[wasm_bindgen]
pub fn analyze(input: &str, x_max: u32) -> Result<String, String> {
    let g = parse_graph(input)?;
    if g.order() > ANALYZE_MAX_N {
        return Err(format!("the demo accepts at most {ANALYZE_MAX_N} vertices"));
    }
    if x_max > ANALYZE_MAX_X {
        return Err(format!("x_max is limited to {ANALYZE_MAX_X}"));
    }
    let pi = chromatic_polynomial(&g, &MemoCache::new()).map_err(|e| format!("{e}"))?;
    let k = chromatic_number_from(&pi);
    let bound = extremal_form(k, g.order() - k);
    let alpha = g.independence_number();
    let points = (0..=x_max)
        .map(|x| Point { x, pi: pi.eval_at(x as i64).to_string(), bound: bound.eval_at(x as i64).to_string() })
        .collect();
    let a = Analysis {
        input: input.trim().to_owned(),
        graph6: g.to_graph6(),
        canonical: canonical_key(&g).as_str().to_owned(),
        n: g.order(),
        m: g.edge_count(),
        connected: g.is_connected(),
        chromatic_number: k,
        clique_number: g.clique_number(),
        independence_number: alpha,
        polynomial: pi.to_string(),
        coefficients: pi.coeffs().iter().map(ToString::to_string).collect(),
        factored: pi.factored(),
        bound: bound.to_string(),
        bound_hypotheses: g.is_connected() && alpha <= 2 && k >= 4,
        equals_bound: pi == bound,
        points,
    };
    serde_json::to_string(&a).map_err(|e| e.to_string())
}

/// Checks the bound over every connected `k`-chromatic graph with
/// independence number at most two on `k..=n` vertices and returns the
/// verification report.
#[wasm_bindgen]
pub fn bound_scan(n: usize, k: usize) -> Result<String, String> {
    if n > SCAN_MAX_N {
        return Err(format!("the demo scans at most {SCAN_MAX_N} vertices"));
    }
    let report = Verifier::new().verify_theorem_main(n, k, &default_points(k)).map_err(|e| format!("{e}"))?;
    let bytes = emit_report(&report, ReportFormat::Json).map_err(|e| format!("{e}"))?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct FamilyEntry {
    spec: &'static str,
    description: &'static str,
}

/// Example family specifiers accepted by `analyze`.
#[wasm_bindgen]
pub fn family_list() -> String {
    let entries = [
        FamilyEntry { spec: "complete:5", description: "complete graph K_5" },
        FamilyEntry { spec: "cycle:7", description: "cycle C_7" },
        FamilyEntry { spec: "path:6", description: "path on 6 vertices" },
        FamilyEntry { spec: "cycle1:6", description: "C_5 with one pendant edge" },
        FamilyEntry { spec: "f1:5", description: "K_5 with a pendant edge" },
        FamilyEntry { spec: "f2:5", description: "K_5 with a pendant path of two edges" },
        FamilyEntry { spec: "cstar:7,4", description: "K_4 with trees attached (first member)" },
        FamilyEntry { spec: "univ:7,4", description: "K_1 joined to K_3 plus isolated vertices" },
        FamilyEntry { spec: "lemma5:5", description: "two cliques sharing a stable 2-cut (first member)" },
    ];
    serde_json::to_string(&entries).expect("static data serializes")
}
