//! Executable checks of the coloring bound and the statements its proof
//! relies on, run exhaustively over isomorph-free graph classes.
//!
//! Every suite returns a [`VerifyReport`]. A report with no violations means
//! the checked statement holds on the enumerated class; equality cases are
//! classified at the polynomial level (coefficient equality), and per-point
//! comparisons are kept separately.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_key, is_isomorphic, CanonicalKey};
use crate::engine::{chromatic_polynomial, CacheStats, EngineError, MemoCache};
use crate::enumerate::{self, EnumError, Guards};
use crate::families::{self, extremal_form, shifted_falling, FamilyError};
use crate::graph::{full_mask, Bits, Graph};
use crate::poly::IntPoly;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("graph {graph6} has chromatic number {actual}, not {expected}")]
    Classification { graph6: String, expected: usize, actual: usize },
    #[error("evaluation point {x} is below k = {k}")]
    PointBelowK { x: u64, k: usize },
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("decomposition precondition failed for {graph6}: {reason}")]
    Trace { graph6: String, reason: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("report serialization failed: {0}")]
    Serialize(String),
    #[error("unknown report format {0:?} (expected json or csv)")]
    UnknownFormat(String),
}

fn ordering_tag(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "lt",
        Ordering::Equal => "eq",
        Ordering::Greater => "gt",
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub x: u64,
    pub pi: String,
    pub bound: String,
    pub ordering: &'static str,
}

/// One graph's comparison of `pi(G, x)` against `(x)_k (x-1)^(n-k)`.
/// Polynomials are coefficient arrays, lowest power first, as decimal
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub pi: Vec<String>,
    pub bound: Vec<String>,
    pub poly_equal: bool,
    /// `bound - pi` is zero or has positive leading coefficient, so the
    /// bound also holds for all large `x`.
    pub tail_ok: bool,
    pub per_x: Vec<PointCheck>,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.tail_ok && self.per_x.iter().all(|p| p.ordering != "gt")
    }

    pub fn strict(&self) -> bool {
        self.tail_ok && !self.poly_equal && self.per_x.iter().all(|p| p.ordering == "lt")
    }
}

/// Compares `pi(g)` with the bound for `k` colors at every `x` in `xs`.
pub fn check_bound(g: &Graph, k: usize, xs: &[u64], cache: &MemoCache) -> Result<BoundCheck, VerifyError> {
    let chi = g.chromatic_number();
    if chi != k {
        return Err(VerifyError::Classification { graph6: g.to_graph6(), expected: k, actual: chi });
    }
    if let Some(&x) = xs.iter().find(|&&x| (x as usize) < k) {
        return Err(VerifyError::PointBelowK { x, k });
    }
    let pi = chromatic_polynomial(g, cache)?;
    Ok(compare_with_bound(g, k, &pi, xs))
}

fn compare_with_bound(g: &Graph, k: usize, pi: &IntPoly, xs: &[u64]) -> BoundCheck {
    let n = g.order();
    let bound = extremal_form(k, n - k);
    let per_x = xs
        .iter()
        .map(|&x| {
            let (a, b) = (pi.eval_at(x as i64), bound.eval_at(x as i64));
            PointCheck { x, ordering: ordering_tag(a.cmp(&b)), pi: a.to_string(), bound: b.to_string() }
        })
        .collect();
    BoundCheck {
        graph6: g.to_graph6(),
        n,
        k,
        alpha: g.independence_number(),
        pi: coeff_strings(pi),
        bound: coeff_strings(&bound),
        poly_equal: *pi == bound,
        tail_ok: (&bound - pi).eventual_sign() != Ordering::Less,
        per_x,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub kind: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<BoundCheck>,
}

impl Violation {
    fn new(graph6: impl Into<String>, kind: &str, detail: impl Into<String>) -> Self {
        Violation { graph6: graph6.into(), kind: kind.into(), detail: detail.into(), check: None }
    }

    fn bound(check: BoundCheck) -> Self {
        let detail = if check.tail_ok { "pi exceeds the bound at some sampled x" } else { "bound - pi is eventually negative" };
        Violation { graph6: check.graph6.clone(), kind: "bound".into(), detail: detail.into(), check: Some(check) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub x: Vec<u64>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub graphs: usize,
    pub checks: usize,
    pub violations: usize,
    pub equality_cases: usize,
}

/// Maximum of `pi(G, x)` over one `(k, n)` slice and the graphs attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    pub k: usize,
    pub n: usize,
    pub x: u64,
    pub max: String,
    pub expected_max: String,
    pub maximizers: Vec<String>,
    pub expected_maximizers: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub params: ReportParams,
    pub totals: Totals,
    pub violations: Vec<Violation>,
    /// Graphs (canonical graph6) whose polynomial equals the bound.
    pub equality_cases: Vec<String>,
    pub expected_equality_cases: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extremal: Vec<ExtremalRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<BoundCheck>>,
    /// Filled only on request; wall-clock time breaks byte-for-byte
    /// reproducibility.
    pub elapsed_ms: Option<u64>,
    pub cache: Option<CacheStats>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} graphs, {} checks, {} violations, {} equality cases -> {}",
            self.params.suite,
            self.totals.graphs,
            self.totals.checks,
            self.totals.violations,
            self.totals.equality_cases,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    fn finish(mut self) -> Self {
        self.equality_cases.sort();
        self.equality_cases.dedup();
        self.expected_equality_cases.sort();
        self.expected_equality_cases.dedup();
        self.totals.violations = self.violations.len();
        self.totals.equality_cases = self.equality_cases.len();
        self
    }

    /// Compares observed polynomial-level equality cases with the expected
    /// set; differences become violations.
    fn classify_equality(&mut self) {
        let seen: BTreeSet<&String> = self.equality_cases.iter().collect();
        let want: BTreeSet<&String> = self.expected_equality_cases.iter().collect();
        let mut extra = Vec::new();
        for g in seen.difference(&want) {
            extra.push(Violation::new(*g, "unexpected-equality", "polynomial equals the bound outside the expected set"));
        }
        for g in want.difference(&seen) {
            extra.push(Violation::new(*g, "missing-equality", "expected extremal graph does not attain the bound"));
        }
        self.violations.extend(extra);
    }

    /// Combines reports of the same suite over different parameter slices.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.params.n_min = self.params.n_min.min(other.params.n_min);
        self.params.n_max = self.params.n_max.max(other.params.n_max);
        self.totals.graphs += other.totals.graphs;
        self.totals.checks += other.totals.checks;
        self.violations.extend(other.violations);
        self.equality_cases.extend(other.equality_cases);
        self.expected_equality_cases.extend(other.expected_equality_cases);
        self.extremal.extend(other.extremal);
        self.notes.extend(other.notes);
        match (&mut self.checks, other.checks) {
            (Some(a), Some(b)) => a.extend(b),
            (a @ None, b) => *a = b,
            _ => {}
        }
        self.finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(VerifyError::UnknownFormat(other.to_owned())),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        })
    }
}

/// Serializes a report. JSON carries the whole report; CSV has one
/// [`BoundCheck`] per row (all checks when the report was built with
/// `full`, otherwise the violating ones).
pub fn emit_report(report: &VerifyReport, format: ReportFormat) -> Result<Vec<u8>, VerifyError> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).map_err(|e| VerifyError::Serialize(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let rows: Vec<&BoundCheck> = match &report.checks {
                Some(all) => all.iter().collect(),
                None => report.violations.iter().filter_map(|v| v.check.as_ref()).collect(),
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            let ser = |e: csv::Error| VerifyError::Serialize(e.to_string());
            w.write_record(["graph6", "n", "k", "alpha", "poly_equal", "holds", "pi", "bound", "per_x"]).map_err(ser)?;
            for c in rows {
                let per_x: Vec<String> =
                    c.per_x.iter().map(|p| format!("{}:{}:{}:{}", p.x, p.pi, p.bound, p.ordering)).collect();
                w.write_record([
                    c.graph6.clone(),
                    c.n.to_string(),
                    c.k.to_string(),
                    c.alpha.to_string(),
                    c.poly_equal.to_string(),
                    c.holds().to_string(),
                    c.pi.join(" "),
                    c.bound.join(" "),
                    per_x.join(";"),
                ])
                .map_err(ser)?;
            }
            w.into_inner().map_err(|e| VerifyError::Serialize(e.to_string()))
        }
    }
}

/// Record of the vertex-by-vertex addition-contraction expansion around a
/// maximum-degree vertex `u`: `pi(G) = pi(G_t) + sum pi(H_i)` where
/// `G_i = G_{i-1} + u v_i` and `H_i = G_i / u v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremTrace {
    /// Canonical graph6 of `G`; vertex numbers refer to this labeling.
    pub graph6: String,
    pub u: usize,
    pub t: usize,
    pub non_neighbors: Vec<usize>,
    pub g_t: String,
    pub h: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub identity_holds: bool,
    /// `H_i` is isomorphic to `K_1 + (G - {u, v_i})` for every `i`.
    pub h_is_join: bool,
    /// `u` is universal in `G_t`.
    pub u_universal: bool,
    /// `pi(G_t) = x pi(G-u, x-1)` and `pi(H_i) = x pi(G-{u,v_i}, x-1)`.
    pub join_identities: bool,
}

impl TheoremTrace {
    pub fn ok(&self) -> bool {
        self.identity_holds && self.h_is_join && self.u_universal && self.join_identities && self.t >= 1
    }
}

/// Default evaluation points `k, k+1, ..., k+4`.
pub fn default_points(k: usize) -> Vec<u64> {
    (k as u64..=k as u64 + 4).collect()
}

/// Shared state for verification runs: the polynomial cache, enumeration
/// guards and whether every individual check is kept in the report.
pub struct Verifier {
    pub cache: MemoCache,
    pub guards: Guards,
    pub full: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { cache: MemoCache::new(), guards: Guards::default(), full: false }
    }
}

fn keys_of<'a>(gs: impl IntoIterator<Item = &'a Graph>) -> Vec<String> {
    gs.into_iter().map(|g| canonical_key(g).as_str().to_owned()).collect()
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pi(&self, g: &Graph) -> Result<IntPoly, VerifyError> {
        Ok(chromatic_polynomial(g, &self.cache)?)
    }

    fn bound_slice(
        &self,
        graphs: &[Graph],
        k: usize,
        xs: &[u64],
        report: &mut VerifyReport,
    ) -> Result<(), VerifyError> {
        let checks: Vec<BoundCheck> =
            graphs.par_iter().map(|g| check_bound(g, k, xs, &self.cache)).collect::<Result<_, _>>()?;
        report.totals.graphs += graphs.len();
        report.totals.checks += checks.len() * xs.len().max(1);
        for c in &checks {
            if c.poly_equal {
                report.equality_cases.push(c.graph6.clone());
            }
            if !c.holds() {
                report.violations.push(Violation::bound(c.clone()));
            }
        }
        if self.full {
            report.checks.get_or_insert_with(Vec::new).extend(checks);
        }
        Ok(())
    }

    fn check_points(k: usize, xs: &[u64]) -> Result<(), VerifyError> {
        match xs.iter().find(|&&x| (x as usize) < k) {
            Some(&x) => Err(VerifyError::PointBelowK { x, k }),
            None => Ok(()),
        }
    }

    /// The bound over connected `k`-chromatic graphs with independence
    /// number at most two, for `n = k..=n_max`. Expected equality cases are
    /// `K_k`, `F_{1,k}` and `F_{2,k}` (where they fit under `n_max`).
    pub fn verify_theorem_main(&self, n_max: usize, k: usize, xs: &[u64]) -> Result<VerifyReport, VerifyError> {
        if k < 4 {
            return Err(VerifyError::Parameter(format!("the main bound is stated for k >= 4, got k = {k}")));
        }
        Self::check_points(k, xs)?;
        self.guards.check_triangle_free(n_max.max(1))?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "main".into(),
                n_min: k,
                n_max,
                k: Some(k),
                x: xs.to_vec(),
                method: "exhaustive isomorph-free enumeration of connected k-chromatic graphs with alpha <= 2 \
                         (complements of triangle-free graphs); exact polynomial comparison plus sampled x"
                    .into(),
                ..Default::default()
            },
            ..Default::default()
        };
        for n in k..=n_max {
            let stream = enumerate::ck_alpha_le2_with(n, k, &self.guards)?;
            self.bound_slice(stream.as_slice(), k, xs, &mut report)?;
            let expected = match n - k {
                0 => Some(families::complete(k)?.graph),
                1 => Some(families::f1(k)?.graph),
                2 => Some(families::f2(k)?.graph),
                _ => None,
            };
            report.expected_equality_cases.extend(keys_of(expected.iter()));
        }
        report.classify_equality();
        Ok(report.finish())
    }

    /// Maxima of `pi(G, x)` over connected 2- and 3-chromatic graphs.
    pub fn verify_k2_k3(&self, n_max: usize, xs: &[u64]) -> Result<VerifyReport, VerifyError> {
        if let Some(&x) = xs.iter().find(|&&x| x < 3) {
            return Err(VerifyError::PointBelowK { x, k: 3 });
        }
        self.guards.check_all_graphs(n_max.max(1))?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "k2k3".into(),
                n_min: 2,
                n_max,
                k: None,
                x: xs.to_vec(),
                method: "all connected graphs of each order, filtered by chromatic number".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        let x1 = IntPoly::x_minus(1);
        for n in 2..=n_max {
            let connected = enumerate::all_graphs_with(n, &self.guards)?.filter(Graph::is_connected);
            for k in [2usize, 3] {
                if n < k {
                    continue;
                }
                let class: Vec<Graph> = connected.iter().filter(|g| g.chromatic_number() == k).cloned().collect();
                let polys: Vec<IntPoly> = class.par_iter().map(|g| self.pi(g)).collect::<Result<_, _>>()?;
                report.totals.graphs += class.len();
                let (expected_form, expected_graphs): (IntPoly, Vec<Graph>) = if k == 2 {
                    (&IntPoly::x() * &x1.pow(n as u32 - 1), enumerate::trees(n)?.into_iter().collect())
                } else if n % 2 == 1 {
                    (&x1.pow(n as u32) - &x1, vec![families::cycle(n)?.graph])
                } else {
                    (&x1.pow(n as u32) - &x1.pow(2), vec![families::cycle_with_pendant(n)?.graph])
                };
                let expected_keys: Vec<String> = keys_of(&expected_graphs);
                for &x in xs {
                    report.totals.checks += class.len();
                    let values: Vec<BigInt> = polys.iter().map(|p| p.eval_at(x as i64)).collect();
                    let Some(max) = values.iter().max().cloned() else { continue };
                    let mut maximizers: Vec<String> = class
                        .iter()
                        .zip(&values)
                        .filter(|(_, v)| **v == max)
                        .map(|(g, _)| g.to_graph6())
                        .collect();
                    maximizers.sort();
                    let expected_max = expected_form.eval_at(x as i64);
                    let mut want = expected_keys.clone();
                    want.sort();
                    if max != expected_max {
                        report.violations.push(Violation::new(
                            maximizers[0].clone(),
                            "extremal-value",
                            format!("k={k} n={n} x={x}: max {max}, expected {expected_max}"),
                        ));
                    }
                    if maximizers != want {
                        report.violations.push(Violation::new(
                            maximizers.join(","),
                            "extremal-graphs",
                            format!("k={k} n={n} x={x}: maximizers differ from {}", want.join(",")),
                        ));
                    }
                    report.equality_cases.extend(maximizers.iter().cloned());
                    report.expected_equality_cases.extend(want.iter().cloned());
                    report.extremal.push(ExtremalRow {
                        k,
                        n,
                        x,
                        max: max.to_string(),
                        expected_max: expected_max.to_string(),
                        maximizers,
                        expected_maximizers: want,
                    });
                }
            }
        }
        Ok(report.finish())
    }

    /// The bound over connected `k`-chromatic graphs of clique number `k`
    /// on `n` vertices; equality exactly on the clique-with-trees family.
    pub fn verify_lemma_clique(&self, n: usize, k: usize, xs: &[u64]) -> Result<VerifyReport, VerifyError> {
        if k < 2 || n < k {
            return Err(VerifyError::Parameter(format!("need n >= k >= 2, got n={n}, k={k}")));
        }
        Self::check_points(k, xs)?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "lemma-clique".into(),
                n_min: n,
                n_max: n,
                k: Some(k),
                x: xs.to_vec(),
                method: "all connected graphs with chromatic number = clique number = k".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        let class: Vec<Graph> = enumerate::all_graphs_with(n, &self.guards)?
            .filter(|g| g.is_connected() && g.clique_number() == k && g.chromatic_number() == k)
            .into_iter()
            .collect();
        self.bound_slice(&class, k, xs, &mut report)?;
        report.expected_equality_cases = keys_of(families::cstar_members(n, k)?.iter().map(|m| &m.graph));
        report.classify_equality();
        Ok(report.finish())
    }

    /// The bound over connected `k`-chromatic graphs with a universal
    /// vertex; equality exactly at `K_1 + (K_{k-1} disjoint (n-k) K_1)`.
    pub fn verify_universal(&self, n: usize, k: usize, xs: &[u64]) -> Result<VerifyReport, VerifyError> {
        if k < 2 || n < k {
            return Err(VerifyError::Parameter(format!("need n >= k >= 2, got n={n}, k={k}")));
        }
        Self::check_points(k, xs)?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "universal".into(),
                n_min: n,
                n_max: n,
                k: Some(k),
                x: xs.to_vec(),
                method: "all connected k-chromatic graphs with maximum degree n-1".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        let class: Vec<Graph> = enumerate::all_graphs_with(n, &self.guards)?
            .filter(|g| g.is_connected() && g.max_degree() == n - 1 && g.chromatic_number() == k)
            .into_iter()
            .collect();
        self.bound_slice(&class, k, xs, &mut report)?;
        report.expected_equality_cases = keys_of([&families::universal_extremal(n, k)?.graph]);
        report.classify_equality();
        Ok(report.finish())
    }

    /// Structure of connected graphs with independence number two around
    /// every stable cut-set of size one or two.
    pub fn verify_prop3(&self, n_max: usize) -> Result<VerifyReport, VerifyError> {
        self.guards.check_triangle_free(n_max.max(1))?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "prop3".into(),
                n_min: 1,
                n_max,
                method: "all connected graphs with alpha = 2; every stable cut-set of size <= 2".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        let mut pairs = 0usize;
        for n in 1..=n_max {
            let class = enumerate::alpha_le2_connected_with(n, &self.guards)?.filter(|g| g.independence_number() == 2);
            let results: Vec<(usize, Vec<Violation>)> = class
                .as_slice()
                .par_iter()
                .map(|g| {
                    let cuts = g.stable_cutsets_le2().expect("stream is connected");
                    let bad = cuts.iter().flat_map(|s| prop3_violations(g, s)).collect();
                    (cuts.len(), bad)
                })
                .collect();
            for (cuts, bad) in results {
                if cuts > 0 {
                    report.totals.graphs += 1;
                }
                pairs += cuts;
                report.violations.extend(bad);
            }
        }
        report.totals.checks = pairs * 4;
        report.notes.push(format!("{pairs} (graph, stable cut-set) pairs examined"));
        Ok(report.finish())
    }

    /// Checks on the stable 2-cut configuration: order `2k-1`, the
    /// contraction polynomial, the gluing along `uv`, the addition bound and
    /// strictness of the final bound.
    pub fn verify_lemma5_structure(&self, k: usize, xs: &[u64]) -> Result<VerifyReport, VerifyError> {
        Self::check_points(k, xs)?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "lemma5".into(),
                n_min: 2 * k - 1,
                n_max: 2 * k - 1,
                k: Some(k),
                x: xs.to_vec(),
                method: "every isomorphism class of the stable 2-cut configuration".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        let x = IntPoly::x();
        let contraction_form = &shifted_falling(k - 1) * &IntPoly::falling_factorial(k - 1);
        let addition_bound = &(&IntPoly::x_minus(1) * &IntPoly::falling_factorial(k - 1)) * &shifted_falling(k - 1);
        let chain = &IntPoly::falling_factorial(k) * &IntPoly::falling_factorial(k - 1);
        let kk = Graph::complete(k).expect("k >= 4");
        for inst in families::lemma5_graphs(k)? {
            let g = &inst.instance.graph;
            let g6 = g.to_graph6();
            let mut fail = |kind: &str, detail: String| report.violations.push(Violation::new(g6.clone(), kind, detail));
            if g.order() != 2 * k - 1 {
                fail("order", format!("{} vertices, expected {}", g.order(), 2 * k - 1));
            }
            if g.independence_number() != 2 || g.chromatic_number() != k || !g.is_connected() {
                fail("hypotheses", "not a connected k-chromatic graph with alpha = 2".into());
            }
            let s = 1u64 << inst.u | 1u64 << inst.v;
            if g.has_edge(inst.u, inst.v) || g.components_within(g.vertex_mask() & !s).len() != 2 {
                fail("cutset", "{u, v} is not a stable cut-set with two sides".into());
            }
            let contraction = g.contract_pair(inst.u, inst.v).expect("u != v");
            if self.pi(&contraction)? != contraction_form {
                fail("contraction", "pi(G/uv) differs from (x-1)_{k-1} (x)_{k-1}".into());
            }
            let plus = g.add_edge(inst.u, inst.v).expect("u != v");
            let h1 = plus.induced(inst.big | s).expect("nonempty");
            let h2 = plus.induced(inst.small | s).expect("nonempty");
            if !is_isomorphic(&h2, &kk) {
                fail("gluing", "small side plus {u, v} is not K_k".into());
            }
            let pi_plus = self.pi(&plus)?;
            if &pi_plus * &(&x * &IntPoly::x_minus(1)) != &self.pi(&h1)? * &self.pi(&h2)? {
                fail("gluing", "pi(G+uv) x(x-1) != pi(H1) pi(H2)".into());
            }
            let pi = self.pi(g)?;
            if pi != &pi_plus + &contraction_form {
                fail("addition-contraction", "pi(G) != pi(G+uv) + pi(G/uv)".into());
            }
            for &xv in xs {
                let xi = xv as i64;
                if pi_plus.eval_at(xi) > addition_bound.eval_at(xi) {
                    fail("addition-bound", format!("pi(G+uv, {xv}) exceeds (x-1)(x)_{{k-1}}(x-1)_{{k-1}}"));
                }
                if pi.eval_at(xi) > chain.eval_at(xi) {
                    fail("chain", format!("pi(G, {xv}) exceeds (x)_k (x)_{{k-1}}"));
                }
            }
            let check = compare_with_bound(g, k, &pi, xs);
            report.totals.graphs += 1;
            report.totals.checks += xs.len();
            if !check.strict() {
                report.violations.push(Violation::bound(check.clone()));
            }
            if check.poly_equal {
                report.equality_cases.push(check.graph6.clone());
            }
            if self.full {
                report.checks.get_or_insert_with(Vec::new).push(check);
            }
        }
        Ok(report.finish())
    }

    /// Expansion around the lowest-index maximum-degree vertex of the
    /// canonical relabeling of `g`.
    pub fn theorem_decomposition(&self, g: &Graph) -> Result<TheoremTrace, VerifyError> {
        let g = canonical_form(g);
        let delta = g.max_degree();
        let u = (0..g.order()).find(|&v| g.degree(v) == delta).expect("nonempty graph");
        self.theorem_decomposition_at(&g, u)
    }

    /// Expansion around a chosen maximum-degree vertex `u` of `g` as given.
    pub fn theorem_decomposition_at(&self, g: &Graph, u: usize) -> Result<TheoremTrace, VerifyError> {
        let n = g.order();
        let g6 = g.to_graph6();
        let pre = |reason: &str| VerifyError::Trace { graph6: g6.clone(), reason: reason.into() };
        if !g.is_connected() {
            return Err(pre("graph is disconnected"));
        }
        let delta = g.max_degree();
        if delta >= n - 1 {
            return Err(pre("graph has a universal vertex"));
        }
        if g.independence_number() != 2 {
            return Err(pre("independence number is not 2"));
        }
        if u >= n || g.degree(u) != delta {
            return Err(pre("u is not a maximum-degree vertex"));
        }
        let non_neighbors: Vec<usize> = Bits(g.vertex_mask() & !g.neighbors(u) & !(1 << u)).collect();
        let t = n - 1 - delta;
        let mut gi = g.clone();
        let mut hs = Vec::with_capacity(t);
        let mut rhs = IntPoly::zero();
        let mut h_is_join = true;
        let mut join_identities = true;
        for &v in &non_neighbors {
            gi = gi.add_edge(u, v).expect("u != v");
            let h = gi.contract_pair(u, v).expect("u != v");
            let rest = g.induced(g.vertex_mask() & !(1 << u) & !(1 << v)).expect("n >= 3");
            h_is_join &= is_isomorphic(&h, &rest.join_k1().expect("within cap"));
            let pi_h = self.pi(&h)?;
            join_identities &= pi_h == &IntPoly::x() * &self.pi(&rest)?.shift_down();
            rhs = &rhs + &pi_h;
            hs.push(h.to_graph6());
        }
        let u_universal = gi.degree(u) == n - 1;
        let pi_gt = self.pi(&gi)?;
        let g_minus_u = g.remove_vertex(u).expect("n >= 2");
        join_identities &= pi_gt == &IntPoly::x() * &self.pi(&g_minus_u)?.shift_down();
        rhs = &rhs + &pi_gt;
        let lhs = self.pi(g)?;
        Ok(TheoremTrace {
            graph6: g6,
            u,
            t,
            non_neighbors,
            g_t: gi.to_graph6(),
            h: hs,
            identity_holds: lhs == rhs,
            lhs: coeff_strings(&lhs),
            rhs: coeff_strings(&rhs),
            h_is_join,
            u_universal,
            join_identities,
        })
    }

    /// The expansion identity for every admissible graph and every
    /// maximum-degree vertex, plus the degree bound from Brooks' theorem.
    pub fn verify_decomposition(&self, n_max: usize) -> Result<VerifyReport, VerifyError> {
        self.guards.check_triangle_free(n_max.max(1))?;
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "decomposition".into(),
                n_min: 3,
                n_max,
                method: "all connected graphs with alpha = 2 and no universal vertex; every max-degree vertex".into(),
                ..Default::default()
            },
            ..Default::default()
        };
        for n in 3..=n_max {
            let class = enumerate::alpha_le2_connected_with(n, &self.guards)?
                .filter(|g| g.independence_number() == 2 && g.max_degree() < g.order() - 1);
            let results: Vec<Result<(usize, Vec<Violation>), VerifyError>> = class
                .as_slice()
                .par_iter()
                .map(|g| {
                    let delta = g.max_degree();
                    let mut bad = Vec::new();
                    let mut traces = 0;
                    for u in (0..g.order()).filter(|&v| g.degree(v) == delta) {
                        let trace = self.theorem_decomposition_at(g, u)?;
                        traces += 1;
                        if !trace.ok() {
                            bad.push(Violation::new(g.to_graph6(), "decomposition", format!("trace failed at u = {u}")));
                        }
                    }
                    let odd_cycle = g.order() % 2 == 1 && g.edge_count() == g.order() && delta == 2;
                    if !odd_cycle && delta < g.chromatic_number() {
                        bad.push(Violation::new(g.to_graph6(), "brooks", "maximum degree below chromatic number"));
                    }
                    Ok((traces, bad))
                })
                .collect();
            for r in results {
                let (traces, bad) = r?;
                report.totals.graphs += 1;
                report.totals.checks += traces;
                report.violations.extend(bad);
            }
        }
        Ok(report.finish())
    }

    /// Seeded random instances of addition-contraction, clique gluing, the
    /// join identity and the chromatic-number min rule, plus the numeric
    /// inequalities used when chaining bounds.
    pub fn verify_identities(&self, samples: usize, seed: u64) -> Result<VerifyReport, VerifyError> {
        let mut report = VerifyReport {
            params: ReportParams {
                suite: "identities".into(),
                n_min: 1,
                n_max: 9,
                method: "seeded random graphs, exact polynomial equality".into(),
                samples: Some(samples),
                seed: Some(seed),
                ..Default::default()
            },
            ..Default::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = IntPoly::x();
        let mut checks = 0usize;

        let mut done = 0;
        while done < samples {
            let g = random_graph(&mut rng, 2, 8);
            let Some((u, v)) = random_non_edge(&mut rng, &g) else { continue };
            let lhs = self.pi(&g)?;
            let plus = g.add_edge(u, v).expect("u != v");
            let merged = g.contract_pair(u, v).expect("u != v");
            if lhs != &self.pi(&plus)? + &self.pi(&merged)? {
                report.violations.push(Violation::new(g.to_graph6(), "addition-contraction", format!("pair ({u},{v})")));
            }
            let chi = g.chromatic_number();
            if chi != plus.chromatic_number().min(merged.chromatic_number()) {
                report.violations.push(Violation::new(g.to_graph6(), "chi-min-rule", format!("pair ({u},{v})")));
            }
            done += 1;
            checks += 2;
        }

        for _ in 0..samples {
            let r = rng.gen_range(0..=4usize);
            let left = random_graph_with_clique(&mut rng, r);
            let right = random_graph_with_clique(&mut rng, r);
            let glued = glue_on_clique(&left, &right, r);
            let lhs = &self.pi(&glued)? * &IntPoly::falling_factorial(r);
            if lhs != &self.pi(&left)? * &self.pi(&right)? {
                report.violations.push(Violation::new(glued.to_graph6(), "clique-cutset", format!("r = {r}")));
            }
            checks += 1;
        }

        for _ in 0..samples {
            let g = random_graph(&mut rng, 1, 8);
            let lhs = self.pi(&g.join_k1().expect("within cap"))?;
            if lhs != &x * &self.pi(&g)?.shift_down() {
                report.violations.push(Violation::new(g.to_graph6(), "join", "pi(G + K_1) != x pi(G, x-1)"));
            }
            checks += 1;
        }

        let (ineq_checks, ineq_bad) = proof_inequalities();
        checks += ineq_checks;
        report.violations.extend(ineq_bad);
        report.totals.graphs = 4 * samples;
        report.totals.checks = checks;
        Ok(report.finish())
    }
}

/// Outcome of comparing the engine with the brute-force counter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub n_max: usize,
    pub x_max: u64,
    pub graphs: usize,
    pub evaluations: usize,
    /// `(graph6, x, engine value, brute-force count)` for each disagreement.
    pub mismatches: Vec<(String, u64, String, u64)>,
}

/// Evaluates the engine polynomial of every isomorphism class with at most
/// `n_max` vertices at `x = 0..=x_max` and compares with exhaustive
/// coloring counts.
pub fn oracle_equivalence(n_max: usize, x_max: u64, guards: &Guards, cache: &MemoCache) -> Result<OracleSummary, VerifyError> {
    guards.check_all_graphs(n_max.max(1))?;
    if (x_max as u128).saturating_pow(n_max as u32) > crate::engine::BRUTE_FORCE_LIMIT {
        return Err(EngineError::TooLarge { n: n_max, x: x_max }.into());
    }
    let mut summary = OracleSummary { n_max, x_max, ..Default::default() };
    for n in 1..=n_max {
        let stream = enumerate::all_graphs_with(n, guards)?;
        let rows: Vec<Vec<(String, u64, String, u64)>> = stream
            .as_slice()
            .par_iter()
            .map(|g| {
                let pi = chromatic_polynomial(g, cache)?;
                let mut bad = Vec::new();
                for x in 0..=x_max {
                    let brute = crate::engine::count_colorings_bruteforce(g, x)?;
                    let value = pi.eval_at(x as i64);
                    if value != BigInt::from(brute) {
                        bad.push((g.to_graph6(), x, value.to_string(), brute));
                    }
                }
                Ok(bad)
            })
            .collect::<Result<_, VerifyError>>()?;
        summary.graphs += stream.len();
        summary.evaluations += stream.len() * (x_max as usize + 1);
        summary.mismatches.extend(rows.into_iter().flatten());
    }
    Ok(summary)
}

fn prop3_violations(g: &Graph, cut: &[usize]) -> Vec<Violation> {
    let s = cut.iter().fold(0u64, |m, &v| m | 1 << v);
    let comps = g.components_within(g.vertex_mask() & !s);
    let g6 = g.to_graph6();
    let tag = format!("S = {cut:?}");
    let mut out = Vec::new();
    if comps.len() != 2 {
        out.push(Violation::new(&g6, "prop3-i", format!("{tag}: {} components", comps.len())));
        return out;
    }
    let sides: Vec<Graph> = comps.iter().map(|&c| g.induced(c).expect("nonempty")).collect();
    if !sides.iter().all(Graph::is_complete) {
        out.push(Violation::new(&g6, "prop3-ii", format!("{tag}: a side is not complete")));
    }
    let k = g.chromatic_number();
    if sides.iter().map(Graph::chromatic_number).max().unwrap_or(0) + 1 < k {
        out.push(Violation::new(&g6, "prop3-iii", format!("{tag}: both sides need fewer than k-1 colors")));
    }
    for &u in cut {
        if !comps.iter().any(|&c| c & !g.neighbors(u) == 0) {
            out.push(Violation::new(&g6, "prop3-iv", format!("{tag}: vertex {u} dominates neither side")));
        }
    }
    out
}

/// Integer inequalities used when chaining bounds, over sampled ranges of
/// `k`, `n`, maximum degree and `x`.
pub fn proof_inequalities() -> (usize, Vec<Violation>) {
    let mut checks = 0;
    let mut bad = Vec::new();
    let pow = |b: i64, e: usize| BigInt::from(b).pow(e as u32);
    let ff = |x: i64, k: usize| -> BigInt { (0..k as i64).map(|i| BigInt::from(x - i)).product() };
    for k in 4..=10usize {
        for x in k as i64..=k as i64 + 32 {
            checks += 1;
            // (x)_k (x)_{k-1} < (x)_k (x-1)^{k-1}
            if ff(x, k) * ff(x, k - 1) >= ff(x, k) * pow(x - 1, k - 1) {
                bad.push(Violation::new("", "inequality", format!("falling-factorial chain fails at k={k} x={x}")));
            }
            for n in k + 1..=k + 6 {
                checks += 1;
                // (x-1)_k (x-2)^{n-1-k} < (x-1)_{k-1} (x-2)^{n-k}
                if ff(x - 1, k) * pow(x - 2, n - 1 - k) >= ff(x - 1, k - 1) * pow(x - 2, n - k) {
                    bad.push(Violation::new("", "inequality", format!("shifted bound fails at k={k} n={n} x={x}")));
                }
                for delta in k..=n - 2 {
                    checks += 1;
                    // (x - 3 + n - delta) (x-2)^{n-k-1} <= (x-1)^{n-k}
                    let lhs = BigInt::from(x - 3 + (n - delta) as i64) * pow(x - 2, n - k - 1);
                    if lhs > pow(x - 1, n - k) {
                        bad.push(Violation::new(
                            "",
                            "inequality",
                            format!("degree chain fails at k={k} n={n} delta={delta} x={x}"),
                        ));
                    }
                }
            }
        }
    }
    (checks, bad)
}

fn random_graph(rng: &mut impl Rng, n_min: usize, n_max: usize) -> Graph {
    let n = rng.gen_range(n_min..=n_max);
    let p = rng.gen_range(0.15..0.9);
    let mut g = Graph::empty(n).expect("n >= 1");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g = g.add_edge(u, v).expect("u != v");
            }
        }
    }
    g
}

fn random_non_edge(rng: &mut impl Rng, g: &Graph) -> Option<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = (0..g.order())
        .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    if pairs.is_empty() {
        None
    } else {
        Some(pairs[rng.gen_range(0..pairs.len())])
    }
}

/// Random graph on `r..=r+5` vertices whose first `r` vertices are a clique.
fn random_graph_with_clique(rng: &mut impl Rng, r: usize) -> Graph {
    let extra = rng.gen_range(if r == 0 { 1 } else { 0 }..=5);
    let mut g = random_graph(rng, r + extra, r + extra);
    for u in 0..r {
        for v in u + 1..r {
            g = g.add_edge(u, v).expect("u != v");
        }
    }
    g
}

/// Union of `left` and `right` identifying their first `r` vertices.
fn glue_on_clique(left: &Graph, right: &Graph, r: usize) -> Graph {
    let n = left.order() + right.order() - r;
    let offset = left.order() - r;
    let map = |v: usize| if v < r { v } else { v + offset };
    let mut rows = vec![0u64; n];
    rows[..left.order()].copy_from_slice(left.rows());
    for v in 0..right.order() {
        for w in Bits(right.neighbors(v)) {
            rows[map(v)] |= 1 << map(w);
        }
    }
    debug_assert!(rows.iter().enumerate().all(|(v, &r)| r & !full_mask(n) == 0 && r >> v & 1 == 0));
    Graph::from_rows(rows).expect("gluing preserves simplicity")
}

/// Canonical keys of a slice of graphs, for set comparisons in tests and
/// callers.
pub fn key_set<'a>(gs: impl IntoIterator<Item = &'a Graph>) -> BTreeSet<CanonicalKey> {
    gs.into_iter().map(canonical_key).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Result<families::FamilyInstance, FamilyError>) -> Graph {
        f.unwrap().graph
    }

    #[test]
    fn bound_check_examples() {
        let cache = MemoCache::new();
        let c = check_bound(&Graph::complete(4).unwrap(), 4, &[4, 5], &cache).unwrap();
        assert!(c.poly_equal && c.holds());
        let c = check_bound(&fam(families::f2(4)), 4, &[4, 5, 6], &cache).unwrap();
        assert!(c.poly_equal && c.per_x.iter().all(|p| p.ordering == "eq"));
        // C_7 against the 3-color version of the bound: 126 > 96
        let c = check_bound(&fam(families::cycle(7)), 3, &[3], &cache).unwrap();
        assert_eq!(c.per_x[0].pi, "126");
        assert_eq!(c.per_x[0].bound, "96");
        assert_eq!(c.per_x[0].ordering, "gt");
        assert!(!c.holds());
    }

    #[test]
    fn bound_check_errors() {
        let cache = MemoCache::new();
        assert!(matches!(
            check_bound(&fam(families::cycle(5)), 4, &[4], &cache),
            Err(VerifyError::Classification { expected: 4, actual: 3, .. })
        ));
        assert!(matches!(
            check_bound(&Graph::complete(4).unwrap(), 4, &[3], &cache),
            Err(VerifyError::PointBelowK { x: 3, k: 4 })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let v = Verifier::new();
        let c5 = fam(families::cycle(5));
        let tr = v.theorem_decomposition(&c5).unwrap();
        assert_eq!(tr.t, 2);
        assert!(tr.ok());
        let f24 = fam(families::f2(4));
        let tr = v.theorem_decomposition(&f24).unwrap();
        assert_eq!(tr.t, 1);
        let cf = canonical_key(&f24).graph();
        assert_eq!(cf.degree(tr.u), 4);
        assert!(tr.ok());
        assert!(v.theorem_decomposition(&Graph::complete(4).unwrap()).is_err());
        assert!(v.theorem_decomposition(&fam(families::path(5))).is_err());
    }

    #[test]
    fn prop3_negative_control() {
        // P_5 has a stable 2-cut {1, 3} leaving a non-complete side, but alpha = 3
        let p5 = fam(families::path(5));
        assert_eq!(p5.independence_number(), 3);
        assert!(!prop3_violations(&p5, &[1, 3]).is_empty());
        // F_{1,4}: cut vertex leaves K_3 and K_1
        let f = fam(families::f1(4));
        let cuts = f.stable_cutsets_le2().unwrap();
        assert_eq!(cuts, vec![vec![0]]);
        assert!(prop3_violations(&f, &cuts[0]).is_empty());
    }

    #[test]
    fn oracle_small() {
        let s = oracle_equivalence(5, 3, &Guards::default(), &MemoCache::new()).unwrap();
        assert_eq!(s.graphs, 1 + 2 + 4 + 11 + 34);
        assert!(s.mismatches.is_empty());
        let big = Guards { all_graphs: 4, ..Guards::default() };
        assert!(oracle_equivalence(5, 3, &big, &MemoCache::new()).is_err());
    }

    #[test]
    fn gluing_helper() {
        let g = glue_on_clique(&Graph::complete(3).unwrap(), &Graph::complete(3).unwrap(), 2);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn report_formats() {
        let v = Verifier { full: true, ..Verifier::new() };
        let r = v.verify_theorem_main(6, 4, &[4, 5]).unwrap();
        assert!(r.passed());
        let json = String::from_utf8(emit_report(&r, ReportFormat::Json).unwrap()).unwrap();
        assert!(json.contains("\"violations\": []"));
        assert!(json.contains("\"elapsed_ms\": null"));
        let csv = String::from_utf8(emit_report(&r, ReportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv.lines().count(), r.totals.graphs + 1);
        assert!("xml".parse::<ReportFormat>().is_err());
        let again = Verifier { full: true, ..Verifier::new() }.verify_theorem_main(6, 4, &[4, 5]).unwrap();
        assert_eq!(emit_report(&again, ReportFormat::Json).unwrap(), emit_report(&r, ReportFormat::Json).unwrap());
    }

    #[test]
    fn small_k_examples() {
        let r = Verifier::new().verify_k2_k3(7, &[3]).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let row = |k, n| r.extremal.iter().find(|e| e.k == k && e.n == n).unwrap();
        assert_eq!(row(3, 7).max, "126");
        assert_eq!(row(3, 7).maximizers, vec![canonical_key(&fam(families::cycle(7))).as_str().to_owned()]);
        assert_eq!(row(3, 6).max, "60");
        assert_eq!(row(3, 6).maximizers, vec![canonical_key(&fam(families::cycle_with_pendant(6))).as_str().to_owned()]);
        assert_eq!(row(2, 5).max, "48");
        assert_eq!(row(2, 5).maximizers.len(), 3);
        assert!(Verifier::new().verify_k2_k3(5, &[2]).is_err());
    }

    #[test]
    fn decomposition_over_class() {
        let v = Verifier::new();
        let class = enumerate::ck_alpha_le2(7, 4).unwrap().filter(|g| g.max_degree() < 6 && g.independence_number() == 2);
        assert!(!class.is_empty());
        for g in class.iter() {
            let tr = v.theorem_decomposition(g).unwrap();
            assert!(tr.ok(), "{}", g.to_graph6());
            assert_eq!(tr.t, 6 - g.max_degree());
        }
    }

    #[test]
    fn two_cut_examples() {
        let v = Verifier::new();
        let r = v.verify_lemma5_structure(4, &default_points(4)).unwrap();
        assert!(r.passed() && r.totals.graphs > 0);
        for inst in families::lemma5_graphs(4).unwrap() {
            assert_eq!(inst.instance.graph.order(), 7);
            let merged = inst.instance.graph.contract_pair(inst.u, inst.v).unwrap();
            assert_eq!(v.pi(&merged).unwrap().eval_at(4), BigInt::from(144));
        }
    }

    #[test]
    fn main_rejects_small_k() {
        assert!(matches!(Verifier::new().verify_theorem_main(7, 3, &[3]), Err(VerifyError::Parameter(_))));
    }

    #[test]
    fn identities_small_run() {
        let r = Verifier::new().verify_identities(50, 1).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn clique_and_universal_suites_small() {
        let v = Verifier::new();
        let r = v.verify_lemma_clique(6, 4, &[4]).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.equality_cases.len(), 3);
        let r = v.verify_lemma_clique(5, 5, &[]).unwrap();
        assert_eq!(r.totals.graphs, 1);
        assert_eq!(r.equality_cases, vec![Graph::complete(5).unwrap().to_graph6()]);
        let r = v.verify_universal(5, 5, &[5]).unwrap();
        assert!(r.passed());
        assert_eq!(r.totals.graphs, 1);
    }
}
