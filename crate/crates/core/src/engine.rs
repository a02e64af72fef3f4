//! Exact chromatic polynomials.
//!
//! [`chromatic_polynomial`] runs a reduction pipeline over canonical forms
//! with a shared write-once memo cache. [`chromatic_polynomial_reference`]
//! is plain deletion-contraction and [`count_colorings_bruteforce`]
//! enumerates colorings directly; both exist to cross-check the pipeline.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use dashmap::mapref::entry::Entry;
use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_key, CanonicalKey};
use crate::graph::{Bits, Graph};
use crate::poly::{IntPoly, PolyError};

/// Largest `x^n` the brute-force counter will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1 << 30;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("memo cache integrity breach: key {0} already maps to a different polynomial")]
    CacheIntegrity(String),
    #[error("clique cut-set decomposition is not exact: {0}")]
    Division(#[from] PolyError),
    #[error("brute-force instance too large: {x}^{n} colorings exceeds 2^30")]
    TooLarge { n: usize, x: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
    pub peak_depth: usize,
}

/// Canonical-key to polynomial map with write-once semantics. Safe to share
/// between threads.
#[derive(Default)]
pub struct MemoCache {
    map: DashMap<CanonicalKey, IntPoly>,
    hits: AtomicU64,
    misses: AtomicU64,
    peak_depth: AtomicUsize,
}

impl MemoCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<IntPoly> {
        let found = self.map.get(key).map(|p| p.clone());
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Inserting an existing key with the same value is a no-op; a different
    /// value is an integrity error.
    pub fn insert(&self, key: CanonicalKey, poly: IntPoly) -> Result<(), EngineError> {
        match self.map.entry(key) {
            Entry::Occupied(e) => {
                if *e.get() != poly {
                    return Err(EngineError::CacheIntegrity(e.key().to_string()));
                }
            }
            Entry::Vacant(e) => {
                e.insert(poly);
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.map.len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            peak_depth: self.peak_depth.load(Ordering::Relaxed),
        }
    }

    fn note_depth(&self, depth: usize) {
        self.peak_depth.fetch_max(depth, Ordering::Relaxed);
    }
}

/// Number of proper `x`-colorings by exhaustive assignment in vertex order,
/// pruning at the first conflict.
pub fn count_colorings_bruteforce(g: &Graph, x: u64) -> Result<u64, EngineError> {
    let n = g.order();
    if x >= 2 && (x as u128).checked_pow(n as u32).is_none_or(|c| c > BRUTE_FORCE_LIMIT) {
        return Err(EngineError::TooLarge { n, x });
    }
    fn rec(g: &Graph, v: usize, x: u64, colors: &mut [u64]) -> u64 {
        if v == g.order() {
            return 1;
        }
        let earlier = g.neighbors(v) & ((1u64 << v) - 1);
        let mut total = 0;
        for c in 0..x {
            if Bits(earlier).all(|u| colors[u] != c) {
                colors[v] = c;
                total += rec(g, v + 1, x, colors);
            }
        }
        total
    }
    let mut colors = vec![0; n];
    Ok(rec(g, 0, x, &mut colors))
}

pub fn chromatic_polynomial(g: &Graph, cache: &MemoCache) -> Result<IntPoly, EngineError> {
    pipeline(g, cache, 1)
}

fn x_minus_1() -> IntPoly {
    IntPoly::x_minus(1)
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.edge_count() == g.order() && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// `(x-1)^n + (-1)^n (x-1)`.
pub fn cycle_polynomial(n: usize) -> IntPoly {
    let x1 = x_minus_1();
    let tail = if n % 2 == 0 { x1.clone() } else { -&x1 };
    &x1.pow(n as u32) + &tail
}

/// `x (x-1)^(n-1)`.
pub fn tree_polynomial(n: usize) -> IntPoly {
    &IntPoly::x() * &x_minus_1().pow(n as u32 - 1)
}

fn pipeline(g: &Graph, cache: &MemoCache, depth: usize) -> Result<IntPoly, EngineError> {
    cache.note_depth(depth);
    let key = canonical_key(g);
    if let Some(p) = cache.get(&key) {
        return Ok(p);
    }
    let p = reduce(g, cache, depth)?;
    cache.insert(key, p.clone())?;
    Ok(p)
}

fn reduce(g: &Graph, cache: &MemoCache, depth: usize) -> Result<IntPoly, EngineError> {
    let n = g.order();
    let m = g.edge_count();
    let recurse = |h: &Graph| pipeline(h, cache, depth + 1);

    if m == 0 {
        return Ok(IntPoly::x().pow(n as u32));
    }
    let comps = g.components_within(g.vertex_mask());
    if comps.len() > 1 {
        let mut acc = IntPoly::one();
        for c in comps {
            acc = &acc * &recurse(&g.induced(c).expect("nonempty component"))?;
        }
        return Ok(acc);
    }
    if m == n * (n - 1) / 2 {
        return Ok(IntPoly::falling_factorial(n));
    }
    if m == n - 1 {
        return Ok(tree_polynomial(n));
    }
    if is_cycle(g) {
        return Ok(cycle_polynomial(n));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
        let rest = recurse(&g.remove_vertex(v).expect("n >= 2"))?;
        return Ok(&x_minus_1() * &rest);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == n - 1) {
        let rest = recurse(&g.remove_vertex(v).expect("n >= 2"))?;
        return Ok(&IntPoly::x() * &rest.shift_down());
    }
    for r in 1..=3 {
        if let Some(sep) = g.clique_cutset(r) {
            let all = g.vertex_mask();
            let side = g.components_within(all & !sep)[0];
            let left = g.induced(side | sep).expect("nonempty");
            let right = g.induced(all & !side).expect("nonempty");
            let prod = &recurse(&left)? * &recurse(&right)?;
            return Ok(prod.exact_div(&IntPoly::falling_factorial(r))?);
        }
    }
    if 2 * m >= n * (n - 1) / 2 {
        let (u, v) = best_pair(g, false).expect("noncomplete graph has a non-edge");
        let added = recurse(&g.add_edge(u, v).expect("distinct"))?;
        let merged = recurse(&g.contract_pair(u, v).expect("distinct"))?;
        Ok(&added + &merged)
    } else {
        let (u, v) = best_pair(g, true).expect("graph has an edge");
        let deleted = recurse(&g.delete_edge(u, v).expect("distinct"))?;
        let merged = recurse(&g.contract_pair(u, v).expect("distinct"))?;
        Ok(&deleted - &merged)
    }
}

/// Pair maximizing the common neighborhood among edges (`adjacent`) or
/// non-edges; lowest pair wins ties.
fn best_pair(g: &Graph, adjacent: bool) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), u32)> = None;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) != adjacent {
                continue;
            }
            let common = (g.neighbors(u) & g.neighbors(v)).count_ones();
            if best.is_none_or(|(_, c)| common > c) {
                best = Some(((u, v), common));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Plain deletion-contraction on the lowest edge, with only the edgeless
/// base case and no memoization.
pub fn chromatic_polynomial_reference(g: &Graph) -> IntPoly {
    match g.edges().first() {
        None => IntPoly::x().pow(g.order() as u32),
        Some(&(u, v)) => {
            let deleted = chromatic_polynomial_reference(&g.delete_edge(u, v).expect("valid edge"));
            let merged = chromatic_polynomial_reference(&g.contract_pair(u, v).expect("valid edge"));
            &deleted - &merged
        }
    }
}

/// Smallest nonnegative `x` with `p(x) > 0`.
pub fn chromatic_number_from(p: &IntPoly) -> usize {
    (0..).find(|&x| p.eval_at(x as i64).is_positive()).expect("chromatic polynomials are eventually positive")
}

pub fn chromatic_number_via_pi(g: &Graph, cache: &MemoCache) -> Result<usize, EngineError> {
    Ok(chromatic_number_from(&chromatic_polynomial(g, cache)?))
}

/// Evaluates `pi(g, x)` for a batch of points.
pub fn evaluate_many(p: &IntPoly, xs: &[u64]) -> Vec<BigInt> {
    xs.iter().map(|&x| p.eval_at(x as i64)).collect()
}
