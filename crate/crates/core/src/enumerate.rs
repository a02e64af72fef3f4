//! Isomorph-free exhaustive generation by canonical augmentation.
//!
//! Graphs grow one vertex at a time. A child `H = P + w` of a canonical
//! parent `P` is kept only when `H - w` is isomorphic to `H - v*`, where
//! `v*` is the canonically last vertex among the minimum-degree vertices of
//! `H`. That fixes a unique parent class for every output class; duplicates
//! arising from automorphic neighborhoods of the same parent are removed by
//! canonical key. Hereditary classes (triangle-free, acyclic) are pruned at
//! every level.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_key, canonical_labeling, CanonicalKey};
use crate::graph::{Bits, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("{class} enumeration is limited to n <= {limit}, got n = {n}")]
    TooLarge { class: &'static str, n: usize, limit: usize },
    #[error("vertex count must be at least 1")]
    Empty,
}

/// Size guards for the generators. Defaults keep full runs at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub all_graphs: usize,
    pub triangle_free: usize,
    pub forests: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { all_graphs: 9, triangle_free: 10, forests: 14 }
    }
}

impl Guards {
    /// Fails early if `n` exceeds the all-graphs limit.
    pub fn check_all_graphs(&self, n: usize) -> Result<(), EnumError> {
        Self::check(self.all_graphs, "all-graphs", n)
    }

    /// Fails early if `n` exceeds the triangle-free (and independence number
    /// at most two) limit.
    pub fn check_triangle_free(&self, n: usize) -> Result<(), EnumError> {
        Self::check(self.triangle_free, "triangle-free", n)
    }

    fn check(limit: usize, class: &'static str, n: usize) -> Result<(), EnumError> {
        if n == 0 {
            return Err(EnumError::Empty);
        }
        if n > limit {
            return Err(EnumError::TooLarge { class, n, limit });
        }
        Ok(())
    }
}

/// One graph per isomorphism class, each in canonical form, sorted by
/// canonical graph6.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphStream {
    graphs: Vec<Graph>,
}

impl GraphStream {
    /// Canonicalizes, deduplicates and sorts arbitrary graphs.
    pub fn from_graphs(graphs: impl IntoParallelIterator<Item = Graph>) -> Self {
        let mut keyed: Vec<(CanonicalKey, Graph)> = graphs
            .into_par_iter()
            .map(|g| {
                let k = canonical_key(&g);
                let form = k.graph();
                (k, form)
            })
            .collect();
        keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        GraphStream { graphs: keyed.into_iter().map(|(_, g)| g).collect() }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    pub fn as_slice(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.graphs.iter().map(canonical_key).collect()
    }

    /// Keeps the graphs satisfying `keep`; order is preserved.
    pub fn filter(self, keep: impl Fn(&Graph) -> bool + Sync) -> Self {
        let graphs = self.graphs.into_par_iter().filter(|g| keep(g)).collect();
        GraphStream { graphs }
    }

    /// One graph6 string per line.
    pub fn to_graph6_lines(&self) -> String {
        self.graphs.iter().map(|g| g.to_graph6() + "\n").collect()
    }
}

impl IntoIterator for GraphStream {
    type Item = Graph;
    type IntoIter = std::vec::IntoIter<Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.into_iter()
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

/// Which new-vertex neighborhoods a hereditary class admits.
#[derive(Clone, Copy, Debug)]
enum Class {
    All,
    TriangleFree,
    Acyclic,
}

impl Class {
    fn admits(self, parent: &Graph, comps: &[u64], nbrs: u64) -> bool {
        match self {
            Class::All => true,
            Class::TriangleFree => parent.is_independent(nbrs),
            Class::Acyclic => comps.iter().all(|c| (c & nbrs).count_ones() <= 1),
        }
    }
}

fn generate(n: usize, class: Class) -> GraphStream {
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for _ in 1..n {
        let mut next: Vec<(CanonicalKey, Graph)> = level.par_iter().flat_map_iter(|p| children(p, class)).collect();
        next.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        debug_assert!(next.windows(2).all(|w| w[0].0 != w[1].0), "duplicate class across parents");
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    GraphStream { graphs: level }
}

fn children(parent: &Graph, class: Class) -> Vec<(CanonicalKey, Graph)> {
    let n = parent.order();
    let parent_key = canonical_key(parent);
    let comps = parent.components_within(parent.vertex_mask());
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..1u64 << n {
        if !class.admits(parent, &comps, nbrs) {
            continue;
        }
        let child = parent.extend(nbrs).expect("within vertex cap");
        let w = n;
        let delta = child.min_degree();
        if child.degree(w) != delta {
            continue;
        }
        let lab = canonical_labeling(&child);
        let last = lab
            .order
            .iter()
            .rev()
            .copied()
            .find(|&v| child.degree(v) == delta)
            .expect("some vertex has minimum degree");
        let accept = last == w || canonical_key(&child.remove_vertex(last).expect("n >= 2")) == parent_key;
        if !accept {
            continue;
        }
        let key = CanonicalKey::from_form(&lab.form);
        if seen.insert(key.clone()) {
            out.push((key, lab.form));
        }
    }
    out
}

pub fn all_graphs(n: usize) -> Result<GraphStream, EnumError> {
    all_graphs_with(n, &Guards::default())
}

pub fn all_graphs_with(n: usize, guards: &Guards) -> Result<GraphStream, EnumError> {
    guards.check_all_graphs(n)?;
    Ok(generate(n, Class::All))
}

pub fn triangle_free_graphs(n: usize) -> Result<GraphStream, EnumError> {
    triangle_free_graphs_with(n, &Guards::default())
}

pub fn triangle_free_graphs_with(n: usize, guards: &Guards) -> Result<GraphStream, EnumError> {
    guards.check_triangle_free(n)?;
    Ok(generate(n, Class::TriangleFree))
}

/// Connected graphs with independence number at most two, as complements
/// of triangle-free graphs.
pub fn alpha_le2_connected(n: usize) -> Result<GraphStream, EnumError> {
    alpha_le2_connected_with(n, &Guards::default())
}

pub fn alpha_le2_connected_with(n: usize, guards: &Guards) -> Result<GraphStream, EnumError> {
    let tf = triangle_free_graphs_with(n, guards)?;
    let complements: Vec<Graph> = tf.into_iter().map(|g| g.complement()).filter(Graph::is_connected).collect();
    Ok(GraphStream::from_graphs(complements))
}

/// Connected `k`-chromatic graphs on `n` vertices with independence number
/// at most two.
pub fn ck_alpha_le2(n: usize, k: usize) -> Result<GraphStream, EnumError> {
    ck_alpha_le2_with(n, k, &Guards::default())
}

pub fn ck_alpha_le2_with(n: usize, k: usize, guards: &Guards) -> Result<GraphStream, EnumError> {
    Ok(alpha_le2_connected_with(n, guards)?.filter(|g| g.chromatic_number() == k))
}

/// Acyclic graphs, grown with cycle-closing extensions pruned.
pub fn forests(n: usize) -> Result<GraphStream, EnumError> {
    Guards::check(Guards::default().forests, "forest", n)?;
    Ok(generate(n, Class::Acyclic))
}

pub fn trees(n: usize) -> Result<GraphStream, EnumError> {
    Ok(forests(n)?.filter(Graph::is_connected))
}

/// Every isomorphism class that appears among all labeled graphs on `n`
/// vertices, found by canonicalizing each of the `2^(n(n-1)/2)` edge sets.
pub fn all_graphs_bruteforce(n: usize) -> Result<GraphStream, EnumError> {
    Guards::check(7, "brute-force", n)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let keys: HashSet<CanonicalKey> = (0..1u64 << pairs.len())
        .into_par_iter()
        .map(|bits| {
            let edges: Vec<(usize, usize)> = Bits(bits).map(|i| pairs[i]).collect();
            canonical_key(&Graph::from_edges(n, &edges).expect("valid pairs"))
        })
        .collect();
    Ok(GraphStream::from_graphs(keys.into_iter().map(|k| k.graph()).collect::<Vec<_>>()))
}
