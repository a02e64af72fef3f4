//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row, so neighborhood intersections,
//! unions and degree queries are single word operations. The type is an
//! immutable value: every structural operation returns a new graph.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices (one machine word per row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have between 1 and {MAX_VERTICES} vertices, got {0}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid edge: endpoints must differ (got {0}, {0})")]
    Loop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("operation requires a connected graph")]
    Disconnected,
}

/// Bit mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 63 - (row & !mask).leading_zeros() as usize, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for u in Bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Graph6(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Identifies `u` and `v` and simplifies. Works for adjacent and
    /// nonadjacent pairs alike. The merged vertex keeps the smaller index;
    /// vertices above the larger index shift down by one.
    pub fn contract_pair(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if self.n == 1 {
            return Err(GraphError::VertexCount(0));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let merged = (self.adj[keep] | self.adj[drop]) & !(1 << keep) & !(1 << drop);
        let mut rows = self.adj.clone();
        rows[keep] = merged;
        for w in 0..self.n {
            if w != keep {
                if merged >> w & 1 == 1 {
                    rows[w] |= 1 << keep;
                } else {
                    rows[w] &= !(1 << keep);
                }
            }
        }
        let keep_mask = self.vertex_mask() & !(1 << drop);
        Ok(Graph::from_rows_unchecked(compress_rows(&rows, keep_mask)))
    }

    /// Induced subgraph on `mask`, relabelled to `0..popcount` in increasing
    /// vertex order.
    pub fn induced(&self, mask: u64) -> Result<Graph, GraphError> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(GraphError::VertexCount(0));
        }
        Ok(Graph::from_rows_unchecked(compress_rows(&self.adj, mask)))
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced(self.vertex_mask() & !(1 << v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Adds a new vertex `n` adjacent to every existing vertex.
    pub fn join_k1(&self) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::VertexCount(self.n + 1));
        }
        let mut rows: Vec<u64> = self.adj.iter().map(|r| r | 1 << self.n).collect();
        rows.push(self.vertex_mask());
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Adds a new vertex `n` whose neighborhood is `nbrs`.
    pub fn extend(&self, nbrs: u64) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::VertexCount(self.n + 1));
        }
        let nbrs = nbrs & self.vertex_mask();
        let mut rows = self.adj.clone();
        for u in Bits(nbrs) {
            rows[u] |= 1 << self.n;
        }
        rows.push(nbrs);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union, with `other` relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = Bits(self.adj[v]).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph::from_rows_unchecked(rows)
    }

    // ---- connectivity -------------------------------------------------

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut left = within & self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.vertex_mask()).into_iter().map(|c| Bits(c).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    fn is_connected_within(&self, within: u64) -> bool {
        within == 0 || self.reach(within.trailing_zeros() as usize, within) == within
    }

    pub fn cut_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let all = self.vertex_mask();
        Ok((0..self.n).filter(|&v| !self.is_connected_within(all & !(1 << v))).collect())
    }

    /// Every independent vertex set of size one or two whose removal
    /// disconnects the graph, as sorted vertex lists.
    pub fn stable_cutsets_le2(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        let mut out: Vec<Vec<usize>> = self.cut_vertices()?.into_iter().map(|v| vec![v]).collect();
        let all = self.vertex_mask();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) && !self.is_connected_within(all & !(1 << u) & !(1 << v)) {
                    out.push(vec![u, v]);
                }
            }
        }
        Ok(out)
    }

    /// True when some clique of size `r` is a cut-set; returns the first one
    /// found in lexicographic order.
    pub fn clique_cutset(&self, r: usize) -> Option<u64> {
        let all = self.vertex_mask();
        if self.n < r + 2 {
            return None;
        }
        let mut found = None;
        self.for_each_clique_of_size(r, &mut |c| {
            if found.is_none() && !self.is_connected_within(all & !c) {
                found = Some(c);
            }
            found.is_some()
        });
        found
    }

    fn for_each_clique_of_size(&self, r: usize, f: &mut dyn FnMut(u64) -> bool) {
        fn rec(g: &Graph, r: usize, cand: u64, chosen: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
            if r == 0 {
                return f(chosen);
            }
            for v in Bits(cand) {
                let rest = cand & g.adj[v] & !full_mask(v + 1);
                if rec(g, r - 1, rest, chosen | 1 << v, f) {
                    return true;
                }
            }
            false
        }
        rec(self, r, self.vertex_mask(), 0, f);
    }

    // ---- cliques and colorings ---------------------------------------

    pub fn clique_number(&self) -> usize {
        max_clique_in(&self.adj, self.vertex_mask())
    }

    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }

    pub fn is_independent(&self, set: u64) -> bool {
        Bits(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().iter().any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    pub fn chromatic_number(&self) -> usize {
        if self.edge_count() == 0 {
            return 1;
        }
        let mut k = self.clique_number().max(2);
        while !self.is_colorable(k) {
            k += 1;
        }
        k
    }

    /// Backtracking `k`-colorability test. Vertices are picked by maximum
    /// saturation, ties broken by degree into uncolored vertices.
    pub fn is_colorable(&self, k: usize) -> bool {
        if k == 0 {
            return false;
        }
        if k >= self.n {
            return true;
        }
        let mut color = vec![usize::MAX; self.n];
        // class_mask[c] = vertices currently holding color c
        let mut class_mask = vec![0u64; k];
        self.color_rec(&mut color, &mut class_mask, self.vertex_mask(), 0)
    }

    fn color_rec(&self, color: &mut [usize], classes: &mut [u64], uncolored: u64, used: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        let k = classes.len();
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in Bits(uncolored) {
            let sat = classes.iter().filter(|&&m| m & self.adj[v] != 0).count();
            if sat == k {
                return false;
            }
            let key = (sat, (self.adj[v] & uncolored).count_ones() as usize);
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        let v = best;
        // Only one unused color needs to be tried: unused colors are interchangeable.
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if classes[c] & self.adj[v] == 0 {
                color[v] = c;
                classes[c] |= 1 << v;
                if self.color_rec(color, classes, uncolored & !(1 << v), used.max(c + 1)) {
                    return true;
                }
                classes[c] &= !(1 << v);
                color[v] = usize::MAX;
            }
        }
        false
    }

    // ---- graph6 ------------------------------------------------------

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::with_capacity(2 + self.n * self.n / 12);
        push_graph6_size(&mut out, self.n);
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                nbits += 1;
                if nbits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push((acc << (6 - nbits)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let s = text.trim_end_matches(['\n', '\r']);
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Graph6("empty input".into()));
        }
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(GraphError::Graph6(format!("byte {b:#04x} outside the printable graph6 range")));
        }
        let (n, body) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, &bytes[1..])
        } else if bytes.len() >= 4 && bytes[1] != 126 {
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        } else if bytes.len() >= 8 {
            let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[8..])
        } else {
            return Err(GraphError::Graph6("truncated size header".into()));
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::Graph6(format!("unsupported vertex count {n}")));
        }
        let nbits = n * (n - 1) / 2;
        let need = nbits.div_ceil(6);
        if body.len() != need {
            return Err(GraphError::Graph6(format!(
                "expected {need} data bytes for {n} vertices, found {}",
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        let pad = need * 6 - nbits;
        if pad > 0 && (body[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
        Ok(g)
    }
}

fn push_graph6_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
}

/// Keeps the rows and columns selected by `mask`, packing them to the front.
fn compress_rows(rows: &[u64], mask: u64) -> Vec<u64> {
    let kept: Vec<usize> = Bits(mask).collect();
    kept.iter()
        .map(|&v| {
            let row = rows[v] & mask;
            kept.iter().enumerate().fold(0u64, |acc, (i, &u)| acc | ((row >> u) & 1) << i)
        })
        .collect()
}

/// Maximum clique inside `cand`, by branch and bound with greedy coloring
/// bounds.
pub(crate) fn max_clique_in(adj: &[u64], cand: u64) -> usize {
    fn color_order(adj: &[u64], cand: u64) -> Vec<(usize, usize)> {
        // (vertex, color bound) in nondecreasing color order
        let mut out = Vec::new();
        let mut left = cand;
        let mut color = 0;
        while left != 0 {
            color += 1;
            let mut avail = left;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v) & !adj[v];
                left &= !(1 << v);
                out.push((v, color));
            }
        }
        out
    }
    fn expand(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        let order = color_order(adj, cand);
        let mut cand = cand;
        for &(v, bound) in order.iter().rev() {
            if size + bound <= *best {
                return;
            }
            let next = cand & adj[v];
            if next == 0 {
                *best = (*best).max(size + 1);
            } else {
                expand(adj, next, size + 1, best);
            }
            cand &= !(1 << v);
        }
    }
    let mut best = 0;
    if cand != 0 {
        expand(adj, cand, 0, &mut best);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    /// Independent graph6 encoder written straight from the format
    /// description: a bit string of x(i,j), i<j, ordered by column.
    fn graph6_reference(g: &Graph) -> String {
        let n = g.order();
        let mut bits = Vec::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn graph6_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.to_graph6(), "Bw");
        assert_eq!(graph6_reference(&k3), "Bw");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), k3);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.to_graph6(), "A_");
        let k1 = Graph::from_graph6("@").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(k1.to_graph6(), "@");
    }

    #[test]
    fn graph6_large_header() {
        let g = path(64);
        let s = g.to_graph6();
        assert!(s.starts_with("~?@?"));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
        let g = cycle(63);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("Bww").is_err());
        assert!(Graph::from_graph6("B").is_err());
        // n = 65
        assert!(Graph::from_graph6("~?@@").is_err());
        // padding bits set: K_2 has one data bit, rest must be zero
        assert!(Graph::from_graph6("A`").is_err());
        assert!(Graph::from_graph6("B\u{7}").is_err());
    }

    #[test]
    fn edge_edits() {
        let p3 = path(3);
        let c3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(c3, Graph::complete(3).unwrap());
        assert_eq!(c3.add_edge(0, 1).unwrap(), c3);
        assert_eq!(c3.delete_edge(0, 2).unwrap(), p3);
        assert_eq!(p3.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert!(p3.contract_pair(2, 2).is_err());
        assert!(p3.add_edge(0, 3).is_err());
    }

    #[test]
    fn contraction() {
        // antipodal pair of C_4 -> P_3 centred at the merged vertex
        let c4 = cycle(4);
        let h = c4.contract_pair(0, 2).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.degree(0), 2);
        assert!(!h.has_edge(1, 2));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.contract_pair(1, 3).unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn complement_and_components() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        let g = cycle(6).add_edge(0, 3).unwrap();
        assert_eq!(g.complement().complement(), g);
        let u = Graph::complete(3).unwrap().disjoint_union(&path(2)).unwrap();
        let comps = u.components();
        assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 2]);
        assert!(!u.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn cliques_and_independence() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!((k5.clique_number(), k5.independence_number()), (5, 1));
        assert_eq!(cycle(5).independence_number(), 2);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(Graph::empty(7).unwrap().clique_number(), 1);
    }

    #[test]
    fn chromatic_numbers() {
        for k in 1..8 {
            assert_eq!(Graph::complete(k).unwrap().chromatic_number(), k);
        }
        assert_eq!(cycle(7).chromatic_number(), 3);
        assert_eq!(cycle(8).chromatic_number(), 2);
        // Petersen graph
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let pet = Graph::from_edges(10, &e).unwrap();
        assert_eq!(pet.chromatic_number(), 3);
        assert_eq!(pet.independence_number(), 4);
    }

    #[test]
    fn cut_vertices_and_stable_cutsets() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert_eq!(path(3).cut_vertices().unwrap(), vec![1]);
        assert_eq!(path(3).stable_cutsets_le2().unwrap(), vec![vec![1]]);
        assert_eq!(cycle(4).stable_cutsets_le2().unwrap(), vec![vec![0, 2], vec![1, 3]]);
        assert!(Graph::complete(5).unwrap().stable_cutsets_le2().unwrap().is_empty());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.cut_vertices(), Err(GraphError::Disconnected));
        assert_eq!(split.stable_cutsets_le2(), Err(GraphError::Disconnected));
    }

    #[test]
    fn clique_cutsets() {
        // two triangles sharing an edge
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diamond.clique_cutset(1), None);
        assert_eq!(diamond.clique_cutset(2), Some(0b0110));
        assert_eq!(Graph::complete(5).unwrap().clique_cutset(3), None);
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b1]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0b1]).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(0).is_err());
    }
}
