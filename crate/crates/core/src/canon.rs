//! Canonical labeling by partition refinement and a pruned search tree.
//!
//! The search individualizes one vertex of the first non-singleton cell at
//! each level, refines to an equitable partition and, at discrete leaves,
//! keeps the labeling whose relabelled adjacency rows are lexicographically
//! largest. Two prunings keep symmetric graphs cheap:
//!
//! * a leaf whose graph equals a stored leaf graph yields an automorphism and
//!   the search jumps back to the deepest common ancestor of the two leaves;
//! * a child is skipped when it lies in the orbit of an already explored
//!   sibling under the automorphisms found so far that fix the current
//!   prefix pointwise.

use std::fmt;

use crate::graph::{Bits, Graph};

/// Canonical graph6 bytes of a graph's isomorphism class.
///
/// Ordering on keys is ordering on canonical graph6 strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    /// Key of a graph already known to be in canonical form.
    pub fn from_form(form: &Graph) -> Self {
        CanonicalKey(form.to_graph6().into_bytes())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Decodes the canonical representative.
    pub fn graph(&self) -> Graph {
        Graph::from_graph6(self.as_str()).expect("canonical key holds valid graph6")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// The input graph relabelled canonically.
    pub form: Graph,
    /// Automorphisms met during the search (as vertex maps).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    /// `position()[v]` is the canonical position of input vertex `v`.
    pub fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    let cells = refine(g, vec![(0..n).collect()]);
    let mut prefix = Vec::with_capacity(n);
    search.visit(cells, &mut prefix);
    let best = search.best.expect("search reaches at least one leaf");
    Labeling { form: Graph::from_rows_unchecked(best.rows), order: best.order, automorphisms: search.autos }
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey(canonical_form(g).to_graph6().into_bytes())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_key(g) == canonical_key(h)
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<usize>,
    prefix: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

enum Step {
    Continue,
    /// Abandon everything below the node at this depth.
    JumpTo(usize),
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Step {
        let depth = prefix.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells.into_iter().map(|c| c[0]).collect(), prefix);
        };
        let mut children = cells[target].clone();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &children {
            if !explored.is_empty() && self.in_explored_orbit(w, &explored, prefix) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![w]);
            next.push(cells[target].iter().copied().filter(|&v| v != w).collect());
            next.extend_from_slice(&cells[target + 1..]);
            let next = refine(self.g, next);
            prefix.push(w);
            let step = self.visit(next, prefix);
            prefix.pop();
            explored.push(w);
            if let Step::JumpTo(d) = step {
                if d < depth {
                    return step;
                }
            }
        }
        Step::Continue
    }

    fn leaf(&mut self, order: Vec<usize>, prefix: &[usize]) -> Step {
        let rows = relabel_rows(self.g, &order);
        let Some(first) = &self.first else {
            let leaf = Leaf { rows: rows.clone(), order: order.clone(), prefix: prefix.to_vec() };
            self.first = Some(Leaf { rows, order, prefix: prefix.to_vec() });
            self.best = Some(leaf);
            return Step::Continue;
        };
        if rows == first.rows {
            let gamma = compose_map(&first.order, &order);
            let d = common_prefix(&first.prefix, prefix);
            self.autos.push(gamma);
            return Step::JumpTo(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let gamma = compose_map(&best.order, &order);
                let d = common_prefix(&best.prefix, prefix);
                self.autos.push(gamma);
                Step::JumpTo(d)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { rows, order, prefix: prefix.to_vec() });
                Step::Continue
            }
            std::cmp::Ordering::Less => Step::Continue,
        }
    }

    fn in_explored_orbit(&self, w: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Vertex map sending `from[i]` to `to[i]`.
fn compose_map(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn relabel_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().map(|&v| Bits(g.neighbors(v)).fold(0u64, |acc, u| acc | 1 << pos[u])).collect()
}

/// Refines an ordered partition until it is equitable. Every cell is used
/// as a splitter; split pieces are ordered by their neighbor count into
/// the splitter, which keeps the result independent of vertex labels.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}
