//! Named graph families, each with an independently derived closed-form
//! chromatic polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::canon::{canonical_key, CanonicalKey};
use crate::graph::{full_mask, Graph, GraphError};
use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    Parameter { family: &'static str, reason: String },
    #[error("unknown family specifier {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn param_err(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Parameter { family, reason: reason.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub name: String,
    pub graph: Graph,
    pub closed_form: IntPoly,
}

fn x1() -> IntPoly {
    IntPoly::x_minus(1)
}

/// `(x)_k (x-1)^m`.
pub fn extremal_form(k: usize, m: usize) -> IntPoly {
    &IntPoly::falling_factorial(k) * &x1().pow(m as u32)
}

/// `(x-1)_k = (x-1)(x-2)...(x-k)`.
pub fn shifted_falling(k: usize) -> IntPoly {
    IntPoly::falling_factorial(k).shift_down()
}

pub fn complete(n: usize) -> Result<FamilyInstance, FamilyError> {
    Ok(FamilyInstance {
        name: format!("complete:{n}"),
        graph: Graph::complete(n)?,
        closed_form: IntPoly::falling_factorial(n),
    })
}

pub fn cycle(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(param_err("cycle", format!("need n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let sign = if n % 2 == 0 { x1() } else { -&x1() };
    Ok(FamilyInstance {
        name: format!("cycle:{n}"),
        graph: Graph::from_edges(n, &edges)?,
        closed_form: &x1().pow(n as u32) + &sign,
    })
}

pub fn path(n: usize) -> Result<FamilyInstance, FamilyError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(FamilyInstance {
        name: format!("path:{n}"),
        graph: Graph::from_edges(n, &edges)?,
        closed_form: &IntPoly::x() * &x1().pow(n.saturating_sub(1) as u32),
    })
}

/// Odd cycle on `n - 1` vertices plus one pendant vertex.
pub fn cycle_with_pendant(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 4 || n % 2 == 1 {
        return Err(param_err("cycle1", format!("need even n >= 4, got {n}")));
    }
    let c = cycle(n - 1)?;
    Ok(FamilyInstance {
        name: format!("cycle1:{n}"),
        graph: c.graph.extend(1)?,
        closed_form: &x1().pow(n as u32) - &x1().pow(2),
    })
}

/// `K_k` with a pendant path of `len` edges hanging off vertex 0.
fn clique_with_tail(k: usize, len: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::complete(k)?;
    let mut attach = 0;
    for _ in 0..len {
        g = g.extend(1 << attach)?;
        attach = g.order() - 1;
    }
    Ok(g)
}

pub fn f1(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k < 2 {
        return Err(param_err("f1", format!("need k >= 2, got {k}")));
    }
    Ok(FamilyInstance { name: format!("f1:{k}"), graph: clique_with_tail(k, 1)?, closed_form: extremal_form(k, 1) })
}

pub fn f2(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k < 2 {
        return Err(param_err("f2", format!("need k >= 2, got {k}")));
    }
    Ok(FamilyInstance { name: format!("f2:{k}"), graph: clique_with_tail(k, 2)?, closed_form: extremal_form(k, 2) })
}

/// All isomorphism classes of a `k`-clique with `n - k` further vertices
/// forming trees that hang off the clique, ordered by canonical key.
pub fn cstar_members(n: usize, k: usize) -> Result<Vec<FamilyInstance>, FamilyError> {
    if k < 2 || n < k {
        return Err(param_err("cstar", format!("need n >= k >= 2, got n={n}, k={k}")));
    }
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let base = Graph::complete(k)?;
    level.insert(canonical_key(&base), base);
    for _ in k..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for v in 0..g.order() {
                let h = g.extend(1 << v)?;
                next.entry(canonical_key(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level
        .into_values()
        .enumerate()
        .map(|(i, graph)| FamilyInstance {
            name: format!("cstar:{n},{k}#{i}"),
            graph,
            closed_form: extremal_form(k, n - k),
        })
        .collect())
}

/// `K_1 + (K_{k-1} disjoint (n-k) K_1)`.
pub fn universal_extremal(n: usize, k: usize) -> Result<FamilyInstance, FamilyError> {
    if k < 2 || n < k {
        return Err(param_err("univ", format!("need n >= k >= 2, got n={n}, k={k}")));
    }
    let inner = if n > k {
        Graph::complete(k - 1)?.disjoint_union(&Graph::empty(n - k)?)?
    } else {
        Graph::complete(k - 1)?
    };
    Ok(FamilyInstance { name: format!("univ:{n},{k}"), graph: inner.join_k1()?, closed_form: extremal_form(k, n - k) })
}

pub fn join_k1(g: &Graph) -> Result<Graph, FamilyError> {
    Ok(g.join_k1()?)
}

/// A graph with a stable 2-cut `{u, v}` separating `K_{k-1}` from
/// `K_{k-2}`, where both cut vertices dominate the small clique.
#[derive(Clone, Debug)]
pub struct Lemma5Instance {
    pub instance: FamilyInstance,
    pub u: usize,
    pub v: usize,
    /// Vertices of the `K_{k-1}` side.
    pub big: u64,
    /// Vertices of the `K_{k-2}` side.
    pub small: u64,
    /// `G/uv`, expected to be `K_1 + (K_{k-1} disjoint K_{k-2})`.
    pub contraction: FamilyInstance,
}

/// All isomorphism classes of the stable 2-cut configuration on `2k - 1`
/// vertices: `u` misses `a >= 1` vertices of the big clique, `v` misses
/// `b >= 1` others, and no vertex is missed by both.
pub fn lemma5_graphs(k: usize) -> Result<Vec<Lemma5Instance>, FamilyError> {
    if k < 4 {
        return Err(param_err("lemma5", format!("need k >= 4, got {k}")));
    }
    let n = 2 * k - 1;
    // layout: big clique 0..k-1, small clique k-1..2k-3, u = 2k-3, v = 2k-2
    let big = full_mask(k - 1);
    let small = full_mask(2 * k - 3) & !big;
    let (u, v) = (2 * k - 3, 2 * k - 2);
    let x = IntPoly::x();
    let contraction_graph =
        Graph::complete(k - 1)?.disjoint_union(&Graph::complete(k - 2)?)?.join_k1()?;
    let contraction_form = &shifted_falling(k - 1) * &IntPoly::falling_factorial(k - 1);

    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for a in 1..k - 1 {
        for b in a..k - a {
            let u_miss = full_mask(a);
            let v_miss = full_mask(a + b) & !full_mask(a);
            let mut edges = Vec::new();
            for i in 0..n - 2 {
                for j in i + 1..n - 2 {
                    let same_big = big >> i & 1 == 1 && big >> j & 1 == 1;
                    let same_small = small >> i & 1 == 1 && small >> j & 1 == 1;
                    if same_big || same_small {
                        edges.push((i, j));
                    }
                }
            }
            for w in 0..n - 2 {
                if small >> w & 1 == 1 || u_miss >> w & 1 == 0 {
                    edges.push((w, u));
                }
                if small >> w & 1 == 1 || v_miss >> w & 1 == 0 {
                    edges.push((w, v));
                }
            }
            let graph = Graph::from_edges(n, &edges)?;
            if !seen.insert(canonical_key(&graph)) {
                continue;
            }
            // pi(G) = pi(G+uv) + pi(G/uv); G+uv glues H1 and H2 = K_k along
            // the edge uv, and pi(H1) = (x)_{k-1} [a(x-k+1+b) + (x-k+1)(x-k+b)].
            let kk = k as i64;
            let (ai, bi) = (a as i64, b as i64);
            let h1_tail = &(&IntPoly::constant(ai) * &IntPoly::x_minus(kk - 1 - bi))
                + &(&IntPoly::x_minus(kk - 1) * &IntPoly::x_minus(kk - bi));
            let h1 = &IntPoly::falling_factorial(k - 1) * &h1_tail;
            let added = (&h1 * &IntPoly::falling_factorial(k))
                .exact_div(&(&x * &IntPoly::x_minus(1)))
                .expect("(x)_k is divisible by x(x-1)");
            out.push(Lemma5Instance {
                instance: FamilyInstance {
                    name: format!("lemma5:{k}[a={a},b={b}]"),
                    graph,
                    closed_form: &added + &contraction_form,
                },
                u,
                v,
                big,
                small,
                contraction: FamilyInstance {
                    name: format!("lemma5-contraction:{k}"),
                    graph: contraction_graph.clone(),
                    closed_form: contraction_form.clone(),
                },
            });
        }
    }
    Ok(out)
}

/// CLI-facing family specifier such as `cycle:5` or `cstar:8,4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CycleWithPendant(usize),
    F1(usize),
    F2(usize),
    CStar(usize, usize),
    Universal(usize, usize),
    Lemma5(usize),
}

impl FamilySpec {
    pub fn instances(&self) -> Result<Vec<FamilyInstance>, FamilyError> {
        Ok(match *self {
            FamilySpec::Complete(n) => vec![complete(n)?],
            FamilySpec::Cycle(n) => vec![cycle(n)?],
            FamilySpec::Path(n) => vec![path(n)?],
            FamilySpec::CycleWithPendant(n) => vec![cycle_with_pendant(n)?],
            FamilySpec::F1(k) => vec![f1(k)?],
            FamilySpec::F2(k) => vec![f2(k)?],
            FamilySpec::CStar(n, k) => cstar_members(n, k)?,
            FamilySpec::Universal(n, k) => vec![universal_extremal(n, k)?],
            FamilySpec::Lemma5(k) => lemma5_graphs(k)?.into_iter().map(|l| l.instance).collect(),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::CycleWithPendant(n) => write!(f, "cycle1:{n}"),
            FamilySpec::F1(k) => write!(f, "f1:{k}"),
            FamilySpec::F2(k) => write!(f, "f2:{k}"),
            FamilySpec::CStar(n, k) => write!(f, "cstar:{n},{k}"),
            FamilySpec::Universal(n, k) => write!(f, "univ:{n},{k}"),
            FamilySpec::Lemma5(k) => write!(f, "lemma5:{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || FamilyError::Unknown(s.to_owned());
        let (name, params) = s.split_once(':').ok_or_else(unknown)?;
        let nums: Vec<usize> =
            params.split(',').map(|p| p.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| unknown())?;
        let one = || if nums.len() == 1 { Ok(nums[0]) } else { Err(unknown()) };
        let two = || if nums.len() == 2 { Ok((nums[0], nums[1])) } else { Err(unknown()) };
        Ok(match name {
            "complete" => FamilySpec::Complete(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "path" => FamilySpec::Path(one()?),
            "cycle1" => FamilySpec::CycleWithPendant(one()?),
            "f1" => FamilySpec::F1(one()?),
            "f2" => FamilySpec::F2(one()?),
            "cstar" => {
                let (n, k) = two()?;
                FamilySpec::CStar(n, k)
            }
            "univ" => {
                let (n, k) = two()?;
                FamilySpec::Universal(n, k)
            }
            "lemma5" => FamilySpec::Lemma5(one()?),
            _ => return Err(unknown()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::engine::{chromatic_polynomial, count_colorings_bruteforce, MemoCache};
    use num_bigint::BigInt;

    fn check(inst: &FamilyInstance, cache: &MemoCache) {
        assert_eq!(chromatic_polynomial(&inst.graph, cache).unwrap(), inst.closed_form, "{}", inst.name);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(complete(4).unwrap().closed_form.eval_at(4), BigInt::from(24));
        assert_eq!(cycle(5).unwrap().closed_form.eval_at(3), BigInt::from(30));
        assert_eq!(path(4).unwrap().closed_form.eval_at(3), BigInt::from(24));
        assert_eq!(cycle_with_pendant(6).unwrap().closed_form.eval_at(3), BigInt::from(60));
        assert_eq!(cycle_with_pendant(4).unwrap().closed_form.eval_at(3), BigInt::from(12));
        assert_eq!(f1(4).unwrap().closed_form.eval_at(4), BigInt::from(72));
        assert_eq!(f2(4).unwrap().closed_form.eval_at(4), BigInt::from(216));
        assert_eq!(universal_extremal(6, 4).unwrap().closed_form.eval_at(4), BigInt::from(216));
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(cycle_with_pendant(5).is_err());
        assert!(f1(1).is_err());
        assert!(f2(0).is_err());
        assert!(lemma5_graphs(3).is_err());
        assert!(cstar_members(3, 4).is_err());
        assert!(join_k1(&Graph::empty(64).unwrap()).is_err());
    }

    #[test]
    fn every_constructor_matches_its_closed_form() {
        let cache = MemoCache::new();
        for n in 1..=10 {
            check(&complete(n).unwrap(), &cache);
            check(&path(n).unwrap(), &cache);
        }
        for n in 3..=12 {
            check(&cycle(n).unwrap(), &cache);
        }
        for n in (4..=12).step_by(2) {
            check(&cycle_with_pendant(n).unwrap(), &cache);
        }
        for k in 2..=9 {
            check(&f1(k).unwrap(), &cache);
            check(&f2(k).unwrap(), &cache);
            for n in k..=k + 4 {
                check(&universal_extremal(n, k).unwrap(), &cache);
                for m in cstar_members(n, k).unwrap() {
                    check(&m, &cache);
                }
            }
        }
        for k in 4..=7 {
            for l in lemma5_graphs(k).unwrap() {
                check(&l.instance, &cache);
                check(&l.contraction, &cache);
            }
        }
    }

    #[test]
    fn coincidences() {
        assert!(is_isomorphic(&cycle_with_pendant(4).unwrap().graph, &f1(3).unwrap().graph));
        assert_eq!(universal_extremal(5, 5).unwrap().graph, Graph::complete(5).unwrap());
        assert!(is_isomorphic(&join_k1(&Graph::complete(3).unwrap()).unwrap(), &Graph::complete(4).unwrap()));
        let star = join_k1(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert_eq!(star.edge_count(), 4);
        // wheel on 5 vertices
        let wheel = join_k1(&cycle(4).unwrap().graph).unwrap();
        assert_eq!(count_colorings_bruteforce(&wheel, 4).unwrap(), 72);
        assert_eq!(chromatic_polynomial(&wheel, &MemoCache::new()).unwrap().eval_at(4), BigInt::from(72));
    }

    #[test]
    fn independence_numbers() {
        for k in 2..=10 {
            let g = f2(k).unwrap().graph;
            let brute = (0u64..1 << g.order()).filter(|&s| g.is_independent(s)).map(u64::count_ones).max();
            assert_eq!(brute, Some(2));
            assert_eq!(g.independence_number(), 2);
        }
        let g = f2(4).unwrap().graph;
        assert_eq!((g.clique_number(), g.independence_number()), (4, 2));
        assert_eq!(f1(4).unwrap().graph.chromatic_number(), 4);
        // one vertex of the K_3 plus the three isolated vertices
        let u = universal_extremal(7, 4).unwrap().graph;
        let brute = (0u64..1 << u.order()).filter(|&s| u.is_independent(s)).map(u64::count_ones).max();
        assert_eq!(brute, Some(4));
        assert_eq!(u.independence_number(), 4);
        let f = f1(5).unwrap().graph;
        assert!(f.is_connected());
        assert_eq!(f.cut_vertices().unwrap(), vec![0]);
    }

    #[test]
    fn cstar_structure() {
        assert_eq!(cstar_members(4, 4).unwrap().len(), 1);
        assert_eq!(cstar_members(4, 4).unwrap()[0].graph, canonical_key(&Graph::complete(4).unwrap()).graph());
        let one = cstar_members(5, 4).unwrap();
        assert_eq!(one.len(), 1);
        assert!(is_isomorphic(&one[0].graph, &f1(4).unwrap().graph));
        for n in 4..=9 {
            for m in cstar_members(n, 4).unwrap() {
                let g = &m.graph;
                assert!(g.is_connected());
                assert_eq!(g.clique_number(), 4);
                assert_eq!(g.chromatic_number(), 4);
                assert_eq!(g.edge_count(), 6 + n - 4);
            }
        }
    }

    /// Oracle: every labeled pendant-attachment sequence on K_4, deduplicated
    /// by trying all vertex permutations.
    #[test]
    fn cstar_8_4_count_by_exhaustive_attachment() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        // every attachment sequence: vertex 4+i attaches to some earlier vertex
        let mut reps: Vec<Graph> = Vec::new();
        let all = perms(8);
        let mut parents = [0usize; 4];
        loop {
            let mut g = Graph::complete(4).unwrap();
            for (i, &p) in parents.iter().enumerate() {
                debug_assert!(p < 4 + i);
                g = g.extend(1 << p).unwrap();
            }
            let ds = g.degree_sequence();
            if !reps.iter().any(|r| r.degree_sequence() == ds && all.iter().any(|p| r.permute(p) == g)) {
                reps.push(g);
            }
            // odometer over parent choices
            let mut i = 3;
            loop {
                parents[i] += 1;
                if parents[i] < 4 + i {
                    break;
                }
                parents[i] = 0;
                if i == 0 {
                    assert_eq!(cstar_members(8, 4).unwrap().len(), reps.len());
                    return;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn cstar_alpha_le2_members_are_the_f_family() {
        for k in 3..=6 {
            for n in k..=k + 4 {
                let small: Vec<_> =
                    cstar_members(n, k).unwrap().into_iter().filter(|m| m.graph.independence_number() <= 2).collect();
                match n - k {
                    0 => assert!(small.len() == 1 && small[0].graph.is_complete()),
                    1 => assert!(small.len() == 1 && is_isomorphic(&small[0].graph, &f1(k).unwrap().graph)),
                    2 => assert!(small.len() == 1 && is_isomorphic(&small[0].graph, &f2(k).unwrap().graph)),
                    _ => assert!(small.is_empty()),
                }
            }
        }
    }

    #[test]
    fn lemma5_structure() {
        for k in 4..=6 {
            let ls = lemma5_graphs(k).unwrap();
            assert!(!ls.is_empty());
            for l in &ls {
                let g = &l.instance.graph;
                assert_eq!(g.order(), 2 * k - 1);
                assert!(!g.has_edge(l.u, l.v));
                assert_eq!(g.independence_number(), 2);
                assert_eq!(g.chromatic_number(), k);
                assert!(g.clique_number() < k);
                assert!(g.is_connected());
                let h = g.contract_pair(l.u, l.v).unwrap();
                assert!(is_isomorphic(&h, &l.contraction.graph));
            }
            if k == 4 {
                let cache = MemoCache::new();
                for l in &ls {
                    let v = chromatic_polynomial(&l.instance.graph, &cache).unwrap().eval_at(5);
                    assert!(v < BigInt::from(7680));
                }
            }
        }
    }

    #[test]
    fn spec_parsing() {
        for s in ["complete:4", "cycle:5", "path:3", "cycle1:6", "f1:4", "f2:5", "cstar:8,4", "univ:6,4", "lemma5:4"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(!spec.instances().unwrap().is_empty());
        }
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("cstar:5".parse::<FamilySpec>().is_err());
        assert!("f1:x".parse::<FamilySpec>().is_err());
    }
}
