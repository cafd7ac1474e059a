//! Chains in Weyl orbits and the relations built from them.
//!
//! A chain from `ν` to `μ` in a subsystem `W'` is a sequence
//! `ν = η_0, …, η_m = μ` with `η_i = τ_{β_i}(η_{i−1})`, `β_i(η_{i−1}) < 0`
//! and `β_i` a positive root of `W'`. All relations are invariant under
//! positive scaling, so the engine works on primitive integer vectors.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use num_rational::Ratio;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::num::{IVec, Int, RationalVector};
use crate::root_system::RootSystem;
use crate::weyl::{affine_stabilizer, dominant, dominant_ivec, pair_ivec, reflect, reflect_ivec, RootSet};

/// Orbit of a primitive integer vector with all chain steps as edges.
pub struct OrbitGraph {
    vertices: Vec<IVec>,
    index: HashMap<IVec, usize>,
    lengths: Vec<usize>,
    /// `(root, target)` for every positive root negative on the vertex.
    edges: Vec<Vec<(usize, usize)>>,
    longest: OnceLock<Vec<i16>>,
}

impl OrbitGraph {
    fn build(rs: &RootSystem, dom: &IVec) -> Self {
        let mut vertices = vec![dom.clone()];
        let mut index = HashMap::new();
        index.insert(dom.clone(), 0);
        let mut k = 0;
        while k < vertices.len() {
            for i in 0..rs.rank() {
                let w = reflect_ivec(rs, i, &vertices[k]);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), vertices.len());
                    vertices.push(w);
                }
            }
            k += 1;
        }
        let nroots = rs.num_positive_roots();
        let mut lengths = Vec::with_capacity(vertices.len());
        let mut edges = Vec::with_capacity(vertices.len());
        for v in &vertices {
            let mut e = Vec::new();
            let mut len = 0;
            for r in 0..nroots {
                if pair_ivec(rs, r, v) < 0 {
                    len += 1;
                    e.push((r, index[&reflect_ivec(rs, r, v)]));
                }
            }
            lengths.push(len);
            edges.push(e);
        }
        OrbitGraph { vertices, index, lengths, edges, longest: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &IVec {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    fn longest_table(&self) -> &[i16] {
        self.longest.get_or_init(|| {
            let n = self.len();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|a, b| self.lengths[*b].cmp(&self.lengths[*a]));
            let mut table = vec![-1i16; n * n];
            for s in 0..n {
                let row = &mut table[s * n..(s + 1) * n];
                row[s] = 0;
                for &u in &order {
                    let du = row[u];
                    if du < 0 {
                        continue;
                    }
                    for &(_, v) in &self.edges[u] {
                        if row[v] < du + 1 {
                            row[v] = du + 1;
                        }
                    }
                }
            }
            table
        })
    }

    /// Length of the longest chain in the full Weyl group from `a` to `b`.
    pub fn longest(&self, a: usize, b: usize) -> Option<usize> {
        let d = self.longest_table()[a * self.len() + b];
        (d >= 0).then_some(d as usize)
    }

    /// Longest chain from `a` to `b` using only roots in `sub`.
    pub fn longest_in(&self, a: usize, b: usize, sub: RootSet) -> Option<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|x, y| self.lengths[*y].cmp(&self.lengths[*x]));
        let mut dist = vec![-1i64; n];
        dist[a] = 0;
        for &u in &order {
            if dist[u] < 0 {
                continue;
            }
            for &(r, v) in &self.edges[u] {
                if sub.contains(r) && dist[v] < dist[u] + 1 {
                    dist[v] = dist[u] + 1;
                }
            }
        }
        (dist[b] >= 0).then_some(dist[b] as usize)
    }

    /// Breadth-first search from `from`; returns the first vertex satisfying
    /// `goal` with the `(root, vertex)` steps leading to it.
    fn search(
        &self,
        from: usize,
        sub: RootSet,
        cover_only: bool,
        goal: impl Fn(usize) -> bool,
    ) -> Option<Vec<(usize, usize)>> {
        let n = self.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if goal(u) {
                let mut steps = Vec::new();
                let mut cur = u;
                while let Some((p, r)) = parent[cur] {
                    steps.push((r, cur));
                    cur = p;
                }
                steps.reverse();
                return Some(steps);
            }
            for &(r, v) in &self.edges[u] {
                if seen[v] || !sub.contains(r) {
                    continue;
                }
                if cover_only && self.longest(u, v) != Some(1) {
                    continue;
                }
                seen[v] = true;
                parent[v] = Some((u, r));
                queue.push_back(v);
            }
        }
        None
    }
}

pub(crate) fn orbit_graph(rs: &RootSystem, v: &[i64]) -> Result<Arc<OrbitGraph>> {
    rs.check_enumerable()?;
    let dom = dominant_ivec(rs, v);
    rs.caches.orbit_graphs.get_or_insert_with(&dom, || Ok(OrbitGraph::build(rs, &dom)))
}

/// A chain: its vertices and the positive roots of its steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain<I: Int> {
    pub vertices: Vec<RationalVector<I>>,
    pub roots: Vec<usize>,
}

impl<I: Int> Chain<I> {
    pub fn trivial(v: RationalVector<I>) -> Self {
        Chain { vertices: vec![v], roots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn first(&self) -> &RationalVector<I> {
        &self.vertices[0]
    }

    pub fn last(&self) -> &RationalVector<I> {
        self.vertices.last().expect("chain has a vertex")
    }
}

/// Primitive integer representative of the ray through `v`.
pub fn direction<I: Int>(v: &RationalVector<I>) -> Result<IVec> {
    v.primitive().ok_or_else(|| {
        if v.is_zero() {
            Error::InvalidInput("zero vector has no direction".into())
        } else {
            Error::InvalidInput(format!("direction of {v} does not fit in 64-bit integers"))
        }
    })
}

fn nonzero<I: Int>(v: &RationalVector<I>) -> Result<()> {
    if v.is_zero() {
        Err(Error::InvalidInput("chain relations need nonzero vectors".into()))
    } else {
        Ok(())
    }
}

/// The chain through the given steps, starting at `start`.
fn realize<I: Int>(rs: &RootSystem, start: &RationalVector<I>, steps: &[(usize, usize)]) -> Chain<I> {
    let mut vertices = vec![start.clone()];
    let mut roots = Vec::new();
    for &(r, _) in steps {
        let next = reflect(rs, r, vertices.last().expect("nonempty"));
        vertices.push(next);
        roots.push(r);
    }
    Chain { vertices, roots }
}

/// Chain from the direction of `from` to the direction of `to` inside `sub`;
/// `maximal` restricts to steps of full-W distance one.
pub fn find_chain<I: Int>(
    rs: &RootSystem,
    from: &RationalVector<I>,
    to: &RationalVector<I>,
    sub: RootSet,
    maximal: bool,
) -> Result<Option<Chain<I>>> {
    let a = direction(from)?;
    let b = direction(to)?;
    let graph = orbit_graph(rs, &a)?;
    let Some(target) = graph.index_of(&b) else { return Ok(None) };
    let src = graph.index_of(&a).expect("vertex in own orbit");
    Ok(graph.search(src, sub, maximal, |u| u == target).map(|steps| realize(rs, from, &steps)))
}

/// All `μ` with `ν ≥_{W'} μ`, scaled like `ν`, in breadth-first order.
pub fn lower_set<I: Int>(rs: &RootSystem, nu: &RationalVector<I>, sub: RootSet) -> Result<Vec<RationalVector<I>>> {
    let a = direction(nu)?;
    let g = orbit_graph(rs, &a)?;
    let k = (0..a.len()).find(|&i| a[i] != 0).expect("nonzero direction");
    let scale = &nu.0[k] / Ratio::from_integer(I::from(a[k]));
    let src = g.index_of(&a).expect("vertex");
    let mut seen = vec![false; g.len()];
    let mut order = vec![src];
    seen[src] = true;
    let mut i = 0;
    while i < order.len() {
        for &(r, v) in &g.edges[order[i]] {
            if sub.contains(r) && !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
        i += 1;
    }
    Ok(order.into_iter().map(|u| RationalVector::from_ints(g.vertex(u)).scale(&scale)).collect())
}

/// `ν ≥_{W'} μ`. Vectors in different orbits are unrelated.
pub fn ge<I: Int>(rs: &RootSystem, nu: &RationalVector<I>, mu: &RationalVector<I>, sub: RootSet) -> Result<bool> {
    nonzero(nu)?;
    nonzero(mu)?;
    if dominant(rs, nu) != dominant(rs, mu) {
        return Ok(false);
    }
    Ok(find_chain(rs, nu, mu, sub, false)?.is_some())
}

/// Length of the longest chain from `ν` to `μ` inside `sub`.
pub fn chain_dist<I: Int>(
    rs: &RootSystem,
    nu: &RationalVector<I>,
    mu: &RationalVector<I>,
    sub: RootSet,
) -> Result<Option<usize>> {
    nonzero(nu)?;
    nonzero(mu)?;
    if dominant(rs, nu) != dominant(rs, mu) {
        return Ok(None);
    }
    let a = direction(nu)?;
    let b = direction(mu)?;
    let g = orbit_graph(rs, &a)?;
    let (ia, ib) = (g.index_of(&a).expect("vertex"), g.index_of(&b).expect("vertex"));
    Ok(if sub.is_full(rs) { g.longest(ia, ib) } else { g.longest_in(ia, ib, sub) })
}

/// `ν ⊳ μ`: every positive root negative on `ν` is non-positive on `μ`.
pub fn triangle_rel<I: Int>(rs: &RootSystem, nu: &RationalVector<I>, mu: &RationalVector<I>) -> bool {
    (0..rs.num_positive_roots())
        .all(|r| !rs.evaluate_root(r, nu).is_negative() || !rs.evaluate_root(r, mu).is_positive())
}

/// `μ ∼ ν`: the two vectors lie in a common closed Weyl chamber, i.e. no
/// root is strictly positive on one and strictly negative on the other.
pub fn same_chamber<I: Int>(rs: &RootSystem, mu: &RationalVector<I>, nu: &RationalVector<I>) -> bool {
    (0..rs.num_positive_roots()).all(|r| {
        let a = rs.evaluate_root(r, mu);
        let b = rs.evaluate_root(r, nu);
        !(a.is_positive() && b.is_negative() || a.is_negative() && b.is_positive())
    })
}

fn same_chamber_ivec(rs: &RootSystem, mu: &[i64], nu: &RationalVector<impl Int>) -> bool {
    (0..rs.num_positive_roots()).all(|r| {
        let a = pair_ivec(rs, r, mu);
        let b = rs.evaluate_root(r, nu);
        !(a > 0 && b.is_negative() || a < 0 && b.is_positive())
    })
}

/// Witness for `α ≳_{W'} δ`: a chain from `α` to some `β` with `β ∼ δ`.
pub fn gtrsim_witness<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    delta: &RationalVector<I>,
    sub: RootSet,
) -> Result<Option<Chain<I>>> {
    nonzero(alpha)?;
    nonzero(delta)?;
    let a = direction(alpha)?;
    let g = orbit_graph(rs, &a)?;
    let src = g.index_of(&a).expect("vertex");
    Ok(g.search(src, sub, false, |u| same_chamber_ivec(rs, g.vertex(u), delta)).map(|steps| realize(rs, alpha, &steps)))
}

/// `α ≳_{W'} δ`: there is `β` with `α ≥_{W'} β ∼ δ`.
pub fn gtrsim<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    delta: &RationalVector<I>,
    sub: RootSet,
) -> Result<bool> {
    Ok(gtrsim_witness(rs, alpha, delta, sub)?.is_some())
}

/// Checks the chain axioms inside `sub`.
pub fn is_chain<I: Int>(rs: &RootSystem, chain: &Chain<I>, sub: RootSet) -> Result<bool> {
    if chain.vertices.len() != chain.roots.len() + 1 {
        return Ok(false);
    }
    for v in &chain.vertices {
        nonzero(v)?;
    }
    for (k, &r) in chain.roots.iter().enumerate() {
        let prev = &chain.vertices[k];
        if r >= rs.num_positive_roots()
            || !sub.contains(r)
            || !rs.evaluate_root(r, prev).is_negative()
            || reflect(rs, r, prev) != chain.vertices[k + 1]
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A chain is maximal when each consecutive pair has full-W distance one.
pub fn is_maximal_chain<I: Int>(rs: &RootSystem, chain: &Chain<I>) -> Result<bool> {
    if !is_chain(rs, chain, RootSet::full(rs))? {
        return Err(Error::InvalidInput("not a chain".into()));
    }
    for w in chain.vertices.windows(2) {
        if chain_dist(rs, &w[0], &w[1], RootSet::full(rs))? != Some(1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether some chain from `ν` to `μ` uses only roots integral on `a·ν` and
/// is maximal as a chain in the full Weyl group.
pub fn a_chain_exists<I: Int>(
    rs: &RootSystem,
    nu: &RationalVector<I>,
    mu: &RationalVector<I>,
    a: &Ratio<I>,
) -> Result<bool> {
    nonzero(nu)?;
    nonzero(mu)?;
    if !a.is_positive() {
        return Err(Error::InvalidInput("a must be positive".into()));
    }
    if dominant(rs, nu) != dominant(rs, mu) {
        return Ok(false);
    }
    let st = affine_stabilizer(rs, &nu.scale(a));
    Ok(find_chain(rs, nu, mu, st.roots, true)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> RationalVector<i64> {
        RationalVector::parse(s).unwrap()
    }

    #[test]
    fn a2_longest_chain_from_antidominant() {
        let rs = RootSystem::parse("A2").unwrap();
        let full = RootSet::full(&rs);
        assert_eq!(chain_dist(&rs, &v("-1,-1"), &v("1,1"), full).unwrap(), Some(3));
        assert!(ge(&rs, &v("-1,-1"), &v("1,1"), full).unwrap());
        assert!(!ge(&rs, &v("1,1"), &v("-1,-1"), full).unwrap());
    }

    #[test]
    fn dominant_is_a_sink() {
        let rs = RootSystem::parse("A2").unwrap();
        let full = RootSet::full(&rs);
        assert!(!ge(&rs, &v("1,0"), &v("-1,1"), full).unwrap());
        assert!(ge(&rs, &v("1,0"), &v("1,0"), full).unwrap());
    }

    #[test]
    fn different_orbits_are_unrelated() {
        let rs = RootSystem::parse("A2").unwrap();
        assert!(!ge(&rs, &v("1,0"), &v("0,1"), RootSet::full(&rs)).unwrap());
        assert!(ge(&rs, &v("1,0"), &v("0,0"), RootSet::full(&rs)).is_err());
    }
}
