//! Weyl group action, dominant projections, orbits and affine stabilizers.

use std::collections::{HashSet, VecDeque};

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::num::{rank, solve, IVec, Int, RationalVector};
use crate::root_system::RootSystem;

/// A set of positive roots, stored as a bitmask over root indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RootSet(u128);

impl RootSet {
    pub fn empty() -> Self {
        RootSet(0)
    }

    pub fn full(rs: &RootSystem) -> Self {
        let n = rs.num_positive_roots();
        RootSet(if n == 128 { u128::MAX } else { (1u128 << n) - 1 })
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_full(&self, rs: &RootSystem) -> bool {
        *self == Self::full(rs)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..128).filter(move |&i| self.contains(i))
    }
}

/// Positive roots taking integer values at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSubsystem<I: Int> {
    pub point: RationalVector<I>,
    pub roots: RootSet,
}

/// A Weyl group element as a word in simple reflections and its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Simple reflections in the order they are applied.
    pub word: Vec<usize>,
    /// Matrix acting on coweight coordinates.
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        WeylElement { word: Vec::new(), matrix }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = Self::identity(rs.rank());
        for &i in word {
            w = w.then_simple(rs, i);
        }
        w
    }

    /// `s_i ∘ self`.
    pub fn then_simple(mut self, rs: &RootSystem, i: usize) -> Self {
        let col = rs.simple_coroot(i);
        let row_i = self.matrix[i].clone();
        for (r, c) in self.matrix.iter_mut().zip(&col) {
            if *c != 0 {
                for (x, y) in r.iter_mut().zip(&row_i) {
                    *x -= c * y;
                }
            }
        }
        self.word.push(i);
        self
    }

    pub fn apply<I: Int>(&self, v: &RationalVector<I>) -> RationalVector<I> {
        RationalVector(self.matrix.iter().map(|row| v.pair(row)).collect())
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// `τ_β(v) = v − β(v) β^∨`.
pub fn reflect<I: Int>(rs: &RootSystem, root: usize, v: &RationalVector<I>) -> RationalVector<I> {
    let b = rs.evaluate_root(root, v);
    v.add_scaled_ints(&-b, &rs.positive_roots()[root].coroot)
}

pub fn simple_reflect<I: Int>(rs: &RootSystem, i: usize, v: &RationalVector<I>) -> RationalVector<I> {
    let b = v.0[i].clone();
    v.add_scaled_ints(&-b, &rs.positive_roots()[i].coroot)
}

pub(crate) fn reflect_ivec(rs: &RootSystem, root: usize, v: &[i64]) -> IVec {
    let r = &rs.positive_roots()[root];
    let b: i64 = r.coeffs.iter().zip(v).map(|(c, x)| c * x).sum();
    v.iter().zip(&r.coroot).map(|(x, c)| x - b * c).collect()
}

pub(crate) fn pair_ivec(rs: &RootSystem, root: usize, v: &[i64]) -> i64 {
    rs.positive_roots()[root].coeffs.iter().zip(v).map(|(c, x)| c * x).sum()
}

pub(crate) fn dominant_ivec(rs: &RootSystem, v: &[i64]) -> IVec {
    let mut v = v.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        v = reflect_ivec(rs, i, &v);
    }
    v
}

/// The dominant element of `W·v` with a witness `w` such that `w(v)` is dominant.
pub fn dominant_projection<I: Int>(rs: &RootSystem, v: &RationalVector<I>) -> (RationalVector<I>, WeylElement) {
    let mut v = v.clone();
    let mut w = WeylElement::identity(rs.rank());
    while let Some(i) = v.0.iter().position(|x| x.is_negative()) {
        v = simple_reflect(rs, i, &v);
        w = w.then_simple(rs, i);
    }
    (v, w)
}

pub fn dominant<I: Int>(rs: &RootSystem, v: &RationalVector<I>) -> RationalVector<I> {
    let mut v = v.clone();
    while let Some(i) = v.0.iter().position(|x| x.is_negative()) {
        v = simple_reflect(rs, i, &v);
    }
    v
}

/// `γ* `: the dominant element of `W·(−γ)`.
pub fn contragredient<I: Int>(rs: &RootSystem, gamma: &RationalVector<I>) -> Result<RationalVector<I>> {
    if !gamma.is_dominant() {
        return Err(Error::InvalidInput(format!("{gamma} is not dominant")));
    }
    Ok(dominant(rs, &gamma.neg()))
}

/// The full orbit `W·v`, in breadth-first order from `v`.
pub fn orbit<I: Int>(rs: &RootSystem, v: &RationalVector<I>) -> Result<Vec<RationalVector<I>>> {
    rs.check_enumerable()?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(u) = queue.pop_front() {
        for i in 0..rs.rank() {
            let w = simple_reflect(rs, i, &u);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
        out.push(u);
    }
    Ok(out)
}

/// Minimal length of `w` with `w⁻¹(μ)` dominant: the number of positive
/// roots negative on `μ`.
pub fn length_of_orbit_element<I: Int>(rs: &RootSystem, mu: &RationalVector<I>) -> Result<usize> {
    if mu.is_zero() {
        return Err(Error::InvalidInput("length of the zero vector".into()));
    }
    Ok((0..rs.num_positive_roots()).filter(|&r| rs.evaluate_root(r, mu).is_negative()).count())
}

/// Positive roots `β` with `β(x) ∈ Z`.
pub fn affine_stabilizer<I: Int>(rs: &RootSystem, x: &RationalVector<I>) -> StabilizerSubsystem<I> {
    let mut roots = RootSet::empty();
    for r in 0..rs.num_positive_roots() {
        if rs.evaluate_root(r, x).is_integer() {
            roots.insert(r);
        }
    }
    StabilizerSubsystem { point: x.clone(), roots }
}

/// Whether `x` is a vertex of the affine Coxeter complex.
pub fn is_vertex<I: Int>(rs: &RootSystem, x: &RationalVector<I>) -> bool {
    let st = affine_stabilizer(rs, x);
    let rows: Vec<Vec<i64>> = st.roots.iter().map(|r| rs.positive_roots()[r].coeffs.clone()).collect();
    rank(&rows) == rs.rank()
}

/// Whether `x` is a special vertex, i.e. every root is integral on it.
pub fn is_special_vertex<I: Int>(_rs: &RootSystem, x: &RationalVector<I>) -> bool {
    x.is_integral()
}

/// Vertices of the affine Coxeter complex with all coordinates in `[-bound, bound]`.
pub fn alcove_vertices(rs: &RootSystem, bound: i64) -> Vec<RationalVector<i64>> {
    let n = rs.rank();
    let roots = rs.positive_roots();
    let mut out = HashSet::new();
    let mut pick = Vec::new();
    fn choose(start: usize, need: usize, total: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if need == 0 {
            f(pick);
            return;
        }
        for i in start..total {
            pick.push(i);
            choose(i + 1, need - 1, total, pick, f);
            pick.pop();
        }
    }
    let mut visit = |sel: &[usize]| {
        let rows: Vec<Vec<i64>> = sel.iter().map(|&r| roots[r].coeffs.clone()).collect();
        if rank(&rows) < n {
            return;
        }
        let m: Vec<Vec<Ratio<i64>>> =
            rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
        let ranges: Vec<i64> = rows.iter().map(|r| r.iter().map(|c| c.abs()).sum::<i64>() * bound).collect();
        let mut levels: Vec<i64> = ranges.iter().map(|&l| -l).collect();
        loop {
            let rhs: Vec<Ratio<i64>> = levels.iter().map(|&k| Ratio::from_integer(k)).collect();
            if let Some(x) = solve(&m, &rhs) {
                if x.iter().all(|c| c.abs() <= Ratio::from_integer(bound)) {
                    out.insert(RationalVector(x));
                }
            }
            let mut k = 0;
            loop {
                if k == levels.len() {
                    return;
                }
                levels[k] += 1;
                if levels[k] <= ranges[k] {
                    break;
                }
                levels[k] = -ranges[k];
                k += 1;
            }
        }
    };
    choose(0, n, roots.len(), &mut pick, &mut visit);
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let w1: RationalVector<i64> = RationalVector::from_ints(&[1, 0]);
        assert_eq!(reflect(&rs, 0, &w1), RationalVector::from_ints(&[-1, 1]));
    }

    #[test]
    fn dominant_projection_a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let v: RationalVector<i64> = RationalVector::from_ints(&[-1, 0]);
        let (d, w) = dominant_projection(&rs, &v);
        assert_eq!(d, RationalVector::from_ints(&[0, 1]));
        assert_eq!(w.word, vec![0, 1]);
        assert_eq!(w.apply(&v), d);
    }

    #[test]
    fn weyl_element_matrix_matches_word() {
        let rs = RootSystem::parse("B2").unwrap();
        let w = WeylElement::from_word(&rs, &[0, 1, 0]);
        let v: RationalVector<i64> = RationalVector::parse("1/2,3").unwrap();
        let mut u = v.clone();
        for &i in &w.word {
            u = simple_reflect(&rs, i, &u);
        }
        assert_eq!(w.apply(&v), u);
    }
}
