//! Piecewise-linear paths starting at the origin.
//!
//! A path is stored as the list of its segment displacements. Its time
//! parameter is derived from the W-invariant norm `Σ_{β>0} |β(v)|`, so a
//! segment's duration is proportional to that norm of its displacement.
//! Weyl reflections preserve the norm, which keeps root operators and
//! reparameterization-invariant predicates compatible with this choice.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{format_ratio, parse_ratio, Int, RationalVector};
use crate::root_system::RootSystem;
use crate::weyl::dominant;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PLPath<I: Int> {
    dim: usize,
    steps: Vec<RationalVector<I>>,
}

/// A segment with its constant velocity and duration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment<I: Int> {
    pub direction: RationalVector<I>,
    pub duration: Ratio<I>,
}

/// Data at an interior break point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Break<I: Int> {
    pub index: usize,
    pub time: Ratio<I>,
    pub point: RationalVector<I>,
    pub left: RationalVector<I>,
    pub right: RationalVector<I>,
}

/// A maximal run of segments whose dominant projections are proportional.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilliardBlock<I: Int> {
    pub start: usize,
    pub end: usize,
    pub length: RationalVector<I>,
}

impl<I: Int> PLPath<I> {
    /// Builds a path from displacements, dropping zero steps and merging
    /// adjacent positively proportional ones.
    pub fn from_steps(dim: usize, steps: Vec<RationalVector<I>>) -> Result<Self> {
        if let Some(s) = steps.iter().find(|s| s.dim() != dim) {
            return Err(Error::InvalidInput(format!("step {s} has dimension {} not {dim}", s.dim())));
        }
        Ok(Self::canonical(dim, steps))
    }

    pub(crate) fn canonical(dim: usize, steps: Vec<RationalVector<I>>) -> Self {
        let mut out: Vec<RationalVector<I>> = Vec::with_capacity(steps.len());
        for s in steps {
            if s.is_zero() {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if s.positive_multiple_of(last).is_some() {
                    *last = last.add(&s);
                    continue;
                }
            }
            out.push(s);
        }
        PLPath { dim, steps: out }
    }

    /// Builds a path from `(direction, duration)` pairs whose durations sum to one.
    pub fn from_segments(dim: usize, segments: &[(RationalVector<I>, Ratio<I>)]) -> Result<Self> {
        let mut total = Ratio::zero();
        for (d, t) in segments {
            if d.is_zero() {
                return Err(Error::InvalidInput("segment direction is zero".into()));
            }
            if !t.is_positive() {
                return Err(Error::InvalidInput("segment duration must be positive".into()));
            }
            total = total + t;
        }
        if !segments.is_empty() && !total.is_one() {
            return Err(Error::InvalidInput(format!("durations sum to {} instead of 1", format_ratio(&total))));
        }
        Self::from_steps(dim, segments.iter().map(|(d, t)| d.scale(t)).collect())
    }

    /// `π_λ(t) = tλ`.
    pub fn pi(lambda: &RationalVector<I>) -> Self {
        Self::canonical(lambda.dim(), vec![lambda.clone()])
    }

    pub fn trivial(dim: usize) -> Self {
        PLPath { dim, steps: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[RationalVector<I>] {
        &self.steps
    }

    pub fn num_segments(&self) -> usize {
        self.steps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> RationalVector<I> {
        self.steps.iter().fold(RationalVector::zero(self.dim), |acc, s| acc.add(s))
    }

    /// Points at the break times, starting with the origin and ending at the endpoint.
    pub fn vertices(&self) -> Vec<RationalVector<I>> {
        let mut pts = vec![RationalVector::zero(self.dim)];
        for s in &self.steps {
            let next = pts.last().expect("nonempty").add(s);
            pts.push(next);
        }
        pts
    }

    /// Follows `self`, then `other` translated to the endpoint of `self`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Self::canonical(self.dim, steps)
    }

    pub fn concat_all(dim: usize, parts: &[Self]) -> Self {
        Self::canonical(dim, parts.iter().flat_map(|p| p.steps.iter().cloned()).collect())
    }

    /// `p*(t) = p(1 − t) − p(1)`.
    pub fn reverse(&self) -> Self {
        PLPath { dim: self.dim, steps: self.steps.iter().rev().map(RationalVector::neg).collect() }
    }

    pub fn dilate(&self, k: &Ratio<I>) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidInput("dilation factor must be positive".into()));
        }
        Ok(PLPath { dim: self.dim, steps: self.steps.iter().map(|s| s.scale(k)).collect() })
    }

    /// Segment durations, summing to one.
    pub fn durations(&self, rs: &RootSystem) -> Vec<Ratio<I>> {
        let norms: Vec<Ratio<I>> = self.steps.iter().map(|s| rs.delta_norm(s)).collect();
        let total = norms.iter().fold(Ratio::zero(), |a: Ratio<I>, b| a + b);
        norms.into_iter().map(|n| n / total.clone()).collect()
    }

    /// Times of all vertices: `0`, the break times and `1`.
    pub fn times(&self, rs: &RootSystem) -> Vec<Ratio<I>> {
        let mut t = vec![Ratio::zero()];
        for d in self.durations(rs) {
            let next = t.last().expect("nonempty") + d;
            t.push(next);
        }
        if let Some(last) = t.last_mut() {
            if !self.steps.is_empty() {
                *last = Ratio::one();
            }
        }
        t
    }

    pub fn segments(&self, rs: &RootSystem) -> Vec<Segment<I>> {
        self.steps
            .iter()
            .zip(self.durations(rs))
            .map(|(s, d)| Segment { direction: s.scale(&d.recip()), duration: d })
            .collect()
    }

    /// `p(t)` for `t ∈ [0, 1]`.
    pub fn point_at(&self, rs: &RootSystem, t: &Ratio<I>) -> RationalVector<I> {
        let times = self.times(rs);
        let pts = self.vertices();
        for k in 0..self.steps.len() {
            if *t <= times[k + 1] {
                let f = (t - &times[k]) / (&times[k + 1] - &times[k]);
                return pts[k].add(&self.steps[k].scale(&f));
            }
        }
        pts.last().expect("nonempty").clone()
    }

    /// The piece on `[a, b]`, translated to start at the origin.
    pub fn restrict(&self, rs: &RootSystem, a: &Ratio<I>, b: &Ratio<I>) -> Result<Self> {
        if a.is_negative() || *b > Ratio::one() || a >= b {
            return Err(Error::InvalidInput("restriction needs 0 <= a < b <= 1".into()));
        }
        let times = self.times(rs);
        let mut steps = Vec::new();
        for k in 0..self.steps.len() {
            let (s, e) = (&times[k], &times[k + 1]);
            let lo = if a > s { a.clone() } else { s.clone() };
            let hi = if b < e { b.clone() } else { e.clone() };
            if lo < hi {
                let f = (hi - lo) / (e - s);
                steps.push(self.steps[k].scale(&f));
            }
        }
        Ok(Self::canonical(self.dim, steps))
    }
}

impl<I: Int> fmt::Display for PLPath<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Values of `α_i` at every vertex of the path.
pub fn height_values<I: Int>(p: &PLPath<I>, i: usize) -> Vec<Ratio<I>> {
    let mut h = vec![Ratio::zero()];
    for s in p.steps() {
        let next = h.last().expect("nonempty") + &s.0[i];
        h.push(next);
    }
    h
}

/// `m_α = min_t α(p(t))` for the simple root `α_i`; always at most zero.
pub fn height_min<I: Int>(p: &PLPath<I>, i: usize) -> Ratio<I> {
    height_values(p, i).into_iter().min().expect("nonempty")
}

/// Values of the local minima of `α_i ∘ p`, flat stretches counted once.
pub fn local_minima<I: Int>(p: &PLPath<I>, i: usize) -> Vec<Ratio<I>> {
    let mut g = height_values(p, i);
    g.dedup();
    let k = g.len();
    (0..k).filter(|&j| (j == 0 || g[j - 1] > g[j]) && (j + 1 == k || g[j + 1] > g[j])).map(|j| g[j].clone()).collect()
}

/// Every simple root attains an integral minimum.
pub fn in_p_z<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> bool {
    (0..rs.rank()).all(|i| height_min(p, i).is_integer())
}

/// Every local minimum of every simple root is integral.
pub fn in_p_z_loc<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> bool {
    (0..rs.rank()).all(|i| local_minima(p, i).iter().all(Ratio::is_integer))
}

/// Maximal billiard runs with their Δ-lengths.
pub fn billiard_blocks<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Vec<BilliardBlock<I>> {
    let mut out: Vec<BilliardBlock<I>> = Vec::new();
    for (k, s) in p.steps().iter().enumerate() {
        let d = dominant(rs, s);
        if let Some(b) = out.last_mut() {
            if d.positive_multiple_of(&b.length).is_some() {
                b.end = k + 1;
                b.length = b.length.add(&d);
                continue;
            }
        }
        out.push(BilliardBlock { start: k, end: k + 1, length: d });
    }
    out
}

/// `length_Δ(p)`: the sum of the dominant projections of all segments.
pub fn delta_length<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> RationalVector<I> {
    p.steps().iter().fold(RationalVector::zero(p.dim()), |acc, s| acc.add(&dominant(rs, s)))
}

pub fn is_billiard<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> bool {
    billiard_blocks(rs, p).len() <= 1
}

pub fn break_data<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Vec<Break<I>> {
    let segs = p.segments(rs);
    let times = p.times(rs);
    let pts = p.vertices();
    (1..segs.len())
        .map(|k| Break {
            index: k,
            time: times[k].clone(),
            point: pts[k].clone(),
            left: segs[k - 1].direction.clone(),
            right: segs[k].direction.clone(),
        })
        .collect()
}

/// Whether `offset + p(t)` stays in the dominant chamber.
pub fn contained_in_delta<I: Int>(offset: &RationalVector<I>, p: &PLPath<I>) -> bool {
    p.vertices().iter().all(|x| offset.add(x).is_dominant())
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SegmentJson {
    pub dir: Vec<String>,
    pub dur: String,
}

/// On-disk path format with rationals written as `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PathFile {
    pub system: String,
    pub segments: Vec<SegmentJson>,
}

impl PathFile {
    pub fn from_path<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Self {
        PathFile {
            system: rs.cartan_type().to_string(),
            segments: p
                .segments(rs)
                .into_iter()
                .map(|s| SegmentJson { dir: s.direction.to_strings(), dur: format_ratio(&s.duration) })
                .collect(),
        }
    }

    pub fn to_path<I: Int>(&self, rank: usize) -> Result<PLPath<I>> {
        let segs = self
            .segments
            .iter()
            .map(|s| {
                let d = s.dir.iter().map(|x| parse_ratio(x)).collect::<Result<Vec<_>>>()?;
                Ok((RationalVector(d), parse_ratio(&s.dur)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PLPath::from_segments(rank, &segs)
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("path serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn v(s: &str) -> RationalVector<i64> {
        RationalVector::parse(s).unwrap()
    }

    #[test]
    fn merge_proportional_steps() {
        let p = PLPath::from_steps(2, vec![v("1,0"), v("2,0"), v("0,1")]).unwrap();
        assert_eq!(p.steps(), &[v("3,0"), v("0,1")]);
    }

    #[test]
    fn reverse_is_involution() {
        let p = PLPath::from_steps(2, vec![v("1,0"), v("-1,2")]).unwrap();
        assert_eq!(p.reverse().reverse(), p);
        assert_eq!(p.reverse().endpoint(), p.endpoint().neg());
    }

    #[test]
    fn concat_break_time() {
        let rs = RootSystem::parse("A2").unwrap();
        let p = PLPath::pi(&v("1,0")).concat(&PLPath::pi(&v("0,1")));
        let b = break_data(&rs, &p);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].time, ratio(1, 2));
        assert_eq!(b[0].point, v("1,0"));
    }

    #[test]
    fn restrict_translates_to_origin() {
        let rs = RootSystem::parse("A2").unwrap();
        let p = PLPath::pi(&v("1,0")).concat(&PLPath::pi(&v("0,1")));
        let r = p.restrict(&rs, &ratio(1, 2), &ratio(1, 1)).unwrap();
        assert_eq!(r, PLPath::pi(&v("0,1")));
    }

    #[test]
    fn local_minima_with_plateau() {
        let p = PLPath::from_steps(1, vec![v("1"), v("-1"), v("1")]).unwrap();
        assert_eq!(local_minima(&p, 0), vec![ratio(0, 1), ratio(0, 1)]);
        let q = PLPath::from_steps(1, vec![v("1"), v("-1/2")]).unwrap();
        assert_eq!(local_minima(&q, 0), vec![ratio(0, 1), ratio(1, 2)]);
    }
}
