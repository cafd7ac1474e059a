//! Searches for Hecke paths between dominant coweights and enumeration of
//! generalized Hecke paths.
//!
//! A Hecke path breaks only where some root `β` with `β(x) ∈ Z` is negative
//! on the incoming direction, so candidate break times are the crossings of
//! integer levels of such roots. The search enumerates exactly those times,
//! which makes it exhaustive; the denominator bound is an extra filter and
//! the result records whether it ever cut a candidate.

use std::collections::{BTreeSet, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chains::{gtrsim, lower_set};
use crate::error::{Error, Result};
use crate::num::{Int, RationalVector};
use crate::paths::{contained_in_delta, delta_length, PLPath, PathFile};
use crate::predicates::{
    block_lengths, check_dilation_theorem, is_generalized_hecke, is_generalized_ls1, is_hecke_path_from,
};
use crate::root_system::RootSystem;
use crate::weyl::{affine_stabilizer, is_vertex, orbit};

/// Outcome of [`hecke_exists`].
#[derive(Clone, Debug)]
pub struct HeckeResult<I: Int> {
    pub exists: bool,
    pub witness: Option<PLPath<I>>,
    pub denominator_bound: u64,
    /// True when no candidate break time was rejected by the bound.
    pub complete: bool,
    pub pruned: usize,
    pub explored: usize,
}

#[derive(Serialize)]
struct HeckeJson {
    exists: bool,
    denominator_bound: u64,
    complete: bool,
    pruned: usize,
    explored: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PathFile>,
}

impl<I: Int> HeckeResult<I> {
    pub fn to_json(&self, rs: &RootSystem) -> String {
        let j = HeckeJson {
            exists: self.exists,
            denominator_bound: self.denominator_bound,
            complete: self.complete,
            pruned: self.pruned,
            explored: self.explored,
            witness: self.witness.as_ref().map(|p| PathFile::from_path(rs, p)),
        };
        serde_json::to_string_pretty(&j).expect("result serializes")
    }
}

/// `k_R · (max root height) · lcm(Cartan determinants)`.
pub fn default_denominator_bound(rs: &RootSystem) -> u64 {
    let l = rs.cartan_determinants().iter().fold(1u64, |a, &d| a.lcm(&(d as u64)));
    rs.saturation_factor() * rs.max_root_height() as u64 * l
}

fn check_dominant<I: Int>(rs: &RootSystem, v: &RationalVector<I>, name: &str) -> Result<()> {
    rs.check_dim(v)?;
    if !v.is_dominant() {
        return Err(Error::InvalidInput(format!("{name} = {v} is not dominant")));
    }
    Ok(())
}

struct Search<'a, I: Int> {
    rs: &'a RootSystem,
    gamma: RationalVector<I>,
    bound: u64,
    pruned: usize,
    explored: usize,
    dead: HashSet<(RationalVector<I>, RationalVector<I>, Ratio<I>)>,
    steps: Vec<RationalVector<I>>,
}

impl<I: Int> Search<'_, I> {
    /// Walks from `x` along `nu` with `r` time left.
    fn dfs(&mut self, x: &RationalVector<I>, nu: &RationalVector<I>, r: &Ratio<I>) -> Result<bool> {
        self.explored += 1;
        let end = x.add(&nu.scale(r));
        if end == self.gamma {
            self.steps.push(nu.scale(r));
            return Ok(true);
        }
        let key = (x.clone(), nu.clone(), r.clone());
        if self.dead.contains(&key) {
            return Ok(false);
        }
        let rs = self.rs;
        let mut cands: BTreeSet<Ratio<I>> = BTreeSet::new();
        for b in 0..rs.num_positive_roots() {
            let bv = rs.evaluate_root(b, nu);
            if !bv.is_negative() {
                continue;
            }
            let bx = rs.evaluate_root(b, x);
            let lo = bx.clone() + bv.clone() * r;
            let mut k = lo.floor() + Ratio::one();
            while k < bx {
                cands.insert((k.clone() - &bx) / &bv);
                k = k + Ratio::one();
            }
        }
        let elapsed = Ratio::<I>::one() - r;
        for s in cands {
            let y = x.add(&nu.scale(&s));
            if !y.is_dominant() {
                break;
            }
            let t = elapsed.clone() + &s;
            if t.denom().to_u64().is_none_or(|d| d > self.bound) {
                self.pruned += 1;
                continue;
            }
            let sub = affine_stabilizer(rs, &y).roots;
            let rest = r.clone() - &s;
            for mu in lower_set(rs, nu, sub)?.into_iter().skip(1) {
                self.steps.push(nu.scale(&s));
                if self.dfs(&y, &mu, &rest)? {
                    return Ok(true);
                }
                self.steps.pop();
            }
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// Searches for a Hecke path in the dominant chamber from `α` to `γ` with
/// Δ-length `β` whose break times have denominators at most the bound.
pub fn hecke_exists<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
    gamma: &RationalVector<I>,
    denominator_bound: Option<u64>,
) -> Result<HeckeResult<I>> {
    check_dominant(rs, alpha, "alpha")?;
    check_dominant(rs, beta, "beta")?;
    check_dominant(rs, gamma, "gamma")?;
    if !beta.is_integral() {
        return Err(Error::InvalidInput(format!("beta = {beta} is not a coweight")));
    }
    let bound = denominator_bound.unwrap_or_else(|| default_denominator_bound(rs));
    if beta.is_zero() {
        let exists = alpha == gamma;
        return Ok(HeckeResult {
            exists,
            witness: exists.then(|| PLPath::trivial(rs.rank())),
            denominator_bound: bound,
            complete: true,
            pruned: 0,
            explored: 1,
        });
    }
    let mut search =
        Search { rs, gamma: gamma.clone(), bound, pruned: 0, explored: 0, dead: HashSet::new(), steps: Vec::new() };
    let mut found = None;
    for nu in orbit(rs, beta)? {
        search.steps.clear();
        if search.dfs(alpha, &nu, &Ratio::one())? {
            found = Some(PLPath::from_steps(rs.rank(), search.steps.clone())?);
            break;
        }
    }
    if let Some(p) = &found {
        let ok = is_hecke_path_from(rs, alpha, p)?.verdict
            && contained_in_delta(alpha, p)
            && delta_length(rs, p) == *beta
            && alpha.add(&p.endpoint()) == *gamma;
        if !ok {
            return Err(Error::Internal(format!("Hecke witness {p} failed re-verification")));
        }
    }
    Ok(HeckeResult {
        exists: found.is_some(),
        witness: found,
        denominator_bound: bound,
        complete: search.pruned == 0,
        pruned: search.pruned,
        explored: search.explored,
    })
}

/// Splits a block `k ϖ_j` into `(j, k)`.
fn block_type<I: Int>(rs: &RootSystem, b: &RationalVector<I>) -> Result<(usize, Ratio<I>)> {
    rs.check_dim(b)?;
    let nz: Vec<usize> = (0..b.dim()).filter(|&i| !b.0[i].is_zero()).collect();
    if nz.len() != 1 || !b.0[nz[0]].is_positive() || !b.is_integral() {
        return Err(Error::InvalidInput(format!("block {b} is not a positive multiple of a fundamental coweight")));
    }
    Ok((nz[0], b.0[nz[0]].clone()))
}

fn validate_blocks<I: Int>(rs: &RootSystem, blocks: &[RationalVector<I>]) -> Result<Vec<(usize, Ratio<I>)>> {
    let types = blocks.iter().map(|b| block_type(rs, b)).collect::<Result<Vec<_>>>()?;
    if types.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::InvalidInput("consecutive blocks must have distinct types".into()));
    }
    Ok(types)
}

struct Enumerator<'a, I: Int> {
    rs: &'a RootSystem,
    types: Vec<(usize, Ratio<I>)>,
    orbits: Vec<Vec<RationalVector<I>>>,
    step: Ratio<I>,
    coord_bound: Ratio<I>,
    limit: usize,
    out: Vec<PLPath<I>>,
    steps: Vec<RationalVector<I>>,
}

impl<I: Int> Enumerator<'_, I> {
    fn go(&mut self, x: &RationalVector<I>, block: usize, remaining: Ratio<I>) -> Result<()> {
        if remaining.is_zero() {
            if block + 1 == self.types.len() {
                if self.out.len() >= self.limit {
                    return Err(Error::BoundExceeded {
                        what: "generalized Hecke enumeration",
                        bound: self.limit,
                        partial: self.out.len(),
                    });
                }
                self.out.push(PLPath::canonical(self.rs.rank(), self.steps.clone()));
                return Ok(());
            }
            let next = self.types[block + 1].1.clone();
            return self.go(x, block + 1, next);
        }
        let sub = affine_stabilizer(self.rs, x).roots;
        let prev = self.steps.last().cloned();
        for w in self.orbits[block].clone() {
            if let Some(p) = &prev {
                if w.positive_multiple_of(p).is_some() || !gtrsim(self.rs, p, &w, sub)? {
                    continue;
                }
            }
            let mut t = self.step.clone();
            while t <= remaining {
                let y = x.add(&w.scale(&t));
                if y.0.iter().all(|c| c.abs() <= self.coord_bound) && is_vertex(self.rs, &y) {
                    self.steps.push(w.scale(&t));
                    self.go(&y, block, remaining.clone() - &t)?;
                    self.steps.pop();
                }
                t = t + &self.step;
            }
        }
        Ok(())
    }
}

/// All generalized Hecke paths whose block `i` runs along `W·ϖ_{j_i}` with
/// Δ-length `λ_i`, breaking at vertices with all coordinates in
/// `[-coord_bound, coord_bound]`.
pub fn enumerate_generalized_hecke<I: Int>(
    rs: &RootSystem,
    blocks: &[RationalVector<I>],
    coord_bound: i64,
    limit: usize,
) -> Result<Vec<PLPath<I>>> {
    let types = validate_blocks(rs, blocks)?;
    let orbits = types.iter().map(|(j, _)| orbit(rs, &rs.fundamental_coweight::<I>(*j))).collect::<Result<Vec<_>>>()?;
    if types.is_empty() {
        return Ok(vec![PLPath::trivial(rs.rank())]);
    }
    let mut e = Enumerator {
        rs,
        step: Ratio::new(I::one(), I::from(rs.saturation_factor() as i64)),
        coord_bound: Ratio::from_integer(I::from(coord_bound)),
        orbits,
        limit,
        out: Vec::new(),
        steps: Vec::new(),
        types,
    };
    let first = e.types[0].1.clone();
    e.go(&RationalVector::zero(rs.rank()), 0, first)?;
    Ok(e.out)
}

/// Outcome of [`dilation_sweep`].
#[derive(Clone, Debug, Serialize)]
pub struct DilationReport {
    pub system: String,
    pub blocks: Vec<Vec<String>>,
    pub paths_checked: usize,
    pub counterexamples: Vec<PathFile>,
    /// Paths that are not generalized LS before dilation.
    pub need_dilation: usize,
}

/// Checks the dilation property on every enumerated generalized Hecke path.
pub fn dilation_sweep<I: Int>(
    rs: &RootSystem,
    blocks: &[RationalVector<I>],
    coord_bound: i64,
    limit: usize,
) -> Result<DilationReport> {
    let paths = enumerate_generalized_hecke(rs, blocks, coord_bound, limit)?;
    let mut counterexamples = Vec::new();
    let mut need_dilation = 0;
    for p in &paths {
        if !is_generalized_hecke(rs, p)?.verdict {
            return Err(Error::Internal(format!("enumerated path {p} is not generalized Hecke")));
        }
        if !check_dilation_theorem(rs, p)?.verdict {
            counterexamples.push(PathFile::from_path(rs, p));
        }
        let own = block_lengths(rs, p);
        if own.iter().any(|b| !b.is_integral()) || !is_generalized_ls1(rs, p, &own)?.verdict {
            need_dilation += 1;
        }
    }
    Ok(DilationReport {
        system: rs.cartan_type().to_string(),
        blocks: blocks.iter().map(RationalVector::to_strings).collect(),
        paths_checked: paths.len(),
        counterexamples,
        need_dilation,
    })
}

/// Block lists `(k_1 ϖ_{j_1}, …)` with consecutive types distinct,
/// `1 ≤ k_i ≤ max_multiple` and at most `max_blocks` blocks.
pub fn block_lists<I: Int>(rs: &RootSystem, max_multiple: i64, max_blocks: usize) -> Vec<Vec<RationalVector<I>>> {
    let n = rs.rank();
    let mut out: Vec<Vec<(usize, i64)>> = vec![];
    let mut frontier: Vec<Vec<(usize, i64)>> = vec![vec![]];
    for _ in 0..max_blocks {
        let mut next = Vec::new();
        for cur in &frontier {
            for j in 0..n {
                if cur.last().is_some_and(|&(last, _)| last == j) {
                    continue;
                }
                for k in 1..=max_multiple {
                    let mut c = cur.clone();
                    c.push((j, k));
                    next.push(c);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter()
        .map(|bl| {
            bl.into_iter()
                .map(|(j, k)| {
                    let mut b = RationalVector::zero(n);
                    b.0[j] = Ratio::from_integer(I::from(k));
                    b
                })
                .collect()
        })
        .collect()
}
