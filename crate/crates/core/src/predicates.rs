//! Path predicates: chain condition, Hecke, LS, generalized LS and
//! generalized Hecke paths.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chains::{find_chain, gtrsim_witness, Chain};
use crate::error::{Error, Result};
use crate::num::{format_ratio, Int, RationalVector};
use crate::paths::{billiard_blocks, delta_length, is_billiard, PLPath};
use crate::root_system::RootSystem;
use crate::weyl::{affine_stabilizer, dominant, is_vertex, reflect};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChainReport {
    pub vertices: Vec<Vec<String>>,
    /// Each root as coefficients over the simple roots.
    pub roots: Vec<Vec<i64>>,
}

impl ChainReport {
    pub fn new<I: Int>(rs: &RootSystem, c: &Chain<I>) -> Self {
        ChainReport {
            vertices: c.vertices.iter().map(RationalVector::to_strings).collect(),
            roots: c.roots.iter().map(|&r| rs.positive_roots()[r].coeffs.clone()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BreakReport {
    pub time: String,
    pub point: Vec<String>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Outcome of a path predicate with per-break witnesses.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PathVerdict {
    pub predicate: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub breaks: Vec<BreakReport>,
}

impl PathVerdict {
    fn fail(predicate: &str, reason: impl Into<String>) -> Self {
        PathVerdict { predicate: predicate.into(), verdict: false, reason: Some(reason.into()), breaks: Vec::new() }
    }

    fn from_breaks(predicate: &str, breaks: Vec<BreakReport>) -> Self {
        let verdict = breaks.iter().all(|b| b.ok);
        let reason = (!verdict).then(|| "a break point fails the condition".to_string());
        PathVerdict { predicate: predicate.into(), verdict, reason, breaks }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

struct BreakSite<I: Int> {
    time: Ratio<I>,
    point: RationalVector<I>,
    left: RationalVector<I>,
    right: RationalVector<I>,
}

fn sites<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Vec<BreakSite<I>> {
    sites_from(rs, &RationalVector::zero(p.dim()), p)
}

fn sites_from<I: Int>(rs: &RootSystem, offset: &RationalVector<I>, p: &PLPath<I>) -> Vec<BreakSite<I>> {
    let times = p.times(rs);
    let pts: Vec<RationalVector<I>> = p.vertices().iter().map(|x| offset.add(x)).collect();
    let steps = p.steps();
    (1..steps.len())
        .map(|k| BreakSite {
            time: times[k].clone(),
            point: pts[k].clone(),
            left: steps[k - 1].clone(),
            right: steps[k].clone(),
        })
        .collect()
}

fn report<I: Int>(rs: &RootSystem, site: &BreakSite<I>, chain: Option<Chain<I>>, failure: &str) -> BreakReport {
    BreakReport {
        time: format_ratio(&site.time),
        point: site.point.to_strings(),
        ok: chain.is_some(),
        reason: chain.is_none().then(|| failure.to_string()),
        chain: chain.map(|c| ChainReport::new(rs, &c)),
    }
}

/// At every break `p(t)`: `p'_-(t) ≳_{W_{p(t)}} p'_+(t)`.
pub fn satisfies_chain_condition<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<PathVerdict> {
    let mut out = Vec::new();
    for s in sites(rs, p) {
        let sub = affine_stabilizer(rs, &s.point).roots;
        let c = gtrsim_witness(rs, &s.left, &s.right, sub)?;
        out.push(report(rs, &s, c, "no stabilizer chain ends in the chamber of the outgoing direction"));
    }
    Ok(PathVerdict::from_breaks("chain", out))
}

/// Billiard path with `p'_-(t) ≥_{W_{p(t)}} p'_+(t)` at every break.
pub fn is_hecke_path<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<PathVerdict> {
    is_hecke_path_from(rs, &RationalVector::zero(p.dim()), p)
}

/// [`is_hecke_path`] for the translate `offset + p`.
pub fn is_hecke_path_from<I: Int>(rs: &RootSystem, offset: &RationalVector<I>, p: &PLPath<I>) -> Result<PathVerdict> {
    if !is_billiard(rs, p) {
        return Ok(PathVerdict::fail("hecke", "not a billiard path"));
    }
    let mut out = Vec::new();
    for s in sites_from(rs, offset, p) {
        let sub = affine_stabilizer(rs, &s.point).roots;
        let c = find_chain(rs, &s.left, &s.right, sub, false)?;
        out.push(report(rs, &s, c, "no stabilizer chain from the incoming to the outgoing direction"));
    }
    Ok(PathVerdict::from_breaks("hecke", out))
}

/// Hecke path whose break chains can all be taken of length one.
pub fn satisfies_simple_chain_condition<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<PathVerdict> {
    if !is_billiard(rs, p) {
        return Ok(PathVerdict::fail("simple-chain", "not a billiard path"));
    }
    let mut out = Vec::new();
    for s in sites(rs, p) {
        let sub = affine_stabilizer(rs, &s.point).roots;
        let mut found = None;
        for r in sub.iter() {
            if rs.evaluate_root(r, &s.left).is_negative() {
                let t = reflect(rs, r, &s.left);
                if t.positive_multiple_of(&s.right).is_some() {
                    found = Some(Chain { vertices: vec![s.left.clone(), t], roots: vec![r] });
                    break;
                }
            }
        }
        out.push(report(
            rs,
            &s,
            found,
            "no single stabilizer reflection carries the incoming to the outgoing direction",
        ));
    }
    Ok(PathVerdict::from_breaks("simple-chain", out))
}

fn check_dominant_coweight<I: Int>(lambda: &RationalVector<I>) -> Result<()> {
    if !lambda.is_dominant() || !lambda.is_integral() {
        return Err(Error::InvalidInput(format!("{lambda} is not a dominant coweight")));
    }
    Ok(())
}

/// LS path of Δ-length `λ`: billiard, strictly decreasing directions in
/// `W·λ`, and at each break a stabilizer chain that is maximal in `W`.
pub fn is_ls_path<I: Int>(rs: &RootSystem, p: &PLPath<I>, lambda: &RationalVector<I>) -> Result<PathVerdict> {
    rs.check_dim(lambda)?;
    check_dominant_coweight(lambda)?;
    if lambda.is_zero() {
        return Ok(if p.is_trivial() {
            PathVerdict::from_breaks("ls", Vec::new())
        } else {
            PathVerdict::fail("ls", "only the constant path has Δ-length 0")
        });
    }
    for s in p.steps() {
        if dominant(rs, s).positive_multiple_of(lambda).is_none() {
            return Ok(PathVerdict::fail("ls", format!("segment {s} is not in the orbit direction of {lambda}")));
        }
    }
    if delta_length(rs, p) != *lambda {
        return Ok(PathVerdict::fail("ls", format!("Δ-length is not {lambda}")));
    }
    let mut out = Vec::new();
    for s in sites(rs, p) {
        let sub = affine_stabilizer(rs, &s.point).roots;
        let c = find_chain(rs, &s.left, &s.right, sub, true)?;
        out.push(report(rs, &s, c, "no stabilizer chain that is maximal in W"));
    }
    Ok(PathVerdict::from_breaks("ls", out))
}

/// Splits `p` into consecutive pieces of Δ-lengths `λ_1, …, λ_r`.
fn split_blocks<I: Int>(
    rs: &RootSystem,
    p: &PLPath<I>,
    blocks: &[RationalVector<I>],
) -> std::result::Result<Vec<PLPath<I>>, String> {
    let mut pieces = Vec::new();
    let mut pending: Vec<RationalVector<I>> = p.steps().to_vec();
    pending.reverse();
    for lambda in blocks {
        let mut acc = RationalVector::zero(p.dim());
        let mut steps = Vec::new();
        while acc != *lambda {
            let Some(s) = pending.pop() else {
                return Err(format!("path ends before block {lambda} is complete"));
            };
            let d = dominant(rs, &s);
            let remaining = lambda.sub(&acc);
            if d.positive_multiple_of(lambda).is_none() {
                return Err(format!("segment {s} does not match block {lambda}"));
            }
            let f = remaining.positive_multiple_of(&d).ok_or("block overshoot")?;
            if f >= Ratio::one() {
                acc = acc.add(&d);
                steps.push(s);
            } else {
                steps.push(s.scale(&f));
                pending.push(s.scale(&(Ratio::one() - f)));
                acc = lambda.clone();
            }
        }
        pieces.push(PLPath::canonical(p.dim(), steps));
    }
    if !pending.is_empty() {
        return Err("path continues past the last block".into());
    }
    Ok(pieces)
}

/// Concatenation of LS paths of Δ-lengths `λ_1, …, λ_r` with `≳` at each
/// junction, taken in the affine stabilizer of the junction point.
pub fn is_generalized_ls1<I: Int>(rs: &RootSystem, p: &PLPath<I>, blocks: &[RationalVector<I>]) -> Result<PathVerdict> {
    if blocks.is_empty() {
        return Err(Error::InvalidInput("empty block list".into()));
    }
    for b in blocks {
        rs.check_dim(b)?;
        check_dominant_coweight(b)?;
        if b.is_zero() {
            return Err(Error::InvalidInput("blocks must be nonzero".into()));
        }
    }
    let pieces = match split_blocks(rs, p, blocks) {
        Ok(x) => x,
        Err(reason) => return Ok(PathVerdict::fail("gen-ls", reason)),
    };
    let mut breaks = Vec::new();
    let mut verdict = true;
    let mut reason = None;
    let mut origin = RationalVector::zero(p.dim());
    let mut elapsed = Ratio::<I>::from_integer(I::zero());
    let total = rs.delta_norm(&p.steps().iter().fold(RationalVector::zero(p.dim()), |a, s| a.add(&dominant(rs, s))));
    for (k, (piece, lambda)) in pieces.iter().zip(blocks).enumerate() {
        let v = is_ls_path(rs, piece, lambda)?;
        if !v.verdict && verdict {
            verdict = false;
            reason = Some(format!("block {} is not LS: {}", k + 1, v.reason.clone().unwrap_or_default()));
        }
        breaks.extend(v.breaks);
        let end = origin.add(&piece.endpoint());
        elapsed = elapsed + rs.delta_norm(lambda) / total.clone();
        if let Some(next) = pieces.get(k + 1) {
            let site = BreakSite {
                time: elapsed.clone(),
                point: end.clone(),
                left: piece.steps().last().expect("nonempty block").clone(),
                right: next.steps()[0].clone(),
            };
            let sub = affine_stabilizer(rs, &end).roots;
            let c = gtrsim_witness(rs, &site.left, &site.right, sub)?;
            let r = report(rs, &site, c, "junction fails the ≳ relation");
            if !r.ok && verdict {
                verdict = false;
                reason = Some(format!("junction after block {} fails", k + 1));
            }
            breaks.push(r);
        }
        origin = end;
    }
    Ok(PathVerdict { predicate: "gen-ls".into(), verdict, reason, breaks })
}

/// Δ-lengths of the maximal billiard blocks of `p`.
pub fn block_lengths<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Vec<RationalVector<I>> {
    billiard_blocks(rs, p).into_iter().map(|b| b.length).collect()
}

/// Whether the dominant projection of `v` is a multiple of one fundamental coweight.
fn fundamental_type<I: Int>(rs: &RootSystem, v: &RationalVector<I>) -> Option<usize> {
    let d = dominant(rs, v);
    let nz: Vec<usize> = (0..d.dim()).filter(|&i| !d.0[i].is_zero()).collect();
    (nz.len() == 1).then(|| nz[0])
}

/// Chain condition, segments along `W·ϖ_i`, and every vertex of the path
/// a vertex of the affine Coxeter complex.
pub fn is_generalized_hecke<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<PathVerdict> {
    for s in p.steps() {
        if fundamental_type(rs, s).is_none() {
            return Ok(PathVerdict::fail(
                "gen-hecke",
                format!("segment {s} is not along a W-conjugate of a fundamental coweight"),
            ));
        }
    }
    if let Some(x) = p.vertices().iter().find(|x| !is_vertex(rs, *x)) {
        return Ok(PathVerdict::fail("gen-hecke", format!("{x} is not a vertex of the affine Coxeter complex")));
    }
    let mut v = satisfies_chain_condition(rs, p)?;
    v.predicate = "gen-hecke".into();
    Ok(v)
}

/// Checks that `k_R · p` is a generalized LS path for its blockwise Δ-lengths.
pub fn check_dilation_theorem<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<PathVerdict> {
    if !is_generalized_hecke(rs, p)?.verdict {
        return Err(Error::InvalidInput("path is not a generalized Hecke path".into()));
    }
    if p.is_trivial() {
        return Ok(PathVerdict::from_breaks("dilation", Vec::new()));
    }
    let k = Ratio::from_integer(I::from(rs.saturation_factor() as i64));
    let q = p.dilate(&k)?;
    let mut v = is_generalized_ls1(rs, &q, &block_lengths(rs, &q))?;
    v.predicate = "dilation".into();
    Ok(v)
}
