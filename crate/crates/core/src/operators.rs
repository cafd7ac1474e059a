//! Root operators `e_α` and `f_α` on piecewise-linear paths.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::num::{Int, RationalVector};
use crate::paths::{height_values, PLPath};
use crate::predicates::{block_lengths, is_generalized_ls1};
use crate::root_system::RootSystem;
use crate::weyl::simple_reflect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// A sequence of root operators applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OperatorWord(pub Vec<(Op, usize)>);

impl FromStr for OperatorWord {
    type Err = Error;

    /// Parses `"f1 f2 e1"` with 1-based simple-root indices.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for tok in s.split([' ', ',']).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("invalid operator `{tok}`"));
            let (op, idx) = tok.split_at(1);
            let op = match op {
                "e" | "E" => Op::E,
                "f" | "F" => Op::F,
                _ => return Err(bad()),
            };
            let i: usize = idx.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            out.push((op, i - 1));
        }
        Ok(OperatorWord(out))
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|(op, i)| format!("{}{}", if *op == Op::E { "e" } else { "f" }, i + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `e_{α_i}(p)`, or `None` when `m_α > −1`.
///
/// Between the last time before the minimum where `α ∘ p` equals `m + 1`
/// and the first time it attains `m`, the pieces running along the current
/// minimum are reflected by `τ_α`; the rest of the path is translated by
/// `α^∨`. Time is preserved pointwise.
pub fn e_alpha<I: Int>(rs: &RootSystem, p: &PLPath<I>, i: usize) -> Option<PLPath<I>> {
    let h = height_values(p, i);
    let m = h.iter().min().expect("nonempty").clone();
    let one = Ratio::<I>::one();
    if m > -one.clone() {
        return None;
    }
    let top = m.clone() + one;
    let steps = p.steps();
    let k = (0..steps.len()).find(|&k| h[k + 1] < top).expect("path reaches its minimum");
    let k1 = h.iter().position(|x| *x == m).expect("minimum attained");
    let mut out: Vec<RationalVector<I>> = steps[..k].to_vec();
    let f = (top.clone() - &h[k]) / (&h[k + 1] - &h[k]);
    out.push(steps[k].scale(&f));
    let mut pieces = vec![steps[k].scale(&(Ratio::one() - f))];
    pieces.extend(steps[k + 1..k1].iter().cloned());
    let mut cur = top.clone();
    let mut run_min = top;
    for d in pieces {
        let slope = d.0[i].clone();
        if cur == run_min {
            if slope.is_negative() {
                out.push(simple_reflect(rs, i, &d));
                cur = cur + slope;
                run_min = cur.clone();
            } else {
                out.push(d);
                cur = cur + slope;
            }
        } else if !slope.is_negative() || cur.clone() + &slope >= run_min {
            out.push(d);
            cur = cur + slope;
        } else {
            let g = (run_min.clone() - &cur) / &slope;
            out.push(d.scale(&g));
            out.push(simple_reflect(rs, i, &d.scale(&(Ratio::one() - g))));
            cur = cur + slope;
            run_min = cur.clone();
        }
    }
    debug_assert!(cur == m);
    out.extend(steps[k1..].iter().cloned());
    Some(PLPath::canonical(p.dim(), out))
}

/// `f_{α_i}(p) = (e_{α_i}(p*))*`, defined iff `m_α ≤ α(p(1)) − 1`.
pub fn f_alpha<I: Int>(rs: &RootSystem, p: &PLPath<I>, i: usize) -> Option<PLPath<I>> {
    e_alpha(rs, &p.reverse(), i).map(|q| q.reverse())
}

pub fn apply_op<I: Int>(rs: &RootSystem, p: &PLPath<I>, op: Op, i: usize) -> Option<PLPath<I>> {
    match op {
        Op::E => e_alpha(rs, p, i),
        Op::F => f_alpha(rs, p, i),
    }
}

/// Applies the word left to right; `None` if some operator is undefined.
pub fn apply_word<I: Int>(rs: &RootSystem, p: &PLPath<I>, word: &OperatorWord) -> Result<Option<PLPath<I>>> {
    let mut cur = p.clone();
    for &(op, i) in &word.0 {
        if i >= rs.rank() {
            return Err(Error::InvalidInput(format!("simple root index {} out of range", i + 1)));
        }
        match apply_op(rs, &cur, op, i) {
            Some(q) => cur = q,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// Breadth-first closure of `{seed}` under all `f_α`.
pub fn generate_f_orbit<I: Int>(rs: &RootSystem, seed: &PLPath<I>, bound: usize) -> Result<Vec<PLPath<I>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(p) = queue.pop_front() {
        for i in 0..rs.rank() {
            if let Some(q) = f_alpha(rs, &p, i) {
                if !seen.contains(&q) {
                    if seen.len() >= bound {
                        return Err(Error::BoundExceeded { what: "F-orbit", bound, partial: seen.len() });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Applies `e` operators greedily until none is defined.
pub fn raise_to_dominant<I: Int>(rs: &RootSystem, p: &PLPath<I>) -> Result<(PLPath<I>, OperatorWord)> {
    if !p.is_trivial() {
        let blocks = block_lengths(rs, p);
        if blocks.iter().any(|b| !b.is_integral()) || !is_generalized_ls1(rs, p, &blocks)?.verdict {
            return Err(Error::InvalidInput("path is not a generalized LS path".into()));
        }
    }
    let mut cur = p.clone();
    let mut word = Vec::new();
    loop {
        let mut changed = false;
        for i in 0..rs.rank() {
            while let Some(q) = e_alpha(rs, &cur, i) {
                cur = q;
                word.push((Op::E, i));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok((cur, OperatorWord(word)))
}

/// Whether `e_{α_i}` is defined: `m_α ≤ −1`.
pub fn e_defined<I: Int>(p: &PLPath<I>, i: usize) -> bool {
    let m = crate::paths::height_min(p, i);
    m <= -Ratio::<I>::one()
}

/// Whether `f_{α_i}` is defined: `m_α ≤ α(p(1)) − 1`.
pub fn f_defined<I: Int>(p: &PLPath<I>, i: usize) -> bool {
    let m = crate::paths::height_min(p, i);
    m <= p.endpoint().0[i].clone() - Ratio::<I>::one()
}
