//! Tensor-product decompositions for the dual group, by paths and by an
//! independent character oracle.
//!
//! The oracle computes weight multiplicities with Freudenthal's formula and
//! tensor products with the Brauer–Klimyk rule, using the W-invariant form
//! `B(u, v) = Σ_{β>0} β(u) β(v)` on coweights.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::num::{format_ivec, IVec, Int, RationalVector};
use crate::operators::generate_f_orbit;
use crate::paths::{contained_in_delta, PLPath};
use crate::root_system::RootSystem;
use crate::weyl::{dominant_ivec, reflect_ivec};

/// Weight multiplicities of one irreducible representation.
pub struct WeightTable {
    pub highest: IVec,
    pub dominant: Vec<(IVec, BigInt)>,
    pub all: Vec<(IVec, BigInt)>,
}

/// Multiplicities `n_{α,β}(γ)` of `V_γ` in `V_α ⊗ V_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable {
    pub alpha: IVec,
    pub beta: IVec,
    pub entries: BTreeMap<IVec, BigInt>,
}

#[derive(Serialize)]
struct Row {
    gamma: IVec,
    mult: serde_json::Value,
}

impl DecompositionTable {
    pub fn get(&self, gamma: &[i64]) -> BigInt {
        self.entries.get(gamma).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn contains(&self, gamma: &[i64]) -> bool {
        self.entries.contains_key(gamma)
    }

    /// `Σ_γ n(γ) · dim V_γ`.
    pub fn total_dim(&self, rs: &RootSystem) -> BigInt {
        self.entries.iter().map(|(g, n)| n * weyl_dim(rs, g)).sum()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Row> = self
            .entries
            .iter()
            .map(|(g, n)| Row {
                gamma: g.clone(),
                mult: n.to_u64().map(serde_json::Value::from).unwrap_or_else(|| serde_json::Value::from(n.to_string())),
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("table serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("gamma,mult\n");
        for (g, n) in &self.entries {
            out.push_str(&format!("\"{}\",{}\n", format_ivec(g), n));
        }
        out
    }
}

fn form(rs: &RootSystem, u: &[i64], v: &[i64]) -> i64 {
    rs.positive_roots()
        .iter()
        .map(|r| {
            let a: i64 = r.coeffs.iter().zip(u).map(|(c, x)| c * x).sum();
            let b: i64 = r.coeffs.iter().zip(v).map(|(c, x)| c * x).sum();
            a * b
        })
        .sum()
}

fn plus_rho(v: &[i64]) -> IVec {
    v.iter().map(|x| x + 1).collect()
}

fn integral_dominant<I: Int>(rs: &RootSystem, v: &RationalVector<I>) -> Result<IVec> {
    rs.check_dim(v)?;
    match v.to_ivec() {
        Some(x) if x.iter().all(|&c| c >= 0) => Ok(x),
        _ => Err(Error::InvalidInput(format!("{v} is not a dominant coweight"))),
    }
}

/// `dim V_λ` by the Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for r in rs.positive_roots() {
        let a: i64 = r.coeffs.iter().zip(lambda).map(|(c, x)| c * (x + 1)).sum();
        num *= BigInt::from(a);
        den *= BigInt::from(r.height);
    }
    num / den
}

pub fn dim<I: Int>(rs: &RootSystem, lambda: &RationalVector<I>) -> Result<BigInt> {
    Ok(weyl_dim(rs, &integral_dominant(rs, lambda)?))
}

fn orbit_ivec(rs: &RootSystem, v: &[i64]) -> Vec<IVec> {
    let mut seen: HashSet<IVec> = HashSet::new();
    let mut out = vec![v.to_vec()];
    seen.insert(v.to_vec());
    let mut k = 0;
    while k < out.len() {
        for i in 0..rs.rank() {
            let w = reflect_ivec(rs, i, &out[k]);
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
        k += 1;
    }
    out
}

fn compute_weights(rs: &RootSystem, lambda: &IVec) -> WeightTable {
    let coroots: Vec<&IVec> = rs.positive_roots().iter().map(|r| &r.coroot).collect();
    let mut dom: Vec<IVec> = vec![lambda.clone()];
    let mut seen: HashSet<IVec> = dom.iter().cloned().collect();
    let mut k = 0;
    while k < dom.len() {
        for c in &coroots {
            let nu: IVec = dom[k].iter().zip(c.iter()).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&x| x >= 0) && seen.insert(nu.clone()) {
                dom.push(nu);
            }
        }
        k += 1;
    }
    let depth = |mu: &IVec| -> i64 {
        let diff: IVec = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        let q = rs.coroot_coordinates(&RationalVector::<i64>::from_ints(&diff));
        q.0.iter().map(|x| x.to_integer()).sum()
    };
    dom.sort_by_key(|mu| (depth(mu), std::cmp::Reverse(mu.clone())));
    let lr = plus_rho(lambda);
    let norm_l = form(rs, &lr, &lr);
    let mut mult: HashMap<IVec, BigInt> = HashMap::new();
    let mut dominant = Vec::new();
    for mu in &dom {
        let m = if mu == lambda {
            BigInt::one()
        } else {
            let mut sum = BigInt::zero();
            for c in &coroots {
                let mut kk = 1i64;
                loop {
                    let nu: IVec = mu.iter().zip(c.iter()).map(|(a, b)| a + kk * b).collect();
                    let d = dominant_ivec(rs, &nu);
                    let Some(md) = mult.get(&d) else { break };
                    sum += md * BigInt::from(form(rs, &nu, c));
                    kk += 1;
                }
            }
            let mr = plus_rho(mu);
            let den = norm_l - form(rs, &mr, &mr);
            (sum * 2) / BigInt::from(den)
        };
        mult.insert(mu.clone(), m.clone());
        dominant.push((mu.clone(), m));
    }
    let mut all = Vec::new();
    for (mu, m) in &dominant {
        for w in orbit_ivec(rs, mu) {
            all.push((w, m.clone()));
        }
    }
    WeightTable { highest: lambda.clone(), dominant, all }
}

/// Weight multiplicities of `V_λ`, memoized on the root system.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &[i64]) -> Result<Arc<WeightTable>> {
    let key = lambda.to_vec();
    rs.caches.weights.get_or_insert_with(&key, || Ok(compute_weights(rs, &key)))
}

fn brauer_klimyk(rs: &RootSystem, alpha: &IVec, beta: &IVec) -> Result<BTreeMap<IVec, BigInt>> {
    let wt = weight_multiplicities(rs, beta)?;
    let mut acc: BTreeMap<IVec, BigInt> = BTreeMap::new();
    for (mu, m) in &wt.all {
        let mut v: IVec = alpha.iter().zip(mu).map(|(a, b)| a + b + 1).collect();
        let mut sign = 1i64;
        while let Some(i) = v.iter().position(|&x| x < 0) {
            v = reflect_ivec(rs, i, &v);
            sign = -sign;
        }
        if v.contains(&0) {
            continue;
        }
        let gamma: IVec = v.iter().map(|x| x - 1).collect();
        *acc.entry(gamma).or_insert_with(BigInt::zero) += m * BigInt::from(sign);
    }
    acc.retain(|_, n| !n.is_zero());
    if let Some((g, n)) = acc.iter().find(|(_, n)| n.is_negative()) {
        return Err(Error::InvalidInput(format!("negative multiplicity {n} at {}", format_ivec(g))));
    }
    Ok(acc)
}

/// `V_α ⊗ V_β` by the character oracle.
pub fn oracle_decompose<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
) -> Result<DecompositionTable> {
    let a = integral_dominant(rs, alpha)?;
    let b = integral_dominant(rs, beta)?;
    let entries = rs.caches.tables.get_or_insert_with(&(a.clone(), b.clone()), || brauer_klimyk(rs, &a, &b))?;
    Ok(DecompositionTable { alpha: a, beta: b, entries: (*entries).clone() })
}

/// Blocks `k_i ϖ_i` of a dominant coweight in the given index order.
pub fn seed_blocks<I: Int>(beta: &RationalVector<I>, order: &[usize]) -> Vec<RationalVector<I>> {
    order
        .iter()
        .filter(|&&i| !beta.0[i].is_zero())
        .map(|&i| {
            let mut b = RationalVector::zero(beta.dim());
            b.0[i] = beta.0[i].clone();
            b
        })
        .collect()
}

/// `π_{k_1 ϖ_1} ∗ ⋯ ∗ π_{k_r ϖ_r}` in the given index order, with its blocks.
pub fn generalized_seed<I: Int>(beta: &RationalVector<I>, order: &[usize]) -> (PLPath<I>, Vec<RationalVector<I>>) {
    let blocks = seed_blocks(beta, order);
    let parts: Vec<PLPath<I>> = blocks.iter().map(PLPath::pi).collect();
    (PLPath::concat_all(beta.dim(), &parts), blocks)
}

pub fn ascending(rank: usize) -> Vec<usize> {
    (0..rank).collect()
}

/// Paths of the F-orbit of the generalized seed of `β` that stay in the
/// dominant chamber when started at `α`.
pub fn delta_paths<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
    order: &[usize],
    bound: usize,
) -> Result<Vec<PLPath<I>>> {
    integral_dominant(rs, alpha)?;
    integral_dominant(rs, beta)?;
    let (seed, _) = generalized_seed(beta, order);
    let orbit = generate_f_orbit(rs, &seed, bound)?;
    Ok(orbit.into_iter().filter(|p| contained_in_delta(alpha, p)).collect())
}

/// `V_α ⊗ V_β` by counting generalized LS paths of shape `β` in `α + Δ`.
pub fn decompose_paths<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
    bound: usize,
) -> Result<DecompositionTable> {
    decompose_paths_ordered(rs, alpha, beta, &ascending(rs.rank()), bound)
}

pub fn decompose_paths_ordered<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
    order: &[usize],
    bound: usize,
) -> Result<DecompositionTable> {
    let a = integral_dominant(rs, alpha)?;
    let b = integral_dominant(rs, beta)?;
    let mut entries: BTreeMap<IVec, BigInt> = BTreeMap::new();
    for p in delta_paths(rs, alpha, beta, order, bound)? {
        let gamma = alpha
            .add(&p.endpoint())
            .to_ivec()
            .ok_or_else(|| Error::InvalidInput("path endpoint is not a coweight".into()))?;
        *entries.entry(gamma).or_insert_with(BigInt::zero) += 1;
    }
    Ok(DecompositionTable { alpha: a, beta: b, entries })
}

/// `(V_α ⊗ V_β ⊗ V_γ)^G ≠ 0`, i.e. `V_{γ*} ⊂ V_α ⊗ V_β`.
pub fn invariant_triple_nonzero<I: Int>(
    rs: &RootSystem,
    alpha: &RationalVector<I>,
    beta: &RationalVector<I>,
    gamma: &RationalVector<I>,
) -> Result<bool> {
    let g = integral_dominant(rs, gamma)?;
    let gs = dominant_ivec(rs, &g.iter().map(|x| -x).collect::<IVec>());
    Ok(oracle_decompose(rs, alpha, beta)?.contains(&gs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_adjoint_weights() {
        let rs = RootSystem::parse("A2").unwrap();
        let wt = weight_multiplicities(&rs, &[1, 1]).unwrap();
        let zero = wt.dominant.iter().find(|(w, _)| w == &vec![0, 0]).unwrap();
        assert_eq!(zero.1, BigInt::from(2));
        let total: BigInt = wt.all.iter().map(|(_, m)| m.clone()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn a1_clebsch_gordan() {
        let rs = RootSystem::parse("A1").unwrap();
        let t =
            oracle_decompose::<i64>(&rs, &RationalVector::from_ints(&[2]), &RationalVector::from_ints(&[3])).unwrap();
        let keys: Vec<IVec> = t.entries.keys().cloned().collect();
        assert_eq!(keys, vec![vec![1], vec![3], vec![5]]);
    }
}
