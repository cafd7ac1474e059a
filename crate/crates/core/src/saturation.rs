//! Saturation scans over finite ranges of dominant triples and the
//! minuscule check of Hecke nonvanishing against tensor nonvanishing.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke_search::hecke_exists;
use crate::num::{format_ivec, IVec, RationalVector};
use crate::root_system::RootSystem;
use crate::tensor::{invariant_triple_nonzero, oracle_decompose};

/// Parameters of one saturation scan.
#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub coord_bound: i64,
    pub n_max: i64,
    /// Dilation constant under test.
    pub k: i64,
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.coord_bound < 1 || self.n_max < 1 || self.k < 1 {
            return Err(Error::InvalidInput("coord_bound, n_max and k must be at least 1".into()));
        }
        Ok(())
    }

    /// Whether the configuration lies beyond path-model scale and is handled
    /// by the oracle alone, as for `G2` at `k = 36`.
    pub fn is_extended(&self, rs: &RootSystem) -> bool {
        let kr = rs.saturation_factor() as i64;
        kr > 2 && self.k >= kr * kr
    }
}

/// How strongly the scanned statement is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// `k` is a multiple of `k_R²`, or the system is of type A.
    Theorem,
    /// Any other `k`: the scan only gathers evidence.
    Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRecord {
    pub alpha: IVec,
    pub beta: IVec,
    pub gamma: IVec,
    /// Smallest `N ≤ N_max` with a nonzero invariant space, if any.
    pub first_live_n: Option<i64>,
    /// Nonvanishing at `k·(α, β, γ)`; only evaluated for live triples.
    pub nonzero_at_k: Option<bool>,
}

impl TripleRecord {
    pub fn is_violation(&self) -> bool {
        self.first_live_n.is_some() && self.nonzero_at_k == Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub system: String,
    pub coord_bound: i64,
    pub n_max: i64,
    pub k: i64,
    pub evidence: Evidence,
    pub extended: bool,
    pub triples_scanned: usize,
    pub triples_with_some_n_nonzero: usize,
    pub violations: Vec<TripleRecord>,
    #[serde(skip)]
    pub records: Vec<TripleRecord>,
    #[serde(serialize_with = "secs")]
    pub runtime: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Rows `system,alpha,beta,gamma,first_live_N,nonzero_at_k`.
    pub fn csv_rows(&self) -> Vec<[String; 6]> {
        self.records
            .iter()
            .map(|r| {
                [
                    self.system.clone(),
                    format_ivec(&r.alpha),
                    format_ivec(&r.beta),
                    format_ivec(&r.gamma),
                    r.first_live_n.map(|n| n.to_string()).unwrap_or_default(),
                    r.nonzero_at_k.map(|b| b.to_string()).unwrap_or_default(),
                ]
            })
            .collect()
    }
}

pub const CSV_HEADER: [&str; 6] = ["system", "alpha", "beta", "gamma", "first_live_N", "nonzero_at_k"];

/// Dominant coweights with all coordinates in `[0, bound]`.
pub fn dominant_box(rank: usize, bound: i64) -> Vec<IVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: IVec| {
                (0..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn scaled(v: &[i64], n: i64) -> RationalVector<i64> {
    RationalVector::from_ints(&v.iter().map(|x| x * n).collect::<IVec>())
}

fn nonzero_at(rs: &RootSystem, a: &[i64], b: &[i64], c: &[i64], n: i64) -> Result<bool> {
    invariant_triple_nonzero(rs, &scaled(a, n), &scaled(b, n), &scaled(c, n))
}

fn scan_triple(rs: &RootSystem, cfg: &ScanConfig, a: &IVec, b: &IVec, c: &IVec) -> Result<TripleRecord> {
    let mut first = None;
    for n in 1..=cfg.n_max {
        if nonzero_at(rs, a, b, c, n)? {
            first = Some(n);
            break;
        }
    }
    let at_k = match first {
        Some(_) => Some(nonzero_at(rs, a, b, c, cfg.k)?),
        None => None,
    };
    Ok(TripleRecord { alpha: a.clone(), beta: b.clone(), gamma: c.clone(), first_live_n: first, nonzero_at_k: at_k })
}

/// Tests saturation with constant `k` on all dominant triples in the box
/// `[0, coord_bound]` satisfying the coroot-lattice condition.
pub fn saturation_scan(rs: &RootSystem, cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.validate()?;
    rs.check_enumerable()?;
    let start = Instant::now();
    let pts = dominant_box(rs.rank(), cfg.coord_bound);
    let mut triples = Vec::new();
    for a in &pts {
        for b in &pts {
            for c in &pts {
                let (x, y, z) = (scaled(a, 1), scaled(b, 1), scaled(c, 1));
                if rs.triple_lattice_check(&x, &y, &z) {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    let run =
        || -> Result<Vec<TripleRecord>> { triples.par_iter().map(|(a, b, c)| scan_triple(rs, cfg, a, b, c)).collect() };
    let records = if cfg.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run)?
    } else {
        run()?
    };
    let kr = rs.saturation_factor() as i64;
    let type_a = rs.cartan_type().components.iter().all(|c| c.letter == crate::root_system::Letter::A);
    let evidence = if type_a || cfg.k % (kr * kr) == 0 { Evidence::Theorem } else { Evidence::Evidence };
    Ok(ScanReport {
        system: rs.cartan_type().to_string(),
        coord_bound: cfg.coord_bound,
        n_max: cfg.n_max,
        k: cfg.k,
        evidence,
        extended: cfg.is_extended(rs),
        triples_scanned: records.len(),
        triples_with_some_n_nonzero: records.iter().filter(|r| r.first_live_n.is_some()).count(),
        violations: records.iter().filter(|r| r.is_violation()).cloned().collect(),
        records,
        runtime: start.elapsed(),
    })
}

/// Indices `i` with `θ(ϖ_i) = 1`.
pub fn minuscule_nodes(rs: &RootSystem) -> Vec<usize> {
    rs.marks().iter().enumerate().filter(|(_, &m)| m == 1).map(|(i, _)| i).collect()
}

/// Whether `v` is a nonnegative integer combination of minuscule coweights.
pub fn is_minuscule_sum(rs: &RootSystem, v: &RationalVector<i64>) -> bool {
    let nodes = minuscule_nodes(rs);
    v.is_integral()
        && v.is_dominant()
        && v.0.iter().enumerate().all(|(i, c)| *c == Ratio::from_integer(0) || nodes.contains(&i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinusculeVerdict {
    Pass,
    Fail,
    Inapplicable,
}

/// When one of `α, β, γ` is a sum of minuscule coweights, checks that a
/// Hecke path from `α` to `γ` of Δ-length `β` forces `V_γ ⊂ V_α ⊗ V_β`.
pub fn minuscule_check(
    rs: &RootSystem,
    alpha: &RationalVector<i64>,
    beta: &RationalVector<i64>,
    gamma: &RationalVector<i64>,
    denominator_bound: Option<u64>,
) -> Result<MinusculeVerdict> {
    if ![alpha, beta, gamma].iter().any(|v| is_minuscule_sum(rs, v)) {
        return Ok(MinusculeVerdict::Inapplicable);
    }
    if !hecke_exists(rs, alpha, beta, gamma, denominator_bound)?.exists {
        return Ok(MinusculeVerdict::Pass);
    }
    let g = gamma.to_ivec().ok_or_else(|| Error::InvalidInput(format!("{gamma} is not a coweight")))?;
    Ok(if oracle_decompose(rs, alpha, beta)?.contains(&g) { MinusculeVerdict::Pass } else { MinusculeVerdict::Fail })
}
