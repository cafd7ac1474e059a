//! Cartan types, roots and coroots, highest roots and the lattices they span.
//!
//! Vectors live in the fundamental-coweight basis, so the simple root `α_i`
//! evaluates a vector to its `i`-th coordinate. Roots are integer rows over
//! the simple roots and coroots are integer vectors in that basis.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::cache::Caches;
use crate::error::{Error, Result};
use crate::num::{determinant, invert, Int, RationalVector};

/// `|W(F_4)|`, the default bound on Weyl-group enumeration.
pub const DEFAULT_WEYL_ORDER_BOUND: u128 = 1152;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub letter: Letter,
    pub rank: usize,
}

impl Component {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(Component { letter, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{letter:?}{rank}")))
        }
    }

    /// Symmetric Gram matrix of the simple roots, Bourbaki numbering.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.letter {
            Letter::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Letter::B => {
                for i in 0..n - 1 {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 1;
                for i in 0..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Letter::C => {
                for i in 0..n - 1 {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            Letter::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Letter::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Letter::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Letter::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// Cartan matrix with `a_ij = α_i(α_j^∨)`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        let n = self.rank;
        (0..n).map(|i| (0..n).map(|j| 2 * g[i][j] / g[j][j]).collect()).collect()
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.letter {
            Letter::A => fact(n + 1),
            Letter::B | Letter::C => (1u128 << n) * fact(n),
            Letter::D => (1u128 << (n - 1)) * fact(n),
            Letter::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Letter::F => 1152,
            Letter::G => 12,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

/// A semisimple Cartan type such as `A2`, `G2` or `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub components: Vec<Component>,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '×', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Letter::A,
                Some('B') => Letter::B,
                Some('C') => Letter::C,
                Some('D') => Letter::D,
                Some('E') => Letter::E,
                Some('F') => Letter::F,
                Some('G') => Letter::G,
                _ => return Err(bad()),
            };
            let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
            components.push(Component::new(letter, rank).map_err(|_| bad())?);
        }
        if components.is_empty() {
            return Err(bad());
        }
        Ok(CartanType { components })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A positive root with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// The coroot in the fundamental-coweight basis.
    pub coroot: Vec<i64>,
    pub height: i64,
}

/// A reduced semisimple root system together with its memo tables.
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Ratio<i64>>>,
    positive_roots: Vec<Root>,
    /// `(offset, rank)` of each irreducible component.
    blocks: Vec<(usize, usize)>,
    highest_root_coeffs: Vec<Vec<i64>>,
    cartan_dets: Vec<i64>,
    saturation_factor: u64,
    weyl_order: u128,
    weyl_order_bound: u128,
    pub(crate) caches: Caches,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("cartan_type", &self.cartan_type.to_string())
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Self> {
        let rank = cartan_type.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut blocks = Vec::new();
        let mut offset = 0;
        for c in &cartan_type.components {
            let m = c.cartan();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[offset + i][offset + j] = m[i][j];
                }
            }
            blocks.push((offset, c.rank));
            offset += c.rank;
        }
        let cartan_inv = invert(&cartan).ok_or_else(|| Error::InvalidCartanType(cartan_type.to_string()))?;
        let positive_roots = generate_positive_roots(&cartan);
        if positive_roots.len() > 128 {
            return Err(Error::InvalidInput(format!(
                "{} positive roots exceed the supported maximum of 128",
                positive_roots.len()
            )));
        }
        let mut highest_root_coeffs = Vec::new();
        let mut cartan_dets = Vec::new();
        let mut saturation_factor = 1u64;
        for (c, &(off, r)) in cartan_type.components.iter().zip(&blocks) {
            let top = positive_roots
                .iter()
                .filter(|root| root.coeffs[off..off + r].iter().any(|&x| x != 0))
                .max_by_key(|root| root.height)
                .expect("component has roots");
            let m = top.coeffs[off..off + r].to_vec();
            for &mi in &m {
                saturation_factor = saturation_factor.lcm(&(mi as u64));
            }
            highest_root_coeffs.push(m);
            cartan_dets.push(determinant(&c.cartan()).to_integer());
        }
        let weyl_order = cartan_type.components.iter().map(Component::weyl_order).product();
        Ok(RootSystem {
            cartan_type,
            rank,
            cartan,
            cartan_inv,
            positive_roots,
            blocks,
            highest_root_coeffs,
            cartan_dets,
            saturation_factor,
            weyl_order,
            weyl_order_bound: DEFAULT_WEYL_ORDER_BOUND,
            caches: Caches::default(),
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::build(s.parse()?)
    }

    pub fn with_weyl_order_bound(mut self, bound: u128) -> Self {
        self.weyl_order_bound = bound;
        self
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Coefficients of the highest root of each irreducible component.
    pub fn highest_root_coeffs(&self) -> &[Vec<i64>] {
        &self.highest_root_coeffs
    }

    /// `m_i` for every simple root, concatenated over components.
    pub fn marks(&self) -> Vec<i64> {
        self.highest_root_coeffs.concat()
    }

    pub fn components(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn cartan_determinants(&self) -> &[i64] {
        &self.cartan_dets
    }

    /// LCM of the highest-root coefficients over all components.
    pub fn saturation_factor(&self) -> u64 {
        self.saturation_factor
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    pub fn weyl_order_bound(&self) -> u128 {
        self.weyl_order_bound
    }

    /// Refuses when `|W|` exceeds the configured bound.
    pub fn check_enumerable(&self) -> Result<()> {
        if self.weyl_order > self.weyl_order_bound {
            Err(Error::WeylOrderBound { order: self.weyl_order, bound: self.weyl_order_bound })
        } else {
            Ok(())
        }
    }

    /// Simple coroot `α_j^∨`: column `j` of the Cartan matrix.
    pub fn simple_coroot(&self, j: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[j]).collect()
    }

    pub fn fundamental_coweight<I: Int>(&self, i: usize) -> RationalVector<I> {
        RationalVector::unit(self.rank, i)
    }

    pub fn evaluate_root<I: Int>(&self, root: usize, v: &RationalVector<I>) -> Ratio<I> {
        v.pair(&self.positive_roots[root].coeffs)
    }

    pub fn coroot_vector<I: Int>(&self, root: usize) -> RationalVector<I> {
        RationalVector::from_ints(&self.positive_roots[root].coroot)
    }

    pub fn check_dim<I: Int>(&self, v: &RationalVector<I>) -> Result<()> {
        if v.dim() == self.rank {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("vector {v} has dimension {} but the rank is {}", v.dim(), self.rank)))
        }
    }

    pub fn in_coweight_lattice<I: Int>(&self, v: &RationalVector<I>) -> bool {
        v.is_integral()
    }

    /// Coordinates of `v` over the simple coroots.
    pub fn coroot_coordinates<I: Int>(&self, v: &RationalVector<I>) -> RationalVector<I> {
        let n = self.rank;
        RationalVector(
            (0..n)
                .map(|i| {
                    let mut acc = Ratio::<I>::zero();
                    for j in 0..n {
                        let c = self.cartan_inv[i][j];
                        if !c.is_zero() {
                            acc = acc + &v.0[j] * Ratio::new(I::from(*c.numer()), I::from(*c.denom()));
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn in_coroot_lattice<I: Int>(&self, v: &RationalVector<I>) -> bool {
        self.coroot_coordinates(v).is_integral()
    }

    /// `|P(R^∨) / Q(R^∨)|`.
    pub fn index_of_connection(&self) -> i64 {
        self.cartan_dets.iter().product()
    }

    /// Whether `α + β + γ` lies in the coroot lattice.
    pub fn triple_lattice_check<I: Int>(
        &self,
        a: &RationalVector<I>,
        b: &RationalVector<I>,
        c: &RationalVector<I>,
    ) -> bool {
        self.in_coroot_lattice(&a.add(b).add(c))
    }

    /// `Σ_{β>0} |β(v)|`, a W-invariant norm used to parameterize paths.
    pub fn delta_norm<I: Int>(&self, v: &RationalVector<I>) -> Ratio<I> {
        let mut acc = Ratio::zero();
        for r in &self.positive_roots {
            acc = acc + num_traits::Signed::abs(&v.pair(&r.coeffs));
        }
        acc
    }

    /// Largest height of a positive root.
    pub fn max_root_height(&self) -> i64 {
        self.positive_roots.iter().map(|r| r.height).max().unwrap_or(0)
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut coroots: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        let cor: Vec<i64> = cartan.iter().map(|row| row[i]).collect();
        seen.insert(e.clone());
        coroots.insert(e.clone(), cor.clone());
        queue.push_back((e, cor));
    }
    while let Some((c, cor)) = queue.pop_front() {
        for j in 0..n {
            let pairing: i64 = (0..n).map(|k| c[k] * cartan[k][j]).sum();
            let mut c2 = c.clone();
            c2[j] -= pairing;
            let vj = cor[j];
            let cor2: Vec<i64> = (0..n).map(|k| cor[k] - vj * cartan[k][j]).collect();
            if seen.insert(c2.clone()) {
                coroots.insert(c2.clone(), cor2.clone());
                queue.push_back((c2, cor2));
            }
        }
    }
    let mut roots: Vec<Root> = coroots
        .into_iter()
        .filter(|(c, _)| c.iter().all(|&x| x >= 0))
        .map(|(coeffs, coroot)| {
            let height = coeffs.iter().sum();
            Root { coeffs, coroot, height }
        })
        .collect();
    roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.coeffs.cmp(&a.coeffs)));
    roots
}
