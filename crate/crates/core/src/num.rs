//! Exact scalars and coordinate vectors.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer backing type for exact rational coordinates.
pub trait Int:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromStr + From<i64> + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromStr
        + From<i64>
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Integer coordinate vector used by the chain engine and the oracle.
pub type IVec = Vec<i64>;

pub fn q<I: Int>(n: i64) -> Ratio<I> {
    Ratio::from_integer(I::from(n))
}

pub fn ratio<I: Int>(n: i64, d: i64) -> Ratio<I> {
    Ratio::new(I::from(n), I::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_ratio<I: Int>(s: &str) -> Result<Ratio<I>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: I = n.trim().parse().map_err(|_| bad())?;
            let d: I = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_ratio<I: Int>(r: &Ratio<I>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ratio_to_i64<I: Int>(r: &Ratio<I>) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Exact vector in the fundamental-coweight basis: `coords[i] = α_i(v)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalVector<I: Int>(pub Vec<Ratio<I>>);

impl<I: Int> RationalVector<I> {
    pub fn zero(n: usize) -> Self {
        RationalVector(vec![Ratio::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RationalVector(v.iter().map(|&x| q(x)).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = Ratio::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Ratio<I>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Ratio::is_integer)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, o: &Self) -> Self {
        RationalVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        RationalVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, s: &Ratio<I>) -> Self {
        RationalVector(self.0.iter().map(|a| a * s).collect())
    }

    /// `self + s·v` for an integer vector `v`.
    pub fn add_scaled_ints(&self, s: &Ratio<I>, v: &[i64]) -> Self {
        RationalVector(self.0.iter().zip(v).map(|(a, &b)| a + s * Ratio::from_integer(I::from(b))).collect())
    }

    /// `Σ c_i · coords[i]`.
    pub fn pair(&self, c: &[i64]) -> Ratio<I> {
        let mut acc = Ratio::zero();
        for (a, &ci) in self.0.iter().zip(c) {
            if ci != 0 {
                acc = acc + a * Ratio::from_integer(I::from(ci));
            }
        }
        acc
    }

    pub fn to_ivec(&self) -> Option<IVec> {
        self.0.iter().map(ratio_to_i64).collect()
    }

    /// The primitive integer vector on the ray through `self`.
    pub fn primitive(&self) -> Option<IVec> {
        if self.is_zero() {
            return None;
        }
        let mut den = I::one();
        for c in &self.0 {
            den = den.lcm(c.denom());
        }
        let ints: Vec<I> = self.0.iter().map(|c| (c * Ratio::from_integer(den.clone())).to_integer()).collect();
        let mut g = I::zero();
        for x in &ints {
            g = g.gcd(x);
        }
        ints.into_iter().map(|x| (x / g.clone()).to_i64()).collect()
    }

    /// Returns `c > 0` with `self = c · other`, if one exists.
    pub fn positive_multiple_of(&self, other: &Self) -> Option<Ratio<I>> {
        let mut factor: Option<Ratio<I>> = None;
        for (a, b) in self.0.iter().zip(&other.0) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let f = a / b;
                    if !f.is_positive() {
                        return None;
                    }
                    match &factor {
                        Some(g) if *g != f => return None,
                        Some(_) => {}
                        None => factor = Some(f),
                    }
                }
                _ => return None,
            }
        }
        factor
    }

    pub fn cast<J: Int>(&self) -> RationalVector<J> {
        RationalVector(
            self.0
                .iter()
                .map(|c| {
                    let n: J = c.numer().to_string().parse().ok().expect("integer cast");
                    let d: J = c.denom().to_string().parse().ok().expect("integer cast");
                    Ratio::new(n, d)
                })
                .collect(),
        )
    }

    /// Parses `"1,0"`, `"1/2,-1"` or `"(1, 0)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Err(Error::Parse(format!("empty vector `{s}`")));
        }
        t.split(',').map(parse_ratio).collect::<Result<Vec<_>>>().map(RationalVector)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_ratio).collect()
    }
}

impl<I: Int> fmt::Display for RationalVector<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl<I: Int> Serialize for RationalVector<I> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de, I: Int> Deserialize<'de> for RationalVector<I> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_ratio(s))
            .collect::<Result<Vec<_>>>()
            .map(RationalVector)
            .map_err(serde::de::Error::custom)
    }
}

pub fn format_ivec(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Solves `m · x = b` for square nonsingular `m`.
pub fn solve(m: &[Vec<Ratio<i64>>], b: &[Ratio<i64>]) -> Option<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(*bi);
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..=n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

/// Rank of a list of integer rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Ratio<i64>>> =
        rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    if a.is_empty() {
        return 0;
    }
    let ncols = a[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c] / a[r][c];
                for j in c..ncols {
                    let v = a[r][j];
                    a[i][j] -= f * v;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

pub fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = m.len();
    let mq: Vec<Vec<Ratio<i64>>> = m.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Ratio<i64>> = (0..n).map(|i| if i == j { Ratio::one() } else { Ratio::zero() }).collect();
        cols.push(solve(&mq, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
}

pub fn determinant(m: &[Vec<i64>]) -> Ratio<i64> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut det = Ratio::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Ratio::zero() };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for j in c..n {
                let v = a[c][j];
                a[r][j] -= f * v;
            }
        }
    }
    det
}
