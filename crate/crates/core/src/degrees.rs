//! Degrees for the Klein four-group `K = C2 x Σ2` and for motivic bidegrees over the reals.
//!
//! A [`KleinDegree`] `(a, p, b, q)` is the virtual representation
//! `a + pσ + bε + q(σ⊗ε)`. A [`MotivicBidegree`] `(a, p, b, q)` is the pair
//! `(a + pσ, b + qσ)`, first grading then weight.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// One of the three nontrivial one-dimensional real representations of `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    /// σ, generator index 1.
    Sigma,
    /// ε, generator index 2.
    Epsilon,
    /// σ⊗ε, generator index 3.
    SigmaEpsilon,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Sigma, Axis::Epsilon, Axis::SigmaEpsilon];

    /// Position in `(p, b, q)`, 0-based.
    pub fn index(self) -> usize {
        match self {
            Axis::Sigma => 0,
            Axis::Epsilon => 1,
            Axis::SigmaEpsilon => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    /// The subscript used for generator names (`x1`, `x2`, `x3`).
    pub fn label(self) -> usize {
        self.index() + 1
    }

    pub fn from_label(label: usize) -> Option<Axis> {
        (1..=3).contains(&label).then(|| Axis::ALL[label - 1])
    }

    /// The two axes different from `self`, in increasing order.
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::Sigma => (Axis::Epsilon, Axis::SigmaEpsilon),
            Axis::Epsilon => (Axis::Sigma, Axis::SigmaEpsilon),
            Axis::SigmaEpsilon => (Axis::Sigma, Axis::Epsilon),
        }
    }

    /// The axis different from both `self` and `other`; `None` if they coincide.
    pub fn third(self, other: Axis) -> Option<Axis> {
        (self != other).then(|| Axis::from_index(3 - self.index() - other.index()))
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Sigma => "σ",
            Axis::Epsilon => "ε",
            Axis::SigmaEpsilon => "σ⊗ε",
        })
    }
}

/// The virtual representation `a + pσ + bε + q(σ⊗ε)`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct KleinDegree {
    pub a: i64,
    pub p: i64,
    pub b: i64,
    pub q: i64,
}

impl KleinDegree {
    pub const ZERO: KleinDegree = KleinDegree { a: 0, p: 0, b: 0, q: 0 };

    pub const fn new(a: i64, p: i64, b: i64, q: i64) -> Self {
        KleinDegree { a, p, b, q }
    }

    /// The coefficients `(p, b, q)` of the nontrivial representations.
    pub fn rep_part(self) -> [i64; 3] {
        [self.p, self.b, self.q]
    }

    pub fn from_parts(a: i64, rep: [i64; 3]) -> Self {
        KleinDegree::new(a, rep[0], rep[1], rep[2])
    }

    pub fn coefficient(self, axis: Axis) -> i64 {
        self.rep_part()[axis.index()]
    }

    /// Rearranges the nontrivial coefficients: slot `i` of the result takes slot `perm[i]`.
    pub fn permuted(self, perm: [usize; 3]) -> Self {
        let r = self.rep_part();
        KleinDegree::from_parts(self.a, [r[perm[0]], r[perm[1]], r[perm[2]]])
    }
}

impl Add for KleinDegree {
    type Output = KleinDegree;
    fn add(self, o: KleinDegree) -> KleinDegree {
        KleinDegree::new(self.a + o.a, self.p + o.p, self.b + o.b, self.q + o.q)
    }
}

impl Sub for KleinDegree {
    type Output = KleinDegree;
    fn sub(self, o: KleinDegree) -> KleinDegree {
        self + (-o)
    }
}

impl Neg for KleinDegree {
    type Output = KleinDegree;
    fn neg(self) -> KleinDegree {
        KleinDegree::new(-self.a, -self.p, -self.b, -self.q)
    }
}

impl Mul<KleinDegree> for i64 {
    type Output = KleinDegree;
    fn mul(self, d: KleinDegree) -> KleinDegree {
        KleinDegree::new(self * d.a, self * d.p, self * d.b, self * d.q)
    }
}

/// Componentwise sum.
pub fn add(x: KleinDegree, y: KleinDegree) -> KleinDegree {
    x + y
}

impl fmt::Display for KleinDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.p, self.b, self.q)
    }
}

fn parse_ints(s: &str, sep: char, n: usize) -> Result<Vec<i64>, Error> {
    let parts: Vec<&str> = s.split(sep).map(str::trim).collect();
    if parts.len() != n {
        return Err(Error::Parse(format!("expected {n} integers separated by '{sep}' in {s:?}")));
    }
    parts
        .iter()
        .map(|p| p.parse::<i64>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
        .collect()
}

impl FromStr for KleinDegree {
    type Err = Error;

    /// Parses `a,p,b,q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let v = parse_ints(s, ',', 4)?;
        Ok(KleinDegree::new(v[0], v[1], v[2], v[3]))
    }
}

/// A degree `a + s·axis` of one of the three `C2` quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct C2Degree {
    pub a: i64,
    pub s: i64,
    pub axis: Axis,
}

impl C2Degree {
    pub fn new(a: i64, s: i64, axis: Axis) -> Self {
        C2Degree { a, s, axis }
    }

    /// Places `s` on `axis` and zero on the other two.
    pub fn embed(self) -> KleinDegree {
        let mut rep = [0; 3];
        rep[self.axis.index()] = self.s;
        KleinDegree::from_parts(self.a, rep)
    }
}

/// The motivic bidegree `(a + pσ, b + qσ)`.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct MotivicBidegree {
    pub a: i64,
    pub p: i64,
    pub b: i64,
    pub q: i64,
}

impl MotivicBidegree {
    pub const fn new(a: i64, p: i64, b: i64, q: i64) -> Self {
        MotivicBidegree { a, p, b, q }
    }
}

impl Add for MotivicBidegree {
    type Output = MotivicBidegree;
    fn add(self, o: MotivicBidegree) -> MotivicBidegree {
        MotivicBidegree::new(self.a + o.a, self.p + o.p, self.b + o.b, self.q + o.q)
    }
}

impl fmt::Display for MotivicBidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}:{},{}", self.a, self.p, self.b, self.q)
    }
}

impl FromStr for MotivicBidegree {
    type Err = Error;

    /// Parses `a,p:b,q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (grading, weight) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected a,p:b,q in {s:?}")))?;
        let g = parse_ints(grading, ',', 2)?;
        let w = parse_ints(weight, ',', 2)?;
        Ok(MotivicBidegree::new(g[0], g[1], w[0], w[1]))
    }
}

/// Degree of the Betti realization of the motivic sphere `S^{a+pσ, b+qσ}`.
pub fn realize(d: MotivicBidegree) -> KleinDegree {
    KleinDegree::new(d.a - d.b, d.p - d.q, d.b, d.q)
}

/// The four weight regions that organize the motivic cohomology of the reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    /// `b + q < 0`, `b <= 0`: all groups vanish.
    #[serde(rename = "ZeroRegion")]
    Zero,
    /// `b + q < 0`, `b >= 1`: governed by the cofiber `ẼC2`.
    #[serde(rename = "TildeRegion")]
    Tilde,
    /// `b >= 0`, `b + q >= 0`: realization is an isomorphism onto the point.
    #[serde(rename = "PointRegion")]
    Point,
    /// `b < 0`, `b + q >= 0`: agrees with the Borel cohomology of `EC2`.
    #[serde(rename = "BorelRegion")]
    Borel,
}

impl Region {
    pub fn name(self) -> &'static str {
        match self {
            Region::Zero => "ZeroRegion",
            Region::Tilde => "TildeRegion",
            Region::Point => "PointRegion",
            Region::Borel => "BorelRegion",
        }
    }

    /// Region of a weight `b + qσ`; the first grading plays no role.
    pub fn of_weight(b: i64, q: i64) -> Region {
        match (b + q >= 0, b) {
            (false, b) if b <= 0 => Region::Zero,
            (false, _) => Region::Tilde,
            (true, b) if b >= 0 => Region::Point,
            (true, _) => Region::Borel,
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn region_of(d: MotivicBidegree) -> Region {
    Region::of_weight(d.b, d.q)
}
