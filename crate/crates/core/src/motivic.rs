//! Bredon motivic cohomology of `Spec ℝ` and of `EC2`, the realization status of each
//! group, and the negative-cone module.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degrees::{realize, region_of, Axis, KleinDegree, MotivicBidegree, Region};
use crate::error::{Error, Result};
use crate::f2algebra::{Gen, StongElement, StongMonomial};
use crate::klein_point::basis_at;
use crate::series::dim_point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Iso,
    Mono,
    MonoNotEpi,
    ZeroDomain,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Iso => "Iso",
            Status::Mono => "Mono",
            Status::MonoNotEpi => "MonoNotEpi",
            Status::ZeroDomain => "ZeroDomain",
        };
        f.write_str(s)
    }
}

/// Status of the Betti realization map out of a motivic group.
///
/// `raw` comes from the region rules; `refined` upgrades `Mono` by comparing
/// dimensions of domain and codomain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationStatus {
    pub raw: Status,
    pub refined: Status,
    pub domain_dim: u64,
    pub codomain_dim: u64,
}

impl RealizationStatus {
    fn new(raw: Status, domain_dim: u64, codomain_dim: u64) -> Self {
        let refined = match raw {
            Status::Mono if domain_dim == codomain_dim => Status::Iso,
            Status::Mono => Status::MonoNotEpi,
            other => other,
        };
        RealizationStatus { raw, refined, domain_dim, codomain_dim }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotivicGroup {
    pub bidegree: MotivicBidegree,
    pub dimension: u64,
    pub region: Region,
    pub basis: Option<Vec<String>>,
    pub realization: RealizationStatus,
}

/// `H^{a+pσ, b+qσ}(ℝ; Z/2)`.
pub fn motivic_group_r(d: MotivicBidegree) -> MotivicGroup {
    let region = region_of(d);
    let codomain = dim_point(realize(d));
    let (dimension, basis, raw) = match region {
        Region::Zero => (0, Some(Vec::new()), Status::ZeroDomain),
        Region::Point => {
            let basis = basis_at(realize(d)).map(|b| b.iter().map(ToString::to_string).collect());
            (codomain, basis, Status::Iso)
        }
        Region::Borel => {
            let g = borel_group(d);
            let raw = if d.a <= 2 * d.b + 2 { Status::Iso } else { Status::Mono };
            (g.dimension, g.basis, raw)
        }
        Region::Tilde => {
            let basis: Vec<String> = nc_basis(d).iter().map(ToString::to_string).collect();
            let zero = d.a > 2 * d.b + 1 || d.a <= 1 || d.b <= 0;
            let raw = if zero { Status::ZeroDomain } else { Status::Mono };
            (basis.len() as u64, Some(basis), raw)
        }
    };
    MotivicGroup {
        bidegree: d,
        dimension,
        region,
        basis,
        realization: RealizationStatus::new(raw, dimension, codomain),
    }
}

/// `H^{a+pσ, b+qσ}(EC2; Z/2)`: zero for `b+q < 0`, otherwise the point group in degree
/// `(a-2b) + (p-q+b)σ + (b+q)σ⊗ε`, carried back by `κ2^{-b}`.
pub fn borel_group(d: MotivicBidegree) -> MotivicGroup {
    let region = region_of(d);
    let codomain = dim_point(realize(d));
    let (dimension, basis) = if d.b + d.q < 0 {
        (0, Some(Vec::new()))
    } else {
        let shifted = KleinDegree::new(d.a - 2 * d.b, d.p - d.q + d.b, 0, d.b + d.q);
        let basis = basis_at(shifted).map(|b| {
            b.into_iter()
                .map(|m| m.with(Gen::Kappa(Axis::Epsilon), -d.b).to_string())
                .collect::<Vec<_>>()
        });
        (dim_point(shifted), basis)
    };
    let raw = if dimension == 0 {
        Status::ZeroDomain
    } else if d.a <= 2 * d.b + 2 {
        Status::Iso
    } else {
        Status::Mono
    };
    MotivicGroup {
        bidegree: d,
        dimension,
        region,
        basis,
        realization: RealizationStatus::new(raw, dimension, codomain),
    }
}

pub fn realization_status(d: MotivicBidegree) -> RealizationStatus {
    motivic_group_r(d).realization
}

/// Suspended class of the negative-cone alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NcClass {
    /// `Σ(b^p c)`, `p >= 0`.
    BPowC(u32),
    /// `Σ(b^p)`, `p >= 1`.
    BPow(u32),
}

/// A generator `x1^{x1} x3^{x3} x2^{x2} y2^{y2} Σ(class)` of the negative-cone module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NcGenerator {
    pub x1: i64,
    pub x3: i64,
    pub x2: u32,
    pub y2: u32,
    pub class: NcClass,
}

impl NcGenerator {
    pub fn new(x1: i64, x3: i64, x2: u32, y2: u32, class: NcClass) -> Result<Self> {
        if x3 > 0 || class == NcClass::BPow(0) {
            return Err(Error::IllFormed(format!(
                "not a negative-cone generator: x1^{x1} x3^{x3} x2^{x2} y2^{y2} {class:?}"
            )));
        }
        Ok(NcGenerator { x1, x3, x2, y2, class })
    }

    /// Motivic bidegree of the generator.
    pub fn bidegree(self) -> MotivicBidegree {
        let (delta, e) = match self.class {
            NcClass::BPowC(p) => (1, p as i64),
            NcClass::BPow(p) => (0, p as i64),
        };
        let (j, i) = (self.x2 as i64, self.y2 as i64);
        let w = i + j + delta + e;
        let a = 1 + j + delta + 2 * e;
        MotivicBidegree::new(a, self.x1 + self.x3, w, self.x3)
    }
}

impl fmt::Display for NcGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x1", self.x1), ("x3", self.x3), ("x2", self.x2 as i64), ("y2", self.y2 as i64)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        let class = match self.class {
            NcClass::BPowC(0) => "Σ(c)".to_string(),
            NcClass::BPowC(1) => "Σ(b*c)".to_string(),
            NcClass::BPowC(p) => format!("Σ(b^{p}*c)"),
            NcClass::BPow(1) => "Σ(b)".to_string(),
            NcClass::BPow(p) => format!("Σ(b^{p})"),
        };
        parts.push(class);
        f.write_str(&parts.join("*"))
    }
}

/// Sum of negative-cone generators over `Z/2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcElement {
    terms: BTreeSet<NcGenerator>,
}

impl NcElement {
    pub fn zero() -> Self {
        NcElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &NcGenerator> {
        self.terms.iter()
    }

    fn toggle(&mut self, g: NcGenerator) {
        if !self.terms.remove(&g) {
            self.terms.insert(g);
        }
    }

    fn add(&mut self, other: &NcElement) {
        for g in other.terms() {
            self.toggle(*g);
        }
    }
}

impl From<NcGenerator> for NcElement {
    fn from(g: NcGenerator) -> Self {
        NcElement { terms: BTreeSet::from([g]) }
    }
}

impl fmt::Display for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `y1 · g`, using `y1 = x1·c/b` and `c² = x2·c + y2·b`.
fn y1_action(g: NcGenerator) -> NcElement {
    let shifted = NcGenerator { x1: g.x1 + 1, ..g };
    let mut out = NcElement::zero();
    match g.class {
        NcClass::BPowC(0) => {}
        NcClass::BPowC(p) => {
            out.toggle(NcGenerator { x2: g.x2 + 1, class: NcClass::BPowC(p - 1), ..shifted });
            out.toggle(NcGenerator { y2: g.y2 + 1, class: NcClass::BPow(p), ..shifted });
        }
        NcClass::BPow(p) => out.toggle(NcGenerator { class: NcClass::BPowC(p - 1), ..shifted }),
    }
    out
}

/// Action of the Stong ring on σ on the negative-cone module: `x1` shifts the `x1`
/// exponent, `y1` follows [`y1_action`], and `θ1`-multiples act by zero.
pub fn nc_module_action(coeff: &StongElement, gen: NcGenerator) -> Result<NcElement> {
    if coeff.axis != Axis::Sigma {
        return Err(Error::IllFormed(format!("coefficient {coeff} is not on the σ axis")));
    }
    let gen = NcGenerator::new(gen.x1, gen.x3, gen.x2, gen.y2, gen.class)?;
    let mut out = NcElement::zero();
    for m in coeff.terms() {
        let StongMonomial::Poly { n, m: ys } = m else {
            continue;
        };
        let mut acc = NcElement::from(NcGenerator { x1: gen.x1 + n as i64, ..gen });
        for _ in 0..ys {
            let mut next = NcElement::zero();
            for g in acc.terms() {
                next.add(&y1_action(*g));
            }
            acc = next;
        }
        out.add(&acc);
    }
    Ok(out)
}

/// Products inside the negative-cone module vanish.
pub fn nc_product(_u: &NcElement, _v: &NcElement) -> NcElement {
    NcElement::zero()
}

/// Negative-cone generators in bidegree `d`.
pub fn nc_basis(d: MotivicBidegree) -> Vec<NcGenerator> {
    if region_of(d) != Region::Tilde {
        return Vec::new();
    }
    // Realized ε-degree b = y2 + x2 + δ + e and suspended a-degree a = 1 + x2 + δ + 2e.
    let mut out = Vec::new();
    for delta in 0..=1u32 {
        for e in 0..=d.b {
            if delta == 0 && e == 0 {
                continue;
            }
            let x2 = d.a - 1 - delta as i64 - 2 * e;
            let y2 = d.b - x2 - delta as i64 - e;
            if x2 < 0 || y2 < 0 {
                continue;
            }
            let class = if delta == 1 { NcClass::BPowC(e as u32) } else { NcClass::BPow(e as u32) };
            out.push(NcGenerator { x1: d.p - d.q, x3: d.q, x2: x2 as u32, y2: y2 as u32, class });
        }
    }
    out.sort();
    out
}

/// Which summand of the decomposition a nonzero group belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Summand {
    /// The part of weight `b+q >= 0`, generated over the positive cone and `κ2`.
    RKappa,
    /// The negative-cone module: `b+q < 0`, `b >= 1`.
    Nc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub bidegree: MotivicBidegree,
    pub dimension: u64,
    pub summand: Summand,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub entries: Vec<DecompositionEntry>,
    pub r_kappa_total: u64,
    pub nc_total: u64,
    /// Bidegrees where the summand count disagrees with the group dimension.
    pub mismatches: Vec<MotivicBidegree>,
}

/// Splits every nonzero group in the window between the two summands, checking that the
/// negative-cone generator count matches the group dimension.
pub fn decomposition_r(
    a: std::ops::RangeInclusive<i64>,
    p: std::ops::RangeInclusive<i64>,
    b: std::ops::RangeInclusive<i64>,
    q: std::ops::RangeInclusive<i64>,
) -> DecompositionReport {
    let mut report =
        DecompositionReport { entries: Vec::new(), r_kappa_total: 0, nc_total: 0, mismatches: Vec::new() };
    for a in a.clone() {
        for p in p.clone() {
            for b in b.clone() {
                for q in q.clone() {
                    let d = MotivicBidegree::new(a, p, b, q);
                    let g = motivic_group_r(d);
                    let (summand, summand_dim) = if b + q >= 0 {
                        (Summand::RKappa, g.dimension)
                    } else {
                        (Summand::Nc, nc_basis(d).len() as u64)
                    };
                    if summand_dim != g.dimension {
                        report.mismatches.push(d);
                    }
                    if g.dimension == 0 {
                        continue;
                    }
                    match summand {
                        Summand::RKappa => report.r_kappa_total += g.dimension,
                        Summand::Nc => report.nc_total += g.dimension,
                    }
                    report.entries.push(DecompositionEntry { bidegree: d, dimension: g.dimension, summand });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(a: i64, p: i64, b: i64, q: i64) -> MotivicBidegree {
        MotivicBidegree::new(a, p, b, q)
    }

    #[test]
    fn group_examples() {
        let g = motivic_group_r(md(3, -3, 1, -3));
        assert_eq!((g.dimension, g.region), (1, Region::Tilde));
        assert_eq!(motivic_group_r(md(1, 0, 2, 0)).dimension, 1);
        let g = motivic_group_r(md(0, 0, -1, 0));
        assert_eq!((g.dimension, g.region), (0, Region::Zero));
        assert_eq!(motivic_group_r(md(1, 0, -2, 3)).dimension, 1);
    }

    #[test]
    fn borel_examples() {
        let g = borel_group(md(-2, 2, -1, 1));
        assert_eq!((g.dimension, g.basis), (1, Some(vec!["k2".to_string()])));
        assert_eq!(borel_group(md(0, 0, 0, 1)).dimension, 0);
        assert_eq!(borel_group(md(0, 0, 1, -2)).dimension, 0);
    }

    #[test]
    fn status_examples() {
        let s = realization_status(md(3, -3, 1, -3));
        assert_eq!((s.raw, s.refined, s.domain_dim, s.codomain_dim), (Status::Mono, Status::MonoNotEpi, 1, 2));
        assert_eq!(realization_status(md(3, -2, 1, -2)).refined, Status::Iso);
        assert_eq!(realization_status(md(0, 0, 1, 0)).raw, Status::Iso);
        let s = realization_status(md(-1, 0, -2, 2));
        assert_eq!((s.refined, s.domain_dim, s.codomain_dim), (Status::MonoNotEpi, 1, 2));
    }

    #[test]
    fn nc_action_examples() {
        let c_over_x3 = NcGenerator::new(0, -1, 0, 0, NcClass::BPowC(0)).unwrap();
        let y1 = StongElement::poly(Axis::Sigma, 0, 1);
        assert!(nc_module_action(&y1, c_over_x3).unwrap().is_zero());
        let b_over_x3sq = NcGenerator::new(0, -2, 0, 0, NcClass::BPow(1)).unwrap();
        assert_eq!(nc_module_action(&y1, b_over_x3sq).unwrap().to_string(), "x1*x3^-2*Σ(c)");
        let theta = StongElement::nc(Axis::Sigma, 1, 0);
        assert!(nc_module_action(&theta, b_over_x3sq).unwrap().is_zero());
        assert!(NcGenerator::new(0, 1, 0, 0, NcClass::BPowC(0)).is_err());
    }

    #[test]
    fn nc_generators_have_their_bidegree() {
        for d in [md(3, -3, 1, -3), md(5, 0, 3, -4), md(4, 2, 2, -5)] {
            for g in nc_basis(d) {
                assert_eq!(g.bidegree(), d, "{g}");
            }
        }
    }

    #[test]
    fn decomposition_tags() {
        let r = decomposition_r(-3..=3, -3..=3, -3..=3, -3..=3);
        assert!(r.mismatches.is_empty());
        let tag = |d| r.entries.iter().find(|e| e.bidegree == d).map(|e| e.summand);
        assert_eq!(tag(md(-2, 2, -1, 1)), Some(Summand::RKappa));
        assert_eq!(tag(md(3, -3, 1, -3)), Some(Summand::Nc));
    }
}
