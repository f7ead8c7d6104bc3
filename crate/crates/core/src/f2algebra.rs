//! Monomials and elements over `Z/2`, the Stong ring on each axis, and the two
//! rewriting systems (positive cone, E-space) used for normal forms.
//!
//! Elements print as `+`-joined monomials in descending lexicographic order, generators
//! ordered `x1 > y1 > x2 > y2 > x3 > y3`; [`F2Element::from_str`] reads the same grammar.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degrees::{Axis, KleinDegree};
use crate::error::{Error, Result};

/// Named generators other than the `θ_i` family, which lives in [`ThetaPart`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X(Axis),
    Y(Axis),
    Kappa(Axis),
    Iota(Axis),
    BigTheta,
}

impl Gen {
    /// All generators in print order.
    pub const ORDER: [Gen; 13] = [
        Gen::X(Axis::Sigma),
        Gen::Y(Axis::Sigma),
        Gen::X(Axis::Epsilon),
        Gen::Y(Axis::Epsilon),
        Gen::X(Axis::SigmaEpsilon),
        Gen::Y(Axis::SigmaEpsilon),
        Gen::Kappa(Axis::Sigma),
        Gen::Kappa(Axis::Epsilon),
        Gen::Kappa(Axis::SigmaEpsilon),
        Gen::Iota(Axis::Sigma),
        Gen::Iota(Axis::Epsilon),
        Gen::Iota(Axis::SigmaEpsilon),
        Gen::BigTheta,
    ];

    pub fn degree(self) -> KleinDegree {
        let unit = |axis: Axis| {
            let mut r = [0; 3];
            r[axis.index()] = 1;
            r
        };
        match self {
            Gen::X(i) => KleinDegree::from_parts(0, unit(i)),
            Gen::Y(i) => KleinDegree::from_parts(-1, unit(i)),
            Gen::Kappa(i) => {
                let mut r = [1; 3];
                r[i.index()] = -1;
                KleinDegree::from_parts(-1, r)
            }
            Gen::Iota(i) => {
                let mut r = [-1; 3];
                r[i.index()] = 1;
                KleinDegree::from_parts(1, r)
            }
            Gen::BigTheta => KleinDegree::new(3, -1, -1, -1),
        }
    }

    pub fn name(self) -> String {
        match self {
            Gen::X(i) => format!("x{}", i.label()),
            Gen::Y(i) => format!("y{}", i.label()),
            Gen::Kappa(i) => format!("k{}", i.label()),
            Gen::Iota(i) => format!("i{}", i.label()),
            Gen::BigTheta => "Theta".to_string(),
        }
    }

    /// Is this one of the polynomial generators `x_i`, `y_i`?
    pub fn is_polynomial(self) -> bool {
        matches!(self, Gen::X(_) | Gen::Y(_))
    }
}

/// The Stong-ring class `θ_axis / (x^x y^y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaPart {
    pub axis: Axis,
    pub x: u32,
    pub y: u32,
}

impl ThetaPart {
    pub fn new(axis: Axis, x: u32, y: u32) -> Self {
        ThetaPart { axis, x, y }
    }

    /// True for `θ_i` itself, with no denominator.
    pub fn is_plain(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn degree(self) -> KleinDegree {
        C2Stong::nc_degree(self.x as i64, self.y as i64).embed(self.axis)
    }
}

impl fmt::Display for ThetaPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta{}", self.axis.label())?;
        let mut denom = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => denom.push(format!("{name}{}", self.axis.label())),
                e => denom.push(format!("{name}{}^{e}", self.axis.label())),
            }
        }
        match denom.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", denom[0]),
            _ => write!(f, "/({})", denom.join("*")),
        }
    }
}

/// A monomial: an optional θ-class times a product of named generators.
///
/// Exponents are integers; only `κ` generators may carry negative exponents, and only
/// in sectors that invert them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    theta: Option<ThetaPart>,
    exps: BTreeMap<Gen, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn gen(g: Gen) -> Self {
        Monomial::one().with(g, 1)
    }

    pub fn theta(part: ThetaPart) -> Self {
        Monomial { theta: Some(part), exps: BTreeMap::new() }
    }

    /// Builds a monomial from `(generator, exponent)` pairs, adding repeated exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Gen, i64)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (g, e) in pairs {
            m = m.with(g, e);
        }
        m
    }

    /// Multiplies by `g^e` without applying any relation.
    pub fn with(mut self, g: Gen, e: i64) -> Self {
        let entry = self.exps.entry(g).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&g);
        }
        self
    }

    pub fn with_theta(mut self, part: Option<ThetaPart>) -> Self {
        self.theta = part;
        self
    }

    pub fn theta_part(&self) -> Option<ThetaPart> {
        self.theta
    }

    pub fn exponent(&self, g: Gen) -> i64 {
        self.exps.get(&g).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Gen, i64)> + '_ {
        self.exps.iter().map(|(g, e)| (*g, *e))
    }

    pub fn is_one(&self) -> bool {
        self.theta.is_none() && self.exps.is_empty()
    }

    /// Only `x_i`, `y_i` with non-negative exponents and no θ-class.
    pub fn is_polynomial(&self) -> bool {
        self.theta.is_none() && self.exps.iter().all(|(g, e)| g.is_polynomial() && *e >= 0)
    }

    pub fn degree(&self) -> KleinDegree {
        let base = self.theta.map(ThetaPart::degree).unwrap_or_default();
        self.exps.iter().fold(base, |acc, (g, e)| acc + *e * g.degree())
    }

    /// Unchecked product: exponents add, θ-classes must not collide.
    pub fn concat(&self, other: &Monomial) -> Option<Monomial> {
        if self.theta.is_some() && other.theta.is_some() {
            return None;
        }
        let mut m = self.clone().with_theta(self.theta.or(other.theta));
        for (g, e) in other.exponents() {
            m = m.with(g, e);
        }
        Some(m)
    }

    fn sort_key(&self) -> Vec<i64> {
        let mut key: Vec<i64> = Gen::ORDER.iter().map(|g| self.exponent(*g)).collect();
        match self.theta {
            Some(t) => key.extend([t.axis.index() as i64, t.x as i64, t.y as i64]),
            None => key.extend([-1, 0, 0]),
        }
        key
    }
}

impl Ord for Monomial {
    /// Descending lexicographic: larger monomials sort first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.sort_key().cmp(&self.sort_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(t) = self.theta {
            parts.push(t.to_string());
        }
        for g in Gen::ORDER {
            match self.exponent(g) {
                0 => {}
                1 => parts.push(g.name()),
                e => parts.push(format!("{}^{e}", g.name())),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A finite `Z/2`-combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Element {
    terms: BTreeSet<Monomial>,
}

impl F2Element {
    pub fn zero() -> Self {
        F2Element::default()
    }

    pub fn one() -> Self {
        F2Element::from(Monomial::one())
    }

    /// Adds a monomial; adding it twice cancels.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &F2Element) -> F2Element {
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<KleinDegree> {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }
}

impl From<Monomial> for F2Element {
    fn from(m: Monomial) -> Self {
        F2Element { terms: BTreeSet::from([m]) }
    }
}

impl FromIterator<Monomial> for F2Element {
    /// Sums the monomials over `Z/2`.
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut e = F2Element::zero();
        for m in iter {
            e.toggle(m);
        }
        e
    }
}

impl fmt::Display for F2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(Monomial::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Serializes through the printed form.
macro_rules! serde_via_string {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_string!(Monomial);
serde_via_string!(F2Element);

fn parse_axis(s: &str, whole: &str) -> Result<Axis> {
    s.parse::<usize>()
        .ok()
        .and_then(Axis::from_label)
        .ok_or_else(|| Error::Parse(format!("bad axis label {s:?} in {whole:?}")))
}

fn split_power(s: &str) -> Result<(&str, i64)> {
    match s.split_once('^') {
        None => Ok((s, 1)),
        Some((base, e)) => {
            let e = e.parse::<i64>().map_err(|err| Error::Parse(format!("exponent {e:?}: {err}")))?;
            Ok((base, e))
        }
    }
}

type GenCtor = fn(Axis) -> Gen;

fn parse_gen(name: &str) -> Result<Gen> {
    let name = name.trim();
    if matches!(name, "Theta" | "Θ") {
        return Ok(Gen::BigTheta);
    }
    let prefixes: [(&str, GenCtor); 8] = [
        ("kappa", Gen::Kappa),
        ("iota", Gen::Iota),
        ("κ", Gen::Kappa),
        ("ι", Gen::Iota),
        ("k", Gen::Kappa),
        ("i", Gen::Iota),
        ("x", Gen::X),
        ("y", Gen::Y),
    ];
    for (prefix, make) in prefixes {
        if let Some(rest) = name.strip_prefix(prefix) {
            return Ok(make(parse_axis(rest, name)?));
        }
    }
    Err(Error::Parse(format!("unknown generator {name:?}")))
}

fn parse_theta(factor: &str) -> Result<Option<ThetaPart>> {
    let Some(rest) = factor.strip_prefix("theta").or_else(|| factor.strip_prefix("θ")) else {
        return Ok(None);
    };
    let (label, denom) = match rest.split_once('/') {
        Some((l, d)) => (l, Some(d)),
        None => (rest, None),
    };
    let axis = parse_axis(label, factor)?;
    let mut part = ThetaPart::new(axis, 0, 0);
    if let Some(denom) = denom {
        let inner = denom.trim().trim_start_matches('(').trim_end_matches(')');
        for atom in inner.split('*') {
            let (base, e) = split_power(atom.trim())?;
            let e = u32::try_from(e)
                .map_err(|_| Error::IllFormed(format!("negative denominator in {factor:?}")))?;
            match parse_gen(base)? {
                Gen::X(a) if a == axis => part.x += e,
                Gen::Y(a) if a == axis => part.y += e,
                _ => {
                    return Err(Error::IllFormed(format!(
                        "denominator of {factor:?} must use x{0}, y{0}",
                        axis.label()
                    )))
                }
            }
        }
    }
    Ok(Some(part))
}

/// Splits a product at `*` signs that are not inside parentheses.
fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut m = Monomial::one();
        for factor in split_factors(&s) {
            if factor == "1" {
                continue;
            }
            if let Some(part) = parse_theta(factor)? {
                if m.theta.is_some() {
                    return Err(Error::IllFormed(format!("two theta classes in {s:?}")));
                }
                m.theta = Some(part);
                continue;
            }
            let (base, e) = split_power(factor)?;
            m = m.with(parse_gen(base)?, e);
        }
        Ok(m)
    }
}

impl FromStr for F2Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "0" {
            return Ok(F2Element::zero());
        }
        trimmed.split('+').map(str::parse::<Monomial>).collect()
    }
}

/// Degrees and bases of the Stong ring `Z/2[x, y] ⊕ Z/2{θ/xⁿyᵐ}` of a single axis,
/// in coordinates `(a, s)` meaning `a + s·axis`.
pub struct C2Stong;

/// A pair `(a, s)` that can be embedded on any axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisDegree {
    pub a: i64,
    pub s: i64,
}

impl AxisDegree {
    pub fn embed(self, axis: Axis) -> KleinDegree {
        crate::degrees::C2Degree::new(self.a, self.s, axis).embed()
    }
}

impl C2Stong {
    pub fn poly_degree(n: i64, m: i64) -> AxisDegree {
        AxisDegree { a: -m, s: n + m }
    }

    pub fn nc_degree(n: i64, m: i64) -> AxisDegree {
        AxisDegree { a: 2 + m, s: -2 - n - m }
    }
}

/// Basis monomial of the Stong ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StongMonomial {
    /// `xⁿyᵐ`.
    Poly { n: u32, m: u32 },
    /// `θ/(xⁿyᵐ)`.
    Nc { n: u32, m: u32 },
}

impl StongMonomial {
    pub fn degree(self) -> AxisDegree {
        match self {
            StongMonomial::Poly { n, m } => C2Stong::poly_degree(n as i64, m as i64),
            StongMonomial::Nc { n, m } => C2Stong::nc_degree(n as i64, m as i64),
        }
    }

    /// The unique basis monomial in degree `(a, s)`, if any.
    pub fn at(a: i64, s: i64) -> Option<StongMonomial> {
        // xⁿyᵐ: a = -m, s = n + m.
        if a <= 0 && s + a >= 0 {
            return Some(StongMonomial::Poly { n: (s + a) as u32, m: (-a) as u32 });
        }
        // θ/xⁿyᵐ: a = 2 + m, s = -2 - n - m.
        let (m, n) = (a - 2, -s - a);
        (m >= 0 && n >= 0).then_some(StongMonomial::Nc { n: n as u32, m: m as u32 })
    }

    /// As a monomial on `axis`.
    pub fn to_monomial(self, axis: Axis) -> Monomial {
        match self {
            StongMonomial::Poly { n, m } => {
                Monomial::from_pairs([(Gen::X(axis), n as i64), (Gen::Y(axis), m as i64)])
            }
            StongMonomial::Nc { n, m } => Monomial::theta(ThetaPart::new(axis, n, m)),
        }
    }
}

/// An element of the Stong ring on a fixed axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StongElement {
    pub axis: Axis,
    terms: BTreeSet<StongMonomial>,
}

impl StongElement {
    pub fn zero(axis: Axis) -> Self {
        StongElement { axis, terms: BTreeSet::new() }
    }

    pub fn monomial(axis: Axis, m: StongMonomial) -> Self {
        StongElement { axis, terms: BTreeSet::from([m]) }
    }

    pub fn poly(axis: Axis, n: u32, m: u32) -> Self {
        StongElement::monomial(axis, StongMonomial::Poly { n, m })
    }

    pub fn nc(axis: Axis, n: u32, m: u32) -> Self {
        StongElement::monomial(axis, StongMonomial::Nc { n, m })
    }

    pub fn terms(&self) -> impl Iterator<Item = StongMonomial> + '_ {
        self.terms.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn toggle(&mut self, m: StongMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn to_element(&self) -> F2Element {
        self.terms.iter().map(|m| m.to_monomial(self.axis)).collect()
    }
}

impl fmt::Display for StongElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_element().fmt(f)
    }
}

fn stong_mul_monomials(u: StongMonomial, v: StongMonomial) -> Option<StongMonomial> {
    use StongMonomial::*;
    match (u, v) {
        (Poly { n: a, m: b }, Poly { n: c, m: d }) => Some(Poly { n: a + c, m: b + d }),
        (Poly { n: a, m: b }, Nc { n, m }) | (Nc { n, m }, Poly { n: a, m: b }) => {
            (a <= n && b <= m).then(|| Nc { n: n - a, m: m - b })
        }
        (Nc { .. }, Nc { .. }) => None,
    }
}

/// Product in the Stong ring. Both factors must live on the same axis.
pub fn stong_mul(u: &StongElement, v: &StongElement) -> Result<StongElement> {
    if u.axis != v.axis {
        return Err(Error::IllFormed(format!(
            "Stong factors on different axes {} and {}",
            u.axis, v.axis
        )));
    }
    let mut out = StongElement::zero(u.axis);
    for a in u.terms() {
        for b in v.terms() {
            if let Some(p) = stong_mul_monomials(a, b) {
                out.toggle(p);
            }
        }
    }
    Ok(out)
}

/// Dimension of the Stong ring in degree `a + s·axis`; always 0 or 1.
pub fn stong_dim(_axis: Axis, a: i64, s: i64) -> u64 {
    StongMonomial::at(a, s).is_some() as u64
}

/// Rewriting systems accepted by [`normal_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sector {
    /// `Z/2[x1,y1,x2,y2,x3,y3]/(x1y2y3 + y1x2y3 + y1y2x3)`.
    PositiveCone,
    /// The E-space ring: Stong ring on ε tensored with `Z/2[x1,y1,x3,y3,κ2^{±1}]`
    /// along `κ2·y2 = y1y3`, `κ2·x2 = x1y3 + x3y1`.
    ESpace,
}

/// Canonical form of `e` in `sector`.
///
/// In the positive cone every monomial divisible by `x1y2y3` is rewritten as
/// `y1x2y3 + y1y2x3`. In the E-space sector `x2` and `y2` are eliminated from
/// polynomial monomials using the invertibility of `κ2`, and `θ2`-multiples are
/// reduced modulo `y1y3`, `x1y3`, `x3y1²`, each step lowering the θ-denominator.
pub fn normal_form(e: &F2Element, sector: Sector) -> Result<F2Element> {
    let mut out = F2Element::zero();
    for m in e.terms() {
        let reduced = match sector {
            Sector::PositiveCone => positive_cone_reduce(m)?,
            Sector::ESpace => e_space_reduce(m)?,
        };
        out = out.add(&reduced);
    }
    Ok(out)
}

/// Exponent vector `[x1, y1, x2, y2, x3, y3]` of a polynomial monomial.
pub(crate) fn poly_exponents(m: &Monomial) -> [i64; 6] {
    let mut v = [0; 6];
    for (i, g) in Gen::ORDER[..6].iter().enumerate() {
        v[i] = m.exponent(*g);
    }
    v
}

pub(crate) fn poly_monomial(v: [i64; 6]) -> Monomial {
    Monomial::from_pairs(Gen::ORDER[..6].iter().copied().zip(v))
}

fn positive_cone_reduce(m: &Monomial) -> Result<F2Element> {
    if !m.is_polynomial() {
        return Err(Error::IllFormed(format!("{m} is not in the positive cone")));
    }
    let mut out = F2Element::zero();
    let mut stack = vec![poly_exponents(m)];
    while let Some(v) = stack.pop() {
        // x1 y2 y3 -> y1 x2 y3 + y1 y2 x3
        if v[0] >= 1 && v[3] >= 1 && v[5] >= 1 {
            let mut base = v;
            base[0] -= 1;
            base[3] -= 1;
            base[5] -= 1;
            let mut t1 = base;
            t1[1] += 1;
            t1[2] += 1;
            t1[5] += 1;
            let mut t2 = base;
            t2[1] += 1;
            t2[3] += 1;
            t2[4] += 1;
            stack.push(t1);
            stack.push(t2);
        } else {
            out.toggle(poly_monomial(v));
        }
    }
    Ok(out)
}

/// Working representation of an E-space monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ETerm {
    /// θ2 denominator `(x2, y2)` exponents, when the term is a θ2-multiple.
    theta: Option<(i64, i64)>,
    x1: i64,
    y1: i64,
    x3: i64,
    y3: i64,
    k2: i64,
}

impl ETerm {
    fn to_monomial(self) -> Monomial {
        let e = Axis::Epsilon;
        Monomial::from_pairs([
            (Gen::X(Axis::Sigma), self.x1),
            (Gen::Y(Axis::Sigma), self.y1),
            (Gen::X(Axis::SigmaEpsilon), self.x3),
            (Gen::Y(Axis::SigmaEpsilon), self.y3),
            (Gen::Kappa(e), self.k2),
        ])
        .with_theta(self.theta.map(|(n, m)| ThetaPart::new(e, n as u32, m as u32)))
    }
}

fn e_space_reduce(m: &Monomial) -> Result<F2Element> {
    let ill = || Error::IllFormed(format!("{m} is not an E-space monomial"));
    if m.theta_part().is_some_and(|t| t.axis != Axis::Epsilon) {
        return Err(ill());
    }
    for (g, e) in m.exponents() {
        let allowed = match g {
            Gen::X(_) | Gen::Y(_) => e >= 0,
            Gen::Kappa(Axis::Epsilon) => true,
            _ => false,
        };
        if !allowed {
            return Err(ill());
        }
    }
    let (x2, y2) = (m.exponent(Gen::X(Axis::Epsilon)), m.exponent(Gen::Y(Axis::Epsilon)));
    let base = ETerm {
        theta: None,
        x1: m.exponent(Gen::X(Axis::Sigma)),
        y1: m.exponent(Gen::Y(Axis::Sigma)),
        x3: m.exponent(Gen::X(Axis::SigmaEpsilon)),
        y3: m.exponent(Gen::Y(Axis::SigmaEpsilon)),
        k2: m.exponent(Gen::Kappa(Axis::Epsilon)),
    };
    let mut out = F2Element::zero();
    match m.theta_part() {
        None => {
            // y2 = y1 y3 / κ2 and x2 = (x1 y3 + x3 y1) / κ2.
            let mut terms = vec![ETerm { y1: base.y1 + y2, y3: base.y3 + y2, k2: base.k2 - y2, ..base }];
            for _ in 0..x2 {
                terms = terms
                    .into_iter()
                    .flat_map(|t| {
                        [
                            ETerm { x1: t.x1 + 1, y3: t.y3 + 1, k2: t.k2 - 1, ..t },
                            ETerm { x3: t.x3 + 1, y1: t.y1 + 1, k2: t.k2 - 1, ..t },
                        ]
                    })
                    .collect();
            }
            for t in terms {
                out.toggle(t.to_monomial());
            }
        }
        Some(part) => {
            let (n, mm) = (part.x as i64 - x2, part.y as i64 - y2);
            if n < 0 || mm < 0 {
                return Ok(out);
            }
            let mut stack = vec![ETerm { theta: Some((n, mm)), ..base }];
            while let Some(t) = stack.pop() {
                let (n, mm) = t.theta.expect("theta term");
                let lowered = |dn: i64, dm: i64, t: ETerm| -> Option<ETerm> {
                    (n - dn >= 0 && mm - dm >= 0)
                        .then_some(ETerm { theta: Some((n - dn, mm - dm)), k2: t.k2 + 1, ..t })
                };
                if t.y1 >= 1 && t.y3 >= 1 {
                    // y1 y3 = κ2 y2
                    stack.extend(lowered(0, 1, ETerm { y1: t.y1 - 1, y3: t.y3 - 1, ..t }));
                } else if t.x1 >= 1 && t.y3 >= 1 {
                    // x1 y3 = κ2 x2 + x3 y1
                    let rest = ETerm { x1: t.x1 - 1, y3: t.y3 - 1, ..t };
                    stack.extend(lowered(1, 0, rest));
                    stack.push(ETerm { x3: rest.x3 + 1, y1: rest.y1 + 1, ..rest });
                } else if t.x3 >= 1 && t.y1 >= 2 {
                    // x3 y1^2 = κ2 (y1 x2 + x1 y2)
                    let rest = ETerm { x3: t.x3 - 1, y1: t.y1 - 2, ..t };
                    stack.extend(lowered(1, 0, ETerm { y1: rest.y1 + 1, ..rest }));
                    stack.extend(lowered(0, 1, ETerm { x1: rest.x1 + 1, ..rest }));
                } else {
                    out.toggle(t.to_monomial());
                }
            }
        }
    }
    Ok(out)
}

/// Product in the E-space ring, in normal form.
pub fn e_space_mul(u: &F2Element, v: &F2Element) -> Result<F2Element> {
    let mut out = F2Element::zero();
    for a in u.terms() {
        for b in v.terms() {
            if let Some(m) = a.concat(b) {
                out = out.add(&e_space_reduce(&m)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> F2Element {
        s.parse().unwrap()
    }

    #[test]
    fn stong_mul_examples() {
        let s = Axis::Sigma;
        let x = StongElement::poly(s, 1, 0);
        assert_eq!(stong_mul(&x, &StongElement::nc(s, 2, 1)).unwrap(), StongElement::nc(s, 1, 1));
        assert!(stong_mul(&x, &StongElement::nc(s, 0, 0)).unwrap().is_zero());
        assert_eq!(
            stong_mul(&StongElement::poly(s, 2, 1), &StongElement::poly(s, 1, 3)).unwrap(),
            StongElement::poly(s, 3, 4)
        );
        assert!(stong_mul(&x, &StongElement::poly(Axis::Epsilon, 1, 0)).is_err());
    }

    #[test]
    fn stong_path_consistency() {
        let s = Axis::Sigma;
        let x = StongElement::poly(s, 1, 0);
        let y = StongElement::poly(s, 0, 1);
        let theta_xy = StongElement::nc(s, 1, 1);
        let step = stong_mul(&y, &theta_xy).unwrap();
        assert_eq!(step, StongElement::nc(s, 1, 0));
        let theta = stong_mul(&x, &step).unwrap();
        assert_eq!(theta, StongElement::nc(s, 0, 0));
        assert!(stong_mul(&x, &theta).unwrap().is_zero());
        assert!(stong_mul(&theta, &theta_xy).unwrap().is_zero());
    }

    #[test]
    fn stong_dim_examples() {
        assert_eq!(stong_dim(Axis::Sigma, 0, 0), 1);
        assert_eq!(stong_dim(Axis::Sigma, 2, -2), 1);
        assert_eq!(stong_dim(Axis::Sigma, 1, -1), 0);
    }

    #[test]
    fn positive_cone_examples() {
        assert_eq!(normal_form(&el("x1*y2*y3"), Sector::PositiveCone).unwrap(), el("y1*x2*y3 + y1*y2*x3"));
        assert!(normal_form(&el("x1*y2*y3 + y1*x2*y3 + y1*y2*x3"), Sector::PositiveCone)
            .unwrap()
            .is_zero());
        assert!(normal_form(&el("k1"), Sector::PositiveCone).is_err());
    }

    #[test]
    fn e_space_examples() {
        assert_eq!(normal_form(&el("k2*y2"), Sector::ESpace).unwrap(), el("y1*y3"));
        assert_eq!(normal_form(&el("k2*x2"), Sector::ESpace).unwrap(), el("x1*y3 + y1*x3"));
        assert!(normal_form(&el("theta2*y1^2*y3^2*k2^-2"), Sector::ESpace).unwrap().is_zero());
        assert!(normal_form(&el("theta1"), Sector::ESpace).is_err());
        assert!(normal_form(&el("x1^-1"), Sector::ESpace).is_err());
    }

    #[test]
    fn print_and_parse() {
        let e = el("y1*y2*x3 + y1*x2*y3");
        assert_eq!(e.to_string(), "y1*x2*y3 + y1*y2*x3");
        assert_eq!(el("theta1/(x1^2*y1)*x3").to_string(), "theta1/(x1^2*y1)*x3");
        assert_eq!(el("θ1/y1").to_string(), "theta1/y1");
        assert_eq!(el("κ2^-1*x1").to_string(), "x1*k2^-1");
        assert_eq!(el("x1*x1").to_string(), "x1^2");
        assert_eq!(el("x1 + x1"), F2Element::zero());
        assert_eq!(el("0").to_string(), "0");
        assert_eq!(el("1").to_string(), "1");
        assert!("theta1/x2".parse::<Monomial>().is_err());
        assert!("z1".parse::<Monomial>().is_err());
        assert!("theta1*theta2".parse::<Monomial>().is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(el("x1*y1").degree(), Some(KleinDegree::new(-1, 2, 0, 0)));
        assert_eq!(el("Theta").degree(), Some(KleinDegree::new(3, -1, -1, -1)));
        assert_eq!(el("theta1/y1").degree(), Some(KleinDegree::new(3, -3, 0, 0)));
        assert_eq!(el("k2").degree(), Some(KleinDegree::new(-1, 1, -1, 1)));
        assert_eq!(el("i1").degree(), Some(KleinDegree::new(1, 1, -1, -1)));
        assert!(el("x1 + y1").degree().is_none());
    }
}
