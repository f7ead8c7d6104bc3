//! The RO(K)-graded cohomology ring of a point: groups with bases where known, the
//! partial multiplication table, and the positive-cone Mackey functor.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degrees::{Axis, KleinDegree};
use crate::error::{Error, Result};
use crate::f2algebra::{
    normal_form, poly_exponents, poly_monomial, F2Element, Gen, Monomial, Sector, ThetaPart,
};
use crate::series::dim_point;

/// Dimension of a group, with a monomial basis when the sector provides one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub degree: KleinDegree,
    pub dimension: u64,
    pub basis: Option<Vec<Monomial>>,
}

/// `H^d` of a point: dimension from the Poincaré series, basis where known.
pub fn group_at(d: KleinDegree) -> GroupDescriptor {
    GroupDescriptor { degree: d, dimension: dim_point(d), basis: basis_at(d) }
}

/// A monomial basis of `H^d`, when `d` lies in the positive cone or in a sector
/// with one zero coefficient and one non-negative coefficient.
pub fn basis_at(d: KleinDegree) -> Option<Vec<Monomial>> {
    let rep = d.rep_part();
    if rep.iter().all(|&c| c >= 0) {
        return Some(positive_cone_basis(d));
    }
    for zero in Axis::ALL {
        if rep[zero.index()] != 0 {
            continue;
        }
        for free in Axis::ALL {
            let stong = zero.third(free);
            if let Some(stong) = stong.filter(|_| rep[free.index()] >= 0) {
                return Some(mixed_sector_basis(d.a, stong, rep[stong.index()], free, rep[free.index()]));
            }
        }
    }
    None
}

/// Monomials of the given degree not divisible by `x1 y2 y3`.
fn positive_cone_basis(d: KleinDegree) -> Vec<Monomial> {
    let [p, b, q] = d.rep_part();
    let mut out = Vec::new();
    for m1 in 0..=p {
        for m2 in 0..=b {
            let m3 = -d.a - m1 - m2;
            if !(0..=q).contains(&m3) {
                continue;
            }
            let n1 = p - m1;
            if n1 >= 1 && m2 >= 1 && m3 >= 1 {
                continue;
            }
            out.push(poly_monomial([n1, m1, b - m2, m2, q - m3, m3]));
        }
    }
    out.sort();
    out
}

/// Basis of the sector `Stong(stong) ⊗ Z/2[x_free, y_free]` with `s_free >= 0`.
fn mixed_sector_basis(a: i64, stong: Axis, s: i64, free: Axis, s_free: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for m2 in 0..=s_free {
        let n2 = s_free - m2;
        let tail = Monomial::from_pairs([(Gen::X(free), n2), (Gen::Y(free), m2)]);
        if s >= 0 {
            // x^{n1} y^{m1}: a = -m1 - m2, s = n1 + m1.
            let m1 = -a - m2;
            if (0..=s).contains(&m1) {
                out.push(tail.with(Gen::X(stong), s - m1).with(Gen::Y(stong), m1));
            }
        } else {
            // θ/x^{n1}y^{m1}: a = 2 + m1 - m2, s = -2 - n1 - m1.
            let m1 = a - 2 + m2;
            let n1 = -s - 2 - m1;
            if m1 >= 0 && n1 >= 0 {
                out.push(tail.with_theta(Some(ThetaPart::new(stong, n1 as u32, m1 as u32))));
            }
        }
    }
    out.sort();
    out
}

/// A single factor of a monomial, used by the product evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    X(Axis),
    Y(Axis),
    Theta(ThetaPart),
    Kappa(Axis),
    Iota(Axis),
    BigTheta,
}

impl Atom {
    fn is_named(self) -> bool {
        matches!(self, Atom::Kappa(_) | Atom::Iota(_) | Atom::BigTheta)
    }

    fn plain_theta(self) -> Option<Axis> {
        match self {
            Atom::Theta(t) if t.is_plain() => Some(t.axis),
            _ => None,
        }
    }
}

fn atoms_of(m: &Monomial) -> Result<Vec<Atom>> {
    let mut atoms: Vec<Atom> = m.theta_part().map(Atom::Theta).into_iter().collect();
    for (g, e) in m.exponents() {
        if e < 0 {
            return Err(Error::IllFormed(format!("negative exponent in point-ring monomial {m}")));
        }
        let atom = match g {
            Gen::X(i) => Atom::X(i),
            Gen::Y(i) => Atom::Y(i),
            Gen::Kappa(i) => Atom::Kappa(i),
            Gen::Iota(i) => Atom::Iota(i),
            Gen::BigTheta => Atom::BigTheta,
        };
        atoms.extend(std::iter::repeat_n(atom, e as usize));
    }
    Ok(atoms)
}

/// Whether a zero relation applies to some pair of factors.
fn has_zero_factorization(atoms: &[Atom]) -> bool {
    for (i, &u) in atoms.iter().enumerate() {
        for &v in &atoms[i + 1..] {
            if pair_is_zero(u, v) || pair_is_zero(v, u) {
                return true;
            }
        }
        if let Atom::Theta(t) = u {
            let count = |pred: &dyn Fn(Atom) -> bool| atoms.iter().filter(|a| pred(**a)).count() as u32;
            if count(&|a| a == Atom::X(t.axis)) > t.x || count(&|a| a == Atom::Y(t.axis)) > t.y {
                return true;
            }
        }
    }
    false
}

fn pair_is_zero(u: Atom, v: Atom) -> bool {
    match (u, v) {
        (Atom::BigTheta, other) => match other {
            Atom::Theta(t) => t.is_plain(),
            _ => true,
        },
        (Atom::Iota(i), Atom::X(j) | Atom::Y(j)) => i != j,
        (Atom::Iota(i), Atom::Theta(t)) => t.is_plain() && t.axis != i,
        (Atom::Iota(i), Atom::Kappa(j)) => i == j,
        (Atom::Iota(i), Atom::Iota(j)) => i != j,
        (Atom::Theta(s), Atom::Theta(t)) => s.axis == t.axis,
        _ => false,
    }
}

/// Replaces the first pair of factors covered by a product relation.
fn combine(atoms: &[Atom]) -> Option<Vec<Vec<Atom>>> {
    for i in 0..atoms.len() {
        for j in 0..atoms.len() {
            if i == j {
                continue;
            }
            let Some(replacements) = pair_product(atoms[i], atoms[j]) else {
                continue;
            };
            let rest: Vec<Atom> = atoms
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, a)| *a)
                .collect();
            return Some(
                replacements
                    .into_iter()
                    .map(|r| rest.iter().copied().chain(r).collect())
                    .collect(),
            );
        }
    }
    None
}

/// Product relations among named classes, as sums of factor lists.
fn pair_product(u: Atom, v: Atom) -> Option<Vec<Vec<Atom>>> {
    match (u, v) {
        (Atom::Iota(i), t) if t.plain_theta() == Some(i) => Some(vec![vec![Atom::BigTheta]]),
        (Atom::Kappa(i), t) => {
            if let Some(j) = t.plain_theta() {
                return i.third(j).map(|k| vec![vec![Atom::Iota(k)]]);
            }
            let (j, k) = i.others();
            match t {
                Atom::X(a) if a == i => Some(vec![vec![Atom::X(j), Atom::Y(k)], vec![Atom::Y(j), Atom::X(k)]]),
                Atom::Y(a) if a == i => Some(vec![vec![Atom::Y(j), Atom::Y(k)]]),
                Atom::Kappa(a) => i.third(a).map(|k| vec![vec![Atom::Y(k), Atom::Y(k)]]),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Evaluates a product of factors; `None` when the relations do not determine it.
fn evaluate(atoms: &[Atom]) -> Option<F2Element> {
    if has_zero_factorization(atoms) {
        return Some(F2Element::zero());
    }
    if let Some(terms) = combine(atoms) {
        let mut out = F2Element::zero();
        for t in terms {
            out = out.add(&evaluate(&t)?);
        }
        return Some(out);
    }
    if atoms.iter().any(|a| a.is_named()) {
        return match atoms {
            [Atom::Kappa(i)] => Some(Monomial::gen(Gen::Kappa(*i)).into()),
            [Atom::Iota(i)] => Some(Monomial::gen(Gen::Iota(*i)).into()),
            [Atom::BigTheta] => Some(Monomial::gen(Gen::BigTheta).into()),
            _ => None,
        };
    }
    let thetas: Vec<ThetaPart> =
        atoms.iter().filter_map(|a| if let Atom::Theta(t) = a { Some(*t) } else { None }).collect();
    let mut poly = Monomial::one();
    for a in atoms {
        match *a {
            Atom::X(i) => poly = poly.with(Gen::X(i), 1),
            Atom::Y(i) => poly = poly.with(Gen::Y(i), 1),
            _ => {}
        }
    }
    match thetas.as_slice() {
        [] => normal_form(&poly.into(), Sector::PositiveCone).ok(),
        [t] => {
            let own_x = poly.exponent(Gen::X(t.axis)) as u32;
            let own_y = poly.exponent(Gen::Y(t.axis)) as u32;
            let rest = poly.with(Gen::X(t.axis), -(own_x as i64)).with(Gen::Y(t.axis), -(own_y as i64));
            let other_axes = Axis::ALL
                .iter()
                .filter(|ax| rest.exponent(Gen::X(**ax)) + rest.exponent(Gen::Y(**ax)) > 0)
                .count();
            // θ times polynomials in two further axes is outside every known sector.
            (other_axes <= 1).then(|| {
                rest.with_theta(Some(ThetaPart::new(t.axis, t.x - own_x, t.y - own_y))).into()
            })
        }
        _ => None,
    }
}

fn check_homogeneous(e: &F2Element) -> Result<()> {
    if e.is_homogeneous() {
        Ok(())
    } else {
        Err(Error::IllFormed(format!("{e} is not homogeneous")))
    }
}

/// Product in the point ring, or [`Error::UnknownProduct`] when some pair of monomials
/// multiplies to a class the known relations do not name.
pub fn multiply(u: &F2Element, v: &F2Element) -> Result<F2Element> {
    check_homogeneous(u)?;
    check_homogeneous(v)?;
    let mut out = F2Element::zero();
    for a in u.terms() {
        for b in v.terms() {
            let mut atoms = atoms_of(a)?;
            atoms.extend(atoms_of(b)?);
            let product = evaluate(&atoms).ok_or_else(|| Error::UnknownProduct {
                left: a.to_string(),
                right: b.to_string(),
            })?;
            out = out.add(&product);
        }
    }
    Ok(out)
}

/// Rewrites `e` into canonical point-ring form (a product with `1`).
pub fn normalize(e: &F2Element) -> Result<F2Element> {
    multiply(e, &F2Element::one())
}

/// A level of the positive-cone Mackey functor.
///
/// `Index2(axis)` is the index-two subgroup on which the representation `axis` becomes
/// trivial; restricting to it kills `x_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MackeyLevel {
    Top,
    Index2(Axis),
    Trivial,
}

impl MackeyLevel {
    fn rank(self) -> u8 {
        match self {
            MackeyLevel::Top => 2,
            MackeyLevel::Index2(_) => 1,
            MackeyLevel::Trivial => 0,
        }
    }

    /// Whether generator `g` survives at this level.
    pub fn has_generator(self, g: Gen) -> bool {
        match (self, g) {
            (MackeyLevel::Top, Gen::X(_) | Gen::Y(_)) => true,
            (MackeyLevel::Index2(dead), Gen::X(i)) => i != dead,
            (MackeyLevel::Index2(_), Gen::Y(_)) => true,
            (MackeyLevel::Trivial, Gen::Y(_)) => true,
            _ => false,
        }
    }

    /// Canonical form in this level's ring.
    pub fn normal_form(self, e: &F2Element) -> Result<F2Element> {
        for m in e.terms() {
            let legal = m.is_polynomial() && m.exponents().all(|(g, _)| self.has_generator(g));
            if !legal {
                return Err(Error::IllFormed(format!("{m} is not in the level {self} ring")));
            }
        }
        match self {
            MackeyLevel::Top => normal_form(e, Sector::PositiveCone),
            MackeyLevel::Trivial => Ok(e.clone()),
            MackeyLevel::Index2(dead) => {
                // x_j y_k -> y_j x_k for the two surviving axes j < k.
                let (j, k) = dead.others();
                let (xj, yj, xk, yk) = (2 * j.index(), 2 * j.index() + 1, 2 * k.index(), 2 * k.index() + 1);
                Ok(e.terms()
                    .map(|m| {
                        let mut v = poly_exponents(m);
                        let shift = v[xj].min(v[yk]);
                        v[xj] -= shift;
                        v[yk] -= shift;
                        v[yj] += shift;
                        v[xk] += shift;
                        poly_monomial(v)
                    })
                    .collect())
            }
        }
    }
}

impl fmt::Display for MackeyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MackeyLevel::Top => f.write_str("top"),
            MackeyLevel::Index2(Axis::Sigma) => f.write_str("sigma"),
            MackeyLevel::Index2(Axis::Epsilon) => f.write_str("epsilon"),
            MackeyLevel::Index2(Axis::SigmaEpsilon) => f.write_str("sigma-epsilon"),
            MackeyLevel::Trivial => f.write_str("trivial"),
        }
    }
}

impl FromStr for MackeyLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "top" | "K" => MackeyLevel::Top,
            "sigma" => MackeyLevel::Index2(Axis::Sigma),
            "epsilon" => MackeyLevel::Index2(Axis::Epsilon),
            "sigma-epsilon" => MackeyLevel::Index2(Axis::SigmaEpsilon),
            "trivial" => MackeyLevel::Trivial,
            _ => return Err(Error::Parse(format!("unknown Mackey level {s:?}"))),
        })
    }
}

/// Restriction between levels of the positive-cone Mackey functor: generators that
/// survive map to themselves, the others to zero.
pub fn mackey_restrict(from: MackeyLevel, to: MackeyLevel, e: &F2Element) -> Result<F2Element> {
    let below = match (from, to) {
        (MackeyLevel::Index2(a), MackeyLevel::Index2(b)) => a == b,
        _ => from.rank() >= to.rank(),
    };
    if !below {
        return Err(Error::IllFormed(format!("no restriction from level {from} to level {to}")));
    }
    let e = from.normal_form(e)?;
    let kept: F2Element = e
        .terms()
        .filter(|m| m.exponents().all(|(g, _)| to.has_generator(g)))
        .cloned()
        .collect();
    to.normal_form(&kept)
}

/// Transfers in the positive-cone Mackey functor are zero.
pub fn mackey_transfer(_from: MackeyLevel, _to: MackeyLevel, _e: &F2Element) -> F2Element {
    F2Element::zero()
}
