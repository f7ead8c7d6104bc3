//! Cohomology of the auxiliary spaces `B_{Σ2}C2`, `E_{Σ2}C2`, `Ẽ_{Σ2}C2` (topological)
//! and `BC2`, `W_q` (motivic over the reals).

use serde::{Deserialize, Serialize};

use crate::degrees::{Axis, KleinDegree};
use crate::error::{Error, Result};
use crate::f2algebra::{Gen, Monomial, StongMonomial, ThetaPart};
use crate::klein_point::GroupDescriptor;

/// A group given by its dimension and a basis written as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceGroup {
    pub dimension: u64,
    pub basis: Vec<String>,
}

impl SpaceGroup {
    fn from_basis(basis: Vec<String>) -> Self {
        SpaceGroup { dimension: basis.len() as u64, basis }
    }
}

fn power(name: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    }
}

fn product(factors: impl IntoIterator<Item = Option<String>>) -> String {
    let parts: Vec<String> = factors.into_iter().flatten().filter(|f| f != "1").collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Basis monomials `α·c^δ·b^e` of `H^{a+bε}(B_{Σ2}C2)`, with `α` in the Stong ring on ε.
/// `|c| = ε`, `|b| = 1 + ε`, and `c² = x2·c + y2·b`.
fn b_space_terms(a: i64, b: i64, reduced: bool) -> Vec<(StongMonomial, i64, i64)> {
    let mut out = Vec::new();
    // Polynomial α needs e ≤ b; θ-multiples need e ≤ a - 2.
    for e in 0..=b.max(a - 2).max(-1) {
        for delta in 0..=1 {
            if reduced && delta == 0 && e == 0 {
                continue;
            }
            if let Some(alpha) = StongMonomial::at(a - e, b - delta - e) {
                out.push((alpha, delta, e));
            }
        }
    }
    out
}

fn b_space_string(alpha: StongMonomial, delta: i64, e: i64) -> String {
    let alpha = alpha.to_monomial(Axis::Epsilon).to_string();
    product([Some(alpha), power("c", delta), power("b", e)])
}

/// `H^{a+bε}(B_{Σ2}C2; Z/2)`.
pub fn b_space_group(a: i64, b: i64) -> SpaceGroup {
    SpaceGroup::from_basis(
        b_space_terms(a, b, false).into_iter().map(|(al, d, e)| b_space_string(al, d, e)).collect(),
    )
}

pub fn b_space_dim(a: i64, b: i64) -> u64 {
    b_space_terms(a, b, false).len() as u64
}

/// Reduced cohomology: the summand spanned by classes with a positive power of `c` or `b`.
pub fn b_space_reduced_dim(a: i64, b: i64) -> u64 {
    b_space_terms(a, b, true).len() as u64
}

/// Basis `τ^i ρ^j s^δ t^e` of `H^{a,w}(BC2)` with `e < limit` when given.
fn bc2_terms(a: i64, w: i64, limit: Option<i64>) -> Vec<String> {
    let mut out = Vec::new();
    for delta in 0..=1 {
        let mut e = 0;
        while 2 * e + delta <= a && limit.is_none_or(|q| e < q) {
            let j = a - delta - 2 * e;
            let i = w - j - delta - e;
            if i >= 0 {
                out.push(product([power("tau", i), power("rho", j), power("s", delta), power("t", e)]));
            }
            e += 1;
        }
    }
    out
}

/// `H^{a,w}(BC2)` over the reals, with `|τ| = (0,1)`, `|ρ| = (1,1)`, `|s| = (1,1)`, `|t| = (2,1)`.
pub fn bc2_motivic_group(a: i64, w: i64) -> SpaceGroup {
    SpaceGroup::from_basis(bc2_terms(a, w, None))
}

pub fn bc2_motivic_dim(a: i64, w: i64) -> u64 {
    bc2_terms(a, w, None).len() as u64
}

/// `H^{a,w}(W_q)`: the `BC2` count with `t^q = 0`.
pub fn w_q_motivic_group(q: i64, a: i64, w: i64) -> Result<SpaceGroup> {
    if q < 1 {
        return Err(Error::IllFormed(format!("W_q needs q >= 1, got {q}")));
    }
    Ok(SpaceGroup::from_basis(bc2_terms(a, w, Some(q))))
}

pub fn w_q_motivic_dim(q: i64, a: i64, w: i64) -> Result<u64> {
    Ok(w_q_motivic_group(q, a, w)?.dimension)
}

fn e_monomial(theta: Option<(i64, i64)>, [x1, y1, x3, y3]: [i64; 4], k2: i64) -> Monomial {
    Monomial::from_pairs([
        (Gen::X(Axis::Sigma), x1),
        (Gen::Y(Axis::Sigma), y1),
        (Gen::X(Axis::SigmaEpsilon), x3),
        (Gen::Y(Axis::SigmaEpsilon), y3),
        (Gen::Kappa(Axis::Epsilon), k2),
    ])
    .with_theta(theta.map(|(n, m)| ThetaPart::new(Axis::Epsilon, n as u32, m as u32)))
}

/// `H^d(E_{Σ2}C2; Z/2)`, enumerated in the E-space normal form.
///
/// Polynomial part: `x1^a y1^c x3^e y3^g κ2^k`. θ part: `θ2/(x2ⁿy2ᵐ)` times a monomial in
/// `x1, y1, x3, y3` not divisible by `y1y3`, `x1y3` or `x3y1²`, times `κ2^k`.
pub fn e_space_group(d: KleinDegree) -> GroupDescriptor {
    let KleinDegree { a, p, b, q } = d;
    let mut basis = Vec::new();

    let k = -b;
    let (sp, sq) = (p - k, q - k);
    if sp >= 0 && sq >= 0 {
        for c in 0..=sp {
            let g = b - a - c;
            if (0..=sq).contains(&g) {
                basis.push(e_monomial(None, [sp - c, c, sq - g, g], k));
            }
        }
    }

    let k_hi = p.min(q).min(-2 - b);
    let k_lo = p.min(q).min(1 - a);
    for k in k_lo..=k_hi {
        let (sp, sq) = (p - k, q - k);
        for c in 0..=sp {
            for g in 0..=sq {
                let (x1, x3) = (sp - c, sq - g);
                let standard = if g >= 1 { c == 0 && x1 == 0 } else { x3 == 0 || c <= 1 };
                let m = a - 2 + c + g + k;
                let n = -2 - b - k - m;
                if standard && m >= 0 && n >= 0 {
                    basis.push(e_monomial(Some((n, m)), [x1, c, x3, g], k));
                }
            }
        }
    }
    basis.sort();
    GroupDescriptor { degree: d, dimension: basis.len() as u64, basis: Some(basis) }
}

/// `H̃^d(Ẽ_{Σ2}C2; Z/2)`.
///
/// `x1` and `x3` act invertibly, so the group depends only on `(a, b)` and equals reduced
/// `H^{(a-1)+bε}(B_{Σ2}C2)`. Basis elements are written `x1^p*x3^q*Σ(α*c^δ*b^e)`.
pub fn etilde_space_group(d: KleinDegree) -> SpaceGroup {
    SpaceGroup::from_basis(
        b_space_terms(d.a - 1, d.b, true)
            .into_iter()
            .map(|(al, de, e)| {
                let inner = format!("Σ({})", b_space_string(al, de, e));
                product([power("x1", d.p), power("x3", d.q), Some(inner)])
            })
            .collect(),
    )
}

pub fn etilde_dim(d: KleinDegree) -> u64 {
    b_space_reduced_dim(d.a - 1, d.b)
}

/// Betti realization of a named motivic class.
pub fn realize_class(name: &str) -> Result<String> {
    let image = match name {
        "s" => "c",
        "t" => "b",
        "τ" | "tau" => "y2",
        "ρ" | "rho" => "x2",
        "x1" | "y1" | "x2" | "y2" | "x3" | "y3" | "theta1" | "k1" | "k2" | "k3" | "i2" | "i3" => name,
        "θ1" => "theta1",
        "κ1" => "k1",
        "κ2" => "k2",
        "κ3" => "k3",
        "ι2" => "i2",
        "ι3" => "i3",
        _ => return Err(Error::UnknownClass(name.to_string())),
    };
    Ok(image.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2algebra::{normal_form, F2Element, Sector};

    #[test]
    fn b_space_examples() {
        assert_eq!(b_space_group(0, 1).basis, vec!["x2", "c"]);
        assert_eq!(b_space_group(2, -1).basis, vec!["theta2*c"]);
        assert_eq!(b_space_dim(0, 0), 1);
    }

    #[test]
    fn bc2_examples() {
        assert_eq!(bc2_motivic_group(2, 1).basis, vec!["t"]);
        assert_eq!(bc2_motivic_group(1, 1).basis, vec!["rho", "s"]);
        assert_eq!(bc2_motivic_group(0, 0).basis, vec!["1"]);
        assert_eq!(w_q_motivic_dim(1, 2, 1).unwrap(), 0);
        assert_eq!(w_q_motivic_dim(3, 2, 1).unwrap(), 1);
        assert!(w_q_motivic_dim(0, 2, 1).is_err());
    }

    #[test]
    fn e_space_examples() {
        let basis = |d| {
            e_space_group(d).basis.unwrap().iter().map(ToString::to_string).collect::<Vec<_>>()
        };
        assert_eq!(basis(KleinDegree::ZERO), vec!["1"]);
        assert_eq!(basis(KleinDegree::new(-1, 1, -1, 1)), vec!["k2"]);
        assert_eq!(basis(KleinDegree::new(3, -3, 3, -3)), vec!["k2^-3"]);
        assert_eq!(e_space_group(KleinDegree::new(0, 0, 1, 0)).dimension, 2);
        assert_eq!(e_space_group(KleinDegree::new(4, 0, 0, 0)).dimension, 2);
    }

    #[test]
    fn e_space_basis_is_normal() {
        for a in -4..=4 {
            for p in -2..=2 {
                for b in -3..=3 {
                    for q in -2..=2 {
                        let g = e_space_group(KleinDegree::new(a, p, b, q));
                        for m in g.basis.unwrap() {
                            let e = F2Element::from(m.clone());
                            assert_eq!(normal_form(&e, Sector::ESpace).unwrap(), e, "{m}");
                            assert_eq!(m.degree(), KleinDegree::new(a, p, b, q));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn etilde_examples() {
        assert_eq!(etilde_dim(KleinDegree::new(2, 0, 1, -3)), 1);
        assert_eq!(etilde_space_group(KleinDegree::new(4, 0, 0, 0)).basis, vec!["Σ(theta2*c*b)"]);
        assert_eq!(etilde_space_group(KleinDegree::new(2, 1, 1, -3)).basis, vec!["x1*x3^-3*Σ(b)"]);
        for p in -3..=3 {
            for q in -3..=3 {
                assert_eq!(etilde_dim(KleinDegree::new(3, p, 0, q)), 0);
            }
        }
    }

    #[test]
    fn realization_dictionary() {
        assert_eq!(realize_class("tau").unwrap(), "y2");
        assert_eq!(realize_class("s").unwrap(), "c");
        assert_eq!(realize_class("κ2").unwrap(), "k2");
        assert!(matches!(realize_class("i1"), Err(Error::UnknownClass(_))));
        assert!(matches!(realize_class("theta2"), Err(Error::UnknownClass(_))));
    }
}
