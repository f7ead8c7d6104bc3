//! Poincaré series of the point ring and dimension extraction.
//!
//! For a triple `V = (p, b, q)` the series `P_V(x) = Σ_t dim H^{-t+V} x^t` is a finite
//! Laurent polynomial. [`series_for`] evaluates the closed forms case by case; the
//! sub-case formulas are exposed in [`closed_form`] so that overlapping cases can be
//! compared against each other.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::degrees::KleinDegree;

/// Finitely supported Laurent polynomial with non-negative integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigUint>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0)
    }

    /// `x^e`.
    pub fn monomial(e: i64) -> Self {
        LaurentPoly::from_terms([(e, 1u32)])
    }

    /// `x^lo + ... + x^hi`; the zero polynomial when `hi < lo`.
    pub fn geometric(lo: i64, hi: i64) -> Self {
        LaurentPoly::from_terms((lo..=hi).map(|e| (e, 1u32)))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigUint>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigUint) {
        if c.is_zero() {
            return;
        }
        *self.coeffs.entry(e).or_default() += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^e`.
    pub fn coefficient(&self, e: i64) -> BigUint {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn add(&self, other: &LaurentPoly) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let one = *c == BigUint::from(1u32);
            match (e, one) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// The sub-case formulas, named by the sign pattern they cover.
///
/// Arguments are the absolute values of the coefficients. `g(lo, hi)` below means
/// `x^lo + ... + x^hi`.
pub mod closed_form {
    use super::LaurentPoly;

    fn g(lo: i64, hi: i64) -> LaurentPoly {
        LaurentPoly::geometric(lo, hi)
    }

    fn x(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e)
    }

    /// `V = nα`: `g(0, n)`.
    pub fn single_positive(n: i64) -> LaurentPoly {
        g(0, n)
    }

    /// `V = -nα`: `g(-n, -2)`.
    pub fn single_negative(n: i64) -> LaurentPoly {
        g(-n, -2)
    }

    /// `V = nα + jβ`.
    pub fn pair_positive(n: i64, j: i64) -> LaurentPoly {
        g(0, n).mul(&g(0, j))
    }

    /// `V = nα - jβ`.
    pub fn pair_mixed(n: i64, j: i64) -> LaurentPoly {
        g(0, n).mul(&g(-j, -2))
    }

    /// `V = -nα - jβ`.
    pub fn pair_negative(n: i64, j: i64) -> LaurentPoly {
        g(-n, -2).mul(&g(-j, -2))
    }

    /// `V = lα + mβ + nγ`, all non-negative.
    pub fn all_positive(l: i64, m: i64, n: i64) -> LaurentPoly {
        g(0, l).mul(&g(0, m)).add(&x(1).mul(&g(0, l + m)).mul(&g(0, n - 1)))
    }

    /// `V = lα + mβ - kγ` in the sub-case `k <= l, m`.
    pub fn one_negative_small(l: i64, m: i64, k: i64) -> LaurentPoly {
        g(-k, -1).mul(&g(0, k - 2)).add(&x(k).mul(&g(0, l - k)).mul(&g(0, m - k)))
    }

    /// `V = lα + mβ - kγ` in the sub-case `k > l`.
    pub fn one_negative_large(l: i64, m: i64, k: i64) -> LaurentPoly {
        x(-(l + 1))
            .mul(&g(0, l))
            .mul(&g(0, l - 1))
            .add(&x(-k).mul(&g(0, k - l - 2)).mul(&g(0, l + m)))
    }

    /// `V = lα - jβ - kγ` in the sub-case `j, k >= l + 1`.
    pub fn two_negative_far(l: i64, j: i64, k: i64) -> LaurentPoly {
        x(-(j + k - l))
            .mul(&g(0, j - l - 2))
            .mul(&g(0, k - l - 2))
            .add(&x(-(l + 1)).mul(&g(0, l)).mul(&g(0, l - 1)))
    }

    /// `V = lα - jβ - kγ` in the sub-case `l >= k`.
    pub fn two_negative_near(l: i64, j: i64, k: i64) -> LaurentPoly {
        x(-j).mul(&g(0, j - 2)).mul(&g(0, l - k)).add(&x(-k).mul(&g(0, l - 1)).mul(&g(0, k - 1)))
    }

    /// `V = -iα - jβ - kγ`.
    pub fn all_negative(i: i64, j: i64, k: i64) -> LaurentPoly {
        let inner =
            g(0, j + k - 2).mul(&g(0, i - 2)).add(&x(i - 1).mul(&g(0, k - 1)).mul(&g(0, j - 1)));
        x(-(i + j + k)).mul(&inner)
    }
}

/// The Poincaré series `Σ_t dim H^{-t+V} x^t` of the point ring, `V = (p, b, q)`.
pub fn series_for(v: [i64; 3]) -> LaurentPoly {
    use closed_form::*;
    let pos: Vec<i64> = v.iter().copied().filter(|&c| c > 0).collect();
    let neg: Vec<i64> = v.iter().copied().filter(|&c| c < 0).map(|c| -c).collect();
    match (pos.as_slice(), neg.as_slice()) {
        ([], []) => LaurentPoly::one(),
        ([n], []) => single_positive(*n),
        ([], [n]) => single_negative(*n),
        ([n, j], []) => pair_positive(*n, *j),
        ([n], [j]) => pair_mixed(*n, *j),
        ([], [n, j]) => pair_negative(*n, *j),
        ([l, m, n], []) => all_positive(*l, *m, *n),
        ([l, m], [k]) => {
            let (l, m, k) = (*l, *m, *k);
            if k <= l && k <= m {
                one_negative_small(l, m, k)
            } else if k > l {
                one_negative_large(l, m, k)
            } else {
                one_negative_large(m, l, k)
            }
        }
        ([l], [j, k]) => {
            let (l, j, k) = (*l, *j, *k);
            if j > l && k > l {
                two_negative_far(l, j, k)
            } else if l >= k {
                two_negative_near(l, j, k)
            } else {
                two_negative_near(l, k, j)
            }
        }
        ([], [i, j, k]) => all_negative(*i, *j, *k),
        _ => unreachable!("three coefficients split into signs"),
    }
}

/// Dimension of `H^{a+pσ+bε+q(σ⊗ε)}` of a point with `Z/2` coefficients.
pub fn dim_point(d: KleinDegree) -> u64 {
    series_for(d.rep_part())
        .coefficient(-d.a)
        .to_u64()
        .expect("dimension fits in u64")
}

/// Term-by-term convolution of `factors`, factor `i` first multiplied by `x^{shifts[i]}`.
///
/// Works on dense coefficient vectors and shares no code with [`LaurentPoly::mul`].
/// Missing shifts count as zero.
pub fn series_oracle(factors: &[LaurentPoly], shifts: &[i64]) -> LaurentPoly {
    let mut low: i64 = 0;
    let mut acc: Vec<BigUint> = vec![BigUint::from(1u32)];
    for (i, f) in factors.iter().enumerate() {
        let (Some(lo), Some(hi)) = (f.min_exponent(), f.max_exponent()) else {
            return LaurentPoly::zero();
        };
        let dense: Vec<BigUint> = (lo..=hi).map(|e| f.coefficient(e)).collect();
        let mut next = vec![BigUint::zero(); acc.len() + dense.len() - 1];
        for (s, cs) in acc.iter().enumerate() {
            for (t, ct) in dense.iter().enumerate() {
                next[s + t] += cs * ct;
            }
        }
        acc = next;
        low += lo + shifts.get(i).copied().unwrap_or(0);
    }
    LaurentPoly::from_terms(acc.into_iter().enumerate().map(|(i, c)| (low + i as i64, c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, u32)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn series_examples() {
        assert_eq!(series_for([2, 0, 0]), poly(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(series_for([-1, -1, -1]), poly(&[(-3, 1)]));
        assert_eq!(series_for([0, 0, 0]), LaurentPoly::one());
    }

    #[test]
    fn dim_point_examples() {
        let cases = [
            ((2, 0, 1, -3), 2),
            ((2, 0, 1, -2), 1),
            ((3, -2, -2, 2), 0),
            ((3, -3, -2, 3), 1),
            ((1, -2, -2, 2), 2),
            ((2, -2, -2, 2), 2),
        ];
        for ((a, p, b, q), dim) in cases {
            assert_eq!(dim_point(KleinDegree::new(a, p, b, q)), dim, "{a},{p},{b},{q}");
        }
    }

    #[test]
    fn oracle_examples() {
        let one_plus_x = poly(&[(0, 1), (1, 1)]);
        let tail = poly(&[(-3, 1), (-2, 1)]);
        assert_eq!(
            series_oracle(&[one_plus_x, tail], &[]),
            poly(&[(-3, 1), (-2, 2), (-1, 1)])
        );
        assert_eq!(
            series_oracle(&[LaurentPoly::one(), LaurentPoly::one()], &[0, 0]),
            LaurentPoly::one()
        );
        assert_eq!(
            series_oracle(&[LaurentPoly::geometric(0, 2)], &[-2]),
            poly(&[(-2, 1), (-1, 1), (0, 1)])
        );
        assert!(series_oracle(&[LaurentPoly::zero(), LaurentPoly::one()], &[]).is_zero());
    }

    #[test]
    fn empty_geometric_sum_is_zero() {
        assert!(LaurentPoly::geometric(0, -1).is_zero());
        assert!(closed_form::single_negative(1).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(-3, 1), (-2, 2), (0, 1), (1, 3)]).to_string(), "x^-3 + 2x^-2 + 1 + 3x");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
