//! Consistency suites that cross-check the calculators against independent enumerations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degrees::{realize, Axis, KleinDegree, MotivicBidegree, Region};
use crate::klein_point::{basis_at, group_at};
use crate::motivic::{motivic_group_r, Status};
use crate::series::{dim_point, series_for, series_oracle, LaurentPoly};
use crate::spaces::{b_space_dim, b_space_reduced_dim, e_space_group, etilde_dim};

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub window: String,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<String>,
}

impl CheckReport {
    fn new(name: &str, window: impl Into<String>) -> Self {
        CheckReport { name: name.to_string(), window: window.into(), passed: 0, failed: 0, counterexamples: Vec::new() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.counterexamples.push(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} [{}]: {} passed, {} failed", self.name, self.window, self.passed, self.failed)?;
        for c in self.counterexamples.iter().take(10) {
            write!(f, "\n  {c}")?;
        }
        Ok(())
    }
}

/// `dim H^{a,w}(ℝ; Z/2)`: the ring is `Z/2[τ, ρ]` with `|τ| = (0,1)`, `|ρ| = (1,1)`.
fn dim_motivic_real(a: i64, w: i64) -> u64 {
    (0 <= a && a <= w) as u64
}

/// `H^{a+2qσ, b+qσ}(ℝ)` against the sum of motivic groups of `ℝ` it splits into.
pub fn check_two_q_splitting(a_range: (i64, i64), b_max: i64, q_max: i64) -> CheckReport {
    let mut r = CheckReport::new(
        "two_q_splitting",
        format!("a in [{}, {}], 0 <= b <= {b_max}, 0 <= q <= {q_max}", a_range.0, a_range.1),
    );
    for a in a_range.0..=a_range.1 {
        for b in 0..=b_max {
            for q in 0..=q_max {
                let lhs = motivic_group_r(MotivicBidegree::new(a, 2 * q, b, q)).dimension;
                let mut rhs = dim_motivic_real(a + 2 * q, q + b);
                for j in 0..q {
                    rhs += dim_motivic_real(a + 2 * j, j + b) + dim_motivic_real(a + 2 * j + 1, j + b);
                }
                r.record(lhs == rhs, || format!("(a,b,q)=({a},{b},{q}): lhs {lhs}, rhs {rhs}"));
            }
        }
    }
    r
}

/// `dim E(d) = dim pt(d) + dim Ẽ(d + 1)` for `p, q >= 0`.
pub fn check_split_ses(ab: i64, pq_max: i64) -> CheckReport {
    let mut r = CheckReport::new("split_ses", format!("|a|,|b| <= {ab}, 0 <= p,q <= {pq_max}"));
    for a in -ab..=ab {
        for b in -ab..=ab {
            for p in 0..=pq_max {
                for q in 0..=pq_max {
                    let d = KleinDegree::new(a, p, b, q);
                    let e = e_space_group(d).dimension;
                    let pt = dim_point(d);
                    let et = etilde_dim(d + KleinDegree::new(1, 0, 0, 0));
                    r.record(e == pt + et, || format!("{d}: E {e}, pt {pt}, Etilde(+1) {et}"));
                }
            }
        }
    }
    r
}

fn a_window(rep: [i64; 3]) -> std::ops::RangeInclusive<i64> {
    let spread: i64 = rep.iter().map(|c| c.abs()).sum();
    -(spread + 3)..=spread + 3
}

fn compare_basis(r: &mut CheckReport, d: KleinDegree) {
    let dim = dim_point(d);
    match basis_at(d) {
        Some(basis) => {
            let degrees_ok = basis.iter().all(|m| m.degree() == d);
            r.record(basis.len() as u64 == dim && degrees_ok, || {
                format!("{d}: {} basis elements, series {dim}", basis.len())
            });
        }
        None => r.record(false, || format!("{d}: no basis in a basis-bearing sector")),
    }
}

/// Basis counts against series coefficients in every basis-bearing sector.
pub fn check_series_vs_basis(bound: i64) -> CheckReport {
    let mut r = CheckReport::new("series_vs_basis", format!("exponents <= {bound}"));
    let range = -(bound + 1)..=bound + 1;
    for p in 0..=bound {
        for b in 0..=bound {
            for q in 0..=bound {
                for a in a_window([p, b, q]) {
                    compare_basis(&mut r, KleinDegree::new(a, p, b, q));
                }
            }
        }
    }
    // One coefficient zero, one non-negative, the third arbitrary, on every axis pattern.
    for zero in Axis::ALL {
        for free in Axis::ALL {
            let Some(stong) = zero.third(free) else { continue };
            for s in range.clone() {
                for f in 0..=bound {
                    let mut rep = [0; 3];
                    rep[stong.index()] = s;
                    rep[free.index()] = f;
                    for a in a_window(rep) {
                        compare_basis(&mut r, KleinDegree::from_parts(a, rep));
                    }
                }
            }
        }
    }
    r
}

/// Every basis element also has the degree it was requested at, and group dimensions agree.
pub fn check_group_descriptors(bound: i64) -> CheckReport {
    let mut r = CheckReport::new("group_descriptors", format!("|p|,|b|,|q| <= {bound}"));
    for p in -bound..=bound {
        for b in -bound..=bound {
            for q in -bound..=bound {
                for a in a_window([p, b, q]) {
                    let d = KleinDegree::new(a, p, b, q);
                    let g = group_at(d);
                    let ok = g.basis.as_ref().is_none_or(|bs| bs.len() as u64 == g.dimension);
                    r.record(ok && g.dimension == dim_point(d), || format!("{d}"));
                }
            }
        }
    }
    r
}

/// Reference dimensions and realization statuses at a handful of degrees.
pub fn check_worked_examples() -> CheckReport {
    let mut r = CheckReport::new("worked_examples", "reference values");
    let dims = [
        ((2, 0, 1, -3), 2),
        ((2, 0, 1, -2), 1),
        ((1, -2, -2, 2), 2),
        ((2, -2, -2, 2), 2),
        ((3, -2, -2, 2), 0),
        ((3, -3, -2, 3), 1),
    ];
    for ((a, p, b, q), want) in dims {
        let d = KleinDegree::new(a, p, b, q);
        let got = dim_point(d);
        r.record(got == want, || format!("dim_point{d}: got {got}, want {want}"));
    }
    let motivic = [
        ((3, -3, 1, -3), 1, Status::MonoNotEpi),
        ((3, -2, 1, -2), 1, Status::Iso),
        ((1, 0, -2, 3), 1, Status::Iso),
    ];
    for ((a, p, b, q), want_dim, want_status) in motivic {
        let d = MotivicBidegree::new(a, p, b, q);
        let g = motivic_group_r(d);
        r.record(g.dimension == want_dim && g.realization.refined == want_status, || {
            format!("{d}: dim {}, status {}", g.dimension, g.realization.refined)
        });
    }
    let etilde = [((2, 0, 1, -3), 1), ((4, 0, 0, 0), 1)];
    for ((a, p, b, q), want) in etilde {
        let d = KleinDegree::new(a, p, b, q);
        let got = etilde_dim(d);
        r.record(got == want, || format!("Etilde{d}: got {got}, want {want}"));
    }
    r
}

/// Independent statement of each closed form as a sum of shifted products of
/// geometric sums `x^lo + ... + x^hi`, evaluated by dense convolution.
///
/// Dispatch sorts coefficients by size instead of branching on argument order.
pub fn oracle_series(v: [i64; 3]) -> LaurentPoly {
    type Term = (i64, Vec<(i64, i64)>);
    let eval = |terms: Vec<Term>| {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (shift, factors)| {
            let polys: Vec<LaurentPoly> =
                factors.iter().map(|&(lo, hi)| LaurentPoly::geometric(lo, hi)).collect();
            let mut shifts = vec![0; polys.len()];
            if let Some(first) = shifts.first_mut() {
                *first = shift;
            }
            let product = if polys.is_empty() { LaurentPoly::monomial(shift) } else { series_oracle(&polys, &shifts) };
            acc.add(&product)
        })
    };
    let mut pos: Vec<i64> = v.iter().copied().filter(|&c| c > 0).collect();
    let mut neg: Vec<i64> = v.iter().copied().filter(|&c| c < 0).map(|c| -c).collect();
    pos.sort_unstable_by(|x, y| y.cmp(x));
    neg.sort_unstable_by(|x, y| y.cmp(x));
    let terms: Vec<Term> = match (pos.as_slice(), neg.as_slice()) {
        ([], []) => vec![(0, vec![])],
        ([n], []) => vec![(0, vec![(0, *n)])],
        ([], [n]) => vec![(0, vec![(-n, -2)])],
        ([n, j], []) => vec![(0, vec![(0, *n), (0, *j)])],
        ([n], [j]) => vec![(0, vec![(0, *n), (-j, -2)])],
        ([], [n, j]) => vec![(0, vec![(-n, -2), (-j, -2)])],
        ([l, m, n], []) => vec![(0, vec![(0, *l), (0, *m)]), (1, vec![(0, l + m), (0, n - 1)])],
        ([l, m], [k]) => {
            let (l, m, k) = (*l, *m, *k);
            if k <= m {
                vec![(-k, vec![(0, k - 1), (0, k - 2)]), (k, vec![(0, l - k), (0, m - k)])]
            } else {
                vec![(-(m + 1), vec![(0, m), (0, m - 1)]), (-k, vec![(0, k - m - 2), (0, l + m)])]
            }
        }
        ([l], [j, k]) => {
            let (l, j, k) = (*l, *j, *k);
            if k > l {
                vec![(-(j + k - l), vec![(0, j - l - 2), (0, k - l - 2)]), (-(l + 1), vec![(0, l), (0, l - 1)])]
            } else {
                vec![(-j, vec![(0, j - 2), (0, l - k)]), (-k, vec![(0, l - 1), (0, k - 1)])]
            }
        }
        ([], [i, j, k]) => {
            let (i, j, k) = (*i, *j, *k);
            vec![
                (-(i + j + k), vec![(0, j + k - 2), (0, i - 2)]),
                (-(j + k + 1), vec![(0, k - 1), (0, j - 1)]),
            ]
        }
        _ => unreachable!("three coefficients split into signs"),
    };
    eval(terms)
}

/// Closed forms against [`oracle_series`] for all coefficient vectors with entries in
/// `[-bound, bound]`.
pub fn check_series_oracle(bound: i64) -> CheckReport {
    let mut r = CheckReport::new("series_oracle", format!("|coefficients| <= {bound}"));
    for p in -bound..=bound {
        for b in -bound..=bound {
            for q in -bound..=bound {
                let v = [p, b, q];
                let (fast, slow) = (series_for(v), oracle_series(v));
                r.record(fast == slow, || format!("{v:?}: closed form {fast}, oracle {slow}"));
            }
        }
    }
    r
}

/// `dim_point` is invariant under permuting `σ, ε, σ⊗ε`.
pub fn check_s3_symmetry(a_max: i64, bound: i64) -> CheckReport {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut r = CheckReport::new("s3_symmetry", format!("|a| <= {a_max}, |p|,|b|,|q| <= {bound}"));
    for a in -a_max..=a_max {
        for p in -bound..=bound {
            for b in -bound..=bound {
                for q in -bound..=bound {
                    let d = KleinDegree::new(a, p, b, q);
                    let base = dim_point(d);
                    let ok = PERMS.iter().all(|perm| dim_point(d.permuted(*perm)) == base);
                    r.record(ok, || format!("{d}"));
                }
            }
        }
    }
    r
}

/// The vanishing ranges for the point and for `B_{Σ2}C2`.
pub fn check_vanishing(bound: i64) -> CheckReport {
    let mut r = CheckReport::new("vanishing", format!("|a|,|b|,|q| <= {bound}"));
    for a in -bound..=bound {
        for b in -bound..=bound {
            for q in -bound..=bound {
                // a > b >= -q > 0, with p = q.
                if a > b && b >= -q && -q > 0 {
                    let d = KleinDegree::new(a, q, b, q);
                    r.record(dim_point(d) == 0, || format!("point {d} (a > b >= -q > 0)"));
                }
                if b >= 0 && q >= 0 && a >= 1 {
                    let d = KleinDegree::new(a, q, b, q);
                    r.record(dim_point(d) == 0, || format!("point {d} (b, q >= 0, a >= 1)"));
                }
            }
            if b == a - 1 || b == a - 2 {
                r.record(b_space_dim(a, b) == 0, || format!("B at ({a},{b}) on the gap lines"));
            }
            if a <= b + 2 && b < 0 {
                r.record(b_space_dim(a, b) == 0, || format!("B at ({a},{b}) with a <= b+2, b < 0"));
            }
        }
        if a <= 2 {
            r.record(b_space_reduced_dim(a, 0) == 0, || format!("reduced B at ({a},0)"));
        }
    }
    r
}

/// Where the raw status is `Iso` the two dimensions agree, and `Mono` never has a
/// larger domain.
pub fn check_status_consistency(bound: i64) -> CheckReport {
    let mut r = CheckReport::new("status_consistency", format!("|a|,|p|,|b|,|q| <= {bound}"));
    for a in -bound..=bound {
        for p in -bound..=bound {
            for b in -bound..=bound {
                for q in -bound..=bound {
                    let d = MotivicBidegree::new(a, p, b, q);
                    let g = motivic_group_r(d);
                    let s = g.realization;
                    let ok = match s.raw {
                        Status::Iso => s.domain_dim == s.codomain_dim,
                        Status::Mono | Status::MonoNotEpi => s.domain_dim <= s.codomain_dim,
                        Status::ZeroDomain => s.domain_dim == 0,
                    } && s.codomain_dim == dim_point(realize(d))
                        && (g.region != Region::Borel || d.a > 2 * d.b + 2 || s.raw == Status::Iso);
                    r.record(ok, || format!("{d}: {s:?}"));
                }
            }
        }
    }
    r
}

/// Which suites [`run_suite`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    All,
    Series,
    Ses,
    TwoQ,
    Examples,
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "series" => Suite::Series,
            "ses" => Suite::Ses,
            "2q" => Suite::TwoQ,
            "remarks" => Suite::Examples,
            _ => return Err(crate::error::Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Runs a suite at its default window.
pub fn run_suite(suite: Suite) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Series) {
        out.push(check_series_oracle(6));
        out.push(check_s3_symmetry(8, 5));
        out.push(check_series_vs_basis(5));
        out.push(check_vanishing(10));
    }
    if matches!(suite, Suite::All | Suite::Ses) {
        out.push(check_split_ses(8, 4));
    }
    if matches!(suite, Suite::All | Suite::TwoQ) {
        out.push(check_two_q_splitting((-10, 5), 5, 5));
    }
    if matches!(suite, Suite::All | Suite::Examples) {
        out.push(check_worked_examples());
        out.push(check_status_consistency(5));
    }
    out
}

/// Runs a suite with every check bounded by `bound`.
pub fn run_suite_window(suite: Suite, bound: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Series) {
        out.push(check_series_oracle(bound));
        out.push(check_s3_symmetry(bound, bound));
        out.push(check_series_vs_basis(bound));
        out.push(check_vanishing(bound));
    }
    if matches!(suite, Suite::All | Suite::Ses) {
        out.push(check_split_ses(bound, bound));
    }
    if matches!(suite, Suite::All | Suite::TwoQ) {
        out.push(check_two_q_splitting((-bound, bound), bound, bound));
    }
    if matches!(suite, Suite::All | Suite::Examples) {
        out.push(check_worked_examples());
        out.push(check_status_consistency(bound));
    }
    out
}
