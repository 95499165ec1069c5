//! The cubic polynomial mapping through `T̂₃ = x³ − ¾x` with divisor
//! `Û₂ = x² − ¼`.
//!
//! When `γ₀ = 0`, `γ_{3n} + γ_{3n+1} = ½` and `γ_{3n+2} = ¼`, the monic
//! sequence `P_n` built from `γ` factors through `Q_n ∘ T̂₃`, where `Q_n`
//! satisfies `Q_{n+1} = x·Q_n − ¼γ_{3n−2}γ_{3n}·Q_{n−1}`. The identities are
//! checked multiplied through by `Û₂`, with divisibility checked on its own.

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{eval_w_p, eval_w_q, interior_grid, real, PREC};
use crate::polyalg::{cheb_t_monic, cheb_u_monic, recurrence_polys, Poly};
use crate::qfield::{Rat, QS2};

/// `Q₀..=Q_count` from `γ` via `s_n = ¼·γ_{3n−2}·γ_{3n}`.
///
/// `gamma[n]` holds `γ_n`; entries through `γ_{3(count−1)}` are needed.
pub fn build_q_from_gamma(gamma: &[Rat], count: usize) -> Result<Vec<Poly>> {
    if count >= 2 && gamma.len() <= 3 * (count - 1) {
        return Err(Error::InsufficientGamma {
            needed: 3 * (count - 1),
            available: gamma.len().saturating_sub(1),
        });
    }
    let quarter = Rat::frac(1, 4);
    let s: Vec<Rat> = (0..count.max(1))
        .map(|n| {
            if n == 0 {
                Rat::zero()
            } else {
                &quarter * &gamma[3 * n - 2] * &gamma[3 * n]
            }
        })
        .collect();
    recurrence_polys(&s, count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    #[serde(rename = "P3n")]
    P3n,
    #[serde(rename = "P3n1")]
    P3n1,
    #[serde(rename = "P3n2")]
    P3n2,
    #[serde(rename = "divisibility")]
    Divisibility,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::P3n => "P3n",
            Identity::P3n1 => "P3n1",
            Identity::P3n2 => "P3n2",
            Identity::Divisibility => "divisibility",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub n: usize,
    pub identity: Identity,
    pub pass: bool,
    /// Lowest coefficient index where the two sides differ (or, for
    /// divisibility, where the remainder is nonzero).
    pub first_bad_coeff: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MappingReport {
    pub depth: usize,
    pub rows: Vec<IdentityRow>,
    pub pass: bool,
}

/// Checks the pattern hypothesis on `γ₀..=γ_top`.
fn check_hypothesis(gamma: &[Rat], top: usize) -> Result<()> {
    if !gamma[0].is_zero() {
        return Err(Error::HypothesisViolation {
            index: 0,
            reason: "gamma_0 must be 0".into(),
        });
    }
    let half = Rat::frac(1, 2);
    let quarter = Rat::frac(1, 4);
    for i in 1..=top {
        if gamma[i].is_zero() {
            return Err(Error::HypothesisViolation {
                index: i,
                reason: "coefficient vanishes".into(),
            });
        }
        match i % 3 {
            2 if gamma[i] != quarter => {
                return Err(Error::HypothesisViolation {
                    index: i,
                    reason: format!("expected 1/4, found {}", gamma[i]),
                })
            }
            1 if &gamma[i - 1] + &gamma[i] != half => {
                return Err(Error::HypothesisViolation {
                    index: i,
                    reason: format!("gamma_{} + gamma_{i} != 1/2", i - 1),
                })
            }
            _ => {}
        }
    }
    Ok(())
}

fn row(n: usize, identity: Identity, lhs: &Poly, rhs: &Poly) -> IdentityRow {
    let first_bad_coeff = lhs.first_difference(rhs);
    IdentityRow {
        n,
        identity,
        pass: first_bad_coeff.is_none(),
        first_bad_coeff,
    }
}

/// Exact check of the three decomposition identities and the two
/// divisibility claims for every `n ≤ depth`. Needs `γ₀..=γ_{3·depth+1}`.
pub fn verify_decomposition(gamma: &[Rat], depth: usize) -> Result<MappingReport> {
    let top = 3 * depth + 1;
    if gamma.len() <= top {
        return Err(Error::InsufficientGamma {
            needed: top,
            available: gamma.len().saturating_sub(1),
        });
    }
    check_hypothesis(gamma, top)?;

    let p = recurrence_polys(gamma, 3 * depth + 2)?;
    let q = build_q_from_gamma(gamma, depth + 1)?;
    let t3 = cheb_t_monic(3);
    let u2 = cheb_u_monic(2);
    let qt: Vec<Poly> = q.iter().map(|qn| qn.compose(&t3)).collect();
    let quarter = Rat::frac(1, 4);

    let mut rows = Vec::with_capacity(4 * (depth + 1));
    for n in 0..=depth {
        let g = QS2::from(gamma[3 * n + 1].clone());
        let rhs1 = &qt[n + 1] + &qt[n].shift().scale(&g);
        let rhs2 = &qt[n + 1].shift() + &qt[n].scale(&g.scale(&quarter));

        rows.push(row(n, Identity::P3n, &p[3 * n], &qt[n]));
        rows.push(row(n, Identity::P3n1, &(&u2 * &p[3 * n + 1]), &rhs1));
        rows.push(row(n, Identity::P3n2, &(&u2 * &p[3 * n + 2]), &rhs2));

        let (_, r1) = rhs1.divrem(&u2)?;
        let (_, r2) = rhs2.divrem(&u2)?;
        let bad = r1
            .first_difference(&Poly::zero())
            .into_iter()
            .chain(r2.first_difference(&Poly::zero()))
            .min();
        rows.push(IdentityRow {
            n,
            identity: Identity::Divisibility,
            pass: bad.is_none(),
            first_bad_coeff: bad,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(MappingReport { depth, rows, pass })
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferPoint {
    pub x: f64,
    /// `|Û₂(x)|·w_Q(T̂₃(x))`
    pub mapped: f64,
    pub w_p: f64,
    pub diff: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    pub tol: f64,
    pub max_diff: f64,
    pub points: Vec<TransferPoint>,
    pub pass: bool,
}

/// `|Û₂(x)|·w_Q(T̂₃(x))` in floating point.
pub fn mapped_weight(x: &Float) -> Result<Float> {
    let x2 = Float::with_val(PREC, x.square_ref());
    let u2 = Float::with_val(PREC, &x2 - 0.25);
    let t3 = Float::with_val(PREC, &x2 - 0.75) * x;
    Ok(u2.abs() * eval_w_q(&t3)?)
}

/// Pointwise `|Û₂|·(w_Q ∘ T̂₃) = w_P` on the given abscissas. Points at
/// `±½` or outside `(−1, 1)` are rejected.
pub fn weight_transfer_at(points: &[Float], tol: f64) -> Result<TransferReport> {
    let mut out = Vec::with_capacity(points.len());
    let mut max_diff: f64 = 0.0;
    for x in points {
        let excluded = x.clone().abs() == 0.5 || !crate::numeric::abs_below(x, 1.0);
        if excluded {
            return Err(Error::Domain {
                what: "weight_transfer_check",
                value: x.to_string_radix(10, Some(20)),
            });
        }
        let lhs = mapped_weight(x)?;
        let rhs = eval_w_p(x)?;
        let diff = Float::with_val(PREC, &lhs - &rhs).abs().to_f64();
        max_diff = max_diff.max(diff);
        out.push(TransferPoint {
            x: x.to_f64(),
            mapped: lhs.to_f64(),
            w_p: rhs.to_f64(),
            diff,
            pass: diff <= tol,
        });
    }
    let pass = out.iter().all(|p| p.pass);
    Ok(TransferReport {
        tol,
        max_diff,
        points: out,
        pass,
    })
}

/// Transfer identity on an equispaced interior grid of `(−1, 1)` with
/// `grid` points, dropping any that land on `±½`.
pub fn weight_transfer_check(grid: usize, tol: f64) -> Result<TransferReport> {
    if grid < 3 {
        return Err(Error::Domain {
            what: "weight_transfer_check grid",
            value: grid.to_string(),
        });
    }
    // x_i = −1 + 2i/(grid+1) equals ±½ exactly when 4i = grid+1 or 4i = 3(grid+1).
    let points: Vec<Float> = interior_grid(&real(-1.0), &real(1.0), grid)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            let i = i + 1;
            4 * i != grid + 1 && 4 * i != 3 * (grid + 1)
        })
        .map(|(_, x)| x)
        .collect();
    weight_transfer_at(&points, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::{moment_table, WeightSpec};
    use crate::recurrence::gamma_direct;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn low_gamma() -> Vec<Rat> {
        let t = moment_table(&WeightSpec::p(), 10).unwrap();
        gamma_direct(&t, 10).unwrap()
    }

    #[test]
    fn q_examples() {
        let gamma = low_gamma();
        let q = build_q_from_gamma(&gamma, 3).unwrap();
        assert_eq!(q[0], Poly::one());
        assert_eq!(q[1], Poly::x());
        assert_eq!(q[2], Poly::from_rats([r(-7, 240), Rat::zero(), Rat::one()]));
        // Q₃ = x·Q₂ − s₂·Q₁ with s₂ = 4/245
        let q3 = &q[2].shift() - &q[1].scale_rat(&r(4, 245));
        assert_eq!(q[3], q3);
        assert!(matches!(
            build_q_from_gamma(&gamma[..4], 3),
            Err(Error::InsufficientGamma { .. })
        ));
    }

    #[test]
    fn decomposition_small() {
        let gamma = low_gamma();
        let report = verify_decomposition(&gamma, 3).unwrap();
        assert_eq!(report.rows.len(), 16);
        assert!(report.pass, "{report:?}");
        let p = recurrence_polys(&gamma, 3).unwrap();
        assert_eq!(p[0], Poly::one());
        assert_eq!(p[3], cheb_t_monic(3));
    }

    #[test]
    fn decomposition_rejects_broken_pattern() {
        let mut gamma = low_gamma();
        gamma[5] = r(1, 3);
        assert!(matches!(
            verify_decomposition(&gamma, 2),
            Err(Error::HypothesisViolation { index: 5, .. })
        ));
        let mut gamma = low_gamma();
        gamma[4] = r(1, 5);
        assert!(matches!(
            verify_decomposition(&gamma, 2),
            Err(Error::HypothesisViolation { index: 4, .. })
        ));
    }

    #[test]
    fn decomposition_holds_for_any_patterned_gamma() {
        // The mapping only needs the pattern, not the particular weight.
        let mut gamma = low_gamma();
        gamma[3] = r(1, 5);
        gamma[4] = r(3, 10);
        assert!(verify_decomposition(&gamma, 3).unwrap().pass);
    }

    #[test]
    fn transfer_at_center() {
        let rep = weight_transfer_at(&[real(0.0)], 1e-12).unwrap();
        assert!((rep.points[0].mapped - 1.0).abs() < 1e-15);
        assert!((rep.points[0].w_p - 1.0).abs() < 1e-15);
        assert!(rep.pass);
    }

    #[test]
    fn transfer_excludes_kinks() {
        assert!(weight_transfer_at(&[real(0.5)], 1e-10).is_err());
        assert!(weight_transfer_at(&[real(-1.0)], 1e-10).is_err());
        // grid 7 puts x = −½ and x = ½ on the grid; both are dropped.
        let rep = weight_transfer_check(7, 1e-10).unwrap();
        assert_eq!(rep.points.len(), 5);
        assert!(rep.pass);
        assert!(weight_transfer_check(2, 1e-10).is_err());
    }
}
