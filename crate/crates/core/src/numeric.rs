//! High-precision floating oracle, independent of the exact layer.
//!
//! All evaluation runs on MPFR floats at [`PREC`] bits (about 57 significant
//! digits). Integrals over `[a, b]` are taken after substituting
//! `x = c + h·cos θ` (midpoint `c`, half-width `h`), which absorbs the
//! inverse-square-root endpoint behaviour of both weights; the θ-range is
//! always split at `π/3` and `2π/3`, the preimages of the kinks of `w_P`.

use std::sync::OnceLock;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::recurrence_polys;
use crate::qfield::Rat;

/// Working precision in bits.
pub const PREC: u32 = 192;

/// Gauss-Legendre order used on every panel.
const GAUSS_ORDER: usize = 20;

/// Evaluation budget for a single call to [`quad`].
const MAX_EVALUATIONS: usize = 400_000;

const MAX_DEPTH: u32 = 40;

pub fn real(x: f64) -> Float {
    Float::with_val(PREC, x)
}

pub fn pi() -> Float {
    Float::with_val(PREC, Constant::Pi)
}

fn half() -> Float {
    Float::with_val(PREC, 0.5)
}

/// `|x| < bound`, false for NaN.
pub(crate) fn abs_below(x: &Float, bound: f64) -> bool {
    x.clone().abs().partial_cmp(&bound) == Some(std::cmp::Ordering::Less)
}

fn domain(what: &'static str, x: &Float) -> Error {
    Error::Domain {
        what,
        value: x.to_string_radix(10, Some(20)),
    }
}

/// `w(x)` through the `cos(arccos(x)/3)` closed form, `−1 < x < 1`.
pub fn eval_w(x: &Float) -> Result<Float> {
    if !abs_below(x, 1.0) {
        return Err(domain("eval_w", x));
    }
    let c = (Float::with_val(PREC, x.acos_ref()) / 3u32).cos();
    let first = (Float::with_val(PREC, &c - half())) * Float::with_val(PREC, 1 + &c).sqrt();
    let second = (Float::with_val(PREC, &c + half())) * Float::with_val(PREC, 1 - &c).sqrt();
    Ok(first.recip() + second.recip())
}

/// `w(cos θ)` through the secant/cosecant product form, `0 < θ < π`.
pub fn eval_w_secant_form(theta: &Float) -> Result<Float> {
    if !(*theta > 0 && *theta < pi()) {
        return Err(domain("eval_w_secant_form", theta));
    }
    let p = pi();
    let sec = |v: Float| (v / 6u32).sec();
    let two_pi = Float::with_val(PREC, &p * 2u32);
    let t = theta.clone();
    let a = sec(Float::with_val(PREC, &t - &two_pi))
        * sec(Float::with_val(PREC, &t + &two_pi))
        * sec(t.clone());
    let b = sec(Float::with_val(PREC, &t - &p))
        * sec(Float::with_val(PREC, &t + &p))
        * (t / 6u32).csc();
    let scale = (Float::with_val(PREC, 8u32).sqrt()).recip();
    Ok((a + b) * scale)
}

/// `w_P(x) = |x + ½|/√(1+x) + |x − ½|/√(1−x)`, `−1 < x < 1`.
pub fn eval_w_p(x: &Float) -> Result<Float> {
    if !abs_below(x, 1.0) {
        return Err(domain("eval_w_P", x));
    }
    let lhs = Float::with_val(PREC, x + half()).abs() / Float::with_val(PREC, 1 + x).sqrt();
    let rhs = Float::with_val(PREC, x - half()).abs() / Float::with_val(PREC, 1 - x).sqrt();
    Ok(lhs + rhs)
}

/// `w_Q(x) = w(4x)`, `−¼ < x < ¼`.
pub fn eval_w_q(x: &Float) -> Result<Float> {
    if !abs_below(x, 0.25) {
        return Err(domain("eval_w_Q", x));
    }
    eval_w(&Float::with_val(PREC, x * 4u32))
}

#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: Float,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct Rule {
    nodes: Vec<Float>,
    weights: Vec<Float>,
}

/// Legendre `P_n(x)` and `P_{n−1}(x)` by the three-term recurrence.
fn legendre_pair(n: usize, x: &Float) -> (Float, Float) {
    let mut prev = Float::with_val(PREC, 1);
    let mut cur = x.clone();
    for k in 1..n {
        let kf = k as u32;
        let next = (Float::with_val(PREC, x * &cur) * (2 * kf + 1)
            - Float::with_val(PREC, &prev * kf))
            / (kf + 1);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn gauss_legendre() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_ORDER;
        let tol = Float::with_val(PREC, Float::i_exp(1, -(PREC as i32) + 8));
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 1..=n {
            let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut x = real(guess);
            for _ in 0..200 {
                let (pn, pn1) = legendre_pair(n, &x);
                let x2m1 = Float::with_val(PREC, x.square_ref()) - 1u32;
                let deriv = (Float::with_val(PREC, &x * &pn) - pn1) * n as u32 / x2m1;
                let step = pn / &deriv;
                x -= &step;
                if step.abs() < tol {
                    break;
                }
            }
            let (pn, pn1) = legendre_pair(n, &x);
            let x2m1 = Float::with_val(PREC, x.square_ref()) - 1u32;
            let deriv = (Float::with_val(PREC, &x * &pn) - pn1) * n as u32 / &x2m1;
            let w = Float::with_val(PREC, 2u32) / (-x2m1 * deriv.square());
            nodes.push(x);
            weights.push(w);
        }
        Rule { nodes, weights }
    })
}

struct Integrator<'a, F> {
    f: &'a F,
    evaluations: usize,
}

impl<F> Integrator<'_, F>
where
    F: Fn(&Float) -> Result<Float>,
{
    fn panel(&mut self, a: &Float, b: &Float) -> Result<Float> {
        let rule = gauss_legendre();
        let mid = Float::with_val(PREC, a + b) / 2u32;
        let rad = Float::with_val(PREC, b - a) / 2u32;
        let mut acc = Float::with_val(PREC, 0);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let t = Float::with_val(PREC, &rad * x) + &mid;
            acc += (self.f)(&t)? * w;
        }
        self.evaluations += rule.nodes.len();
        Ok(acc * rad)
    }

    /// Returns (value, error estimate): each level compares the panel rule
    /// against the sum over its two halves.
    fn adapt(
        &mut self,
        a: &Float,
        b: &Float,
        whole: Float,
        tol: f64,
        depth: u32,
    ) -> Result<(Float, f64)> {
        let mid = Float::with_val(PREC, a + b) / 2u32;
        let left = self.panel(a, &mid)?;
        let right = self.panel(&mid, b)?;
        let refined = Float::with_val(PREC, &left + &right);
        let err = Float::with_val(PREC, &refined - &whole).abs().to_f64();
        if err.is_nan() {
            return Err(Error::NonConvergence {
                evaluations: self.evaluations,
                estimate: f64::NAN,
            });
        }
        if err <= tol || depth >= MAX_DEPTH {
            if err > tol {
                return Err(Error::NonConvergence {
                    evaluations: self.evaluations,
                    estimate: err,
                });
            }
            return Ok((refined, err));
        }
        if self.evaluations > MAX_EVALUATIONS {
            return Err(Error::NonConvergence {
                evaluations: self.evaluations,
                estimate: err,
            });
        }
        let (lv, le) = self.adapt(a, &mid, left, tol / 2.0, depth + 1)?;
        let (rv, re) = self.adapt(&mid, b, right, tol / 2.0, depth + 1)?;
        Ok((lv + rv, le + re))
    }
}

/// `∫_a^b f(x) dx` by adaptive Gauss-Legendre in `θ`, where
/// `x = (a+b)/2 + (b−a)/2·cos θ`.
pub fn quad<F>(f: F, a: &Float, b: &Float, tol: f64) -> Result<QuadResult>
where
    F: Fn(&Float) -> Result<Float>,
{
    if tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
        || a.partial_cmp(b) != Some(std::cmp::Ordering::Less)
    {
        return Err(Error::Domain {
            what: "quad",
            value: format!("tol {tol:e}, interval ({a}, {b})"),
        });
    }
    let c = Float::with_val(PREC, a + b) / 2u32;
    let h = Float::with_val(PREC, b - a) / 2u32;
    let g = |theta: &Float| -> Result<Float> {
        let (s, co) = theta.clone().sin_cos(Float::new(PREC));
        let x = Float::with_val(PREC, &h * co) + &c;
        Ok(f(&x)? * s * &h)
    };
    let mut it = Integrator {
        f: &g,
        evaluations: 0,
    };
    let p = pi();
    let cuts = [
        Float::with_val(PREC, 0),
        Float::with_val(PREC, &p / 3u32),
        Float::with_val(PREC, &p * 2u32) / 3u32,
        p,
    ];
    let mut value = Float::with_val(PREC, 0);
    let mut error = 0.0;
    for w in cuts.windows(2) {
        let whole = it.panel(&w[0], &w[1])?;
        let (v, e) = it.adapt(&w[0], &w[1], whole, tol / 3.0, 0)?;
        value += v;
        error += e;
    }
    Ok(QuadResult {
        value,
        error_estimate: error,
        evaluations: it.evaluations,
    })
}

/// Numeric `∫ x^k w_P(x) dx` over `(−1, 1)`.
pub fn quad_moment_p(k: usize, tol: f64) -> Result<QuadResult> {
    let f = |x: &Float| Ok(Float::with_val(PREC, x.pow(k as u32)) * eval_w_p(x)?);
    quad(f, &real(-1.0), &real(1.0), tol)
}

/// Numeric `∫ x^k w_Q(x) dx` over `(−¼, ¼)`.
pub fn quad_moment_q(k: usize, tol: f64) -> Result<QuadResult> {
    let f = |x: &Float| Ok(Float::with_val(PREC, x.pow(k as u32)) * eval_w_q(x)?);
    quad(f, &real(-0.25), &real(0.25), tol)
}

/// Horner evaluation of a rational-coefficient polynomial in floating point.
fn eval_rat_poly(coeffs: &[Float], x: &Float) -> Float {
    coeffs
        .iter()
        .rev()
        .fold(Float::with_val(PREC, 0), |acc, c| acc * x + c)
}

/// `∫ P_m P_n w_P dx` over `(−1, 1)`, with `P` generated from `gamma`
/// (`gamma[n] = γ_n`).
pub fn orthogonality_residual(m: usize, n: usize, gamma: &[Rat], tol: f64) -> Result<Float> {
    let top = m.max(n);
    let polys = recurrence_polys(gamma, top)?;
    let to_floats =
        |k: usize| -> Vec<Float> { polys[k].coeffs().iter().map(|c| c.to_float(PREC)).collect() };
    let pm = to_floats(m);
    let pn = to_floats(n);
    let f = |x: &Float| Ok(eval_rat_poly(&pm, x) * eval_rat_poly(&pn, x) * eval_w_p(x)?);
    Ok(quad(f, &real(-1.0), &real(1.0), tol)?.value)
}

/// `1/(|cos θ − ½|√(1+cos θ)) + 1/(|cos θ + ½|√(1−cos θ))`, the right side of
/// the triple-angle identity for `w(cos 3θ)`.
pub fn triple_angle_rhs(theta: &Float) -> Float {
    let c = Float::with_val(PREC, theta.cos_ref());
    let a = Float::with_val(PREC, &c - half()).abs() * Float::with_val(PREC, 1 + &c).sqrt();
    let b = Float::with_val(PREC, &c + half()).abs() * Float::with_val(PREC, 1 - &c).sqrt();
    a.recip() + b.recip()
}

/// Summary of the pointwise weight checks.
#[derive(Debug, Clone, Serialize)]
pub struct WeightChecks {
    /// max |w(cos θ) − secant form(θ)|
    pub dual_form_max_diff: f64,
    /// max |w(cos 3θ) − triple-angle right side|
    pub triple_angle_max_diff: f64,
    /// max |w(x) − w(−x)|
    pub evenness_max_diff: f64,
    pub grid_min: f64,
    pub grid_argmin: f64,
}

/// `count` interior points `lo + (hi − lo)·i/(count+1)`.
pub fn interior_grid(lo: &Float, hi: &Float, count: usize) -> Vec<Float> {
    let step = Float::with_val(PREC, hi - lo) / (count as u32 + 1);
    (1..=count)
        .map(|i| Float::with_val(PREC, &step * i as u32) + lo)
        .collect()
}

/// Runs the dual-form, triple-angle, evenness and minimum checks. Each grid
/// splits its interval into `points` equal steps and drops the endpoints, so
/// an even `points` puts a node at `x = 0`.
pub fn weight_checks(points: usize) -> Result<WeightChecks> {
    let p = pi();
    let nodes = points.saturating_sub(1);
    let mut dual: f64 = 0.0;
    for theta in interior_grid(&real(0.01), &Float::with_val(PREC, &p - 0.01), nodes) {
        let x = Float::with_val(PREC, theta.cos_ref());
        let d = (eval_w(&x)? - eval_w_secant_form(&theta)?).abs().to_f64();
        dual = dual.max(d);
    }

    let third = Float::with_val(PREC, &p / 3u32);
    let mut triple: f64 = 0.0;
    for theta in interior_grid(&real(0.0), &p, nodes) {
        // θ ∈ (0, π) off the excluded angles.
        let near = |t: &Float| Float::with_val(PREC, &theta - t).abs() < 1e-6;
        if near(&third) || near(&Float::with_val(PREC, &third * 2u32)) {
            continue;
        }
        let x3 = Float::with_val(PREC, &theta * 3u32).cos();
        let d = (eval_w(&x3)? - triple_angle_rhs(&theta)).abs().to_f64();
        triple = triple.max(d);
    }

    let mut even: f64 = 0.0;
    let mut min = f64::INFINITY;
    let mut argmin = f64::NAN;
    for x in interior_grid(&real(-1.0), &real(1.0), nodes) {
        let w = eval_w(&x)?;
        let d = (Float::with_val(PREC, &w - eval_w(&Float::with_val(PREC, -&x))?))
            .abs()
            .to_f64();
        even = even.max(d);
        let wf = w.to_f64();
        if wf < min {
            min = wf;
            argmin = x.to_f64();
        }
    }
    Ok(WeightChecks {
        dual_form_max_diff: dual,
        triple_angle_max_diff: triple,
        evenness_max_diff: even,
        grid_min: min,
        grid_argmin: argmin,
    })
}
