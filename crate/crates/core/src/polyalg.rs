//! Dense univariate polynomials over Q(√2).
//!
//! Coefficients are stored constant term first with no trailing zeros, so the
//! zero polynomial is the empty vector and `coeffs.len() - 1` is the degree of
//! anything else.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qfield::{Rat, QS2};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<QS2>,
}

impl Poly {
    /// Builds a polynomial from coefficients (constant term first), trimming
    /// trailing zeros.
    pub fn new(coeffs: Vec<QS2>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_rats<I: IntoIterator<Item = Rat>>(coeffs: I) -> Self {
        Poly::new(coeffs.into_iter().map(QS2::from).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(QS2::one())
    }

    pub fn constant(c: QS2) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(QS2::one(), 1)
    }

    pub fn monomial(c: QS2, degree: usize) -> Self {
        let mut coeffs = vec![QS2::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(QS2::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[QS2] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QS2> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> QS2 {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&QS2> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(QS2::is_one)
    }

    /// True when every coefficient lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(QS2::is_rational)
    }

    pub fn scale(&self, c: &QS2) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rat(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(QS2::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rat::from_int(k as i64)))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &QS2) -> QS2 {
        self.coeffs
            .iter()
            .rev()
            .fold(QS2::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self ∘ inner`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            let mut next = &acc * inner;
            next.add_constant(c);
            next
        })
    }

    fn add_constant(&mut self, c: &QS2) {
        if self.coeffs.is_empty() {
            self.coeffs.push(c.clone());
        } else {
            self.coeffs[0] += c;
        }
        self.trim();
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![QS2::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Index of the lowest-degree coefficient where `self` and `other` differ.
    pub fn first_difference(&self, other: &Poly) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&k| self.coeff(k) != other.coeff(k))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let paren = !c.is_rational() && !c.rat_part().is_zero();
            match (k, paren) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "({c})*x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<QS2>::deserialize(deserializer).map(Poly::new)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QS2::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! poly_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

poly_owned_binop!(Add, add);
poly_owned_binop!(Sub, sub);
poly_owned_binop!(Mul, mul);

pub fn poly_add(p: &Poly, q: &Poly) -> Poly {
    p + q
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    p * q
}

pub fn poly_compose(outer: &Poly, inner: &Poly) -> Poly {
    outer.compose(inner)
}

pub fn poly_divrem(p: &Poly, d: &Poly) -> Result<(Poly, Poly)> {
    p.divrem(d)
}

pub fn poly_eval(p: &Poly, x: &QS2) -> QS2 {
    p.eval(x)
}

/// Monic polynomials from `P₀ = 1`, `P₁ = x`, `P_{n+1} = x·P_n − c_n·P_{n−1}`,
/// where `coeff(n)` supplies `c_n` for `n ≥ 1`. Returns `P₀..=P_count`.
fn three_term<F>(count: usize, coeff: F) -> Vec<Poly>
where
    F: Fn(usize) -> Rat,
{
    let mut out = Vec::with_capacity(count + 1);
    out.push(Poly::one());
    if count == 0 {
        return out;
    }
    out.push(Poly::x());
    for n in 1..count {
        let next = &out[n].shift() - &out[n - 1].scale_rat(&coeff(n));
        out.push(next);
    }
    out
}

/// Monic Chebyshev polynomial of the first kind, `T̂_k = 2^{1−k}·T_k` (`T̂₀ = 1`).
pub fn cheb_t_monic(k: usize) -> Poly {
    three_term(k, |n| {
        if n == 1 {
            Rat::frac(1, 2)
        } else {
            Rat::frac(1, 4)
        }
    })
    .pop()
    .expect("three_term returns at least one polynomial")
}

/// Monic Chebyshev polynomial of the second kind, `Û_k = 2^{−k}·U_k`.
pub fn cheb_u_monic(k: usize) -> Poly {
    three_term(k, |_| Rat::frac(1, 4))
        .pop()
        .expect("three_term returns at least one polynomial")
}

/// `P₀..=P_count` from `P_{n+1} = x·P_n − γ_n·P_{n−1}`.
///
/// `gamma[n]` holds `γ_n`; index 0 (`γ₀`) is never read. Entries up to
/// `γ_{count−1}` are required.
pub fn recurrence_polys(gamma: &[Rat], count: usize) -> Result<Vec<Poly>> {
    if count >= 2 && gamma.len() < count {
        return Err(Error::InsufficientGamma {
            needed: count - 1,
            available: gamma.len().saturating_sub(1),
        });
    }
    Ok(three_term(count, |n| gamma[n].clone()))
}
