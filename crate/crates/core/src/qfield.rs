//! Exact scalars: reduced rationals and the quadratic field Q(√2).
//!
//! [`Rat`] wraps a GMP rational, which is kept in lowest terms with a positive
//! denominator after every operation. [`QS2`] is `a + b·√2` with rational `a`,
//! `b`; its sign is decided by comparing `a²` with `2b²` exactly.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::{Float, Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Rational);

impl Rat {
    pub fn zero() -> Self {
        Rat(Rational::new())
    }

    pub fn one() -> Self {
        Rat(Rational::from(1))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Rational::from(n))
    }

    /// `num/den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(Rational::from((num, den))))
    }

    /// Shorthand for constants known to have a nonzero denominator.
    pub(crate) fn frac(num: i64, den: i64) -> Self {
        Rat(Rational::from((num, den)))
    }

    pub fn from_integers(num: Integer, den: Integer) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(Rational::from((num, den))))
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn signum(&self) -> i8 {
        match self.0.cmp0() {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(Rational::from(self.0.abs_ref()))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(Rational::from(self.0.recip_ref())))
    }

    pub fn pow(&self, exp: u32) -> Self {
        use rug::ops::Pow;
        Rat(Rational::from((&self.0).pow(exp)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn to_float(&self, prec: u32) -> Float {
        Float::with_val(prec, &self.0)
    }
}

impl From<Rational> for Rat {
    fn from(r: Rational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<Integer> for Rat {
    fn from(n: Integer) -> Self {
        Rat(Rational::from(n))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // GMP prints "p" when the denominator is 1 and "p/q" otherwise.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let valid = !s.is_empty()
            && s.bytes()
                .all(|b| b.is_ascii_digit() || b == b'-' || b == b'/' || b == b'+');
        if !valid {
            return Err(Error::Parse(format!("malformed rational {s:?}")));
        }
        if let Some((_, den)) = s.split_once('/') {
            if den.bytes().all(|b| b == b'0') && !den.is_empty() {
                return Err(Error::DivisionByZero);
            }
        }
        Rational::from_str(s)
            .map(Rat)
            .map_err(|e| Error::Parse(format!("malformed rational {s:?}: {e}")))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(Rational::from(-&self.0))
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Element `rat + sqrt2·√2` of Q(√2).
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QS2 {
    #[serde(rename = "rat")]
    rat: Rat,
    #[serde(rename = "sqrt2")]
    sqrt2: Rat,
}

impl QS2 {
    pub fn new(rat: Rat, sqrt2: Rat) -> Self {
        QS2 { rat, sqrt2 }
    }

    pub fn zero() -> Self {
        QS2::default()
    }

    pub fn one() -> Self {
        QS2::from(Rat::one())
    }

    /// `√2` itself.
    pub fn sqrt2() -> Self {
        QS2::new(Rat::zero(), Rat::one())
    }

    /// `r·√2`.
    pub fn sqrt2_multiple(r: Rat) -> Self {
        QS2::new(Rat::zero(), r)
    }

    pub fn rat_part(&self) -> &Rat {
        &self.rat
    }

    pub fn sqrt2_part(&self) -> &Rat {
        &self.sqrt2
    }

    pub fn into_parts(self) -> (Rat, Rat) {
        (self.rat, self.sqrt2)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.sqrt2.is_zero() && self.rat == Rat::one()
    }

    /// True iff the √2 component vanishes.
    pub fn is_rational(&self) -> bool {
        self.sqrt2.is_zero()
    }

    /// The rational value, if there is no √2 component.
    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        QS2::new(self.rat.clone(), -&self.sqrt2)
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Rat {
        &self.rat * &self.rat - Rat::from_int(2) * (&self.sqrt2 * &self.sqrt2)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a² − 2b² ≠ 0 for nonzero elements since √2 is irrational.
        let n = self.norm().recip()?;
        Ok(QS2::new(&self.rat * &n, -(&self.sqrt2 * &n)))
    }

    pub fn checked_div(&self, rhs: &QS2) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        QS2::new(&self.rat * r, &self.sqrt2 * r)
    }

    /// Exact sign of the real number `a + b√2`: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        let sa = self.rat.signum();
        let sb = self.sqrt2.signum();
        match (sa, sb) {
            (0, s) | (s, 0) => s,
            (a, b) if a == b => a,
            _ => {
                let a2 = &self.rat * &self.rat;
                let two_b2 = Rat::from_int(2) * (&self.sqrt2 * &self.sqrt2);
                // a and b have opposite signs; the larger square wins.
                match a2.cmp(&two_b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = QS2::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rounded value at `prec` bits.
    pub fn to_float(&self, prec: u32) -> Float {
        let root2 = Float::with_val(prec, 2).sqrt();
        self.rat.to_float(prec) + self.sqrt2.to_float(prec) * root2
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float(128).to_f64()
    }
}

impl PartialOrd for QS2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QS2 {
    /// Order of the real numbers the elements denote.
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<Rat> for QS2 {
    fn from(r: Rat) -> Self {
        QS2::new(r, Rat::zero())
    }
}

impl From<i64> for QS2 {
    fn from(n: i64) -> Self {
        QS2::from(Rat::from_int(n))
    }
}

impl fmt::Display for QS2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt(2)", self.sqrt2),
            (false, false) if self.sqrt2.signum() < 0 => {
                write!(f, "{} - {}*sqrt(2)", self.rat, self.sqrt2.abs())
            }
            (false, false) => write!(f, "{} + {}*sqrt(2)", self.rat, self.sqrt2),
        }
    }
}

impl fmt::Debug for QS2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QS2({self})")
    }
}

impl Add<&QS2> for &QS2 {
    type Output = QS2;
    fn add(self, rhs: &QS2) -> QS2 {
        QS2::new(&self.rat + &rhs.rat, &self.sqrt2 + &rhs.sqrt2)
    }
}

impl Sub<&QS2> for &QS2 {
    type Output = QS2;
    fn sub(self, rhs: &QS2) -> QS2 {
        QS2::new(&self.rat - &rhs.rat, &self.sqrt2 - &rhs.sqrt2)
    }
}

impl Mul<&QS2> for &QS2 {
    type Output = QS2;
    fn mul(self, rhs: &QS2) -> QS2 {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let ac = &self.rat * &rhs.rat;
        let bd = &self.sqrt2 * &rhs.sqrt2;
        let ad = &self.rat * &rhs.sqrt2;
        let bc = &self.sqrt2 * &rhs.rat;
        QS2::new(ac + &bd + bd, ad + bc)
    }
}

macro_rules! qs2_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<QS2> for QS2 {
            type Output = QS2;
            fn $method(self, rhs: QS2) -> QS2 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QS2> for QS2 {
            type Output = QS2;
            fn $method(self, rhs: &QS2) -> QS2 {
                (&self).$method(rhs)
            }
        }
        impl $tr<QS2> for &QS2 {
            type Output = QS2;
            fn $method(self, rhs: QS2) -> QS2 {
                self.$method(&rhs)
            }
        }
    };
}

qs2_owned_binop!(Add, add);
qs2_owned_binop!(Sub, sub);
qs2_owned_binop!(Mul, mul);

impl Div<&QS2> for &QS2 {
    type Output = QS2;
    /// Panics on division by zero; use [`QS2::checked_div`] otherwise.
    fn div(self, rhs: &QS2) -> QS2 {
        self.checked_div(rhs)
            .expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for QS2 {
    type Output = QS2;
    fn neg(self) -> QS2 {
        QS2::new(-self.rat, -self.sqrt2)
    }
}

impl Neg for &QS2 {
    type Output = QS2;
    fn neg(self) -> QS2 {
        QS2::new(-&self.rat, -&self.sqrt2)
    }
}

impl AddAssign<&QS2> for QS2 {
    fn add_assign(&mut self, rhs: &QS2) {
        self.rat += &rhs.rat;
        self.sqrt2 += &rhs.sqrt2;
    }
}

impl SubAssign<&QS2> for QS2 {
    fn sub_assign(&mut self, rhs: &QS2) {
        self.rat -= &rhs.rat;
        self.sqrt2 -= &rhs.sqrt2;
    }
}

impl MulAssign<&QS2> for QS2 {
    fn mul_assign(&mut self, rhs: &QS2) {
        *self = &*self * rhs;
    }
}

impl Sum for QS2 {
    fn sum<I: Iterator<Item = QS2>>(iter: I) -> QS2 {
        iter.fold(QS2::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// `qs2_add`
pub fn qs2_add(x: &QS2, y: &QS2) -> QS2 {
    x + y
}

/// `qs2_mul`
pub fn qs2_mul(x: &QS2, y: &QS2) -> QS2 {
    x * y
}

/// `qs2_inv`; fails with [`Error::DivisionByZero`] on zero.
pub fn qs2_inv(x: &QS2) -> Result<QS2> {
    x.inv()
}

/// `qs2_sign`
pub fn qs2_sign(x: &QS2) -> i8 {
    x.sign()
}

/// `qs2_is_rational`
pub fn qs2_is_rational(x: &QS2) -> bool {
    x.is_rational()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QS2 {
        QS2::new(Rat::frac(a.0, a.1), Rat::frac(b.0, b.1))
    }

    #[test]
    fn add_examples() {
        assert_eq!(q((1, 1), (1, 1)) + q((1, 1), (-1, 1)), QS2::from(2));
        let x = q((3, 7), (-5, 2));
        assert_eq!(&x + &QS2::zero(), x);
        let m = QS2::sqrt2_multiple(Rat::frac(7, 120));
        assert_eq!(&m + &m, QS2::sqrt2_multiple(Rat::frac(7, 60)));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(QS2::sqrt2() * QS2::sqrt2(), QS2::from(2));
        assert_eq!(q((1, 1), (1, 1)) * q((-1, 1), (1, 1)), QS2::one());
        let mu0 = QS2::sqrt2_multiple(Rat::from_int(2));
        let mu2 = QS2::sqrt2_multiple(Rat::frac(7, 120));
        assert_eq!(mu0 * mu2, QS2::from(Rat::frac(7, 30)));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(q((1, 1), (1, 1)).inv().unwrap(), q((-1, 1), (1, 1)));
        assert_eq!(
            QS2::sqrt2_multiple(Rat::from_int(2)).inv().unwrap(),
            QS2::sqrt2_multiple(Rat::frac(1, 4))
        );
        assert_eq!(q((3, 1), (-2, 1)).inv().unwrap(), q((3, 1), (2, 1)));
        assert_eq!(QS2::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q((3, 1), (-2, 1)).sign(), 1);
        assert_eq!(QS2::zero().sign(), 0);
        assert_eq!(q((1, 1), (-1, 1)).sign(), -1);
        assert_eq!(q((-3, 1), (2, 1)).sign(), -1);
        assert_eq!(q((-1, 1), (1, 1)).sign(), 1);
    }

    #[test]
    fn is_rational_examples() {
        assert!(QS2::from(Rat::frac(7, 30)).is_rational());
        assert!(!QS2::sqrt2_multiple(Rat::from_int(2)).is_rational());
        assert!(QS2::zero().is_rational());
    }

    #[test]
    fn rat_is_reduced() {
        let r = Rat::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(*r.denom(), 2);
        assert_eq!(Rat::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Rat::from_int(5).to_string(), "5");
    }

    #[test]
    fn rat_parse() {
        assert_eq!("3187/12870".parse::<Rat>().unwrap(), Rat::frac(3187, 12870));
        assert_eq!("-7".parse::<Rat>().unwrap(), Rat::from_int(-7));
        assert_eq!("2/4".parse::<Rat>().unwrap().to_string(), "1/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
        assert!(" 1".parse::<Rat>().is_err());
    }

    #[test]
    fn json_shape() {
        let x = q((1, 2), (-7, 120));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"rat":"1/2","sqrt2":"-7/120"}"#);
        let back: QS2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display() {
        assert_eq!(
            QS2::sqrt2_multiple(Rat::frac(7, 120)).to_string(),
            "7/120*sqrt(2)"
        );
        assert_eq!(q((1, 1), (-1, 2)).to_string(), "1 - 1/2*sqrt(2)");
        assert_eq!(QS2::from(Rat::frac(7, 30)).to_string(), "7/30");
    }

    #[test]
    fn ordering_is_numeric() {
        let a = q((3, 2), (0, 1));
        let b = QS2::sqrt2();
        assert!(a > b);
        assert!(QS2::from(-1) < QS2::zero());
    }
}
