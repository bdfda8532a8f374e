//! Polynomials in x over Q and elements of Z[x] localized at powers of 1 + 5x.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::Rationals;
use crate::series::Series;

/// Dense polynomial in x with rational coefficients; trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    c: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(v: BigRational) -> Self {
        Self::from_coeffs(vec![v])
    }

    pub fn monomial(m: usize, v: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); m + 1];
        c[m] = v;
        Self::from_coeffs(c)
    }

    pub fn x() -> Self {
        Self::monomial(1, rat(1))
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        XPoly { c }
    }

    pub fn from_ints(c: &[BigInt]) -> Self {
        Self::from_coeffs(c.iter().map(|v| BigRational::from_integer(v.clone())).collect())
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| rat(v)).collect())
    }

    /// `(degree, decimal coefficient)` pairs.
    pub fn from_sparse_str(terms: &[(u32, &str)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0) as usize;
        let mut c = vec![BigRational::zero(); deg + 1];
        for (d, v) in terms {
            let v: BigInt = v.parse().expect("decimal coefficient");
            c[*d as usize] += BigRational::from_integer(v);
        }
        Self::from_coeffs(c)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.c.iter().position(|v| !v.is_zero())
    }

    pub fn coeff(&self, m: usize) -> BigRational {
        self.c.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.c.iter().enumerate().filter(|(_, v)| !v.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|v| v.is_integer())
    }

    /// Integer coefficients, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.c.iter().map(|v| v.is_integer().then(|| v.to_integer())).collect()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_coeffs(self.c.iter().map(|v| v * k).collect())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        Self::from_coeffs(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// (1 + 5x)^n
    pub fn one_plus_5x_pow(n: u32) -> Self {
        let mut c = vec![BigRational::zero(); n as usize + 1];
        let mut b = BigInt::one();
        for k in 0..=n as usize {
            c[k] = BigRational::from_integer(b.clone() * BigInt::from(5u32).pow(k as u32));
            b = b * BigInt::from(n as usize - k) / BigInt::from(k + 1);
        }
        Self::from_coeffs(c)
    }

    /// p(c0 + c1 x)
    pub fn compose_linear(&self, c0: &BigRational, c1: &BigRational) -> Self {
        let lin = XPoly::from_coeffs(vec![c0.clone(), c1.clone()]);
        let mut acc = Self::zero();
        for v in self.c.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(v.clone());
        }
        acc
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, v| acc * x + v)
    }

    /// Exact division by (1 + 5x), if it divides.
    pub fn div_one_plus_5x(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // synthetic division by (x + 1/5), then by 5
        let r = BigRational::new((-1).into(), 5.into());
        let n = self.c.len();
        let mut q = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            let v = &self.c[i] + &carry * &r;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                q[i - 1] = v.clone();
            }
            carry = v;
        }
        Some(Self::from_coeffs(q).scale(&BigRational::new(1.into(), 5.into())))
    }

    /// Substitute a series for x.
    pub fn eval_series(&self, x: &Series<Rationals>) -> Series<Rationals> {
        let t = x.trunc();
        let mut acc = Series::zero(Rationals, t);
        for v in self.c.iter().rev() {
            acc = &(&acc * x) + &Series::monomial(Rationals, 0, v.clone(), t);
        }
        acc
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, v) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{v}")?,
                1 => write!(f, "{v}*x")?,
                _ => write!(f, "{v}*x^{m}")?,
            }
        }
        Ok(())
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, o: &XPoly) -> XPoly {
        let n = self.c.len().max(o.c.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, o: &XPoly) -> XPoly {
        let n = self.c.len().max(o.c.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::from_coeffs(self.c.iter().map(|v| -v).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, o: &XPoly) -> XPoly {
        if self.is_zero() || o.is_zero() {
            return XPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        XPoly::from_coeffs(c)
    }
}

/// num(x) / (1 + 5x)^den.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedElement {
    pub num: XPoly,
    pub den: u32,
}

impl LocalizedElement {
    pub fn new(num: XPoly, den: u32) -> Self {
        LocalizedElement { num, den }
    }

    pub fn zero() -> Self {
        Self::new(XPoly::zero(), 0)
    }

    pub fn poly(num: XPoly) -> Self {
        Self::new(num, 0)
    }

    /// x^m / (1 + 5x)^n
    pub fn monomial(m: usize, n: u32) -> Self {
        Self::new(XPoly::monomial(m, rat(1)), n)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strip common factors of (1 + 5x).
    pub fn canonical(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut num = self.num.clone();
        let mut den = self.den;
        while den > 0 {
            match num.div_one_plus_5x() {
                Some(q) => {
                    num = q;
                    den -= 1;
                }
                None => break,
            }
        }
        Self::new(num, den)
    }

    /// The same element written over (1 + 5x)^n, n >= den.
    pub fn with_den(&self, n: u32) -> Self {
        assert!(n >= self.den, "cannot lower the denominator by re-expansion");
        Self::new(&self.num * &XPoly::one_plus_5x_pow(n - self.den), n)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.den.max(o.den);
        Self::new(&self.with_den(n).num + &o.with_den(n).num, n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.num, self.den)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.num.scale(k), self.den)
    }

    pub fn mul_poly(&self, p: &XPoly) -> Self {
        Self::new(&self.num * p, self.den)
    }

    /// Multiply by (1 + 5x)^k for any integer k.
    pub fn mul_z_power(&self, k: i64) -> Self {
        if k >= 0 {
            let take = (k as u32).min(self.den);
            let rest = k as u32 - take;
            Self::new(&self.num * &XPoly::one_plus_5x_pow(rest), self.den - take)
        } else {
            Self::new(self.num.clone(), self.den + (-k) as u32)
        }
    }

    /// q-expansion given x as a series.
    pub fn eval_series(&self, x: &Series<Rationals>) -> Series<Rationals> {
        let z = &Series::one(Rationals, x.trunc()) + &x.scale_small(5);
        let zinv = z.invert().expect("1 + 5x is a unit");
        &self.num.eval_series(x) * &zinv.pow(self.den as i64).expect("power")
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1+5x)^{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_power() {
        let p = XPoly::one_plus_5x_pow(3);
        assert_eq!(p, XPoly::from_i64s(&[1, 15, 75, 125]));
        assert_eq!(p, XPoly::from_i64s(&[1, 5]).pow(3));
    }

    #[test]
    fn canonical_strips_factors() {
        let num = &XPoly::from_i64s(&[0, 2, 7]) * &XPoly::one_plus_5x_pow(2);
        let e = LocalizedElement::new(num, 5).canonical();
        assert_eq!(e.den, 3);
        assert_eq!(e.num, XPoly::from_i64s(&[0, 2, 7]));
    }

    #[test]
    fn non_divisible_stays() {
        let e = LocalizedElement::new(XPoly::from_i64s(&[1, 1]), 2).canonical();
        assert_eq!(e.den, 2);
    }

    #[test]
    fn add_with_common_denominator() {
        let a = LocalizedElement::monomial(1, 1);
        let b = LocalizedElement::monomial(0, 0);
        // x/(1+5x) + 1 = (1 + 6x)/(1+5x)
        let s = a.add(&b);
        assert_eq!(s.num, XPoly::from_i64s(&[1, 6]));
        assert_eq!(s.den, 1);
    }
}
