//! Truncated Laurent series in q.
//!
//! A series stores dense coefficients for exponents in `[val, trunc)`;
//! everything at or beyond `trunc` is unknown. Leading and trailing zeros are
//! stripped, so `val` is the true valuation of a nonzero series.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::ring::{Integers, Ring, RingKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingKind, RingKind),
    #[error("leading coefficient is not a unit")]
    NonUnitLeading,
    #[error("cannot invert the zero series")]
    InvertZero,
    #[error("series is zero to its truncation order")]
    Degenerate,
    #[error("coefficient at q^{exp} is beyond the truncation order {trunc}")]
    BeyondTruncation { exp: i64, trunc: i64 },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

#[derive(Clone)]
pub struct Series<R: Ring> {
    ring: R,
    val: i64,
    trunc: i64,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.trunc == other.trunc
            && self.coeffs == other.coeffs
            && (self.coeffs.is_empty() || self.val == other.val)
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}](", self.ring.kind())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !self.ring.is_zero(c) {
                write!(f, "{:?}*q^{} + ", c, self.val + i as i64)?;
            }
        }
        write!(f, "O(q^{}))", self.trunc)
    }
}

impl<R: Ring> Series<R> {
    /// Build from dense coefficients starting at exponent `start`; entries at or
    /// beyond `trunc` are dropped.
    pub fn from_coeffs(ring: R, start: i64, mut coeffs: Vec<R::Elem>, trunc: i64) -> Self {
        let keep = (trunc - start).max(0) as usize;
        coeffs.truncate(keep);
        let mut s = Series {
            ring,
            val: start,
            trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn from_i64s(ring: R, start: i64, coeffs: &[i64], trunc: i64) -> Self {
        let c = coeffs.iter().map(|&v| ring.from_i64(v)).collect();
        Self::from_coeffs(ring, start, c, trunc)
    }

    /// Sparse constructor from `(exponent, coefficient)` pairs.
    pub fn from_terms(ring: R, terms: &[(i64, R::Elem)], trunc: i64) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero(ring, trunc);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap().min(trunc - 1);
        let len = (hi - lo + 1).max(0) as usize;
        let mut c = vec![ring.zero(); len];
        for (e, v) in terms {
            if *e < trunc {
                ring.add_assign(&mut c[(e - lo) as usize], v);
            }
        }
        Self::from_coeffs(ring, lo, c, trunc)
    }

    pub fn zero(ring: R, trunc: i64) -> Self {
        Series {
            ring,
            val: trunc,
            trunc,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R, trunc: i64) -> Self {
        Self::monomial(ring.clone(), 0, ring.one(), trunc)
    }

    pub fn monomial(ring: R, exp: i64, c: R::Elem, trunc: i64) -> Self {
        Self::from_coeffs(ring, exp, vec![c], trunc)
    }

    fn normalize(&mut self) {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !self.ring.is_zero(c))
            .unwrap_or(self.coeffs.len());
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.val = self.trunc;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Valuation; for the zero series this is the truncation order.
    pub fn valuation(&self) -> i64 {
        self.val
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of q^n. Panics if n is beyond the truncation order.
    pub fn coeff(&self, n: i64) -> R::Elem {
        self.try_coeff(n).expect("coefficient beyond truncation order")
    }

    pub fn try_coeff(&self, n: i64) -> Result<R::Elem> {
        if n >= self.trunc {
            return Err(SeriesError::BeyondTruncation {
                exp: n,
                trunc: self.trunc,
            });
        }
        let i = n - self.val;
        if i < 0 || i as usize >= self.coeffs.len() {
            Ok(self.ring.zero())
        } else {
            Ok(self.coeffs[i as usize].clone())
        }
    }

    /// Coefficients for exponents `from..to` (all below the truncation order).
    pub fn coeff_range(&self, from: i64, to: i64) -> Vec<R::Elem> {
        (from..to).map(|n| self.coeff(n)).collect()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R::Elem)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| (self.val + i as i64, c))
    }

    pub fn raw(&self) -> (i64, &[R::Elem]) {
        (self.val, &self.coeffs)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(SeriesError::RingMismatch(self.ring.kind(), other.ring.kind()));
        }
        Ok(())
    }

    /// Same series with a lower truncation order.
    pub fn truncate(&self, trunc: i64) -> Self {
        let t = trunc.min(self.trunc);
        Self::from_coeffs(self.ring.clone(), self.val, self.coeffs.clone(), t)
    }

    fn combine(&self, other: &Self, sub: bool) -> Result<Self> {
        self.check_ring(other)?;
        let trunc = self.trunc.min(other.trunc);
        if self.is_zero() && other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), trunc));
        }
        let lo = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.val,
            (_, true) => self.val,
            _ => self.val.min(other.val),
        };
        if lo >= trunc {
            return Ok(Self::zero(self.ring.clone(), trunc));
        }
        let len = (trunc - lo) as usize;
        let mut out = vec![self.ring.zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.val + i as i64 - lo;
            if k >= len as i64 {
                break;
            }
            out[k as usize] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let k = other.val + i as i64 - lo;
            if k >= len as i64 {
                break;
            }
            if sub {
                self.ring.sub_assign(&mut out[k as usize], c);
            } else {
                self.ring.add_assign(&mut out[k as usize], c);
            }
        }
        Ok(Self::from_coeffs(self.ring.clone(), lo, out, trunc))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn negate(&self) -> Self {
        let c = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::from_coeffs(self.ring.clone(), self.val, c, self.trunc)
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        let c = self.coeffs.iter().map(|c| self.ring.mul(c, k)).collect();
        Self::from_coeffs(self.ring.clone(), self.val, c, self.trunc)
    }

    pub fn scale_small(&self, k: i64) -> Self {
        let c = self.coeffs.iter().map(|c| self.ring.mul_small(c, k)).collect();
        Self::from_coeffs(self.ring.clone(), self.val, c, self.trunc)
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        Series {
            ring: self.ring.clone(),
            val: self.val + k,
            trunc: self.trunc + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Product; known to order min(Ta + val b, Tb + val a).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let trunc = (self.trunc + other.val).min(other.trunc + self.val);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone(), trunc));
        }
        let lo = self.val + other.val;
        let len = (trunc - lo).max(0) as usize;
        let out = self.ring.mul_dense(&self.coeffs, &other.coeffs, len);
        Ok(Self::from_coeffs(self.ring.clone(), lo, out, trunc))
    }

    /// Multiplicative inverse. The leading coefficient must be a unit.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(SeriesError::InvertZero);
        }
        let r = &self.ring;
        let c0inv = r.inv(&self.coeffs[0]).ok_or(SeriesError::NonUnitLeading)?;
        let v = self.val;
        let rel = (self.trunc - v) as usize;
        let a = &self.coeffs;
        let mut b: Vec<R::Elem> = Vec::with_capacity(rel);
        b.push(c0inv.clone());
        for n in 1..rel {
            let mut acc = r.zero();
            for k in 1..=n.min(a.len() - 1) {
                if r.is_zero(&a[k]) {
                    continue;
                }
                let t = r.mul(&a[k], &b[n - k]);
                r.add_assign(&mut acc, &t);
            }
            b.push(r.neg(&r.mul(&acc, &c0inv)));
        }
        Ok(Self::from_coeffs(r.clone(), -v, b, self.trunc - 2 * v))
    }

    /// Power by repeated squaring; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.invert()?.pow(-k);
        }
        if k == 0 {
            let rel = if self.is_zero() { 0 } else { self.trunc - self.val };
            return Ok(Self::one(self.ring.clone(), rel));
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.try_mul(&base)?,
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc.unwrap())
    }

    /// Substitute q -> q^k for k >= 1.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution needs k >= 1");
        if self.is_zero() {
            return Self::zero(self.ring.clone(), self.trunc * k);
        }
        let mut c = vec![self.ring.zero(); (self.coeffs.len() - 1) * k as usize + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i * k as usize] = v.clone();
        }
        Self::from_coeffs(self.ring.clone(), self.val * k, c, self.trunc * k)
    }

    /// Map coefficients into another ring.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Series<S> {
        let c = self.coeffs.iter().map(f).collect();
        Series::from_coeffs(target, self.val, c, self.trunc)
    }

    /// Index of the first exponent where `self` and `other` differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let d = self.try_sub(other).ok()?;
        (!d.is_zero()).then_some(d.valuation())
    }
}

impl Series<Integers> {
    /// Reduce into another ring via its integer embedding.
    pub fn reduce_into<S: Ring>(&self, target: S) -> Series<S> {
        let t = target.clone();
        self.map_ring(target, |c| t.from_bigint(c))
    }

    pub fn to_rationals(&self) -> Series<crate::ring::Rationals> {
        self.reduce_into(crate::ring::Rationals)
    }
}

impl<R: Ring> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        self.try_add(rhs).expect("series ring mismatch")
    }
}

impl<R: Ring> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        self.try_sub(rhs).expect("series ring mismatch")
    }
}

impl<R: Ring> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        self.try_mul(rhs).expect("series ring mismatch")
    }
}

impl<R: Ring> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.negate()
    }
}

/// Pentagonal exponents and signs of (q;q)_inf, as `(exponent, coefficient)`
/// with exponent > 0, below `limit`.
pub fn pentagonal_terms(limit: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut k: usize = 1;
    loop {
        let a = k * (3 * k - 1) / 2;
        let b = k * (3 * k + 1) / 2;
        if a >= limit {
            break;
        }
        let s = if k % 2 == 1 { -1 } else { 1 };
        out.push((a, s));
        if b < limit {
            out.push((b, s));
        }
        k += 1;
    }
    out
}

/// Terms of (q;q)_inf^3 = sum (-1)^n (2n+1) q^(n(n+1)/2), exponent > 0, below `limit`.
pub fn jacobi_cube_terms(limit: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut n: usize = 1;
    loop {
        let e = n * (n + 1) / 2;
        if e >= limit {
            break;
        }
        let s = if n % 2 == 1 { -1 } else { 1 };
        out.push((e, s * (2 * n as i64 + 1)));
        n += 1;
    }
    out
}

fn stretch(terms: &[(usize, i64)], delta: usize) -> Vec<(usize, i64)> {
    terms.iter().map(|&(p, c)| (p * delta, c)).collect()
}

/// Multiply the power series held in `buf` (exponents 0..len) by
/// (q^delta; q^delta)_inf^e in place.
pub fn apply_euler_power<R: Ring>(ring: &R, buf: &mut [R::Elem], delta: usize, e: i64) {
    if e == 0 || buf.is_empty() {
        return;
    }
    let limit = buf.len().div_ceil(delta);
    let pent = stretch(&pentagonal_terms(limit), delta);
    let cube = stretch(&jacobi_cube_terms(limit), delta);
    let n = e.unsigned_abs();
    let (cubes, singles) = (n / 3, n % 3);
    for _ in 0..cubes {
        if e > 0 {
            ring.sparse_mul_in_place(buf, &cube);
        } else {
            ring.sparse_div_in_place(buf, &cube);
        }
    }
    for _ in 0..singles {
        if e > 0 {
            ring.sparse_mul_in_place(buf, &pent);
        } else {
            ring.sparse_div_in_place(buf, &pent);
        }
    }
}

/// (q^delta; q^delta)_inf^e to order T.
pub fn euler_product<R: Ring>(ring: R, delta: usize, e: i64, trunc: i64) -> Series<R> {
    assert!(delta >= 1);
    let len = trunc.max(0) as usize;
    let mut buf = vec![ring.zero(); len];
    if len > 0 {
        buf[0] = ring.one();
    }
    apply_euler_power(&ring, &mut buf, delta, e);
    Series::from_coeffs(ring, 0, buf, trunc)
}

/// prod (q^delta; q^delta)_inf^{e_delta} to order T, no leading q-power.
pub fn euler_quotient<R: Ring>(ring: R, factors: &[(usize, i64)], trunc: i64) -> Series<R> {
    let len = trunc.max(0) as usize;
    let mut buf = vec![ring.zero(); len];
    if len > 0 {
        buf[0] = ring.one();
    }
    for &(d, e) in factors {
        apply_euler_power(&ring, &mut buf, d, e);
    }
    Series::from_coeffs(ring, 0, buf, trunc)
}

/// Generating function of d_k: (q^2;q^2)^k / (q;q)^(3k+1).
pub fn dk_generating<R: Ring>(ring: R, k: i64, trunc: i64) -> Series<R> {
    euler_quotient(ring, &[(2, k), (1, -(3 * k + 1))], trunc)
}

/// q-Pochhammer (c q^a; q^d)_inf = prod_{k>=0} (1 - c q^(a + k d)) for integer
/// constant c, to order T. Requires a >= 0 and d >= 1.
pub fn q_pochhammer<R: Ring>(ring: R, c: i64, a: i64, d: i64, trunc: i64) -> Series<R> {
    assert!(a >= 0 && d >= 1);
    let len = trunc.max(0) as usize;
    let mut buf = vec![ring.zero(); len];
    if len > 0 {
        buf[0] = ring.one();
    }
    let mut e = a;
    while e < trunc {
        if e == 0 {
            for v in buf.iter_mut() {
                *v = ring.mul_small(v, 1 - c);
            }
        } else {
            let e = e as usize;
            for n in (e..len).rev() {
                let t = buf[n - e].clone();
                ring.add_mul_small(&mut buf[n], &t, -c);
            }
        }
        e += d;
    }
    Series::from_coeffs(ring, 0, buf, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ModPow5, Rationals};
    use num_bigint::BigInt;

    fn z(v: &[i64], t: i64) -> Series<Integers> {
        Series::from_i64s(Integers, 0, v, t)
    }

    #[test]
    fn geometric_inverse() {
        let a = z(&[1, -1], 10);
        let inv = a.invert().unwrap();
        assert_eq!(inv, z(&[1; 10], 10));
        let prod = &a * &inv;
        assert_eq!(prod, Series::one(Integers, 10));
    }

    #[test]
    fn sum_of_binomials_is_two() {
        let s = &z(&[1, 1], 5) + &z(&[1, -1], 5);
        assert_eq!(s, z(&[2], 5));
    }

    #[test]
    fn product_truncation_rule() {
        let a = Series::from_i64s(Integers, 2, &[1, 3], 7);
        let b = Series::from_i64s(Integers, 1, &[2], 4);
        let p = &a * &b;
        // min(7 + 1, 4 + 2) = 6
        assert_eq!(p.trunc(), 6);
        assert_eq!(p.coeff(3), BigInt::from(2));
        assert_eq!(p.coeff(4), BigInt::from(6));
    }

    #[test]
    fn euler_product_matches_pentagonal_theorem() {
        let s = euler_product(Integers, 1, 1, 30);
        let expect = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(s.coeff(n as i64), BigInt::from(*e));
        }
        assert_eq!(s.coeff(22), BigInt::from(1));
        assert_eq!(s.coeff(26), BigInt::from(1));
    }

    #[test]
    fn partition_numbers() {
        let p = euler_product(Integers, 1, -1, 101);
        assert_eq!(p.coeff(10), BigInt::from(42));
        assert_eq!(p.coeff(100), "190569292".parse::<BigInt>().unwrap());
    }

    #[test]
    fn cube_route_matches_repeated_product() {
        let a = euler_product(Integers, 2, 7, 80);
        let one = euler_product(Integers, 2, 1, 80);
        let b = one.pow(7).unwrap();
        assert_eq!(a, b);
        let c = euler_product(Integers, 3, -5, 80);
        let d = euler_product(Integers, 3, 1, 80).pow(-5).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Series::from_i64s(ModPow5::new(2), 0, &[1, 2], 5);
        let b = Series::from_i64s(ModPow5::new(3), 0, &[1, 2], 5);
        assert!(matches!(a.try_add(&b), Err(SeriesError::RingMismatch(..))));
    }

    #[test]
    fn non_unit_inverse_fails() {
        let a = Series::from_i64s(Integers, 0, &[2, 1], 5);
        assert_eq!(a.invert().unwrap_err(), SeriesError::NonUnitLeading);
        let q = Series::from_i64s(Rationals, 0, &[2, 1], 5);
        assert!(q.invert().is_ok());
    }

    #[test]
    fn laurent_inverse_truncation() {
        let a = Series::from_i64s(Integers, 2, &[1, 1], 12);
        let b = a.invert().unwrap();
        assert_eq!(b.valuation(), -2);
        assert_eq!(b.trunc(), 8);
        let p = &a * &b;
        assert_eq!(p, Series::one(Integers, 10));
    }

    #[test]
    fn pochhammer_matches_euler() {
        assert_eq!(q_pochhammer(Integers, 1, 1, 1, 40), euler_product(Integers, 1, 1, 40));
        assert_eq!(q_pochhammer(Integers, 1, 3, 3, 40), euler_product(Integers, 3, 1, 40));
    }
}
