//! Coefficient rings for truncated series.
//!
//! Three kinds are supported: exact integers, exact rationals and the
//! residue rings Z/5^e. The residue ring has two backings, a `u64` one for
//! e <= 27 and a big-integer one for any e.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which ring a series lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    Integer,
    Rational,
    ModPow5(u32),
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integer => write!(f, "Z"),
            RingKind::Rational => write!(f, "Q"),
            RingKind::ModPow5(e) => write!(f, "Z/5^{e}"),
        }
    }
}

pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn kind(&self) -> RingKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul_small(&self, a: &Self::Elem, k: i64) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Integer representative, if the element has one.
    fn to_bigint(&self, a: &Self::Elem) -> Option<BigInt>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, b);
    }

    /// `acc += a * k`
    fn add_mul_small(&self, acc: &mut Self::Elem, a: &Self::Elem, k: i64) {
        let t = self.mul_small(a, k);
        self.add_assign(acc, &t);
    }

    /// Truncated product of two dense coefficient vectors, first `len` terms.
    fn mul_dense(&self, a: &[Self::Elem], b: &[Self::Elem], len: usize) -> Vec<Self::Elem> {
        let mut out = vec![self.zero(); len];
        for (i, ai) in a.iter().enumerate().take(len) {
            if self.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(len - i) {
                if self.is_zero(bj) {
                    continue;
                }
                let t = self.mul(ai, bj);
                self.add_assign(&mut out[i + j], &t);
            }
        }
        out
    }

    /// Multiply in place by a sparse series with constant term 1.
    /// `terms` lists `(exponent, coefficient)` with exponent > 0.
    fn sparse_mul_in_place(&self, data: &mut [Self::Elem], terms: &[(usize, i64)]) {
        for n in (0..data.len()).rev() {
            let mut acc = data[n].clone();
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                self.add_mul_small(&mut acc, &data[n - p], c);
            }
            data[n] = acc;
        }
    }

    /// Divide in place by a sparse series with constant term 1.
    fn sparse_div_in_place(&self, data: &mut [Self::Elem], terms: &[(usize, i64)]) {
        for n in 0..data.len() {
            let mut acc = data[n].clone();
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                self.add_mul_small(&mut acc, &data[n - p], -c);
            }
            data[n] = acc;
        }
    }
}

/// Exact integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn kind(&self) -> RingKind {
        RingKind::Integer
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn mul_small(&self, a: &BigInt, k: i64) -> BigInt {
        a * k
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn to_bigint(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
    }
    fn add_mul_small(&self, acc: &mut BigInt, a: &BigInt, k: i64) {
        match k {
            0 => {}
            1 => *acc += a,
            -1 => *acc -= a,
            _ => *acc += a * k,
        }
    }
}

/// Exact rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> RingKind {
        RingKind::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn mul_small(&self, a: &BigRational, k: i64) -> BigRational {
        a * BigRational::from_integer(k.into())
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn to_bigint(&self, a: &BigRational) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }
}

/// Z/5^e backed by `u64`, for e <= 27.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPow5 {
    e: u32,
    m: u64,
}

impl ModPow5 {
    pub const MAX_EXPONENT: u32 = 27;

    pub fn new(e: u32) -> Self {
        assert!(
            (1..=Self::MAX_EXPONENT).contains(&e),
            "ModPow5 supports 1 <= e <= 27, got {e}"
        );
        ModPow5 { e, m: 5u64.pow(e) }
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    #[inline]
    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.m as i128) as u64
    }

    #[inline]
    fn small(&self, k: i64) -> u64 {
        self.reduce_i128(k as i128)
    }
}

impl Ring for ModPow5 {
    type Elem = u64;

    fn kind(&self) -> RingKind {
        RingKind::ModPow5(self.e)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.small(v)
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.m)).to_u64().expect("residue fits")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.m {
            s - self.m
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.m - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.m - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
    fn mul_small(&self, a: &u64, k: i64) -> u64 {
        self.mul(a, &self.small(k))
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if a % 5 == 0 {
            return None;
        }
        let g = BigInt::from(*a).extended_gcd(&BigInt::from(self.m));
        Some(self.from_bigint(&g.x))
    }
    fn to_bigint(&self, a: &u64) -> Option<BigInt> {
        Some(BigInt::from(*a))
    }
    fn add_mul_small(&self, acc: &mut u64, a: &u64, k: i64) {
        *acc = self.reduce_i128(*acc as i128 + *a as i128 * k as i128);
    }

    fn mul_dense(&self, a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        let m = self.m as u128;
        // each product is < 2^126; reduce the accumulator every step
        let mut out = vec![0u64; len];
        for (n, slot) in out.iter_mut().enumerate() {
            let lo = n.saturating_sub(b.len().saturating_sub(1));
            let hi = n.min(a.len().saturating_sub(1));
            if a.is_empty() || b.is_empty() || lo > hi {
                continue;
            }
            let mut acc: u128 = 0;
            if self.m < 1 << 32 {
                for i in lo..=hi {
                    acc += a[i] as u128 * b[n - i] as u128;
                }
                acc %= m;
            } else {
                for i in lo..=hi {
                    acc = (acc + a[i] as u128 * b[n - i] as u128) % m;
                }
            }
            *slot = acc as u64;
        }
        out
    }

    // residues are < 2^63 and sparse coefficients small, so a few thousand
    // products fit in i128 before a single reduction
    fn sparse_mul_in_place(&self, data: &mut [u64], terms: &[(usize, i64)]) {
        let m = self.m as i128;
        for n in (0..data.len()).rev() {
            let mut acc = data[n] as i128;
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                acc += data[n - p] as i128 * c as i128;
            }
            data[n] = acc.rem_euclid(m) as u64;
        }
    }

    fn sparse_div_in_place(&self, data: &mut [u64], terms: &[(usize, i64)]) {
        let m = self.m as i128;
        for n in 0..data.len() {
            let mut acc = data[n] as i128;
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                acc -= data[n - p] as i128 * c as i128;
            }
            data[n] = acc.rem_euclid(m) as u64;
        }
    }
}

/// Z/5^e backed by big integers, for any e >= 1. Elements are kept in [0, 5^e).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPow5Big {
    e: u32,
    m: BigInt,
}

impl ModPow5Big {
    pub fn new(e: u32) -> Self {
        assert!(e >= 1, "ModPow5Big needs e >= 1");
        ModPow5Big {
            e,
            m: BigInt::from(5u32).pow(e),
        }
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &BigInt {
        &self.m
    }

    fn reduce(&self, v: BigInt) -> BigInt {
        if v.is_negative() || v >= self.m {
            v.mod_floor(&self.m)
        } else {
            v
        }
    }
}

impl Ring for ModPow5Big {
    type Elem = BigInt;

    fn kind(&self) -> RingKind {
        RingKind::ModPow5(self.e)
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        self.reduce(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        self.reduce(v.clone())
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }
    fn mul_small(&self, a: &BigInt, k: i64) -> BigInt {
        self.reduce(a * k)
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        if (a % 5u32).is_zero() {
            return None;
        }
        Some(self.reduce(a.extended_gcd(&self.m).x))
    }
    fn to_bigint(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
        if *a >= self.m {
            *a -= &self.m;
        }
    }
    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
        if a.is_negative() {
            *a += &self.m;
        }
    }

    fn sparse_mul_in_place(&self, data: &mut [BigInt], terms: &[(usize, i64)]) {
        for n in (0..data.len()).rev() {
            let mut acc = std::mem::take(&mut data[n]);
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                Integers.add_mul_small(&mut acc, &data[n - p], c);
            }
            data[n] = self.reduce(acc);
        }
    }

    fn sparse_div_in_place(&self, data: &mut [BigInt], terms: &[(usize, i64)]) {
        for n in 0..data.len() {
            let mut acc = std::mem::take(&mut data[n]);
            for &(p, c) in terms {
                if p > n {
                    break;
                }
                Integers.add_mul_small(&mut acc, &data[n - p], -c);
            }
            data[n] = self.reduce(acc);
        }
    }

    fn mul_dense(&self, a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); len];
        for (n, slot) in out.iter_mut().enumerate() {
            if a.is_empty() || b.is_empty() {
                break;
            }
            let lo = n.saturating_sub(b.len() - 1);
            let hi = n.min(a.len() - 1);
            let mut acc = BigInt::zero();
            for i in lo..=hi.max(lo) {
                if i > hi {
                    break;
                }
                if a[i].is_zero() || b[n - i].is_zero() {
                    continue;
                }
                acc += &a[i] * &b[n - i];
            }
            *slot = self.reduce(acc);
        }
        out
    }
}

/// 5-adic valuation of a nonzero integer; `None` for zero.
pub fn val5(v: &BigInt) -> Option<u32> {
    if v.is_zero() {
        return None;
    }
    let five = BigInt::from(5u32);
    let mut x = v.clone();
    let mut k = 0;
    loop {
        let (q, r) = x.div_rem(&five);
        if !r.is_zero() {
            return Some(k);
        }
        x = q;
        k += 1;
    }
}

pub fn pow5(e: u32) -> BigInt {
    BigInt::from(5u32).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_ring_inverse_round_trips() {
        let r = ModPow5::new(8);
        for a in [1u64, 2, 3, 4, 6, 390624] {
            let b = r.inv(&a).unwrap();
            assert_eq!(r.mul(&a, &b), 1);
        }
        assert!(r.inv(&25).is_none());
    }

    #[test]
    fn big_mod_ring_matches_small() {
        let s = ModPow5::new(20);
        let b = ModPow5Big::new(20);
        let x = 123456789012345u64;
        let y = 987654321u64;
        assert_eq!(BigInt::from(s.mul(&x, &y)), b.mul(&BigInt::from(x), &BigInt::from(y)));
        assert_eq!(BigInt::from(s.from_i64(-7)), b.from_i64(-7));
    }

    #[test]
    fn valuation_of_powers() {
        assert_eq!(val5(&BigInt::from(250)), Some(3));
        assert_eq!(val5(&BigInt::from(-7)), Some(0));
        assert_eq!(val5(&BigInt::zero()), None);
    }

    #[test]
    fn sparse_mul_then_div_is_identity() {
        let r = Integers;
        let terms = [(1usize, -1i64), (2, -1), (5, 1), (7, 1)];
        let orig: Vec<BigInt> = (0..30).map(|i| BigInt::from(i * i - 3)).collect();
        let mut d = orig.clone();
        r.sparse_mul_in_place(&mut d, &terms);
        r.sparse_div_in_place(&mut d, &terms);
        assert_eq!(d, orig);
    }
}
