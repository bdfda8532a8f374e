//! Floor-function valuation bounds, the map Omega onto (Z/5)^2, and
//! membership in the spaces V^(0)_n, V-hat_n and V^(1)_n.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::Op;
use crate::ring::{pow5, val5};

/// theta_0 (weighted) and theta_1 (plain): the guaranteed 5-adic valuation of the x^m coefficient.
pub fn theta(op: Op, m: i64) -> i64 {
    match op {
        Op::Plain if m >= 8 => (5 * m - 2).div_euclid(7) - 5,
        Op::Weighted if m >= 5 => (5 * m - 1).div_euclid(7) - 2,
        _ => 0,
    }
}

/// pi_0 (weighted) and pi_1 (plain): the factored power of 5 in h-arrays.
pub fn pi(op: Op, m: i64, r: i64) -> i64 {
    match op {
        Op::Weighted => ((5 * r - m + 2).div_euclid(7) - 5).max(0),
        Op::Plain => (5 * r - m).div_euclid(7),
    }
}

pub fn phi(l: i64) -> i64 {
    (5 * l + 13).div_euclid(7)
}

/// floor(5^(alpha+1)/4)
pub fn psi(alpha: u32) -> u64 {
    5u64.pow(alpha + 1) / 4
}

/// 0 for odd alpha, 1 for even alpha.
pub fn beta(alpha: u32) -> u32 {
    alpha + 1 - 2 * ((alpha + 1) / 2)
}

/// Minimal positive y with 4y = 1 mod 5^alpha.
pub fn lambda(alpha: u32) -> u64 {
    // 5^alpha = 1 mod 4, so (3*5^alpha + 1)/4 is the inverse of 4 in [1, 5^alpha)
    (3 * 5u64.pow(alpha) + 1) / 4
}

/// The closed form sometimes quoted for lambda; not integral in general.
pub fn lambda_closed_form(alpha: u32) -> (u64, bool) {
    let num = 1 + 5 * 3u64.pow(alpha);
    (num / 4, num % 4 == 0)
}

/// Power of 5 dividing L_alpha: floor(alpha/2) + 1.
pub fn l_power(alpha: u32) -> u32 {
    alpha / 2 + 1
}

/// The two rows of Omega, indexed from m = 2.
pub const OMEGA_ROWS: [[u8; 7]; 2] = [[1, 1, 2, 1, 0, 0, 0], [0, 0, 1, 0, 4, 4, 4]];

/// First index of the Omega rows.
pub const OMEGA_START: usize = 2;

/// Omega(s) for s indexed from m = 2, each component mod 5.
pub fn omega_apply(s: &[BigInt]) -> (u8, u8) {
    let five = BigInt::from(5);
    let mut out = [0u8; 2];
    for (row, o) in OMEGA_ROWS.iter().zip(out.iter_mut()) {
        let mut acc = BigInt::zero();
        for (k, &w) in row.iter().enumerate() {
            if let Some(v) = s.get(k) {
                acc += v * w;
            }
        }
        *o = acc.mod_floor(&five).to_u8().unwrap();
    }
    (out[0], out[1])
}

/// A 5-adic integer known to finite or infinite precision:
/// the value is congruent to 5^shift * unit modulo 5^(shift + prec).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adic {
    pub shift: i64,
    pub unit: BigInt,
    pub prec: Option<u32>,
}

/// 5-adic valuation of an `Adic`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Val {
    Exact(i64),
    /// the known digits are all zero up to this power
    AtLeast(i64),
    Zero,
}

impl Adic {
    pub fn exact(v: BigInt) -> Self {
        Adic { shift: 0, unit: v, prec: None }
    }

    pub fn scaled(shift: i64, unit: BigInt, prec: Option<u32>) -> Self {
        Adic { shift, unit, prec }
    }

    pub fn val(&self) -> Val {
        match (val5(&self.unit), self.prec) {
            (None, None) => Val::Zero,
            (None, Some(p)) => Val::AtLeast(self.shift + p as i64),
            (Some(v), Some(p)) if v >= p => Val::AtLeast(self.shift + p as i64),
            (Some(v), _) => Val::Exact(self.shift + v as i64),
        }
    }

    /// Whether 5^d divides the value; None when precision runs out.
    pub fn divisible(&self, d: i64) -> Option<bool> {
        match self.val() {
            Val::Zero => Some(true),
            Val::Exact(v) => Some(v >= d),
            Val::AtLeast(v) => (v >= d).then_some(true),
        }
    }

    /// (value / 5^d) mod 5, for a value divisible by 5^d.
    pub fn digit(&self, d: i64) -> Option<u8> {
        let known_to = self.prec.map(|p| self.shift + p as i64);
        if known_to.is_some_and(|k| k < d + 1) {
            return None;
        }
        let e = d - self.shift;
        let five = BigInt::from(5);
        if e < 0 {
            // 5^shift * unit with shift > d: digit is zero
            return Some(0);
        }
        let q = &self.unit / pow5(e as u32);
        Some(q.mod_floor(&five).to_u8().unwrap())
    }

    /// value / 5^d as an exact integer, when exact and divisible.
    pub fn exact_quotient(&self, d: i64) -> Option<BigInt> {
        if self.prec.is_some() {
            return None;
        }
        let e = self.shift - d;
        if e >= 0 {
            Some(&self.unit * pow5(e as u32))
        } else {
            let p = pow5((-e) as u32);
            self.unit.is_multiple_of(&p).then(|| &self.unit / p)
        }
    }

    /// Known power of 5 up to which the value is determined; None when exact.
    pub fn known_to(&self) -> Option<i64> {
        self.prec.map(|p| self.shift + p as i64)
    }

    /// The value modulo 5^e, when it is an integer known that far.
    pub fn residue(&self, e: u32) -> Option<BigInt> {
        if self.known_to().is_some_and(|k| k < e as i64) {
            return None;
        }
        let m = pow5(e);
        if self.shift >= 0 {
            return Some((&self.unit * pow5(self.shift as u32)).mod_floor(&m));
        }
        let p = pow5((-self.shift) as u32);
        self.unit.is_multiple_of(&p).then(|| (&self.unit / p).mod_floor(&m))
    }

    pub fn is_negative(&self) -> bool {
        self.prec.is_none() && self.unit.is_negative()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Space {
    /// support m >= 1, coefficients multiples of 5^theta_0(m)
    V0(u64),
    /// support m >= 2, coefficients multiples of 5^theta_1(m)
    VHat(u64),
    /// as VHat, and the de-scaled vector lies in ker Omega
    V1(u64),
}

impl Space {
    pub fn n(self) -> u64 {
        match self {
            Space::V0(n) | Space::VHat(n) | Space::V1(n) => n,
        }
    }

    fn op(self) -> Op {
        match self {
            Space::V0(_) => Op::Weighted,
            _ => Op::Plain,
        }
    }

    fn support_start(self) -> usize {
        match self {
            Space::V0(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::V0(n) => write!(f, "V0_{n}"),
            Space::VHat(n) => write!(f, "Vhat_{n}"),
            Space::V1(n) => write!(f, "V1_{n}"),
        }
    }
}

/// First violated condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    Denominator { expected: u64, found: u64 },
    Support { m: usize },
    Divisibility { m: usize, needed: i64 },
    Precision { m: usize, needed: i64 },
    Omega { image: (u8, u8) },
}

#[derive(Clone, Debug, Serialize)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<Witness>,
    /// low coefficients that vanish only to the working precision
    pub support_to_precision: bool,
    pub omega: Option<(u8, u8)>,
}

/// Membership of sum_m c_m x^m / (1+5x)^den in a space.
pub fn membership(coeffs: &[Adic], den: u64, space: Space) -> Membership {
    let fail = |w: Witness| Membership { member: false, witness: Some(w), support_to_precision: false, omega: None };
    if den != space.n() {
        return fail(Witness::Denominator { expected: space.n(), found: den });
    }
    let mut approx = false;
    for (m, c) in coeffs.iter().enumerate().take(space.support_start()) {
        match c.val() {
            Val::Zero => {}
            Val::AtLeast(_) => approx = true,
            Val::Exact(_) => return fail(Witness::Support { m }),
        }
    }
    let op = space.op();
    for (m, c) in coeffs.iter().enumerate().skip(space.support_start()) {
        let t = theta(op, m as i64);
        match c.divisible(t) {
            Some(true) => {}
            Some(false) => return fail(Witness::Divisibility { m, needed: t }),
            None => return fail(Witness::Precision { m, needed: t }),
        }
    }
    let mut omega = None;
    if let Space::V1(_) = space {
        let mut s = Vec::new();
        for m in OMEGA_START..OMEGA_START + OMEGA_ROWS[0].len() {
            let d = match coeffs.get(m) {
                None => 0,
                Some(c) => match c.digit(theta(op, m as i64)) {
                    Some(d) => d,
                    None => return fail(Witness::Precision { m, needed: theta(op, m as i64) + 1 }),
                },
            };
            s.push(BigInt::from(d));
        }
        let image = omega_apply(&s);
        omega = Some(image);
        if image != (0, 0) {
            return Membership { member: false, witness: Some(Witness::Omega { image }), support_to_precision: approx, omega };
        }
    }
    Membership { member: true, witness: None, support_to_precision: approx, omega }
}

/// Exact integer coefficients as adic values.
pub fn exact_coeffs(c: &[BigInt]) -> Vec<Adic> {
    c.iter().cloned().map(Adic::exact).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_values() {
        assert_eq!(theta(Op::Plain, 7), 0);
        assert_eq!(theta(Op::Plain, 8), 0);
        assert_eq!(theta(Op::Plain, 15), 5);
        assert_eq!(theta(Op::Weighted, 4), 0);
        assert_eq!(theta(Op::Weighted, 5), 1);
        assert_eq!(phi(0), 1);
    }

    #[test]
    fn psi_beta_lambda() {
        assert_eq!((1..=5).map(psi).collect::<Vec<_>>(), vec![6, 31, 156, 781, 3906]);
        assert_eq!((1..=5).map(|a| psi(a) - beta(a) as u64).collect::<Vec<_>>(), vec![6, 30, 156, 780, 3906]);
        assert_eq!((1..=5).map(lambda).collect::<Vec<_>>(), vec![4, 19, 94, 469, 2344]);
        for a in 1..=10 {
            assert_eq!(5 * psi(a), psi(a + 1) - 1);
        }
        assert!(!lambda_closed_form(2).1);
    }

    #[test]
    fn omega_columns() {
        let unit = |m: usize| {
            let mut v = vec![BigInt::zero(); 7];
            v[m - 2] = BigInt::from(1);
            v
        };
        assert_eq!(omega_apply(&unit(2)), (1, 0));
        assert_eq!(omega_apply(&unit(6)), (0, 4));
    }

    #[test]
    fn adic_digits() {
        // 5^3 * 7 known mod 5^6
        let a = Adic::scaled(3, BigInt::from(7), Some(3));
        assert_eq!(a.val(), Val::Exact(3));
        assert_eq!(a.divisible(3), Some(true));
        assert_eq!(a.divisible(4), Some(false));
        assert_eq!(a.digit(3), Some(2));
        let z = Adic::scaled(0, BigInt::from(0), Some(4));
        assert_eq!(z.divisible(4), Some(true));
        assert_eq!(z.divisible(5), None);
    }

    #[test]
    fn simple_memberships() {
        let one = exact_coeffs(&[BigInt::from(1)]);
        assert!(!membership(&one, 0, Space::V1(0)).member);
        let mut c = vec![BigInt::zero(); 6];
        c[5] = pow5(theta(Op::Weighted, 5) as u32);
        assert!(membership(&exact_coeffs(&c), 0, Space::V0(0)).member);
    }
}
