//! The operators on x^m/(1+5x)^n computed exactly from the ten base images
//! U(x^l), l < 5, and the two modular equations. Results are memoized.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use super::base_data::{Coeffs, PLAIN_IMAGES, WEIGHTED_IMAGES};
use super::modeq::{a_poly, b_poly};
use super::xpoly::{LocalizedElement, XPoly};
use super::Op;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    XPower(Op, u32),
    ZPower(Op, i64),
    Full(Op, u32, i64),
}

fn memo() -> &'static RwLock<HashMap<Key, LocalizedElement>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, LocalizedElement>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(key: Key, compute: impl FnOnce() -> LocalizedElement) -> LocalizedElement {
    if let Some(v) = memo().read().get(&key) {
        return v.clone();
    }
    let v = compute();
    // identical values from every writer, so last write wins harmlessly
    memo().write().insert(key, v.clone());
    v
}

fn coeffs_to_poly(c: Coeffs) -> XPoly {
    XPoly::from_sparse_str(c)
}

/// One of the ten hard-coded images U(x^l), l = 0..4.
pub fn base_image(op: Op, l: usize) -> LocalizedElement {
    match op {
        Op::Plain => LocalizedElement::new(coeffs_to_poly(PLAIN_IMAGES[l]), 0),
        Op::Weighted => LocalizedElement::new(coeffs_to_poly(WEIGHTED_IMAGES[l]), op.kappa()),
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn pow5(e: u32) -> BigInt {
    BigInt::from(5u32).pow(e)
}

/// A polynomial in z rewritten in x via z = 1 + 5x.
fn in_x(p_of_z: &XPoly) -> XPoly {
    p_of_z.compose_linear(&BigRational::one(), &rat(5.into()))
}

/// U(x^m) for m >= 0.
pub fn u_x_power(op: Op, m: u32) -> LocalizedElement {
    if m < 5 {
        return base_image(op, m as usize);
    }
    if let Some(v) = memo().read().get(&Key::XPower(op, m)) {
        return v.clone();
    }
    // build upward so recursion depth stays flat
    for k in 5..m {
        u_x_power(op, k);
    }
    cached(Key::XPower(op, m), || {
        let mut acc = LocalizedElement::zero();
        for j in 0..5u32 {
            let prev = u_x_power(op, m - 5 + j);
            acc = acc.sub(&prev.mul_poly(&a_poly(j as usize)));
        }
        acc.canonical()
    })
}

/// U((1+5x)^k) for any integer k.
pub fn u_z_power(op: Op, k: i64) -> LocalizedElement {
    if k >= 0 {
        return cached(Key::ZPower(op, k), || {
            let mut acc = LocalizedElement::zero();
            for l in 0..=k as u64 {
                let c = rat(binom(k as u64, l) * pow5(l as u32));
                acc = acc.add(&u_x_power(op, l as u32).scale(&c));
            }
            acc.canonical()
        });
    }
    if let Some(v) = memo().read().get(&Key::ZPower(op, k)) {
        return v.clone();
    }
    for j in (k + 1..0).rev() {
        u_z_power(op, j);
    }
    cached(Key::ZPower(op, k), || {
        // 1/z = w^-5 (b_1 + b_2 z + b_3 z^2 + b_4 z^3 + z^4), w = z(5 tau)
        let mut acc = LocalizedElement::zero();
        for j in 0..5usize {
            let beta = in_x(&b_poly(j + 1));
            acc = acc.add(&u_z_power(op, k + 1 + j as i64).mul_poly(&beta));
        }
        acc.mul_z_power(-5).canonical()
    })
}

/// U(x^m / (1+5x)^n); negative n means a polynomial factor (1+5x)^(-n).
pub fn u_symbolic(op: Op, m: u32, n: i64) -> LocalizedElement {
    cached(Key::Full(op, m, n), || {
        let mut acc = LocalizedElement::zero();
        if n <= 0 {
            let p = (-n) as u64;
            for i in 0..=p {
                let c = rat(binom(p, i) * pow5(i as u32));
                acc = acc.add(&u_x_power(op, m + i as u32).scale(&c));
            }
        } else {
            // x^m = 5^-m (z - 1)^m
            for r in 0..=m as u64 {
                let sign = if (m as u64 - r) % 2 == 0 { 1 } else { -1 };
                let c = rat(binom(m as u64, r) * sign);
                acc = acc.add(&u_z_power(op, r as i64 - n).scale(&c));
            }
            acc = acc.scale(&BigRational::new(BigInt::one(), pow5(m)));
        }
        acc.canonical()
    })
}

/// Left side minus right side of the five-by-five recurrence
/// U(x^m/z^n) = -z^-5 sum_j sum_k a_j(x) b_k(z) U(x^(m+j-5)/z^(n-k)), m >= 5.
pub fn recurrence_defect(op: Op, m: u32, n: i64) -> LocalizedElement {
    assert!(m >= 5, "the recurrence lowers m by up to 5");
    let lhs = u_symbolic(op, m, n);
    let mut rhs = LocalizedElement::zero();
    for j in 0..5u32 {
        let aj = a_poly(j as usize);
        for k in 1..=5i64 {
            let bk = in_x(&b_poly(k as usize));
            let term = u_symbolic(op, m + j - 5, n - k).mul_poly(&(&aj * &bk));
            rhs = rhs.add(&term);
        }
    }
    let rhs = rhs.neg().mul_z_power(-5);
    lhs.sub(&rhs).canonical()
}

/// Whether an element is exactly zero.
pub fn is_zero(e: &LocalizedElement) -> bool {
    e.num.coeffs().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_image_of_one_and_x() {
        assert_eq!(u_symbolic(Op::Plain, 0, 0), LocalizedElement::poly(XPoly::one()));
        let e = u_symbolic(Op::Plain, 1, 0);
        assert_eq!(e.num, XPoly::from_i64s(&[0, 41, 860, 6800, 24000, 32000]));
    }

    #[test]
    fn weighted_image_of_one() {
        let e = u_symbolic(Op::Weighted, 0, 0);
        assert_eq!(e.den, 6);
        assert_eq!(e.num.coeff(2), rat(5705.into()));
        assert_eq!(e.num.degree(), Some(33));
    }

    #[test]
    fn five_by_five_recurrence() {
        for op in Op::BOTH {
            for (m, n) in [(5, 0), (6, 2), (7, 5), (9, 3)] {
                assert!(is_zero(&recurrence_defect(op, m, n)), "{op:?} {m} {n}");
            }
        }
    }

    #[test]
    fn z_power_round_trip() {
        // U(z^-1 * z) = U(1)
        for op in Op::BOTH {
            let a = u_symbolic(op, 1, 1).scale(&rat(5.into())).add(&u_symbolic(op, 0, 1));
            assert_eq!(a.canonical(), u_symbolic(op, 0, 0).canonical());
        }
    }
}
