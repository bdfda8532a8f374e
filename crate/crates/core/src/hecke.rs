//! The U_l operator and arithmetic-progression extraction.

use crate::ring::Ring;
use crate::series::Series;

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// sum a(mn + t) q^n. The result is known to order ceil((T - t) / m).
pub fn progression_extract<R: Ring>(f: &Series<R>, m: i64, t: i64) -> Series<R> {
    assert!(m >= 1, "modulus must be positive");
    let ring = f.ring().clone();
    let trunc = ceil_div(f.trunc() - t, m);
    if f.is_zero() {
        return Series::zero(ring, trunc);
    }
    let lo = ceil_div(f.valuation() - t, m);
    let coeffs = (lo..trunc).map(|n| f.coeff(m * n + t)).collect();
    Series::from_coeffs(ring, lo, coeffs, trunc)
}

/// U_l(sum a(n) q^n) = sum a(l n) q^n.
pub fn u_operator<R: Ring>(f: &Series<R>, l: i64) -> Series<R> {
    progression_extract(f, l, 0)
}

/// The terms of f whose exponents are congruent to t mod m, exponents kept.
pub fn residue_part<R: Ring>(f: &Series<R>, m: i64, t: i64) -> Series<R> {
    let ring = f.ring().clone();
    let terms: Vec<(i64, R::Elem)> = f
        .terms()
        .filter(|(e, _)| (e - t).rem_euclid(m) == 0)
        .map(|(e, c)| (e, c.clone()))
        .collect();
    Series::from_terms(ring, &terms, f.trunc())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::series::euler_product;
    use num_bigint::BigInt;

    #[test]
    fn u5_of_partitions_is_divisible_by_five() {
        let p = euler_product(Integers, 1, -1, 500);
        let s = progression_extract(&p, 5, 4);
        assert_eq!(s.trunc(), 100);
        for n in 0..100 {
            assert_eq!(s.coeff(n) % BigInt::from(5), BigInt::from(0));
        }
        assert_eq!(s.coeff(0), BigInt::from(5));
    }

    #[test]
    fn u_of_laurent_series() {
        let f = Series::from_i64s(Integers, -3, &[1, 2, 3, 4, 5, 6, 7], 4);
        let u = u_operator(&f, 2);
        assert_eq!(u.valuation(), -1);
        assert_eq!(u.trunc(), 2);
        assert_eq!(u.coeff(-1), BigInt::from(2));
        assert_eq!(u.coeff(0), BigInt::from(4));
        assert_eq!(u.coeff(1), BigInt::from(6));
    }

    #[test]
    fn residue_parts_sum_to_whole() {
        let f = euler_product(Integers, 1, 3, 60);
        let mut acc = Series::zero(Integers, 60);
        for t in 0..5 {
            acc = &acc + &residue_part(&f, 5, t);
        }
        assert_eq!(acc, f);
    }
}
