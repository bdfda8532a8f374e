//! The operators evaluated on q-expansions, and the inverse map from a
//! q-expansion back to p(x)/(1+5x)^n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::hecke::u_operator;
use crate::ring::{Integers, Rationals, Ring};
use crate::series::Series;

use super::modeq::{weight_series, x_series};
use super::xpoly::{LocalizedElement, XPoly};
use super::Op;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitError {
    #[error("series known to order {trunc}, need more than {max_deg}")]
    InsufficientTruncation { trunc: i64, max_deg: usize },
    #[error("residual nonzero at exponent {exponent}")]
    Residual { exponent: i64 },
    #[error("series has a pole of order {0}")]
    Pole(i64),
}

/// x, 1/(1+5x) and the weight function to a common order.
pub struct Basis<R: Ring> {
    pub x: Series<R>,
    pub z: Series<R>,
    pub z_inv: Series<R>,
    pub weight: Series<R>,
}

impl<R: Ring> Basis<R> {
    pub fn new(ring: R, trunc: i64) -> Self {
        let x = x_series(ring.clone(), trunc);
        let z = &Series::one(ring.clone(), trunc) + &x.scale_small(5);
        let z_inv = z.invert().expect("1 + 5x is a unit");
        let weight = weight_series(ring, trunc);
        Basis { x, z, z_inv, weight }
    }

    pub fn trunc(&self) -> i64 {
        self.x.trunc()
    }

    /// x^m / (1+5x)^n
    pub fn monomial(&self, m: u32, n: u32) -> Series<R> {
        &self.x.pow(m as i64).expect("power") * &self.z_inv.pow(n as i64).expect("power")
    }

    /// num(x)/(1+5x)^n with num given by ring elements.
    pub fn eval(&self, num: &[R::Elem], n: u32) -> Series<R> {
        let ring = self.x.ring().clone();
        let t = self.trunc();
        let mut acc = Series::zero(ring.clone(), t);
        for c in num.iter().rev() {
            acc = &(&acc * &self.x) + &Series::monomial(ring.clone(), 0, c.clone(), t);
        }
        &acc * &self.z_inv.pow(n as i64).expect("power")
    }

    /// U_5(A^(1-i) f)
    pub fn apply(&self, op: Op, f: &Series<R>) -> Series<R> {
        match op {
            Op::Weighted => u_operator(&(&self.weight * f), 5),
            Op::Plain => u_operator(f, 5),
        }
    }
}

/// Common denominator and integer numerator of a rational polynomial.
pub fn integral_numerator(p: &XPoly) -> (Vec<BigInt>, BigInt) {
    let d = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = p.coeffs().iter().map(|c| (c * BigRational::from_integer(d.clone())).to_integer()).collect();
    (num, d)
}

/// q-expansion of an element to order T.
pub fn eval_localized(e: &LocalizedElement, trunc: i64) -> Series<Rationals> {
    let basis = Basis::new(Integers, trunc);
    eval_with(&basis, e)
}

pub fn eval_with(basis: &Basis<Integers>, e: &LocalizedElement) -> Series<Rationals> {
    let (num, d) = integral_numerator(&e.num);
    let s = basis.eval(&num, e.den).to_rationals();
    s.scale(&BigRational::new(BigInt::one(), d))
}

/// U^(i)(e) as a q-series known to order `trunc_out`.
pub fn u_numeric(op: Op, e: &LocalizedElement, trunc_out: i64) -> Series<Rationals> {
    let basis = Basis::new(Integers, 5 * trunc_out);
    let (num, d) = integral_numerator(&e.num);
    let f = basis.eval(&num, e.den);
    basis.apply(op, &f).to_rationals().scale(&BigRational::new(BigInt::one(), d))
}

/// Peel f (1+5x)^n into a polynomial in x of degree <= max_deg; the rest must vanish.
pub fn fit_numerator<R: Ring>(f: &Series<R>, basis: &Basis<R>, n: u32, max_deg: usize) -> Result<Vec<R::Elem>, FitError> {
    let ring = f.ring().clone();
    let t = f.trunc().min(basis.trunc());
    if t <= max_deg as i64 {
        return Err(FitError::InsufficientTruncation { trunc: t, max_deg });
    }
    let mut g = (&f.truncate(t) * &basis.z.pow(n as i64).expect("power")).truncate(t);
    if !g.is_zero() && g.valuation() < 0 {
        return Err(FitError::Pole(-g.valuation()));
    }
    let mut out = vec![ring.zero(); max_deg + 1];
    let mut xm = Series::one(ring.clone(), t);
    for (m, slot) in out.iter_mut().enumerate() {
        let c = g.coeff(m as i64);
        if !ring.is_zero(&c) {
            g = &g - &xm.scale(&c);
            *slot = c;
        }
        xm = &xm * &basis.x;
    }
    if !g.is_zero() {
        return Err(FitError::Residual { exponent: g.valuation() });
    }
    while out.len() > 1 && ring.is_zero(out.last().unwrap()) {
        out.pop();
    }
    Ok(out)
}

/// Exact rational fit, the inverse of `eval_localized`.
pub fn fit_to_localized(f: &Series<Rationals>, n: u32, max_deg: usize) -> Result<LocalizedElement, FitError> {
    let basis = Basis::new(Rationals, f.trunc());
    let c = fit_numerator(f, &basis, n, max_deg)?;
    Ok(LocalizedElement::new(XPoly::from_coeffs(c), n))
}

/// Integer fit when f is known to have an integral numerator.
pub fn fit_integral(f: &Series<Integers>, basis: &Basis<Integers>, n: u32, max_deg: usize) -> Result<Vec<BigInt>, FitError> {
    fit_numerator(f, basis, n, max_deg)
}

pub fn is_zero_rational(s: &Series<Rationals>) -> bool {
    s.terms().all(|(_, c)| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_constant_and_fraction() {
        let one = eval_localized(&LocalizedElement::poly(XPoly::one()), 5);
        assert_eq!(one, Series::one(Rationals, 5));
        // x/(1+5x) = q - 2q^2 + ...
        let e = eval_localized(&LocalizedElement::monomial(1, 1), 3);
        assert_eq!(e.coeff(1), BigRational::from_integer(1.into()));
        assert_eq!(e.coeff(2), BigRational::from_integer((-2).into()));
    }

    #[test]
    fn fit_round_trip() {
        let x = x_series(Rationals, 30);
        let e = fit_to_localized(&x, 0, 10).unwrap();
        assert_eq!(e.num, XPoly::x());
        let zero = fit_to_localized(&Series::zero(Rationals, 30), 3, 10).unwrap();
        assert!(zero.is_zero());
        let e = LocalizedElement::new(XPoly::from_i64s(&[0, 2, -3, 7]), 4);
        let back = fit_to_localized(&eval_localized(&e, 40), 4, 20).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn fit_rejects_outside_span() {
        let x = x_series(Rationals, 12);
        assert!(matches!(fit_to_localized(&x, 0, 20), Err(FitError::InsufficientTruncation { .. })));
        let w = weight_series(Rationals, 30);
        assert!(matches!(fit_to_localized(&w, 0, 10), Err(FitError::Residual { .. })));
    }

    #[test]
    fn weighted_image_of_one_starts_at_q2() {
        let l1 = u_numeric(Op::Weighted, &LocalizedElement::poly(XPoly::one()), 10);
        assert_eq!(l1.valuation(), 2);
        assert!(u_numeric(Op::Plain, &LocalizedElement::zero(), 10).is_zero());
    }
}
