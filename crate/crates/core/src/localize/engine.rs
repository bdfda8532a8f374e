//! Batch application of the operators to a whole element at once.
//!
//! An element is held as 5^-s * sum_j E_j z^j with integer E_j. Powers of z
//! outside 0..4 are folded into that window using the z-equation, with
//! coefficients that are Laurent polynomials in w = z(5 tau). The operator
//! then turns w back into z and each window power z^t into its known image.
//! Coefficients are exact, or reduced modulo 5^K when a modulus is set.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modeq::B_COEFFS;
use super::symbolic::u_z_power;
use super::valuation::Adic;
use super::xpoly::{LocalizedElement, XPoly};
use super::Op;
use crate::ring::{pow5, val5};

/// 5^-scale * sum_i coeffs[i] z^(low + i), coefficients known mod 5^modulus when set.
///
/// `low_exact` says the true integer coefficients vanish below `low` and not at
/// it. Always the case for exact forms; a modular form keeps it only while no
/// residue at the bottom of its structural support has been trimmed as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZForm {
    pub low: i64,
    pub coeffs: Vec<BigInt>,
    pub scale: i64,
    pub modulus: Option<u32>,
    pub low_exact: bool,
}

/// Laurent polynomial in w.
#[derive(Clone, Debug, Default)]
struct WPoly {
    low: i64,
    c: Vec<BigInt>,
}

impl WPoly {
    fn high(&self) -> i64 {
        self.low + self.c.len() as i64
    }

    /// Grow storage to cover [lo, hi).
    fn cover(&mut self, lo: i64, hi: i64) {
        if self.c.is_empty() {
            self.low = lo;
            self.c = vec![BigInt::zero(); (hi - lo) as usize];
            return;
        }
        if lo < self.low {
            let extra = (self.low - lo) as usize;
            let mut v = vec![BigInt::zero(); extra];
            v.append(&mut self.c);
            self.c = v;
            self.low = lo;
        }
        if hi > self.high() {
            let n = (hi - self.low) as usize;
            self.c.resize(n, BigInt::zero());
        }
    }

    fn add_constant(&mut self, v: &BigInt) {
        self.cover(0, 1);
        self.c[(-self.low) as usize] += v;
    }

    fn reduce(&mut self, m: &BigInt) {
        for v in &mut self.c {
            if v.is_negative() || &*v >= m {
                *v = v.mod_floor(m);
            }
        }
    }

    /// self += sign * w^shift * poly(w) * src
    fn add_product(&mut self, src: &WPoly, poly: &[i64; 6], shift: i64, sign: i64, tmp: &mut BigInt) {
        if src.c.is_empty() {
            return;
        }
        let deg = poly.iter().rposition(|&v| v != 0).map_or(0, |d| d as i64 + 1);
        self.cover(src.low + shift, src.high() + shift + deg);
        let base = (src.low + shift - self.low) as usize;
        for (d, &b) in poly.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let b = b * sign;
            for (i, v) in src.c.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let t = &mut self.c[base + i + d];
                if b == 1 {
                    *t += v;
                } else if b == -1 {
                    *t -= v;
                } else {
                    tmp.clone_from(v);
                    *tmp *= b;
                    *t += &*tmp;
                }
            }
        }
    }
}

/// n choose k for any integer n; each partial product is itself a binomial, so the divisions are exact.
fn binomial(n: i64, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i as i64) / BigInt::from(i + 1))
}

/// Expansion of sum_i coeffs[i] z^(low + i) at z = 1 + e, modulo e^order.
fn jet_at_one<T: Into<BigInt> + Clone>(low: i64, coeffs: &[T], order: usize) -> Vec<BigInt> {
    (0..order)
        .map(|i| coeffs.iter().enumerate().map(|(j, v)| v.clone().into() * binomial(low + j as i64, i)).sum())
        .collect()
}

/// acc += sign * a * b modulo e^order.
fn jet_add_product(acc: &mut [BigInt], a: &[BigInt], b: &[BigInt], sign: i64) {
    let order = acc.len();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order - i) {
            acc[i + j] += x * y * sign;
        }
    }
}

/// In place: coefficients of sum a_j (y + c)^j, for c = 1 or -1.
fn taylor_shift(a: &mut [BigInt], c: i64, modulus: Option<&BigInt>) {
    let n = a.len();
    if n < 2 {
        return;
    }
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let (lo, hi) = a.split_at_mut(j + 1);
            if c == 1 {
                lo[j] += &hi[0];
            } else {
                lo[j] -= &hi[0];
            }
        }
        if let Some(m) = modulus {
            if i % 48 == 47 {
                for v in a.iter_mut() {
                    *v = v.mod_floor(m);
                }
            }
        }
    }
    if let Some(m) = modulus {
        for v in a.iter_mut() {
            *v = v.mod_floor(m);
        }
    }
}

impl ZForm {
    pub fn one() -> Self {
        ZForm { low: 0, coeffs: vec![BigInt::one()], scale: 0, modulus: None, low_exact: true }
    }

    /// Exact z-form of num(x)/(1+5x)^den; denominators must be powers of 5.
    pub fn from_localized(e: &LocalizedElement) -> Self {
        if e.is_zero() {
            return ZForm { low: 0, coeffs: Vec::new(), scale: 0, modulus: None, low_exact: true };
        }
        let d = e.num.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let vd = val5(&d).unwrap_or(0);
        assert!(d == pow5(vd), "denominators must be powers of 5");
        let deg = e.num.degree().unwrap_or(0);
        // 5^deg * num((z - 1)/5)
        let mut a: Vec<BigInt> = e
            .num
            .coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| (c * BigRational::from_integer(&d * pow5((deg - m) as u32))).to_integer())
            .collect();
        taylor_shift(&mut a, -1, None);
        let mut z = ZForm { low: -(e.den as i64), coeffs: a, scale: deg as i64 + vd as i64, modulus: None, low_exact: true };
        z.normalize();
        z
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    fn modulus_value(&self) -> Option<BigInt> {
        self.modulus.map(pow5)
    }

    /// Reduce coefficients modulo 5^k (k no larger than the current precision).
    pub fn with_modulus(&self, k: u32) -> Self {
        let k = self.modulus.map_or(k, |m| m.min(k));
        let m = pow5(k);
        let mut out = self.clone();
        for v in &mut out.coeffs {
            *v = v.mod_floor(&m);
        }
        out.modulus = Some(k);
        out.normalize();
        out
    }

    /// Strip zero ends and pull out the common power of 5.
    pub fn normalize(&mut self) {
        let start = self.coeffs.iter().position(|v| !v.is_zero());
        let Some(start) = start else {
            self.coeffs.clear();
            self.low = 0;
            self.low_exact &= self.modulus.is_none();
            return;
        };
        if start > 0 && self.modulus.is_some() {
            self.low_exact = false;
        }
        let end = self.coeffs.iter().rposition(|v| !v.is_zero()).unwrap() + 1;
        self.coeffs.truncate(end);
        self.coeffs.drain(..start);
        self.low += start as i64;
        let v = self.coeffs.iter().filter_map(val5).min().unwrap_or(0);
        if v > 0 {
            let p = pow5(v);
            for c in &mut self.coeffs {
                *c /= &p;
            }
            self.scale -= v as i64;
            if let Some(k) = self.modulus.as_mut() {
                *k -= v;
            }
        }
    }

    /// Denominator exponent n when written as N(z)/z^n with N(0) != 0.
    pub fn den(&self) -> u64 {
        (-self.low).max(0) as u64
    }

    /// Exact conversion back to the x-basis.
    pub fn to_localized(&self) -> LocalizedElement {
        assert!(self.modulus.is_none(), "exact form required");
        let den = self.den();
        let q = self.numerator_shift(den);
        let coeffs = q
            .into_iter()
            .enumerate()
            .map(|(m, v)| {
                let e = m as i64 - self.scale;
                if e >= 0 {
                    BigRational::from_integer(v * pow5(e as u32))
                } else {
                    BigRational::new(v, pow5((-e) as u32))
                }
            })
            .collect();
        LocalizedElement::new(XPoly::from_coeffs(coeffs), den as u32)
    }

    /// x-basis coefficients c_m of the numerator as 5-adic values.
    pub fn x_coefficients(&self) -> (u64, Vec<Adic>) {
        self.x_coefficients_over(self.den())
    }

    /// As `x_coefficients`, written over (1+5x)^den for any den at least the canonical one.
    pub fn x_coefficients_over(&self, den: u64) -> (u64, Vec<Adic>) {
        let den = den.max(self.den());
        let q = self.numerator_shift(den);
        let coeffs = q
            .into_iter()
            .enumerate()
            .map(|(m, v)| Adic::scaled(m as i64 - self.scale, v, self.modulus))
            .collect();
        (den, coeffs)
    }

    /// x-basis coefficients of an exact form from a Taylor shift modulo 5^k:
    /// c_m is then known modulo 5^(m - scale + k). The first `exact_low`
    /// coefficients are computed exactly.
    pub fn x_coefficients_mod(&self, k: u32, exact_low: usize) -> (u64, Vec<Adic>) {
        assert!(self.modulus.is_none(), "exact form required");
        let den = self.den();
        let m = pow5(k);
        let pad = (self.low + den as i64) as usize;
        let mut a = vec![BigInt::zero(); pad];
        a.extend(self.coeffs.iter().map(|v| v.mod_floor(&m)));
        taylor_shift(&mut a, 1, Some(&m));
        let mut out: Vec<Adic> = a
            .into_iter()
            .enumerate()
            .map(|(i, v)| Adic::scaled(i as i64 - self.scale, v, Some(k)))
            .collect();
        // Q_i = sum_j a_j binom(j, i) over the unreduced coefficients
        for (i, slot) in out.iter_mut().enumerate().take(exact_low) {
            let q: BigInt = self.coeffs.iter().enumerate().map(|(off, v)| v * binomial((pad + off) as i64, i)).sum();
            *slot = Adic::scaled(i as i64 - self.scale, q, None);
        }
        (den, out)
    }

    /// Q_m with N(1 + 5x) = sum Q_m 5^m x^m, N the numerator over z^den.
    fn numerator_shift(&self, den: u64) -> Vec<BigInt> {
        let pad = (self.low + den as i64) as usize;
        let mut a = vec![BigInt::zero(); pad];
        a.extend(self.coeffs.iter().cloned());
        taylor_shift(&mut a, 1, self.modulus_value().as_ref());
        a
    }

    /// Apply the operator whose images are given. `modulus` caps the working precision (in powers of 5).
    pub fn apply(&self, images: &Images, modulus: Option<u32>) -> ZForm {
        let scale = self.scale + images.scale;
        let k = match (self.modulus, modulus) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let m = k.map(pow5);
        let window = self.fold_into_window(m.as_ref());
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for (t, c) in window.iter().enumerate() {
            let p = &images.forms[t];
            if c.c.is_empty() || p.coeffs.is_empty() {
                continue;
            }
            lo = lo.min(c.low + p.low);
            hi = hi.max(c.high() + p.high());
        }
        if lo > hi {
            return ZForm { low: 0, coeffs: Vec::new(), scale, modulus: k, low_exact: k.is_none() };
        }
        let mut acc = vec![BigInt::zero(); (hi - lo) as usize];
        for (t, c) in window.iter().enumerate() {
            let p = &images.forms[t];
            for (i, a) in c.c.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let base = (c.low + i as i64 + p.low - lo) as usize;
                for (j, b) in p.coeffs.iter().enumerate() {
                    acc[base + j] += a * b;
                }
            }
        }
        if let Some(m) = &m {
            for v in &mut acc {
                *v = v.mod_floor(m);
            }
        }
        // the structural support of an exact input bounds the true one
        let mut z = ZForm { low: lo, coeffs: acc, scale, modulus: k, low_exact: self.modulus.is_none() };
        z.normalize();
        z
    }

    /// Rewrite sum E_j z^j as sum_{t<5} C_t(w) z^t.
    fn fold_into_window(&self, m: Option<&BigInt>) -> [WPoly; 5] {
        let mut window: [WPoly; 5] = Default::default();
        let mut tmp = BigInt::zero();
        let coeff = |j: i64| -> Option<&BigInt> {
            let i = j - self.low;
            (i >= 0 && (i as usize) < self.coeffs.len()).then(|| &self.coeffs[i as usize])
        };

        // positive powers, from the top: z^5 = -sum_t b_t(w) z^t
        let mut pending: BTreeMap<i64, WPoly> = BTreeMap::new();
        let top = self.high() - 1;
        let mut k = top;
        while k >= 5 {
            let mut cur = pending.remove(&k).unwrap_or_default();
            if let Some(v) = coeff(k) {
                if !v.is_zero() {
                    cur.add_constant(v);
                }
            }
            if let Some(m) = m {
                cur.reduce(m);
            }
            for (t, row) in B_COEFFS.iter().take(5).enumerate() {
                let target = k - 5 + t as i64;
                let slot = if target < 5 { &mut window[target as usize] } else { pending.entry(target).or_default() };
                slot.add_product(&cur, row, 0, -1, &mut tmp);
            }
            k -= 1;
        }

        // negative powers, from the bottom: 1/z = w^-5 (b_1 + b_2 z + b_3 z^2 + b_4 z^3 + z^4)
        let mut pending: BTreeMap<i64, WPoly> = BTreeMap::new();
        let mut k = self.low;
        while k <= -1 {
            let mut cur = pending.remove(&k).unwrap_or_default();
            if let Some(v) = coeff(k) {
                if !v.is_zero() {
                    cur.add_constant(v);
                }
            }
            if let Some(m) = m {
                cur.reduce(m);
            }
            for (j, row) in B_COEFFS.iter().skip(1).enumerate() {
                let target = k + 1 + j as i64;
                let slot = if target >= 0 { &mut window[target as usize] } else { pending.entry(target).or_default() };
                slot.add_product(&cur, row, -5, 1, &mut tmp);
            }
            k += 1;
        }

        for (t, slot) in window.iter_mut().enumerate() {
            if let Some(v) = coeff(t as i64) {
                if !v.is_zero() {
                    slot.add_constant(v);
                }
            }
            if let Some(m) = m {
                slot.reduce(m);
            }
        }
        window
    }
}

impl ZForm {
    /// Exact Q_0 .. Q_(count-1) of `image`, the (possibly modular) result of
    /// applying `images` to this exact form. The apply is redone over
    /// Z[e]/e^count at z = w = 1 + e, which is cheap since nothing but a
    /// jet is carried through the fold.
    pub fn exact_low_of_image(&self, images: &Images, image: &ZForm, count: usize) -> Vec<BigInt> {
        assert!(self.modulus.is_none() && image.low_exact, "exact input and exact lower end required");
        let window = self.fold_jet(count);
        let mut out = vec![BigInt::zero(); count];
        for (c, p) in window.iter().zip(&images.forms) {
            jet_add_product(&mut out, c, &jet_at_one(p.low, &p.coeffs, count), 1);
        }
        // match the power of 5 pulled out when the image was normalized
        let drop = self.scale + images.scale - image.scale;
        let p = pow5(drop as u32);
        for v in &mut out {
            let (q, r) = v.div_rem(&p);
            assert!(r.is_zero(), "image scale inconsistent with its exact expansion");
            *v = q;
        }
        // N(z) = z^den * image(z)
        let mut q = vec![BigInt::zero(); count];
        jet_add_product(&mut q, &out, &jet_at_one(image.den() as i64, &[1i64], count), 1);
        q
    }

    /// `fold_into_window` with w = 1 + e, modulo e^order.
    fn fold_jet(&self, order: usize) -> [Vec<BigInt>; 5] {
        let zero = || vec![BigInt::zero(); order];
        let mut window: [Vec<BigInt>; 5] = std::array::from_fn(|_| zero());
        let up: Vec<Vec<BigInt>> = B_COEFFS.iter().take(5).map(|row| jet_at_one(0, row, order)).collect();
        let down: Vec<Vec<BigInt>> = B_COEFFS.iter().skip(1).map(|row| jet_at_one(-5, row, order)).collect();
        let coeff = |j: i64| -> &BigInt { &self.coeffs[(j - self.low) as usize] };

        let mut pending: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
        for k in (5.max(self.low)..self.high()).rev() {
            let mut cur = pending.remove(&k).unwrap_or_else(zero);
            cur[0] += coeff(k);
            for (t, b) in up.iter().enumerate() {
                let target = k - 5 + t as i64;
                let slot = if target < 5 { &mut window[target as usize] } else { pending.entry(target).or_insert_with(zero) };
                jet_add_product(slot, &cur, b, -1);
            }
        }
        let mut pending: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
        for k in self.low..0.min(self.high()) {
            let mut cur = pending.remove(&k).unwrap_or_else(zero);
            cur[0] += coeff(k);
            for (j, b) in down.iter().enumerate() {
                let target = k + 1 + j as i64;
                let slot = if target >= 0 { &mut window[target as usize] } else { pending.entry(target).or_insert_with(zero) };
                jet_add_product(slot, &cur, b, 1);
            }
        }
        for (t, slot) in window.iter_mut().enumerate() {
            let t = t as i64;
            if t >= self.low && t < self.high() {
                slot[0] += coeff(t);
            }
        }
        window
    }
}

/// Images of z^t, t = 0..4, under one operator, over a common power of 5.
pub struct Images {
    pub op: Op,
    pub forms: Vec<ZForm>,
    pub scale: i64,
}

impl Images {
    pub fn new(op: Op) -> Self {
        let raw: Vec<ZForm> = (0..5).map(|t| ZForm::from_localized(&u_z_power(op, t))).collect();
        let scale = raw.iter().map(|f| f.scale).max().unwrap_or(0);
        let forms = raw
            .into_iter()
            .map(|mut f| {
                let lift = pow5((scale - f.scale) as u32);
                for c in &mut f.coeffs {
                    *c *= &lift;
                }
                f.scale = scale;
                f
            })
            .collect();
        Images { op, forms, scale }
    }
}

/// A pair of image tables, built once.
pub struct Engine {
    pub weighted: Images,
    pub plain: Images,
}

impl Engine {
    pub fn new() -> Self {
        Engine { weighted: Images::new(Op::Weighted), plain: Images::new(Op::Plain) }
    }

    pub fn images(&self, op: Op) -> &Images {
        match op {
            Op::Weighted => &self.weighted,
            Op::Plain => &self.plain,
        }
    }

    pub fn apply(&self, op: Op, f: &ZForm, modulus: Option<u32>) -> ZForm {
        f.apply(self.images(op), modulus)
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localize::symbolic::u_symbolic;

    #[test]
    fn modular_shift_agrees_with_exact() {
        let e = LocalizedElement::new(XPoly::from_i64s(&[0, 0, 7, -3, 25, 11, 0, 4]), 9);
        let f = Engine::new().apply(Op::Plain, &ZForm::from_localized(&e), None);
        let (d1, exact) = f.x_coefficients();
        let (d2, modular) = f.x_coefficients_mod(f.scale as u32 + 12, 3);
        assert_eq!(d1, d2);
        assert_eq!(exact.len(), modular.len());
        let k = pow5(f.scale as u32 + 12);
        for (m, (a, b)) in exact.iter().zip(&modular).enumerate() {
            assert_eq!(a.shift, b.shift);
            if m < 3 {
                assert_eq!((b.prec, &b.unit), (None, &a.unit));
            } else {
                assert!((&a.unit - &b.unit).is_multiple_of(&k), "m = {m}");
            }
        }
    }

    #[test]
    fn round_trip_through_z() {
        let e = LocalizedElement::new(XPoly::from_i64s(&[0, 3, -7, 25]), 4);
        let z = ZForm::from_localized(&e);
        assert_eq!(z.to_localized().canonical(), e.canonical());
    }

    #[test]
    fn weighted_image_of_one_in_z() {
        // z^6 L_1 = 5^-12 (1 + 22 z + 198 z^2 + ...)
        let engine = Engine::new();
        let l1 = engine.apply(Op::Weighted, &ZForm::one(), None);
        assert_eq!(l1.low, -6);
        assert_eq!(l1.scale, 12);
        assert_eq!(&l1.coeffs[..3], &[BigInt::from(1), BigInt::from(22), BigInt::from(198)]);
    }

    #[test]
    fn batch_matches_termwise() {
        let engine = Engine::new();
        for op in Op::BOTH {
            for (m, n) in [(0u32, 0i64), (3, 2), (7, 9), (12, 1)] {
                let e = LocalizedElement::monomial(m as usize, n as u32);
                let batch = engine.apply(op, &ZForm::from_localized(&e), None).to_localized();
                assert_eq!(batch.canonical(), u_symbolic(op, m, n).canonical(), "{op:?} {m} {n}");
            }
        }
    }

    #[test]
    fn modular_agrees_with_exact() {
        let engine = Engine::new();
        let l1 = engine.apply(Op::Weighted, &ZForm::one(), None);
        let exact = engine.apply(Op::Plain, &l1, None);
        let modular = engine.apply(Op::Plain, &l1.with_modulus(60), Some(60));
        let k = modular.modulus.unwrap();
        let reduced = exact.with_modulus(k + (exact.scale - modular.scale) as u32);
        assert_eq!(reduced.scale, modular.scale);
        assert_eq!(reduced.low, modular.low);
        let m = pow5(k);
        for (a, b) in reduced.coeffs.iter().zip(&modular.coeffs) {
            assert_eq!(a.mod_floor(&m), b.mod_floor(&m));
        }
    }

    #[test]
    fn lower_end_exactness() {
        let engine = Engine::new();
        let l1 = engine.apply(Op::Weighted, &ZForm::one(), None);
        let exact = engine.apply(Op::Plain, &l1, None);
        let modular = engine.apply(Op::Plain, &l1, Some(30));
        assert!(modular.low_exact);
        assert_eq!(modular.low, exact.low);
        // a modular input says nothing about the true support
        assert!(!engine.apply(Op::Plain, &l1.with_modulus(30), Some(30)).low_exact);
        // trimming a bottom residue that vanishes mod 5^k drops the claim
        let mut f = ZForm { low: -2, coeffs: vec![BigInt::from(25), BigInt::one()], scale: 0, modulus: Some(2), low_exact: true };
        f.normalize();
        assert_eq!(f.low, -2);
        let mut g = ZForm { low: -2, coeffs: vec![BigInt::zero(), BigInt::from(3)], scale: 0, modulus: Some(2), low_exact: true };
        g.normalize();
        assert_eq!(g.low, -1);
        assert!(!g.low_exact);
    }

    #[test]
    fn exact_low_coefficients_of_a_modular_image() {
        let engine = Engine::new();
        let l1 = engine.apply(Op::Weighted, &ZForm::one(), None);
        let l2 = engine.apply(Op::Plain, &l1, None);
        for (op, input, exact) in [(Op::Plain, &l1, &l2), (Op::Weighted, &l2, &engine.apply(Op::Weighted, &l2, None))] {
            let modular = engine.apply(op, input, Some(input.scale as u32 + 20));
            let q = input.exact_low_of_image(engine.images(op), &modular, 3);
            let (den, c) = modular.x_coefficients();
            let (den_e, c_e) = exact.x_coefficients();
            assert_eq!(den, den_e);
            for m in 0..3 {
                let a = Adic::scaled(m as i64 - modular.scale, q[m].clone(), None);
                assert!(c_e[m].exact_quotient(0).is_some());
                assert_eq!(a.exact_quotient(0), c_e[m].exact_quotient(0), "m = {m}");
                assert_eq!(a.residue(5), c[m].residue(5));
            }
            assert!(q.iter().any(|v| !v.is_zero()));
        }
    }
}
