//! Stability of the spaces under the operators, tested on random elements.
//! V^(1) samples are drawn from the kernel lattice of Omega.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::engine::{Engine, ZForm};
use super::valuation::{membership, omega_apply, theta, Membership, Space, OMEGA_START};
use super::xpoly::{LocalizedElement, XPoly};
use super::Op;
use crate::report::{Finding, Report};
use crate::ring::pow5;

/// Range of the random scaled coefficients s(m).
const S_BOUND: i64 = 60;

pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_degree: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { samples: 20, seed: 0x5eed_0005, max_degree: 12 }
    }
}

fn element(op: Op, s: &[i64], start: usize, n: u32) -> LocalizedElement {
    let mut c = vec![BigRational::from_integer(0.into()); start + s.len()];
    for (k, &v) in s.iter().enumerate() {
        let m = start + k;
        c[m] = BigRational::from_integer(BigInt::from(v) * pow5(theta(op, m as i64) as u32));
    }
    LocalizedElement::new(XPoly::from_coeffs(c), n)
}

/// A random element of V^(0)_n.
pub fn sample_v0(rng: &mut impl Rng, n: u32, degree: usize) -> LocalizedElement {
    let s: Vec<i64> = (1..=degree).map(|_| rng.gen_range(-S_BOUND..=S_BOUND)).collect();
    element(Op::Weighted, &s, 1, n)
}

/// A random element of V^(1)_n: the digits s(2..8) are adjusted into ker Omega.
pub fn sample_v1(rng: &mut impl Rng, n: u32, degree: usize) -> LocalizedElement {
    let degree = degree.max(OMEGA_START + 6);
    let mut s: Vec<i64> = (OMEGA_START..=degree).map(|_| rng.gen_range(-S_BOUND..=S_BOUND)).collect();
    // s(4) is the only free entry of the second row outside s(6..8),
    // then s(5) is the only entry of the first row left
    let fix = |s: &mut Vec<i64>, k: usize, row: usize| {
        let mut digits: Vec<BigInt> = s.iter().take(7).map(|&v| BigInt::from(v)).collect();
        digits[k] = 0.into();
        let img = omega_apply(&digits);
        let r = if row == 0 { img.0 } else { img.1 } as i64;
        let want = (5 - r) % 5;
        s[k] = want + 5 * rng_offset(s[k]);
    };
    fix(&mut s, 4 - OMEGA_START, 1);
    fix(&mut s, 5 - OMEGA_START, 0);
    let digits: Vec<BigInt> = s.iter().take(7).map(|&v| BigInt::from(v)).collect();
    debug_assert_eq!(omega_apply(&digits), (0, 0));
    element(Op::Plain, &s, OMEGA_START, n)
}

// Keeps the magnitude of a resampled entry comparable to the rest.
fn rng_offset(v: i64) -> i64 {
    v.div_euclid(5)
}

fn check(form: &ZForm, space: Space) -> Membership {
    let (den, coeffs) = form.x_coefficients_over(space.n());
    membership(&coeffs, den, space)
}

fn fifth(mut f: ZForm) -> ZForm {
    f.scale += 1;
    f
}

fn finding(id: String, input: Space, image: Space, m: &Membership, degree: usize, anchor: &str) -> Finding {
    Finding::new(
        "properties",
        id,
        m.member,
        json!({"input": input.to_string(), "image": image.to_string(), "degree": degree,
               "witness": m.witness, "omega": m.omega}),
        anchor,
    )
}

const ANCHOR_V0: &str = "U^(0) maps V^(0)_n into V-hat_(5n+6)";
const ANCHOR_1TO0: &str = "(1/5) U^(1) maps V^(1)_n into V^(0)_(5n) for n = 1 mod 5";
const ANCHOR_BACK: &str = "(1/5) U^(0) U^(1) maps V^(1)_n into V^(1)_(25n+6) for n = 1 mod 5";

/// The three stability statements on seeded random samples.
pub fn property_suite(engine: &Engine, cfg: &SampleConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = Report::new();
    for k in 0..cfg.samples {
        let n = rng.gen_range(1..=4u32);
        let degree = rng.gen_range(1..=cfg.max_degree);
        let f = ZForm::from_localized(&sample_v0(&mut rng, n, degree));
        let image = engine.apply(Op::Weighted, &f, None);
        let target = Space::VHat(5 * n as u64 + 6);
        report.push(finding(format!("v0-to-vhat-{k}"), Space::V0(n as u64), target, &check(&image, target), degree, ANCHOR_V0));
    }
    for k in 0..cfg.samples {
        let n = [1u32, 6][rng.gen_range(0..2)];
        let degree = rng.gen_range(OMEGA_START + 6..=cfg.max_degree.max(OMEGA_START + 6));
        let f = ZForm::from_localized(&sample_v1(&mut rng, n, degree));
        let once = fifth(engine.apply(Op::Plain, &f, None));
        let mid = Space::V0(5 * n as u64);
        report.push(finding(format!("v1-to-v0-{k}"), Space::V1(n as u64), mid, &check(&once, mid), degree, ANCHOR_1TO0));
        let twice = fifth(engine.apply(Op::Weighted, &engine.apply(Op::Plain, &f, None), None));
        let back = Space::V1(25 * n as u64 + 6);
        report.push(finding(format!("v1-back-to-v1-{k}"), Space::V1(n as u64), back, &check(&twice, back), degree, ANCHOR_BACK));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localize::valuation::exact_coeffs;

    #[test]
    fn v1_samples_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let e = sample_v1(&mut rng, 6, 10);
            let c = e.num.to_ints().unwrap();
            assert!(membership(&exact_coeffs(&c), 6, Space::V1(6)).member);
        }
    }

    #[test]
    fn a_sample_outside_the_kernel_is_caught() {
        // s(2) = 1 alone has Omega image (1, 0)
        let e = element(Op::Plain, &[1], 2, 1);
        let m = membership(&exact_coeffs(&e.num.to_ints().unwrap()), 1, Space::V1(1));
        assert!(!m.member);
    }

    #[test]
    fn small_suite_passes() {
        let engine = Engine::new();
        let r = property_suite(&engine, &SampleConfig { samples: 3, seed: 1, max_degree: 9 });
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
