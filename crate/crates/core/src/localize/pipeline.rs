//! The sequence L_alpha: computed exactly in the localized ring, checked
//! against its q-series definition, and tested for the denominator bound,
//! divisibility and space membership.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::hecke::{progression_extract, u_operator};
use crate::report::{Finding, Report};
use crate::ring::{Integers, ModPow5, Ring};
use crate::series::{dk_generating, euler_quotient, Series};

use super::engine::{Engine, ZForm};
use super::modeq::weight_series;
use super::numeric::{fit_integral, Basis};
use super::valuation::{beta, l_power, lambda, membership, psi, Adic, Membership, Space};
use super::Op;

/// Extra powers of 5 carried beyond the output scale in modular steps.
pub const PRECISION_MARGIN: u32 = 40;

/// Exponent of the modular ring used to compare steps that are not exact.
pub const NUMERIC_MOD_EXPONENT: u32 = ModPow5::MAX_EXPONENT;

const SEED_MARGIN: i64 = 10;

/// Longest exact z-form whose x-coefficients are expanded exactly. Past it the
/// Taylor shift runs modulo 5^(scale + PRECISION_MARGIN), which decides every
/// divisibility condition since theta(m) grows slower than m.
pub const EXACT_SHIFT_MAX_LEN: usize = 6000;

/// Coefficients below the largest support start, always computed exactly.
pub const EXACT_LOW: usize = 2;

/// Largest alpha whose q-series route runs over the integers; beyond it the
/// seed series (5^alpha times the truncation) is only affordable modulo 5^27.
pub const NUMERIC_EXACT_MAX_ALPHA: u32 = 4;

/// Nonzero numerator coefficients of L_1 over (1+5x)^6, from x^2 to x^33.
pub const L1_GOLDEN: [(u32, &str); 32] = [
    (2, "5705"),
    (3, "6840120"),
    (4, "2034152125"),
    (5, "280484938650"),
    (6, "22921365211325"),
    (7, "1260917405154520"),
    (8, "50400843190048480"),
    (9, "1539115922208139200"),
    (10, "37183654303328448000"),
    (11, "728924483359472640000"),
    (12, "11816089262411136000000"),
    (13, "160681440628058880000000"),
    (14, "1853291134193264640000000"),
    (15, "18284160727362809856000000"),
    (16, "155286793010086625280000000"),
    (17, "1140657222505472000000000000"),
    (18, "7269894420215070720000000000"),
    (19, "40277647277404979200000000000"),
    (20, "194099187864646451200000000000"),
    (21, "813054581193729638400000000000"),
    (22, "2954545150241538048000000000000"),
    (23, "9282005730758492160000000000000"),
    (24, "25080951875200614400000000000000"),
    (25, "57872525958316032000000000000000"),
    (26, "112916020309524480000000000000000"),
    (27, "183812885074411520000000000000000"),
    (28, "245082228994867200000000000000000"),
    (29, "260725452832768000000000000000000"),
    (30, "212837104353280000000000000000000"),
    (31, "125198296678400000000000000000000"),
    (32, "47244640256000000000000000000000"),
    (33, "8589934592000000000000000000000"),
];

/// The space L_alpha / 5^(floor(alpha/2)+1) is expected to lie in.
pub fn target_space(alpha: u32) -> Space {
    let n = psi(alpha) - beta(alpha) as u64;
    if alpha % 2 == 1 {
        Space::V1(n)
    } else {
        Space::V0(n)
    }
}

/// One computed term of the sequence.
#[derive(Clone, Debug)]
pub struct LTerm {
    pub alpha: u32,
    pub form: ZForm,
    /// exact Q_0 .. Q_(EXACT_LOW-1) when `form` is modular but came from an exact input
    pub exact_low: Option<Vec<BigInt>>,
    pub seconds: f64,
}

/// L_1 .. L_alpha_max; steps beyond `exact_up_to` run modulo a power of 5.
pub fn l_chain(engine: &Engine, alpha_max: u32, exact_up_to: u32) -> Vec<LTerm> {
    let mut f = ZForm::one();
    let mut out = Vec::new();
    for alpha in 1..=alpha_max {
        let start = Instant::now();
        let op = Op::for_step(alpha - 1);
        let modulus = (alpha > exact_up_to).then(|| (f.scale + engine.images(op).scale) as u32 + PRECISION_MARGIN);
        // an exact input goes in unreduced so the output keeps an exact lower end
        let next = engine.apply(op, &f, modulus);
        let exact_low = (next.modulus.is_some() && f.modulus.is_none() && next.low_exact)
            .then(|| f.exact_low_of_image(engine.images(op), &next, EXACT_LOW));
        f = next;
        out.push(LTerm { alpha, form: f.clone(), exact_low, seconds: start.elapsed().as_secs_f64() });
    }
    out
}

/// L_1 .. L_alpha_max as q-series from the operator iteration, each known at least to `trunc`.
pub fn l_series<R: Ring>(ring: R, alpha_max: u32, trunc: i64) -> Vec<Series<R>> {
    let seed = trunc * 5i64.pow(alpha_max) + SEED_MARGIN;
    let weight = weight_series(ring.clone(), seed);
    let mut f = Series::one(ring, seed);
    let mut out = Vec::new();
    for alpha in 1..=alpha_max {
        f = match Op::for_step(alpha - 1) {
            Op::Weighted if alpha == 1 => u_operator(&weight, 5),
            Op::Weighted => u_operator(&(&weight * &f), 5),
            Op::Plain => u_operator(&f, 5),
        };
        out.push(f.clone());
    }
    out
}

/// L_alpha from its definition through d_5 on an arithmetic progression.
pub fn l_from_definition(alpha: u32, trunc: i64) -> Series<Integers> {
    let step = 5i64.pow(alpha);
    let lam = lambda(alpha) as i64;
    let need = step * trunc + lam + 1;
    let d5 = dk_generating(Integers, 5, need);
    let slice = progression_extract(&d5, step, lam);
    let (prefactor, lead) = if alpha % 2 == 1 {
        (euler_quotient(Integers, &[(5, 16), (10, -5)], trunc), 2)
    } else {
        (euler_quotient(Integers, &[(1, 16), (2, -5)], trunc), 1)
    };
    (&prefactor * &slice.shift(lead)).truncate(trunc)
}

/// Numerator coefficients and their checks for one term.
#[derive(Clone, Debug, Serialize)]
pub struct LAnalysis {
    pub alpha: u32,
    pub den: u64,
    /// whether `den` is the true exponent rather than a lower bound
    pub den_exact: bool,
    pub expected_den: u64,
    pub power: u32,
    pub space: String,
    pub integral: Option<bool>,
    pub membership: Membership,
    pub degree: usize,
    pub modulus: Option<u32>,
    /// set when an exact form's x-coefficients were taken modulo 5^k
    /// (all but the lowest `EXACT_LOW`, which stay exact)
    pub shift_modulus: Option<u32>,
    /// set when the lowest coefficients of a modular form were recomputed exactly
    pub exact_low: bool,
    #[serde(skip)]
    pub coeffs: Vec<Adic>,
}

pub fn analyse(term: &LTerm) -> LAnalysis {
    let f = &term.form;
    let shift_modulus = (f.modulus.is_none() && f.coeffs.len() > EXACT_SHIFT_MAX_LEN)
        .then(|| (f.scale.max(0) as u32) + PRECISION_MARGIN);
    let (den, mut coeffs) = match shift_modulus {
        Some(k) => f.x_coefficients_mod(k, EXACT_LOW),
        None => f.x_coefficients(),
    };
    for (m, q) in term.exact_low.iter().flatten().enumerate() {
        coeffs[m] = Adic::scaled(m as i64 - f.scale, q.clone(), None);
    }
    let power = l_power(term.alpha);
    let p = power as i64;
    let scaled: Vec<Adic> = coeffs.iter().map(|c| Adic::scaled(c.shift - p, c.unit.clone(), c.prec)).collect();
    let space = target_space(term.alpha);
    let integral = scaled.iter().try_fold(true, |acc, c| c.divisible(0).map(|d| acc && d));
    LAnalysis {
        alpha: term.alpha,
        den,
        den_exact: f.low_exact,
        expected_den: space.n(),
        power,
        space: space.to_string(),
        integral,
        membership: membership(&scaled, den, space),
        degree: coeffs.len().saturating_sub(1),
        modulus: term.form.modulus,
        shift_modulus,
        exact_low: term.exact_low.is_some(),
        coeffs,
    }
}

/// Leading numerator coefficients, as decimals or as residues when only known modulo 5^k.
pub fn first_coefficients(a: &LAnalysis, count: usize) -> Vec<String> {
    a.coeffs
        .iter()
        .take(count)
        .map(|c| match c.known_to() {
            None => c.exact_quotient(0).map_or_else(|| "non-integral".into(), |v| v.to_string()),
            Some(k) if k <= 0 => "unknown".into(),
            Some(k) => format!("{} mod 5^{}", c.residue(k as u32).unwrap_or_default(), k),
        })
        .collect()
}

/// Evaluate numerator coefficients as a q-series over a ring.
fn eval_coeffs<R: Ring>(basis: &Basis<R>, den: u64, coeffs: &[Adic], conv: impl Fn(&Adic) -> Option<R::Elem>) -> Option<Series<R>> {
    // x has order 1, so only the first `trunc` powers contribute
    let n = coeffs.len().min(basis.trunc().max(0) as usize);
    let num: Option<Vec<R::Elem>> = coeffs[..n].iter().map(conv).collect();
    Some(basis.eval(&num?, den as u32))
}

/// First exponent where the two routes differ, if any, up to `trunc`.
pub fn route_difference(a: &LAnalysis, numeric_exact: Option<&Series<Integers>>, numeric_mod: Option<&Series<ModPow5>>, trunc: i64) -> Result<Option<i64>, String> {
    if let (None, Some(num)) = (a.modulus, numeric_exact) {
        let basis = Basis::new(Integers, trunc);
        let sym = eval_coeffs(&basis, a.den, &a.coeffs, |c| c.exact_quotient(0)).ok_or("non-integral coefficient")?;
        Ok(sym.first_difference(&num.truncate(trunc)))
    } else {
        let ring = ModPow5::new(NUMERIC_MOD_EXPONENT);
        let num = numeric_mod.ok_or("missing modular series")?;
        let basis = Basis::new(ring, trunc);
        let sym = eval_coeffs(&basis, a.den, &a.coeffs, |c| c.residue(NUMERIC_MOD_EXPONENT).map(|v| ring.from_bigint(&v)))
            .ok_or("insufficient precision")?;
        Ok(sym.first_difference(&num.truncate(trunc)))
    }
}

pub struct LAlphaConfig {
    pub alpha_max: u32,
    pub trunc: i64,
    pub exact_up_to: u32,
}

impl Default for LAlphaConfig {
    fn default() -> Self {
        LAlphaConfig { alpha_max: 5, trunc: 40, exact_up_to: 4 }
    }
}

/// Per-term summary for the command line.
#[derive(Clone, Debug, Serialize)]
pub struct LSummary {
    pub alpha: u32,
    #[serde(rename = "denomExp")]
    pub den: u64,
    #[serde(rename = "denomExpExact")]
    pub den_exact: bool,
    #[serde(rename = "power-of-5")]
    pub power: u32,
    pub space: String,
    pub member: bool,
    #[serde(rename = "firstCoefficients")]
    pub first: Vec<String>,
    pub modulus: Option<u32>,
    pub seconds: f64,
}

const ANCHOR_DEN: &str = "denominator exponent psi(alpha) - beta(alpha)";
const ANCHOR_INT: &str = "numerator in Z[x] after dividing by 5^(floor(alpha/2)+1)";
const ANCHOR_SPACE: &str = "space membership alternates between odd and even alpha";
const ANCHOR_ROUTES: &str = "L_(alpha+1) = U(L_alpha) on q-series";
const ANCHOR_GOLDEN: &str = "L_1 as a rational function of x";

/// Full check of the sequence; returns the report and per-term summaries.
pub fn verify_l_alpha(cfg: &LAlphaConfig) -> (Report, Vec<LSummary>) {
    let engine = Engine::new();
    let chain = l_chain(&engine, cfg.alpha_max, cfg.exact_up_to);
    let exact_max = cfg.alpha_max.min(cfg.exact_up_to).min(NUMERIC_EXACT_MAX_ALPHA);
    let numeric_exact = if exact_max > 0 { l_series(Integers, exact_max, cfg.trunc) } else { Vec::new() };
    let numeric_mod = if cfg.alpha_max > exact_max {
        l_series(ModPow5::new(NUMERIC_MOD_EXPONENT), cfg.alpha_max, cfg.trunc)
    } else {
        Vec::new()
    };

    let mut report = Report::new();
    let mut summaries = Vec::new();
    for term in &chain {
        let a = analyse(term);
        let id = |what: &str| format!("L{}-{}", a.alpha, what);
        let precision = json!({"modulus_exponent": a.modulus, "degree": a.degree, "x_basis_modulus_exponent": a.shift_modulus,
                                "exact_low_coefficients": a.exact_low});
        report.push(Finding::new(
            "l-alpha",
            id("denominator"),
            a.den == a.expected_den && a.den_exact,
            json!({"found": a.den, "exact": a.den_exact, "expected": a.expected_den, "precision": precision}),
            ANCHOR_DEN,
        ));
        report.push(Finding::new(
            "l-alpha",
            id("integral"),
            a.integral == Some(true),
            json!({"power": a.power, "decided": a.integral.is_some(), "precision": precision}),
            ANCHOR_INT,
        ));
        report.push(Finding::new(
            "l-alpha",
            id("membership"),
            a.membership.member,
            json!({"space": a.space, "witness": a.membership.witness, "omega": a.membership.omega,
                   "support_to_precision": a.membership.support_to_precision}),
            ANCHOR_SPACE,
        ));
        let idx = (a.alpha - 1) as usize;
        let diff = route_difference(&a, numeric_exact.get(idx), numeric_mod.get(idx), cfg.trunc);
        let (ok, detail) = match diff {
            Ok(None) => {
                let ring = if a.alpha <= exact_max && a.modulus.is_none() { "Z".to_string() } else { format!("Z/5^{NUMERIC_MOD_EXPONENT}") };
                (true, json!({"truncation": cfg.trunc, "ring": ring}))
            }
            Ok(Some(k)) => (false, json!({"truncation": cfg.trunc, "first_difference": k})),
            Err(e) => (false, json!({"error": e})),
        };
        report.push(Finding::new("l-alpha", id("routes"), ok, detail, ANCHOR_ROUTES));
        summaries.push(LSummary {
            alpha: a.alpha,
            den: a.den,
            den_exact: a.den_exact,
            power: a.power,
            space: a.space.clone(),
            member: a.membership.member,
            first: first_coefficients(&a, 10),
            modulus: a.modulus,
            seconds: term.seconds,
        });
        if a.alpha == 1 {
            report.push(golden_l1(&a));
            if let Some(s) = numeric_exact.first() {
                report.push(fitted_l1(s, cfg.trunc));
            }
        }
    }
    (report, summaries)
}

fn golden_numerator() -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 34];
    for (m, c) in L1_GOLDEN {
        v[m as usize] = c.parse().expect("decimal literal");
    }
    v
}

fn golden_l1(a: &LAnalysis) -> Finding {
    let expected = golden_numerator();
    let found: Vec<Option<BigInt>> = a.coeffs.iter().map(|c| c.exact_quotient(0)).collect();
    let mismatch = (0..expected.len().max(found.len())).find(|&m| {
        let e = expected.get(m).cloned().unwrap_or_default();
        found.get(m).cloned().flatten().unwrap_or_default() != e || found.get(m).is_some_and(Option::is_none)
    });
    let nonzero = found.iter().filter(|c| c.as_ref().is_some_and(|v| !v.is_zero())).count();
    Finding::new(
        "l-alpha",
        "L1-golden",
        mismatch.is_none() && a.den == 6,
        json!({"nonzero_coefficients": nonzero, "denominator_exponent": a.den, "first_mismatch_degree": mismatch}),
        ANCHOR_GOLDEN,
    )
}

/// Fit the q-series of L_1 directly and compare with the golden numerator.
fn fitted_l1(series: &Series<Integers>, trunc: i64) -> Finding {
    let t = series.trunc().min(trunc.max(60));
    let basis = Basis::new(Integers, t);
    let expected = golden_numerator();
    let max_deg = expected.len() - 1;
    let (ok, detail) = match fit_integral(&series.truncate(t), &basis, 6, max_deg) {
        Ok(mut num) => {
            num.resize(expected.len().max(num.len()), BigInt::zero());
            let mismatch = (0..num.len()).find(|&m| num[m] != expected.get(m).cloned().unwrap_or_default());
            (mismatch.is_none(), json!({"truncation": t, "first_mismatch_degree": mismatch}))
        }
        Err(e) => (false, json!({"truncation": t, "error": e.to_string()})),
    };
    Finding::new("l-alpha", "L1-fit", ok, detail, ANCHOR_GOLDEN)
}

/// Compare the operator iteration with the d_5 progression definition.
pub fn verify_l_definitions(alpha_max: u32, trunc: i64) -> Report {
    let iterated = l_series(Integers, alpha_max, trunc);
    let mut report = Report::new();
    for (i, s) in iterated.iter().enumerate() {
        let alpha = i as u32 + 1;
        let def = l_from_definition(alpha, trunc);
        let diff = s.truncate(trunc).first_difference(&def);
        report.push(Finding::new(
            "l-definitions",
            format!("L{alpha}"),
            diff.is_none(),
            json!({"truncation": trunc, "lambda": lambda(alpha), "first_difference": diff}),
            "L_alpha through d_5 on the progression 5^alpha n + lambda_alpha",
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_three_terms() {
        let (report, summaries) = verify_l_alpha(&LAlphaConfig { alpha_max: 3, trunc: 30, exact_up_to: 3 });
        for f in &report.findings {
            assert!(f.passed(), "{}: {}", f.item_id, f.detail);
        }
        assert_eq!(summaries.iter().map(|s| s.den).collect::<Vec<_>>(), vec![6, 30, 156]);
        assert_eq!(summaries[0].first[2], "5705");
    }

    #[test]
    fn modular_step_matches_numeric() {
        let (report, _) = verify_l_alpha(&LAlphaConfig { alpha_max: 3, trunc: 20, exact_up_to: 2 });
        let f = report.get("L3-routes").unwrap();
        assert!(f.passed(), "{}", f.detail);
        assert!(report.get("L3-membership").unwrap().passed());
    }

    #[test]
    fn definitions_agree() {
        let r = verify_l_definitions(3, 30);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
