//! Agreement between the exact operator images and their q-series
//! counterparts, and the re-derivation of the ten base images.

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use crate::ring::{Integers, Rationals};
use crate::series::Series;

use super::numeric::{eval_with, fit_integral, Basis};
use super::symbolic::{base_image, u_symbolic};
use super::xpoly::{LocalizedElement, XPoly};
use super::Op;
use crate::report::{Finding, Report};

/// Margin between the fitted degree and the truncation, so the fit is overdetermined.
pub const FIT_GUARD: i64 = 20;

/// eval(symbolic U(x^m/z^n)) - U_5(A^(1-i) x^m/z^n), to order `trunc`.
pub fn cross_check_u(op: Op, m: u32, n: u32, trunc: i64) -> Series<Rationals> {
    let out = Basis::new(Integers, trunc);
    let inp = Basis::new(Integers, 5 * trunc);
    cross_check_with(op, m, n, &out, &inp)
}

fn cross_check_with(op: Op, m: u32, n: u32, out: &Basis<Integers>, inp: &Basis<Integers>) -> Series<Rationals> {
    let sym = eval_with(out, &u_symbolic(op, m, n as i64));
    let num = inp.apply(op, &inp.monomial(m, n)).to_rationals();
    (&sym - &num).truncate(out.trunc())
}

/// Oracle equivalence over a grid of (i, m, n).
pub fn cross_check_grid(ms: std::ops::RangeInclusive<u32>, ns: std::ops::RangeInclusive<u32>, trunc: i64) -> Report {
    let out = Basis::new(Integers, trunc);
    let inp = Basis::new(Integers, 5 * trunc);
    let cases: Vec<(Op, u32, u32)> = Op::BOTH
        .iter()
        .flat_map(|&op| {
            let ns = ns.clone();
            ms.clone().flat_map(move |m| ns.clone().map(move |n| (op, m, n)))
        })
        .collect();
    let findings: Vec<Finding> = cases
        .par_iter()
        .map(|&(op, m, n)| {
            let r = cross_check_with(op, m, n, &out, &inp);
            let ok = r.terms().all(|(_, c)| c.is_zero());
            Finding::new(
                "cross-check",
                format!("i{}-m{}-n{}", op.index(), m, n),
                ok,
                json!({"truncation": trunc, "first_nonzero": (!ok).then(|| r.valuation())}),
                "exact image agrees with the q-series image",
            )
        })
        .collect();
    let mut report = Report::new();
    for f in findings {
        report.push(f);
    }
    report
}

/// Re-derive U(x^l), l = 0..4, from q-series and compare with the stored images.
pub fn base_relation_audit(trunc: i64) -> Report {
    let inp = Basis::new(Integers, 5 * trunc);
    let out = Basis::new(Integers, trunc);
    let cases: Vec<(Op, u32)> = [Op::Plain, Op::Weighted]
        .iter()
        .flat_map(|&op| (0..5).map(move |l| (op, l)))
        .collect();
    let findings: Vec<Finding> = cases
        .par_iter()
        .map(|&(op, l)| {
            let image = inp.apply(op, &inp.monomial(l, 0));
            let max_deg = (trunc - 1 - FIT_GUARD).max(0) as usize;
            let stored = base_image(op, l as usize);
            let id = format!("U{}(x^{})", op.index(), l);
            match fit_integral(&image, &out, op.kappa(), max_deg) {
                Ok(num) => {
                    let fitted = LocalizedElement::new(XPoly::from_ints(&num), op.kappa());
                    let mismatch = first_mismatch(&fitted.num, &stored.num);
                    let ok = mismatch.is_none() && fitted.den == stored.den;
                    Finding::new(
                        "base-relations",
                        id,
                        ok,
                        json!({"truncation": trunc, "degree": fitted.num.degree(),
                               "terms": fitted.num.terms().count(),
                               "denominator_exponent": fitted.den,
                               "first_mismatch_degree": mismatch}),
                        "initial relation",
                    )
                }
                Err(e) => Finding::new("base-relations", id, false, json!({"error": e.to_string()}), "initial relation"),
            }
        })
        .collect();
    let mut report = Report::new();
    for f in findings {
        report.push(f);
    }
    report
}

fn first_mismatch(a: &XPoly, b: &XPoly) -> Option<usize> {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).find(|&m| a.coeff(m) != b.coeff(m))
}

/// Residual of an element against a series, both to the series' truncation.
pub fn residual_against(e: &LocalizedElement, s: &Series<Rationals>) -> Option<i64> {
    let basis = Basis::new(Integers, s.trunc());
    let r = &eval_with(&basis, e) - s;
    let first = r.terms().find(|(_, c)| !c.is_zero()).map(|(k, _)| k);
    first
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cross_checks_vanish() {
        for (op, m, n) in [(Op::Plain, 2, 3), (Op::Weighted, 4, 5), (Op::Plain, 0, 0)] {
            let r = cross_check_u(op, m, n, 30);
            assert!(r.terms().all(|(_, c)| c.is_zero()), "{op:?} {m} {n}");
        }
    }

    #[test]
    fn plain_base_images_rederive() {
        let r = base_relation_audit(50);
        for f in r.findings.iter().filter(|f| f.item_id.starts_with("U1")) {
            assert!(f.passed(), "{}: {}", f.item_id, f.detail);
        }
    }
}
