//! Acceptance gate: one line per criterion. Runs without the test harness
//! so every line is printed. The process fails when a criterion's outcome
//! differs from `EXPECTED_FAILURES`: a criterion listed there fails for a
//! reason recorded alongside it, and must keep failing until that changes.

use std::time::{Duration, Instant};

use dkcong::dkscan::{families_suite, main_family_suite};
use dkcong::eta::cusp_suite;
use dkcong::localize::audit::{base_relation_audit, cross_check_grid};
use dkcong::localize::engine::Engine;
use dkcong::localize::hdata::{h_congruence_suite, HRanges, HTable};
use dkcong::localize::modeq::verify_mod_equations;
use dkcong::localize::pipeline::{verify_l_alpha, LAlphaConfig};
use dkcong::localize::theorems::{property_suite, SampleConfig};
use dkcong::localize::twostep::{t_hat_suite, LISTED};
use dkcong::report::Report;
use dkcong::theta::{verify_lemma_suite, verify_section_steps};

/// Criteria known to fail, with the reason.
const EXPECTED_FAILURES: &[(u32, &str)] = &[(
    6,
    "d_(125j+2) on progressions mod 3125 has counterexamples for j = 1 (d_127(2422) = 4 mod 5)",
)];

// Pinned limits. Exact criteria use literal equality.
const L1_LIMIT: Duration = Duration::from_secs(30);
const AUDIT_LIMIT: Duration = Duration::from_secs(5 * 60);
const L_CHAIN_LIMIT: Duration = Duration::from_secs(30 * 60);
const MAIN_FAMILY_LIMIT: Duration = Duration::from_secs(10 * 60);
const MODEQ_TRUNC: i64 = 200;
const AUDIT_TRUNC: i64 = 160;
const ROUTE_TRUNC: i64 = 40;
const THETA_TRUNC: i64 = 100;
const CROSS_CHECK_TRUNC: i64 = 60;
const MAIN_FAMILY_BOUND: u64 = 100_000;
const MAIN_FAMILY_MOD_EXP: u32 = 8;
const FAMILY_BOUND: u64 = 5000;
const PROPERTY_SAMPLES: usize = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn failures(r: &Report) -> String {
    let ids: Vec<&str> = r.failures().map(|f| f.item_id.as_str()).collect();
    if ids.is_empty() {
        format!("{} checks", r.findings.len())
    } else {
        format!("{} of {} checks fail: {}", ids.len(), r.findings.len(), ids.join(", "))
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (ok, detail) = f();
    let e = t.elapsed();
    Outcome { pass: ok && e < limit, detail: format!("{detail}; {:.1}s (limit {}s)", e.as_secs_f64(), limit.as_secs()) }
}

fn c1() -> Outcome {
    timed(L1_LIMIT, || {
        let (r, s) = verify_l_alpha(&LAlphaConfig { alpha_max: 1, trunc: ROUTE_TRUNC, exact_up_to: 1 });
        let golden = r.get("L1-golden").expect("golden item");
        let ok = golden.passed() && s[0].den == 6;
        (ok, format!("golden {}, denominator exponent {}", golden.detail, s[0].den))
    })
}

fn c2() -> Outcome {
    timed(AUDIT_LIMIT, || {
        let r = base_relation_audit(AUDIT_TRUNC);
        (r.all_pass() && r.findings.len() == 10, failures(&r))
    })
}

fn c3() -> Outcome {
    let r = verify_mod_equations(MODEQ_TRUNC);
    let needed = ["x-modular-equation", "z-modular-equation", "z-equals-1-plus-5x"];
    let ok = needed.iter().all(|id| r.get(id).is_some_and(|f| f.passed()));
    Outcome { pass: ok, detail: format!("T = {MODEQ_TRUNC}; {}", failures(&r)) }
}

fn c4() -> Outcome {
    timed(L_CHAIN_LIMIT, || {
        // alpha <= 4 over Z; alpha = 5 modulo 5^(scale + margin) with an exact lower end,
        // so every divisibility, membership and denominator verdict is still decided exactly
        let (r, s) = verify_l_alpha(&LAlphaConfig { alpha_max: 5, trunc: ROUTE_TRUNC, exact_up_to: 4 });
        let exact_through_4 = s.iter().filter(|t| t.alpha <= 4).all(|t| t.modulus.is_none());
        let dens_exact = s.iter().all(|t| t.den_exact);
        let support_exact = r.findings.iter().filter(|f| f.item_id.ends_with("-membership")).all(|f| f.detail["support_to_precision"] == false);
        let dens: Vec<u64> = s.iter().map(|t| t.den).collect();
        let moduli: Vec<Option<u32>> = s.iter().map(|t| t.modulus).collect();
        (
            r.all_pass() && exact_through_4 && dens_exact && support_exact && s.len() == 5,
            format!("denominators {dens:?} (exact {dens_exact}), support exact {support_exact}, working moduli {moduli:?}; {}", failures(&r)),
        )
    })
}

fn c5() -> Outcome {
    timed(MAIN_FAMILY_LIMIT, || {
        let r = main_family_suite(4, MAIN_FAMILY_BOUND, MAIN_FAMILY_MOD_EXP);
        (r.all_pass() && r.findings.len() == 4, failures(&r))
    })
}

fn c6() -> Outcome {
    let r = families_suite(FAMILY_BOUND);
    Outcome { pass: r.all_pass(), detail: failures(&r) }
}

fn c7() -> Outcome {
    let table = HTable::new();
    let r = h_congruence_suite(&table, &HRanges::default());
    // 2 x 10 x 10 periodicity items, 9 residue classes, 2 floor-inequality items
    Outcome { pass: r.all_pass() && r.findings.len() == 200 + 9 + 2, detail: failures(&r) }
}

fn c8() -> Outcome {
    let r = t_hat_suite(&HTable::new());
    let listed = r.findings.iter().filter(|f| f.item_id.ends_with("-coefficients")).count();
    Outcome { pass: r.all_pass() && listed == LISTED.len(), detail: failures(&r) }
}

fn c9() -> Outcome {
    let mut r = verify_lemma_suite(THETA_TRUNC);
    r.extend(verify_section_steps(THETA_TRUNC));
    let jtp = r.findings.iter().filter(|f| f.item_id.starts_with("triple-product")).count();
    Outcome { pass: r.all_pass() && jtp == 20, detail: format!("T = {THETA_TRUNC}; {}", failures(&r)) }
}

fn c10() -> Outcome {
    let r = cusp_suite();
    let table = r.findings.iter().filter(|f| f.item_id.starts_with("order-")).count();
    let bounds = r.findings.iter().filter(|f| f.item_id.starts_with("bound-")).count();
    Outcome { pass: r.all_pass() && table == 48 && bounds == 4, detail: failures(&r) }
}

fn c11() -> Outcome {
    let mut r = cross_check_grid(0..=8, 0..=8, CROSS_CHECK_TRUNC);
    let grid = r.findings.len();
    r.extend(property_suite(&Engine::new(), &SampleConfig { samples: PROPERTY_SAMPLES, ..SampleConfig::default() }));
    Outcome { pass: r.all_pass() && grid == 2 * 9 * 9, detail: failures(&r) }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "L_1 golden numerator", c1),
        (2, "base relation audit", c2),
        (3, "modular equations", c3),
        (4, "L_1..L_5 decided exactly, with space membership", c4),
        (5, "main family below 10^5", c5),
        (6, "listed congruence families", c6),
        (7, "h-array congruences", c7),
        (8, "t-hat forms", c8),
        (9, "theta identities", c9),
        (10, "cusp orders and bounds", c10),
        (11, "oracle equivalence and space stability", c11),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        if filter.is_some_and(|f| f != n) {
            continue;
        }
        let o = run();
        let expected_fail = EXPECTED_FAILURES.iter().find(|(k, _)| *k == n);
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = expected_fail.map_or(String::new(), |(_, why)| format!(" [expected failure: {why}]"));
        println!("criterion {n:>2} {status} {name}: {}{note}", o.detail);
        if o.pass == expected_fail.is_some() {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
