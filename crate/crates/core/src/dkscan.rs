//! Coefficients d_k(n) and bulk checks of divisibility by powers of 5 on
//! arithmetic progressions, plus a search for such progressions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::Mutex;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::localize::valuation::{l_power, lambda};
use crate::report::{Finding, Report};
use crate::ring::{ModPow5, Ring};
use crate::series::{dk_generating, Series};

/// Fewest progression terms a discovered family must rest on.
pub const WITNESS_FLOOR: usize = 20;

/// d_k(n) for n < T in any coefficient ring.
pub fn dk_coefficients<R: Ring>(ring: R, k: i64, trunc: i64) -> Series<R> {
    dk_generating(ring, k, trunc)
}

/// Memoized residues of d_k(n) modulo 5^e for n < T.
pub struct DkTable {
    ring: ModPow5,
    trunc: i64,
    cache: Mutex<HashMap<i64, Arc<Vec<u64>>>>,
}

impl DkTable {
    pub fn new(e: u32, trunc: i64) -> Self {
        DkTable { ring: ModPow5::new(e), trunc, cache: Mutex::new(HashMap::new()) }
    }

    pub fn exponent(&self) -> u32 {
        self.ring.exponent()
    }

    pub fn get(&self, k: i64) -> Arc<Vec<u64>> {
        if let Some(v) = self.cache.lock().get(&k) {
            return v.clone();
        }
        let s = dk_coefficients(self.ring, k, self.trunc);
        let v: Arc<Vec<u64>> = Arc::new((0..self.trunc).map(|n| s.coeff(n)).collect());
        self.cache.lock().insert(k, v.clone());
        v
    }
}

/// Power of 5 dividing a residue mod 5^e, capped at e.
fn val5_capped(v: u64, e: u32) -> u32 {
    if v == 0 {
        return e;
    }
    let mut v = v;
    let mut k = 0;
    while v % 5 == 0 {
        v /= 5;
        k += 1;
    }
    k
}

/// k = slope * j + offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KFormula {
    pub slope: i64,
    pub offset: i64,
}

impl KFormula {
    pub fn constant(k: i64) -> Self {
        KFormula { slope: 0, offset: k }
    }

    pub fn at(&self, j: i64) -> i64 {
        self.slope * j + self.offset
    }
}

impl fmt::Display for KFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope == 0 {
            write!(f, "{}", self.offset)
        } else {
            write!(f, "{}j+{}", self.slope, self.offset)
        }
    }
}

/// 5^power | d_k(modulus * n + residue) for every n and every k of the formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub k: KFormula,
    pub modulus: u64,
    pub residue: u64,
    pub power: u32,
    pub source: String,
}

impl FamilySpec {
    pub fn new(k: KFormula, modulus: u64, residue: u64, power: u32, source: &str) -> Self {
        assert!(residue < modulus && power >= 1, "invalid family");
        FamilySpec { k, modulus, residue, power, source: source.to_string() }
    }

    pub fn id(&self) -> String {
        format!("k{}-m{}-r{}-e{}", self.k, self.modulus, self.residue, self.power)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: i64,
    pub n: u64,
    /// d_k(n) modulo 5^power
    pub residue: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub spec: FamilySpec,
    pub bound: u64,
    pub j_max: i64,
    pub witnesses: usize,
    pub counterexample: Option<Counterexample>,
    pub seconds: f64,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_finding(&self, suite: &str, anchor: &str) -> Finding {
        Finding::new(
            suite,
            self.spec.id(),
            self.passed(),
            json!({"source": self.spec.source, "bound": self.bound, "j_max": self.j_max,
                   "witnesses": self.witnesses, "counterexample": self.counterexample,
                   "seconds": self.seconds}),
            anchor,
        )
    }
}

/// Check one progression of one k against the residue table.
fn scan_progression(coeffs: &[u64], e_table: u32, modulus: u64, residue: u64, power: u32) -> (usize, Option<(u64, u64)>) {
    let m = 5u64.pow(power);
    debug_assert!(power <= e_table);
    let mut checked = 0;
    let mut n = residue;
    while (n as usize) < coeffs.len() {
        checked += 1;
        let v = coeffs[n as usize];
        if v % m != 0 {
            return (checked, Some((n, v % m)));
        }
        n += modulus;
    }
    (checked, None)
}

/// Verify a family for j = 0..=j_max and all progression terms below `bound`.
pub fn verify_family(spec: &FamilySpec, j_max: i64, bound: u64) -> ScanReport {
    let start = std::time::Instant::now();
    let table = DkTable::new(spec.power, bound as i64);
    let results: Vec<(usize, Option<Counterexample>)> = (0..=j_max)
        .into_par_iter()
        .map(|j| {
            let k = spec.k.at(j);
            let c = table.get(k);
            let (w, bad) = scan_progression(&c, spec.power, spec.modulus, spec.residue, spec.power);
            (w, bad.map(|(n, residue)| Counterexample { k, n, residue }))
        })
        .collect();
    let witnesses = results.iter().map(|r| r.0).sum();
    let counterexample = results.iter().find_map(|r| r.1);
    ScanReport { spec: spec.clone(), bound, j_max, witnesses, counterexample, seconds: start.elapsed().as_secs_f64() }
}

/// The main family: 5^(floor(alpha/2)+1) | d_5(n) whenever 4n = 1 mod 5^alpha.
pub fn main_family(alpha: u32) -> FamilySpec {
    FamilySpec::new(KFormula::constant(5), 5u64.pow(alpha), lambda(alpha), l_power(alpha), "main family")
}

/// Check the main family for alpha = 1..=alpha_max below `bound`, from one
/// table of d_5 modulo 5^e.
pub fn verify_main_family(alpha_max: u32, bound: u64, e: u32) -> Vec<ScanReport> {
    let table = DkTable::new(e, bound as i64);
    let c = table.get(5);
    (1..=alpha_max)
        .map(|alpha| {
            let start = std::time::Instant::now();
            let spec = main_family(alpha);
            let (witnesses, bad) = scan_progression(&c, e, spec.modulus, spec.residue, spec.power);
            ScanReport {
                counterexample: bad.map(|(n, residue)| Counterexample { k: 5, n, residue }),
                spec,
                bound,
                j_max: 0,
                witnesses,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

/// The listed families of fixed-modulus congruences, with the j range to scan.
pub fn listed_families() -> Vec<(FamilySpec, i64)> {
    let mut out = vec![
        (FamilySpec::new(KFormula { slope: 25, offset: 1 }, 25, 23, 1, "d_(25j+1)(25n+23)"), 3),
        (FamilySpec::new(KFormula { slope: 75, offset: 16 }, 25, 8, 1, "d_(75j+16)(25n+8)"), 2),
    ];
    for k in [1u64, 3, 5, 8, 10, 13, 15, 16, 18, 20, 23] {
        out.push((FamilySpec::new(KFormula::constant(k as i64), 25, 24 - k, 1, "k + l = 24, mod 5"), 0));
    }
    for k in [5u64, 8, 10] {
        out.push((FamilySpec::new(KFormula::constant(k as i64), 25, 24 - k, 2, "k + l = 24, mod 25"), 0));
    }
    for alpha in 1..=2u32 {
        let p = 5u64.pow(2 * alpha);
        for j in 1..=2u64 {
            let residue = p * j + (23 * p + 1) / 8;
            out.push((
                FamilySpec::new(KFormula { slope: 125, offset: 2 }, 5 * p, residue, 1, "d_(125j+2) on odd powers of 5"),
                1,
            ));
        }
    }
    out
}

const ANCHOR_MAIN: &str = "5^(floor(alpha/2)+1) | d_5(n) when 4n = 1 mod 5^alpha";
const ANCHOR_FAMILIES: &str = "fixed-modulus congruences for d_k on progressions mod powers of 5";

pub fn main_family_suite(alpha_max: u32, bound: u64, e: u32) -> Report {
    let mut r = Report::new();
    for s in verify_main_family(alpha_max, bound, e) {
        r.push(s.to_finding("main-family", ANCHOR_MAIN));
    }
    r
}

pub fn families_suite(bound: u64) -> Report {
    let mut r = Report::new();
    for (spec, j_max) in listed_families() {
        r.push(verify_family(&spec, j_max, bound).to_finding("families", ANCHOR_FAMILIES));
    }
    r
}

/// A progression found empirically, with the largest power that held.
#[derive(Clone, Debug, Serialize)]
pub struct Discovery {
    pub spec: FamilySpec,
    pub witnesses: usize,
}

/// Every (k, m, B) whose terms below `bound` are all divisible by some 5^e,
/// e <= e_max, with the largest such e. Progressions implied by one with a
/// smaller modulus and at least the same power are left out.
pub fn discover(ks: &[i64], moduli: &[u64], e_max: u32, bound: u64) -> Vec<Discovery> {
    let table = DkTable::new(e_max, bound as i64);
    let mut moduli = moduli.to_vec();
    moduli.sort_unstable();
    moduli.dedup();
    let per_k: Vec<Vec<Discovery>> = ks
        .par_iter()
        .map(|&k| {
            let c = table.get(k);
            let mut found: Vec<Discovery> = Vec::new();
            for &m in &moduli {
                for b in 0..m {
                    let mut e = e_max;
                    let mut count = 0;
                    let mut n = b;
                    while (n as usize) < c.len() && e > 0 {
                        e = e.min(val5_capped(c[n as usize], e_max));
                        count += 1;
                        n += m;
                    }
                    if e == 0 || count < WITNESS_FLOOR {
                        continue;
                    }
                    let implied = found.iter().any(|d| {
                        m % d.spec.modulus == 0 && b % d.spec.modulus == d.spec.residue && d.spec.power >= e
                    });
                    if !implied {
                        found.push(Discovery {
                            spec: FamilySpec::new(KFormula::constant(k), m, b, e, "empirical"),
                            witnesses: count,
                        });
                    }
                }
            }
            found
        })
        .collect();
    per_k.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    #[test]
    fn small_values() {
        let p = dk_coefficients(Integers, 0, 10);
        assert_eq!(p.coeff(4), BigInt::from(5));
        for k in 0..6 {
            assert_eq!(dk_coefficients(Integers, k, 3).coeff(0), BigInt::from(1));
        }
        let d5 = dk_coefficients(Integers, 5, 25);
        assert_eq!(d5.coeff(4) % 5, BigInt::from(0));
        assert_eq!(d5.coeff(19) % 25, BigInt::from(0));
    }

    #[test]
    fn residue_table_matches_exact() {
        let t = DkTable::new(3, 300);
        for k in [0, 1, 2, 5] {
            let exact = dk_coefficients(Integers, k, 300);
            let r = t.get(k);
            for n in 0..300 {
                let v = exact.coeff(n) % BigInt::from(125);
                assert_eq!(BigInt::from(r[n as usize]), v);
            }
        }
    }

    #[test]
    fn counterexample_is_reported() {
        // d_5(5n+1) is not always divisible by 5
        let r = verify_family(&FamilySpec::new(KFormula::constant(5), 5, 1, 1, "test"), 0, 200);
        let c = r.counterexample.expect("counterexample");
        let exact = dk_coefficients(Integers, c.k, c.n as i64 + 1).coeff(c.n as i64);
        assert_ne!(exact % 5, BigInt::from(0));
    }

    #[test]
    fn main_family_small() {
        assert!(verify_main_family(3, 3000, 8).iter().all(ScanReport::passed));
    }

    #[test]
    fn discovery_finds_known_progressions() {
        let d = discover(&[1, 5], &[5, 25], 3, 2000);
        let has = |k, m, b, e| d.iter().any(|x| x.spec.k.offset == k && x.spec.modulus == m && x.spec.residue == b && x.spec.power == e);
        assert!(has(1, 25, 23, 1));
        assert!(has(5, 25, 19, 2));
        // implied by d_5(5n+4) = 0 mod 5 with the same power
        assert!(!has(5, 25, 4, 1));
    }
}
