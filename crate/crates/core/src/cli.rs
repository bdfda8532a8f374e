//! Command-line front end. Every subcommand writes JSON lines; reports end
//! with a summary object. Exit status: 0 all pass, 1 a failure or
//! counterexample, 2 usage or internal error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::dkscan::{discover, families_suite, main_family_suite, verify_family, FamilySpec, KFormula};
use crate::eta::{self, EtaError, EtaQuotient};
use crate::localize::audit::{base_relation_audit, cross_check_grid};
use crate::localize::engine::Engine;
use crate::localize::hdata::{h_congruence_suite, HRanges, HTable};
use crate::localize::modeq::verify_mod_equations;
use crate::localize::pipeline::{verify_l_alpha, verify_l_definitions, LAlphaConfig};
use crate::localize::theorems::{property_suite, SampleConfig};
use crate::localize::twostep::t_hat_suite;
use crate::report::{Finding, Report};
use crate::ring::{Integers, ModPow5, Ring};
use crate::series::{dk_generating, Series};
use crate::theta::{verify_lemma_suite, verify_section_steps};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "DKCONG_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("invalid eta quotient: {0}")]
    Eta(#[from] EtaError),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "dkcong", version, about = "Congruence checks for d_k(n) and the localization method")]
pub struct Cli {
    /// Worker threads (default from DKCONG_THREADS, else all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the coefficients of an eta quotient or of D_k
    Expand(ExpandArgs),
    /// Orders of eta quotients at the cusps of X_0(N)
    EtaOrders(EtaOrdersArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Compute and check L_1 .. L_alpha_max
    LAlpha(LAlphaArgs),
    /// Check 5^power | d_k(mod * n + residue) below a bound
    Scan(ScanArgs),
    /// Search for progressions on which d_k is divisible by a power of 5
    Discover(DiscoverArgs),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Eta quotient as delta:exponent pairs, e.g. "1:-3,2:1,5:-1,10:3"
    #[arg(long, conflicts_with = "dk", required_unless_present = "dk")]
    pub eta: Option<String>,
    /// Level of the eta quotient (default: lcm of the deltas)
    #[arg(long, requires = "eta")]
    pub level: Option<u64>,
    /// Expand D_k = (q^2;q^2)^k/(q;q)^(3k+1)
    #[arg(long)]
    pub dk: Option<i64>,
    #[arg(long, default_value_t = 50)]
    pub trunc: i64,
    /// Reduce modulo 5^e
    #[arg(long = "mod-exp")]
    pub mod_exp: Option<u32>,
}

#[derive(Debug, Args)]
pub struct EtaOrdersArgs {
    #[arg(long, default_value_t = 50)]
    pub level: u64,
    /// Eta quotient as delta:exponent pairs; without it the four level-50
    /// functions of the order table are used (level 50 only)
    #[arg(long)]
    pub eta: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Theta,
    Localize,
    Modeq,
    BaseRelations,
    LAlpha,
    Cusps,
    Families,
    MainFamily,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub target: Target,
    /// Truncation order (each suite has its own default)
    #[arg(long)]
    pub trunc: Option<i64>,
    /// Largest alpha for the l-alpha and main-family targets
    #[arg(long)]
    pub alpha_max: Option<u32>,
    /// Bound on n for the scanning targets
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct LAlphaArgs {
    #[arg(long, default_value_t = 5)]
    pub alpha_max: u32,
    #[arg(long, default_value_t = 40)]
    pub trunc: i64,
    /// Terms up to this alpha are computed over Z, later ones modulo a power of 5 [default: 4]
    #[arg(long)]
    pub exact_up_to: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub k: i64,
    /// Step of k over j = 0..=j-max (k + slope * j)
    #[arg(long, default_value_t = 0)]
    pub k_step: i64,
    #[arg(long, default_value_t = 0)]
    pub j_max: i64,
    #[arg(long = "mod")]
    pub modulus: u64,
    #[arg(long)]
    pub residue: u64,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[arg(long, default_value_t = 5000)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct DiscoverArgs {
    #[arg(long, default_value_t = 0)]
    pub k_min: i64,
    #[arg(long, default_value_t = 25)]
    pub k_max: i64,
    /// Moduli, each one of 5, 25, 125
    #[arg(long, value_delimiter = ',', default_value = "5,25,125")]
    pub moduli: Vec<u64>,
    #[arg(long, default_value_t = 3)]
    pub e_max: u32,
    #[arg(long, default_value_t = 5000)]
    pub bound: u64,
}

/// Parse "d:r,d:r,..".
pub fn parse_eta(spec: &str, level: Option<u64>) -> Result<EtaQuotient, CliError> {
    let mut pairs = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (d, r) = part.split_once(':').ok_or_else(|| CliError::Invalid(format!("expected delta:exponent, got {part}")))?;
        let d: u64 = d.trim().parse().map_err(|_| CliError::Invalid(format!("bad delta {d}")))?;
        let r: i64 = r.trim().parse().map_err(|_| CliError::Invalid(format!("bad exponent {r}")))?;
        pairs.push((d, r));
    }
    if pairs.is_empty() {
        return Err(CliError::Invalid("empty eta quotient".into()));
    }
    let level = level.unwrap_or_else(|| pairs.iter().fold(1u64, |l, &(d, _)| num_integer::lcm(l, d.max(1))));
    Ok(EtaQuotient::new(level, &pairs)?)
}

/// Output of one run: lines to print and the exit status.
pub struct Outcome {
    pub lines: Vec<String>,
    pub status: i32,
}

impl Outcome {
    fn from_report(mut lines: Vec<String>, report: &Report) -> Self {
        lines.extend(report.to_json_lines().lines().map(str::to_string));
        Outcome { lines, status: if report.all_pass() { 0 } else { 1 } }
    }

    fn plain(lines: Vec<String>) -> Self {
        Outcome { lines, status: 0 }
    }
}

fn series_json<R: Ring>(s: &Series<R>) -> Vec<String> {
    (s.valuation().min(0)..s.trunc())
        .map(|n| s.ring().to_bigint(&s.coeff(n)).map_or_else(|| format!("{:?}", s.coeff(n)), |v| v.to_string()))
        .collect()
}

fn expand(a: &ExpandArgs) -> Result<Outcome, CliError> {
    if a.trunc <= 0 {
        return Err(CliError::Invalid("trunc must be positive".into()));
    }
    let (what, start, coeffs) = match (&a.eta, a.dk, a.mod_exp) {
        (Some(e), _, m) => {
            let q = parse_eta(e, a.level)?;
            let start = q.leading_exponent()?;
            let c = match m {
                Some(m) => series_json(&q.expand(mod_ring(m)?, a.trunc)?),
                None => series_json(&q.expand(Integers, a.trunc)?),
            };
            (json!({"eta": q.exponents(), "level": q.level()}), start, c)
        }
        (None, Some(k), m) => {
            let c = match m {
                Some(m) => series_json(&dk_generating(mod_ring(m)?, k, a.trunc)),
                None => series_json(&dk_generating(Integers, k, a.trunc)),
            };
            (json!({"dk": k}), 0, c)
        }
        (None, None, _) => return Err(CliError::Invalid("give --eta or --dk".into())),
    };
    let start = start.min(0);
    let line = json!({"series": what, "start": start, "trunc": a.trunc, "mod_exp": a.mod_exp, "coefficients": coeffs});
    Ok(Outcome::plain(vec![line.to_string()]))
}

fn mod_ring(e: u32) -> Result<ModPow5, CliError> {
    if (1..=ModPow5::MAX_EXPONENT).contains(&e) {
        Ok(ModPow5::new(e))
    } else {
        Err(CliError::Invalid(format!("mod-exp must be in 1..={}", ModPow5::MAX_EXPONENT)))
    }
}

fn eta_orders(a: &EtaOrdersArgs) -> Result<Outcome, CliError> {
    let functions: Vec<(String, EtaQuotient)> = match &a.eta {
        Some(e) => vec![("f".to_string(), parse_eta(e, None)?.at_level(a.level)?)],
        None if a.level == 50 => eta::LEVEL50_ORDERS
            .iter()
            .map(|(n, _)| n.to_string())
            .zip([
                eta::weight_a(),
                eta::hauptmodul_x().at_level(50)?,
                eta::hauptmodul_x().rescale(5),
                eta::hauptmodul_z().rescale(5),
            ])
            .collect(),
        None => return Err(CliError::Invalid("--eta is required away from level 50".into())),
    };
    let cusps: Vec<eta::Cusp> = if a.eta.is_none() {
        eta::LEVEL50_CUSPS.iter().map(|l| l.parse().expect("cusp label")).collect()
    } else {
        eta::cusp_set(a.level)
    };
    let lines = cusps
        .iter()
        .map(|&c| {
            let orders: serde_json::Map<String, serde_json::Value> =
                functions.iter().map(|(n, f)| (n.clone(), json!(f.order_at(c).to_string()))).collect();
            json!({"level": a.level, "cusp": c.to_string(), "orders": orders}).to_string()
        })
        .collect();
    Ok(Outcome::plain(lines))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let report = match a.target {
        Target::Theta => {
            let t = a.trunc.unwrap_or(100);
            let mut r = verify_lemma_suite(t);
            r.extend(verify_section_steps(t));
            r
        }
        Target::Modeq => verify_mod_equations(a.trunc.unwrap_or(200)),
        Target::BaseRelations => base_relation_audit(a.trunc.unwrap_or(160)),
        Target::LAlpha => {
            let alpha_max = a.alpha_max.unwrap_or(3);
            let cfg = LAlphaConfig { alpha_max, trunc: a.trunc.unwrap_or(40), ..LAlphaConfig::default() };
            let mut r = verify_l_alpha(&cfg).0;
            r.extend(verify_l_definitions(alpha_max.min(3), cfg.trunc));
            r
        }
        Target::Localize => {
            let mut r = cross_check_grid(0..=8, 0..=8, a.trunc.unwrap_or(60));
            let table = HTable::new();
            r.extend(h_congruence_suite(&table, &HRanges::default()));
            r.extend(t_hat_suite(&table));
            r.extend(property_suite(&Engine::new(), &SampleConfig::default()));
            r
        }
        Target::Cusps => eta::cusp_suite(),
        Target::Families => families_suite(a.bound.unwrap_or(5000)),
        Target::MainFamily => main_family_suite(a.alpha_max.unwrap_or(4), a.bound.unwrap_or(100_000), 8),
    };
    Ok(Outcome::from_report(Vec::new(), &report))
}

fn l_alpha(a: &LAlphaArgs) -> Result<Outcome, CliError> {
    if a.alpha_max == 0 || a.trunc <= 0 {
        return Err(CliError::Invalid("alpha-max and trunc must be positive".into()));
    }
    let cfg = LAlphaConfig { alpha_max: a.alpha_max, trunc: a.trunc, exact_up_to: a.exact_up_to.unwrap_or(LAlphaConfig::default().exact_up_to) };
    let (report, summaries) = verify_l_alpha(&cfg);
    let lines = summaries.iter().map(|s| serde_json::to_string(s).expect("summary serializes")).collect();
    Ok(Outcome::from_report(lines, &report))
}

fn scan(a: &ScanArgs) -> Result<Outcome, CliError> {
    if a.modulus == 0 || a.residue >= a.modulus || a.power == 0 || a.power > ModPow5::MAX_EXPONENT || a.k < 0 || a.j_max < 0 {
        return Err(CliError::Invalid("need 0 <= residue < mod, 1 <= power <= 27, k >= 0".into()));
    }
    let spec = FamilySpec::new(KFormula { slope: a.k_step, offset: a.k }, a.modulus, a.residue, a.power, "command line");
    let mut report = Report::new();
    report.push(verify_family(&spec, a.j_max, a.bound).to_finding("scan", "5^power | d_k(mod n + residue)"));
    Ok(Outcome::from_report(Vec::new(), &report))
}

fn discover_cmd(a: &DiscoverArgs) -> Result<Outcome, CliError> {
    if a.k_min < 0 || a.k_max < a.k_min || a.moduli.iter().any(|m| ![5, 25, 125].contains(m)) || !(1..=ModPow5::MAX_EXPONENT).contains(&a.e_max) {
        return Err(CliError::Invalid("need 0 <= k-min <= k-max, moduli in {5,25,125}, 1 <= e-max <= 27".into()));
    }
    let ks: Vec<i64> = (a.k_min..=a.k_max).collect();
    let mut report = Report::new();
    for d in discover(&ks, &a.moduli, a.e_max, a.bound) {
        report.push(Finding::new(
            "discover",
            d.spec.id(),
            true,
            json!({"k": d.spec.k.offset, "mod": d.spec.modulus, "residue": d.spec.residue, "power": d.spec.power,
                   "witnesses": d.witnesses, "bound": a.bound, "source": d.spec.source}),
            "empirical progression, no counterexample below the bound",
        ));
    }
    Ok(Outcome::from_report(Vec::new(), &report))
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Expand(a) => expand(a),
        Command::EtaOrders(a) => eta_orders(a),
        Command::Verify(a) => verify(a),
        Command::LAlpha(a) => l_alpha(a),
        Command::Scan(a) => scan(a),
        Command::Discover(a) => discover_cmd(a),
    }
}

fn configure_threads(cli: &Cli) {
    let n = cli.threads.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = n.filter(|&n| n > 0) {
        // a second initialisation in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parse arguments, run, write output; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    configure_threads(&cli);
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, outcome.lines.join("\n") + "\n"),
        None => {
            let mut out = std::io::stdout().lock();
            outcome.lines.iter().try_for_each(|l| writeln!(out, "{l}"))
        }
    };
    match written {
        Ok(()) => outcome.status,
        Err(e) => {
            eprintln!("error: {}", CliError::Io(e));
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("dkcong").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn eta_spec_parsing() {
        let q = parse_eta("1:-3, 2:1,5:-1,10:3", None).unwrap();
        assert_eq!(q.level(), 10);
        assert!(parse_eta("1:x", None).is_err());
        assert!(parse_eta("3:1", Some(10)).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["dkcong", "scan", "--k", "5"]), 2);
        assert_eq!(run(["dkcong", "scan", "--k", "5", "--mod", "5", "--residue", "7"]), 2);
        assert_eq!(run(["dkcong", "verify", "nonsense"]), 2);
    }

    #[test]
    fn scan_passes_and_fails() {
        let ok = execute(&parse(&["scan", "--k", "5", "--mod", "5", "--residue", "4", "--power", "1", "--bound", "2000"])).unwrap();
        assert_eq!(ok.status, 0);
        let last: serde_json::Value = serde_json::from_str(ok.lines.last().unwrap()).unwrap();
        assert_eq!(last["summary"], true);
        let bad = execute(&parse(&["scan", "--k", "5", "--mod", "5", "--residue", "1", "--bound", "200"])).unwrap();
        assert_eq!(bad.status, 1);
    }

    #[test]
    fn level_fifty_table_has_twelve_rows() {
        let o = execute(&parse(&["eta-orders", "--level", "50"])).unwrap();
        assert_eq!(o.lines.len(), 12);
        let row: serde_json::Value = serde_json::from_str(&o.lines[1]).unwrap();
        assert_eq!(row["cusp"], "1/25");
        assert_eq!(row["orders"]["A"], "27");
    }

    #[test]
    fn expand_dk() {
        let o = execute(&parse(&["expand", "--dk", "0", "--trunc", "6"])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&o.lines[0]).unwrap();
        assert_eq!(v["coefficients"], json!(["1", "1", "2", "3", "5", "7"]));
    }
}
