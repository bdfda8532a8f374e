//! L_1 .. L_alpha as rational functions of the Hauptmodul x, with the
//! denominator, divisibility and space-membership checks.
//! Usage: cargo run --release --example l_sequence -- [alpha_max]

use dkcong::localize::pipeline::{verify_l_alpha, LAlphaConfig};

fn main() {
    let alpha_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let cfg = LAlphaConfig { alpha_max, trunc: 40, ..LAlphaConfig::default() };
    let (report, summaries) = verify_l_alpha(&cfg);
    for s in &summaries {
        println!(
            "L{}: over (1+5x)^{}, divided by 5^{}, in {}: {} ({}, {:.2}s)",
            s.alpha,
            s.den,
            s.power,
            s.space,
            s.member,
            s.modulus.map_or("over Z".to_string(), |k| format!("mod 5^{k}")),
            s.seconds
        );
        println!("    leading numerator coefficients {:?}", &s.first[..s.first.len().min(5)]);
    }
    println!("all checks pass: {}", report.all_pass());
}
