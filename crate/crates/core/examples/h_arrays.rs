//! The integer arrays h_i(m, n, r) and their congruences, and the two-step
//! forms t-hat(w) built from them.

use dkcong::localize::hdata::{h_congruence_suite, HRanges, HTable};
use dkcong::localize::twostep::{t_hat, t_hat_suite};
use dkcong::localize::Op;

fn main() {
    let table = HTable::new();
    let a = table.get(Op::Plain, 2, 1);
    if let Ok(a) = &*a {
        println!("h_1(2, 1, r): {:?}", a.entries);
    }
    let r = h_congruence_suite(&table, &HRanges::default());
    println!("h-array checks: {} (all pass: {})", r.findings.len(), r.all_pass());

    let t2 = t_hat(&table, 2);
    println!("t-hat(2), negative 5-power part, s(2..8): {:?}", t2.fractional[2..=8].iter().map(ToString::to_string).collect::<Vec<_>>());
    let r = t_hat_suite(&table);
    for f in &r.findings {
        println!("{:<18} {:?}", f.item_id, f.status);
    }
}
