//! Bulk checks: the main family for d_5 and the listed fixed-modulus families.

use dkcong::dkscan::{families_suite, verify_main_family};

fn main() {
    for s in verify_main_family(4, 100_000, 8) {
        println!("{}: {} terms, counterexample {:?}", s.spec.id(), s.witnesses, s.counterexample);
    }
    let r = families_suite(5000);
    for f in &r.findings {
        println!("{:<28} {:?} {}", f.item_id, f.status, f.detail["counterexample"]);
    }
}
