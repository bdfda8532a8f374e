//! Orders of eta quotients at the cusps of X_0(50) and X_0(10), and the
//! order bounds for the first generating function.

use dkcong::eta::{cusp_set, cusp_suite, hauptmodul_z, weight_a};

fn main() {
    let a = weight_a();
    println!("cusps of X_0(50): {}", cusp_set(50).len());
    for (c, o) in a.order_table() {
        println!("  ord_{c}(A) = {o}");
    }
    let z = hauptmodul_z();
    for (c, o) in z.order_table() {
        println!("  ord_{c}(z) at level 10 = {o}");
    }
    let r = cusp_suite();
    println!("cusp suite: {} checks, all pass: {}", r.findings.len(), r.all_pass());
    for f in r.findings.iter().filter(|f| f.item_id.starts_with("bound")) {
        println!("  {} {}", f.item_id, f.detail);
    }
}
