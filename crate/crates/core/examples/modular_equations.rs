//! The modular equations of x and z checked as q-series to order 200.

use dkcong::localize::modeq::verify_mod_equations;

fn main() {
    let r = verify_mod_equations(200);
    for f in &r.findings {
        println!("{:<28} {:?}", f.item_id, f.status);
    }
}
