//! Search k = 0..12 for progressions mod 5, 25, 125 on which d_k is
//! divisible by a power of 5.

use dkcong::dkscan::discover;

fn main() {
    let ks: Vec<i64> = (0..=12).collect();
    for d in discover(&ks, &[5, 25, 125], 3, 5000) {
        println!("5^{} | d_{}({}n + {})  [{} terms]", d.spec.power, d.spec.k.offset, d.spec.modulus, d.spec.residue, d.witnesses);
    }
}
