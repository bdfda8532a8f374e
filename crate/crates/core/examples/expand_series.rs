//! Expand D_k and an eta quotient over the integers and modulo a power of 5.

use dkcong::eta::hauptmodul_x;
use dkcong::ring::{Integers, ModPow5};
use dkcong::series::dk_generating;

fn main() {
    let d5 = dk_generating(Integers, 5, 30);
    println!("d_5(n), n < 30:");
    for n in 0..30 {
        print!("{} ", d5.coeff(n));
    }
    println!();

    let r = ModPow5::new(2);
    let d5_mod = dk_generating(r, 5, 30);
    let hits: Vec<i64> = (0..30).filter(|&n| d5_mod.coeff(n) == 0).collect();
    println!("n < 30 with 25 | d_5(n): {hits:?}");

    let x = hauptmodul_x().expand(Integers, 12).expect("integral leading exponent");
    println!("x = {:?}", (1..12).map(|n| x.coeff(n).to_string()).collect::<Vec<_>>());
}
