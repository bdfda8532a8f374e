//! U_5 and progression extraction: the generating function of d_5(5n+4)
//! has every coefficient divisible by 5.

use dkcong::hecke::{progression_extract, u_operator};
use dkcong::ring::Integers;
use dkcong::series::dk_generating;
use num_bigint::BigInt;

fn main() {
    let d5 = dk_generating(Integers, 5, 500);
    let slice = progression_extract(&d5, 5, 4);
    let all = (0..slice.trunc()).all(|n| slice.coeff(n) % BigInt::from(5) == BigInt::from(0));
    println!("d_5(5n+4) known for n < {}; all divisible by 5: {all}", slice.trunc());
    let u = u_operator(&d5, 5);
    println!("U_5 D_5 starts {:?}", (0..6).map(|n| u.coeff(n).to_string()).collect::<Vec<_>>());
}
