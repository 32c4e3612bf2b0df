//! Exact arithmetic in cyclotomic fields.
//!
//! cargo run --example cyclotomic

use minfaith::cyclotomic::{cyclotomic_polynomial, Cyclotomic};

fn main() {
    let w = Cyclotomic::zeta(3, 1);
    let sum = &(&Cyclotomic::one(3) + &w) + &(&w * &w);
    println!("1 + w + w^2 = {sum}");

    let i = Cyclotomic::zeta(4, 1);
    println!("i^2 = {}", &i * &i);

    // (-1 + sqrt(-3)) / 2 is w itself
    let s = &w - &w.conj();
    println!("w - conj(w) = {s}, squared {}", &s * &s);

    let x = &Cyclotomic::from_int(5, 2) + &Cyclotomic::zeta(5, 1);
    let inv = x.inverse().expect("nonzero");
    println!("(2 + z5)^-1 = {inv}");
    println!("check {}", &x * &inv);

    let gaussian = Cyclotomic::from_rational(4, 1, 2) + i.clone();
    println!("{} embedded in Q(z12): {}", gaussian, gaussian.embed(12));
    println!("Phi_12 = {:?}", cyclotomic_polynomial(12));
}
