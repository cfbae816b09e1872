//! The ring `Z[β][x_1, x_2, …]` and its divided difference operators.
//!
//! `cargo run --example divided_differences`

use ogroth::prelude::*;

fn main() {
    let x = MultiPoly::x;
    let f = x(1).pow(2).mul(&x(2)).add(&MultiPoly::beta().mul(&x(3)));
    println!("f          = {f}");
    println!("∂_1 f      = {}", f.divdiff(1));
    println!("∂^(β)_1 f  = {}", f.beta_divdiff(1));
    println!("π_1 f      = {}", f.isobaric(1));
    println!("s_2 f      = {}", f.act_si(2));
    println!("∂_1 ∂_1 f  = {}", f.divdiff(1).divdiff(1));
    let lhs = f.beta_divdiff(1).beta_divdiff(2).beta_divdiff(1);
    let rhs = f.beta_divdiff(2).beta_divdiff(1).beta_divdiff(2);
    println!("braid relation holds: {}", lhs == rhs);
    println!("x1 ⊕ x2    = {}", x(1).oplus(&x(2)));
    println!("JSON       = {}", f.to_json());
}
