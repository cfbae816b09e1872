//! Symplectic Grothendieck polynomials of fixed-point-free involutions.
//!
//! `cargo run --example symplectic -- 6`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for z in FpfInvolution::all(n) {
        let (p, e) = grothendieck::symp_groth(&z);
        let exp = grothendieck::expand(&p)?;
        let ones = exp.normalized(z.ell_fpf())?.values().all(|c| *c == Int::from(1));
        println!("{}: {} terms, expansion {} terms, all coefficients 1: {}", z.involution(), p.len(), e.len(), ones);
    }
    Ok(())
}
