//! Grothendieck polynomials and expansion of a polynomial in the
//! Grothendieck basis.
//!
//! `cargo run --example grothendieck_expand -- 1432`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1432".into());
    let w = Permutation::parse(&arg)?;
    let g = groth(&w);
    println!("𝒢_{w} = {g}");
    println!("terms: {}, x-degree at β=0: {:?}", g.len(), g.eval_beta(0).graded_degree());

    let p = groth(&Permutation::parse("132")?).mul(&groth(&Permutation::parse("213")?));
    let e = grothendieck::expand(&p)?;
    println!("𝒢_132 · 𝒢_213 = {e}");
    println!("roundtrip: {}", e.eval() == p);
    Ok(())
}
