//! `𝒢^O_z` for a vexillary involution and its integer coefficients `GC^O_z`.
//!
//! `cargo run --example orthogonal_expansion -- "(1,4)(2,3)"`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "(1,4)(2,3)".into());
    let z = Involution::parse(&arg)?;
    println!("z = {z} ({})", z.perm());
    println!("stats: {:?}", z.stats());
    println!("Ĝ_z   = {}", ortho::invgroth(&z));
    println!("𝒢^O_z = {}", ortho::ortho_groth(&z)?);
    let g = ortho::gco(&z)?;
    for (w, c) in &g.coeffs {
        println!("  GC^O_z({w}) = {c}");
    }
    println!("distinct values: {:?}", g.values());
    println!("path transport agrees: {}", ortho::gco_by_path(&z)?.coeffs == g.coeffs);
    Ok(())
}
