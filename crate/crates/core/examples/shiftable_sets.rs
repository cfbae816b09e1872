//! Shiftable subsets of a vexillary involution and the resulting formula for `𝒢^O_z`.
//!
//! `cargo run --example shiftable_sets -- "(2,5)(3,4)"`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "(2,5)(3,4)".into());
    let z = Involution::parse(&arg)?;
    let d = ortho::shiftable_data(&z)?;
    println!("z = {z}, left endpoints {:?}", d.left_endpoints);
    for s in &d.left_segments {
        println!("  segment {:?} mobile={}", s.elems, s.mobile);
    }
    for s in &d.shiftable_sets {
        println!("  S={:?} θ={} conjugate={} ϖ={}", s.set, s.theta, s.conjugate, s.varpi);
    }
    println!("locally noncrossing: {}", ortho::is_locally_noncrossing(&z)?);
    println!("formula equals 𝒢^O_z: {}", ortho::ivex_formula(&z)? == *ortho::ortho_groth(&z)?);
    Ok(())
}
