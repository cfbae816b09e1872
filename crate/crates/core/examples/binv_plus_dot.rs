//! Graphviz rendering of `B_inv⁺(z)` labelled by `GC^O_z`.
//!
//! `cargo run --example binv_plus_dot -- "(1,3)(2,4)" | dot -Tsvg > binv.svg`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "(1,3)(2,4)".into());
    let z = Involution::parse(&arg)?;
    let b = ortho::binv_plus(&z);
    let g = ortho::gco(&z)?;
    eprintln!("{} nodes, {} edges, connected={}", b.len(), b.edges.len(), b.is_connected());
    eprintln!("support equals B_inv⁺: {}", g.support() == b.nodes);
    print!("{}", b.to_dot(Some(&g.coeffs)));
    Ok(())
}
