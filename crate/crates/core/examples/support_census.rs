//! Counts vexillary and dominant involutions `z ∈ S_n` with `supp(GC^O_z) = B_inv⁺(z)`.
//!
//! `cargo run --release --example support_census -- 6`

use std::time::Instant;

use ogroth::prelude::*;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let t = Instant::now();
    let (mut vex, mut vex_eq, mut dom, mut dom_eq) = (0, 0, 0, 0);
    for z in Involution::all_vexillary(n) {
        let eq = ortho::gco_by_path(&z)?.support() == ortho::binv_plus(&z).nodes;
        vex += 1;
        vex_eq += eq as usize;
        if z.is_dominant() {
            dom += 1;
            dom_eq += eq as usize;
        }
    }
    println!("n={n}: dominant {dom_eq}/{dom}, vexillary {vex_eq}/{vex} ({:.2?})", t.elapsed());
    Ok(())
}
