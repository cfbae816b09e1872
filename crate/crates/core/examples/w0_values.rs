//! Distinct nonzero values of `GC^O_{w_0}` for `w_0 = n⋯21`.
//!
//! `cargo run --release --example w0_values -- 6`

use std::time::Instant;

use ogroth::prelude::*;

fn main() -> Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let w0 = Involution::from_perm(Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>())?)?;
    let t = Instant::now();
    let g = ortho::gco_by_path(&w0)?;
    let values: Vec<String> = g.values().iter().map(|v| v.to_string()).collect();
    println!("n={n}: {} ({} terms, {:.2?})", values.join(", "), g.coeffs.len(), t.elapsed());
    Ok(())
}
