//! Stable limits of `𝒢^O_{1^m×z}` and `Ĝ_{1^m×z}` in finitely many variables.
//!
//! `cargo run --release --example stable_limits -- "(1,2)" 2`

use ogroth::ortho::StableKind;
use ogroth::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let z = Involution::parse(&args.next().unwrap_or_else(|| "(1,2)".into()))?;
    let vars: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    for kind in [StableKind::GQ, StableKind::GP] {
        let (p, steps) = ortho::stable_limit(&z, kind, vars, 12)?;
        println!("{kind:?}_{z}(x_1..x_{vars}) stabilises after {steps} shifts:");
        println!("  {p}");
        println!("  symmetric: {}", p.is_symmetric_in(vars));
    }
    Ok(())
}
