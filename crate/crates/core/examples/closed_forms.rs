//! Closed forms for `GC^O_{(2,n)}` and `GC^O_{g_{2n}}`, compared with direct expansion.
//!
//! `cargo run --release --example closed_forms -- 6`

use ogroth::ortho::ClosedFamily;
use ogroth::prelude::*;

fn main() -> Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 3..=n_max {
        let z = ortho::family_involution(ClosedFamily::TShifted, n)?;
        let ok = ortho::closed_gc(ClosedFamily::TShifted, n)? == ortho::gco_by_path(&z)?.coeffs;
        println!("(2,{n}): closed form matches {ok}");
    }
    for n in 3..=n_max.min(4) {
        let z = ortho::family_involution(ClosedFamily::G2n, n)?;
        let gc = ortho::closed_gc(ClosedFamily::G2n, n)?;
        let ok = gc == ortho::gco_by_path(&z)?.coeffs;
        let values: std::collections::BTreeSet<u64> = gc.values().copied().collect();
        println!("g_{}: {} terms, values {values:?}, matches {ok}", 2 * n, gc.len());
    }
    Ok(())
}
