//! Runs one verification sweep and prints its report.
//!
//! `cargo run --release --example sweep -- b+conj 6`

use ogroth::harness;
use ogroth::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "ivex-thm".into());
    let n = args.next().and_then(|s| s.parse().ok()).or_else(|| harness::default_n_max(&id)).unwrap_or(5);
    let report = harness::verify(&id, n, 0)?;
    print!("{report}");
    Ok(())
}
