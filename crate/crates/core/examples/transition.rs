//! The transition formula and the k-Pieri product rule.
//!
//! `cargo run --example transition -- 2143 2`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let v = Permutation::parse(&args.next().unwrap_or_else(|| "2143".into()))?;
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let t = grothendieck::lenart_transition(k, &v);
    let direct = grothendieck::expand(&MultiPoly::c_plus_beta_x(1, k).mul(&groth(&v)))?;
    println!("(1+βx_{k}) 𝒢_{v} = {t}");
    println!("agrees with product-then-expand: {}", t == direct);
    for p in 1..=k {
        let e = grothendieck::lensot_product(p, k, &v)?;
        println!("p={p}: {} terms", e.len());
    }
    for c in grothendieck::k_pieri_chains(&v, k, &|_, _| true).iter().take(8) {
        println!("chain {:?} -> {}", c.steps, c.end);
    }
    Ok(())
}
