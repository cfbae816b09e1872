//! The I-Grassmannian expansion of `𝒢^O_{⟨μ|n⟩}` into `Ĝ_{⟨λ|n⟩}`.
//!
//! `cargo run --example igrassmannian -- 3 2,1`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let mu: Vec<usize> = args
        .next()
        .unwrap_or_else(|| "2,1".into())
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad part {s:?}"))))
        .collect::<Result<_>>()?;
    let z = Involution::igrassmannian(&mu, n)?;
    println!("⟨{mu:?}|{n}⟩ = {z} ({})", z.perm());
    for t in ortho::igrass_expansion(&mu, n)? {
        println!("  λ={:?} z={} coefficient {}", t.lambda, t.z, t.coefficient());
    }
    println!("sum equals 𝒢^O: {}", ortho::igrass_sum(&mu, n)? == *ortho::ortho_groth(&z)?);
    Ok(())
}
