//! Permutation statistics: Lehmer code, Rothe diagram, reduced and Hecke
//! words, Demazure products and pattern tests.
//!
//! `cargo run --example permutations -- 35124`

use ogroth::prelude::*;

fn main() -> Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "35124".into());
    let w = Permutation::parse(&arg)?;
    println!("w                 = {w}");
    println!("length            = {}", w.length());
    println!("code              = {:?}", w.code());
    println!("Rothe diagram     = {:?}", w.rothe_diagram());
    println!("essential set     = {:?}", w.essential_set());
    println!("right descents    = {:?}", w.des_r());
    println!("reduced word      = {:?}", w.reduced_word());
    println!("inverse           = {}", w.inverse());
    println!("vexillary         = {}", w.is_vexillary());
    println!("dominant          = {}", w.is_dominant());
    println!("grassmannian      = {}", w.is_grassmannian());
    let words = w.hecke_words(w.length() + 1);
    println!("Hecke words of length ≤ ℓ(w)+1: {}", words.len());
    for word in words.iter().take(6) {
        println!("  {word:?} -> {}", Permutation::demazure_word(word));
    }
    let s1 = Permutation::s(1);
    println!("w ∘ s_1 (Demazure) = {}", w.demazure(&s1));
    Ok(())
}
