//! Closed forms for `𝒢^O_{(2,n)}` and `𝒢^O_{g_{2n}}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::grothendieck::GrothExpansion;
use crate::involutions::Involution;
use crate::permgroup::Permutation;
use crate::polyring::MultiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFamily {
    /// `z = (2, n)`.
    TShifted,
    /// `z = g_{2n} = (2, n+1)(3, n+2)⋯(n, 2n−1)`.
    G2n,
}

/// Word sets for `(2, n)`: shuffles of `n 2` with `1 3 4 ⋯ (n−1) (n+1)`,
/// and the subsets `X(n)`, `Y(n)`, `Z(n)`. Words are one-line permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TWords {
    pub sh: BTreeSet<Permutation>,
    pub x: BTreeSet<Permutation>,
    pub y: BTreeSet<Permutation>,
    pub z: BTreeSet<Permutation>,
}

fn word(v: &[usize]) -> Permutation {
    Permutation::from_one_line(v).expect("permutation word")
}

/// Letters strictly between `a` and `b` in the word.
fn gap(w: &[usize], a: usize, b: usize) -> usize {
    let pa = w.iter().position(|&c| c == a).expect("letter");
    let pb = w.iter().position(|&c| c == b).expect("letter");
    pa.abs_diff(pb) - 1
}

pub fn t_words(n: usize) -> Result<TWords> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("t-family needs n ≥ 3, got {n}")));
    }
    let other: Vec<usize> = std::iter::once(1).chain(3..n).chain(std::iter::once(n + 1)).collect();
    let len = n + 1;
    let mut sh = BTreeSet::new();
    let (mut x, mut y) = (BTreeSet::new(), BTreeSet::new());
    for p in 0..len {
        for q in p + 1..len {
            let mut w = Vec::with_capacity(len);
            let mut rest = other.iter();
            for pos in 0..len {
                w.push(if pos == p {
                    n
                } else if pos == q {
                    2
                } else {
                    *rest.next().expect("letter")
                });
            }
            let g = gap(&w, n, 2);
            if w[0] == 1 && w[len - 1] == n + 1 && g <= 1 {
                x.insert(word(&w));
            }
            if g == 1 || g == 2 {
                y.insert(word(&w));
            }
            sh.insert(word(&w));
        }
    }
    let z = match n {
        3 => BTreeSet::new(),
        4 => BTreeSet::from([word(&[4, 1, 3, 5, 2])]),
        _ => {
            let mut c = vec![n, 1, 3, 4, 2];
            c.extend(5..n);
            BTreeSet::from([word(&c)])
        }
    };
    Ok(TWords { sh, x, y, z })
}

/// Word sets for `g_{2n}`: the `B_inv` word `1(n+1)2(n+2)⋯n(2n)`, the `2^n`
/// words `a_1b_1⋯a_nb_n` with `{a_i, b_i} = {i, n+i}`, and the `u_max` word.
pub fn g_words(n: usize) -> Result<(Permutation, BTreeSet<Permutation>, Permutation)> {
    if n <= 2 {
        return Err(Error::InvalidParameter(format!("g-family needs n > 2, got {n}")));
    }
    let atom = word(&(1..=n).flat_map(|i| [i, n + i]).collect::<Vec<_>>());
    let umax = word(&(1..=n).flat_map(|i| [n + i, i]).collect::<Vec<_>>());
    let plus = (0u64..1 << n)
        .map(|mask| {
            word(&(1..=n)
                .flat_map(|i| if mask >> (i - 1) & 1 == 1 { [n + i, i] } else { [i, n + i] })
                .collect::<Vec<_>>())
        })
        .collect();
    Ok((atom, plus, umax))
}

pub fn family_involution(family: ClosedFamily, n: usize) -> Result<Involution> {
    match family {
        ClosedFamily::TShifted => {
            t_words(n)?;
            Involution::from_cycles(&[(2, n)])
        }
        ClosedFamily::G2n => {
            g_words(n)?;
            Involution::from_cycles(&(2..=n).map(|i| (i, n + i - 1)).collect::<Vec<_>>())
        }
    }
}

/// The integer coefficients `GC^O_z` given by the closed form.
pub fn closed_gc(family: ClosedFamily, n: usize) -> Result<BTreeMap<Permutation, u64>> {
    let mut gc = BTreeMap::new();
    match family {
        ClosedFamily::TShifted => {
            let t = t_words(n)?;
            for w in &t.x {
                *gc.entry(w.inverse()).or_insert(0) += 2;
            }
            for w in &t.y {
                *gc.entry(w.inverse()).or_insert(0) += 1;
            }
        }
        ClosedFamily::G2n => {
            let (_, plus, umax) = g_words(n)?;
            for wi in plus {
                if wi == umax {
                    if n.is_multiple_of(2) {
                        gc.insert(wi.inverse(), 1);
                    }
                    continue;
                }
                let odes = wi.des_r().iter().filter(|&&i| i % 2 == 1).count();
                gc.insert(wi.inverse(), 1u64 << (n - 1 - odes));
            }
        }
    }
    Ok(gc)
}

/// The closed-form expansion of `𝒢^O_{(2,n)}` or `𝒢^O_{g_{2n}}` in the Grothendieck basis.
pub fn closed_form(family: ClosedFamily, n: usize) -> Result<GrothExpansion> {
    let z = family_involution(family, n)?;
    let l0 = z.ell_inv();
    let mut e = GrothExpansion::new();
    for (w, c) in closed_gc(family, n)? {
        let b = w.length().checked_sub(l0).ok_or_else(|| Error::Internal(format!("{w} shorter than ℓ_inv")))?;
        e.add_term(w, &MultiPoly::beta_term(c as i64, b as u32));
    }
    Ok(e)
}
