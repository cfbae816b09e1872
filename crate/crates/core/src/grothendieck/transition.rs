//! Transition and Pieri formulas for products with Grothendieck polynomials.

use crate::error::{Error, Result};
use crate::grothendieck::GrothExpansion;
use crate::involutions::FpfInvolution;
use crate::permgroup::Permutation;
use crate::polyring::{Int, MultiPoly};

/// `binom(n, r)`, zero outside `0 ≤ r ≤ n`.
pub(crate) fn binom(n: i64, r: i64) -> Int {
    if n < 0 || r < 0 || r > n {
        return Int::ZERO;
    }
    let r = r.min(n - r);
    let mut acc = Int::ONE;
    for t in 0..r {
        acc = acc * Int::from(n - t);
        acc = acc.div_exact(&Int::from(t + 1)).expect("binomial is integral");
    }
    acc
}

/// `±β^e` as a polynomial.
fn signed_beta(neg: bool, e: u32) -> MultiPoly {
    MultiPoly::beta_term(if neg { -1 } else { 1 }, e)
}

/// Expansion of `(1+βx_k)𝒢_v` as a signed sum over Lenart's saturated chains
/// `(a_1,k)⋯(a_p,k)(k,b_1)⋯(k,b_q)` with `a_p<⋯<a_1<k<b_q<⋯<b_1`.
pub fn lenart_transition(k: usize, v: &Permutation) -> GrothExpansion {
    assert!(k >= 1, "lenart_transition needs k ≥ 1");
    let mut out = GrothExpansion::new();
    let mut phase1: Vec<(Permutation, u32)> = Vec::new();
    fn down(u: &Permutation, k: usize, below: usize, p: u32, acc: &mut Vec<(Permutation, u32)>) {
        acc.push((u.clone(), p));
        for a in (1..below).rev() {
            if let Some(next) = u.bruhat_cover(a, k) {
                down(&next, k, a, p + 1, acc);
            }
        }
    }
    down(v, k, k, 0, &mut phase1);
    fn up(u: &Permutation, k: usize, above: usize, p: u32, q: u32, out: &mut GrothExpansion) {
        out.add_term(u.clone(), &signed_beta(p % 2 == 1, p + q));
        for b in (k + 1..above).rev() {
            if let Some(next) = u.bruhat_cover(k, b) {
                up(&next, k, b, p, q + 1, out);
            }
        }
    }
    for (u, p) in phase1 {
        let bound = u.n().max(k) + 2;
        up(&u, k, bound, p, 0, &mut out);
    }
    out
}

/// An unmarked k-Pieri chain: the covers `(a_i, b_i)` and the endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriChain {
    pub steps: Vec<(usize, usize)>,
    pub end: Permutation,
}

/// `F_k`: indices i with `b_1=⋯=b_i` and `a_1>⋯>a_i`, or with `i<q`,
/// `b_i = b_{i+1}` and `a_i > a_{i+1}`.
pub fn f_stat(steps: &[(usize, usize)]) -> usize {
    let q = steps.len();
    (0..q)
        .filter(|&i| {
            let prefix = (0..i).all(|t| steps[t].1 == steps[t + 1].1 && steps[t].0 > steps[t + 1].0);
            let next = i + 1 < q && steps[i].1 == steps[i + 1].1 && steps[i].0 > steps[i + 1].0;
            prefix || next
        })
        .count()
}

/// `P_k`: indices i with `a_j = a_i` for some `j < i`.
pub fn p_stat(steps: &[(usize, usize)]) -> usize {
    (0..steps.len()).filter(|&i| steps[..i].iter().any(|s| s.0 == steps[i].0)).count()
}

/// Whether appending `(a, b)` keeps conditions (P0) and (P1).
fn extends(steps: &[(usize, usize)], a: usize, b: usize) -> bool {
    let Some(&(ai, bi)) = steps.last() else {
        return true;
    };
    if b > bi {
        return false;
    }
    let repeated = steps[..steps.len() - 1].iter().any(|s| s.0 == ai);
    !(repeated && ai > a && bi <= b)
}

/// All unmarked k-Pieri chains from `v` whose covers `(a,b)` pass `allow`,
/// including the trivial chain. Each chain is visited once.
pub fn k_pieri_chains(
    v: &Permutation,
    k: usize,
    allow: &dyn Fn(usize, usize) -> bool,
) -> Vec<PieriChain> {
    let bound = v.n().max(k) + 1;
    let mut out = Vec::new();
    fn rec(
        u: &Permutation,
        k: usize,
        bound: usize,
        steps: &mut Vec<(usize, usize)>,
        allow: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<PieriChain>,
    ) {
        out.push(PieriChain { steps: steps.clone(), end: u.clone() });
        let bmax = steps.last().map_or(bound, |s| s.1);
        for b in k + 1..=bmax {
            for a in 1..=k {
                if !allow(a, b) || !extends(steps, a, b) {
                    continue;
                }
                if let Some(next) = u.bruhat_cover(a, b) {
                    steps.push((a, b));
                    rec(&next, k, bound, steps, allow, out);
                    steps.pop();
                }
            }
        }
    }
    rec(v, k, bound, &mut Vec::new(), allow, &mut out);
    out
}

/// The unique unmarked k-Pieri chain from `v` to `w` with its `(F_k, P_k)`.
///
/// Returns an internal error if the exhaustive search finds two chains.
pub fn pieri_chain(
    v: &Permutation,
    w: &Permutation,
    k: usize,
) -> Result<Option<(PieriChain, usize, usize)>> {
    if !v.bruhat_le(w) {
        return Ok(None);
    }
    let lw = w.length();
    let bound = v.n().max(k) + 1;
    let mut found: Vec<PieriChain> = Vec::new();
    fn rec(
        u: &Permutation,
        w: &Permutation,
        lw: usize,
        k: usize,
        bound: usize,
        steps: &mut Vec<(usize, usize)>,
        found: &mut Vec<PieriChain>,
    ) {
        if u == w {
            found.push(PieriChain { steps: steps.clone(), end: u.clone() });
            return;
        }
        if u.length() >= lw {
            return;
        }
        let bmax = steps.last().map_or(bound, |s| s.1);
        for b in k + 1..=bmax {
            for a in 1..=k {
                if !extends(steps, a, b) {
                    continue;
                }
                if let Some(next) = u.bruhat_cover(a, b) {
                    if next.bruhat_le(w) {
                        steps.push((a, b));
                        rec(&next, w, lw, k, bound, steps, found);
                        steps.pop();
                    }
                }
            }
        }
    }
    rec(v, w, lw, k, bound, &mut Vec::new(), &mut found);
    match found.len() {
        0 => Ok(None),
        1 => {
            let c = found.pop().expect("one chain");
            let (f, p) = (f_stat(&c.steps), p_stat(&c.steps));
            Ok(Some((c, f, p)))
        }
        _ => Err(Error::Internal(format!("two unmarked {k}-Pieri chains from {v} to {w}"))),
    }
}

/// Expansion of `𝒢_{[1^p|k]}·𝒢_v` by the k-Pieri chain rule with coefficients
/// `binom(ℓ(w)−ℓ(v)−F−P, p−F) β^{ℓ(w)−ℓ(v)−p}`.
pub fn lensot_product(p: usize, k: usize, v: &Permutation) -> Result<GrothExpansion> {
    if p == 0 || p > k {
        return Err(Error::InvalidParameter(format!("p out of range: p={p}, k={k}")));
    }
    let lv = v.length() as i64;
    let mut out = GrothExpansion::new();
    for c in k_pieri_chains(v, k, &|_, _| true) {
        let d = c.end.length() as i64 - lv;
        let (f, pp) = (f_stat(&c.steps) as i64, p_stat(&c.steps) as i64);
        let coeff = binom(d - f - pp, p as i64 - f);
        if coeff.is_zero() {
            continue;
        }
        let e = d - p as i64;
        if e < 0 {
            return Err(Error::Internal(format!("negative β power for chain to {}", c.end)));
        }
        out.add_term(c.end, &MultiPoly::beta_term(coeff, e as u32));
    }
    Ok(out)
}

/// Expansion of `𝒢_{[1^p|k]}·𝒢_{[λ|k]}` by adding vertical strips.
pub fn grassmannian_pieri(p: usize, k: usize, lambda: &[usize]) -> Result<GrothExpansion> {
    if p == 0 || p > k {
        return Err(Error::InvalidParameter(format!("p out of range: p={p}, k={k}")));
    }
    let lam: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
    if lam.len() > k || lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!("{lambda:?} is not a partition with ≤ {k} parts")));
    }
    let mut padded = lam.clone();
    padded.resize(k, 0);
    let mut out = GrothExpansion::new();
    for mask in 0u32..(1 << k) {
        let mu: Vec<usize> =
            (0..k).map(|i| padded[i] + ((mask >> i) & 1) as usize).collect();
        if mu.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size < p {
            continue;
        }
        let cols: std::collections::BTreeSet<usize> =
            (0..k).filter(|&i| (mask >> i) & 1 == 1).map(|i| mu[i]).collect();
        let coeff = binom(cols.len() as i64 - 1, (size - p) as i64);
        if coeff.is_zero() {
            continue;
        }
        let w = Permutation::grassmannian(&mu, k)?;
        out.add_term(w, &MultiPoly::beta_term(coeff, (size - p) as u32));
    }
    Ok(out)
}

/// `∏_{i≤k}(2+βx_i) = 2^k − Σ_{j=1}^k 2^{k−j}(−β)^j 𝒢_{[1^j|k]}`.
pub fn two_power_product(k: usize) -> Result<GrothExpansion> {
    if k == 0 {
        return Err(Error::InvalidParameter("two_power_product needs k ≥ 1".into()));
    }
    let mut out = GrothExpansion::new();
    out.add_term(Permutation::identity(), &MultiPoly::constant(Int::pow2(k as u32)));
    for j in 1..=k {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        let c = Int::pow2((k - j) as u32) * Int::from(sign);
        let w = Permutation::grassmannian(&vec![1; j], k)?;
        out.add_term(w, &MultiPoly::beta_term(c, j as u32));
    }
    Ok(out)
}

/// Right side of the identity
/// `(1+βx_{n+1})𝒢_{[1^j|n]} = Σ_{i=j}^n (−β)^{i−j}𝒢_{[1^i|n]} − Σ_{i=j+1}^{n+1} (−β)^{i−j}𝒢_{[1^i|n+1]}`.
pub fn lemma_1gr(n: usize, j: usize) -> Result<GrothExpansion> {
    if j > n {
        return Err(Error::InvalidParameter(format!("need 0 ≤ j ≤ n, got j={j}, n={n}")));
    }
    let mut out = GrothExpansion::new();
    for i in j..=n {
        let d = (i - j) as u32;
        out.add_term(Permutation::grassmannian(&vec![1; i], n)?, &signed_beta(d % 2 == 1, d));
    }
    for i in j + 1..=n + 1 {
        let d = (i - j) as u32;
        out.add_term(Permutation::grassmannian(&vec![1; i], n + 1)?, &signed_beta(d.is_multiple_of(2), d));
    }
    Ok(out)
}

/// `𝒢^{Sp}_z = Σ_{w ≈ α_fpf(z)} β^{ℓ(w)−ℓ_fpf(z)} 𝒢_w`, as a polynomial and an expansion.
pub fn symp_groth(z: &FpfInvolution) -> (MultiPoly, GrothExpansion) {
    let l0 = z.ell_fpf();
    let mut e = GrothExpansion::new();
    for w in z.approx_class() {
        let b = (w.length() - l0) as u32;
        e.add_term(w, &MultiPoly::beta_pow(b));
    }
    (e.eval(), e)
}
