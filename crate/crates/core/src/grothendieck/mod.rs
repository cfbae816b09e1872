//! Grothendieck polynomials `𝒢^{(β)}_w` and expansions in the Grothendieck basis.

mod transition;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;
use crate::polyring::{Int, Monomial, MultiPoly};

pub use transition::{
    f_stat, grassmannian_pieri, k_pieri_chains, lemma_1gr, lenart_transition, lensot_product,
    p_stat, pieri_chain, symp_groth, two_power_product, PieriChain,
};

type Cache = RwLock<FxHashMap<Permutation, Arc<MultiPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(FxHashMap::default()))
}

/// Drops all memoized Grothendieck polynomials.
pub fn clear_cache() {
    cache().write().expect("cache lock").clear();
}

/// `𝒢^{(β)}_w`, memoized across threads.
///
/// Starts from `𝒢_{w_0} = x_1^{n−1} ⋯ x_{n−1}` for `w ∈ S_n` and applies
/// `∂^{(β)}_i` at the smallest ascent `i` of `w`, since `𝒢_w = ∂^{(β)}_i 𝒢_{w s_i}`.
pub fn groth(w: &Permutation) -> Arc<MultiPoly> {
    if let Some(p) = cache().read().expect("cache lock").get(w) {
        return p.clone();
    }
    let n = w.n();
    let p = match (1..n).find(|&i| !w.has_right_descent(i)) {
        None => {
            let exps: Vec<u32> = (1..n).rev().map(|e| e as u32).collect();
            MultiPoly::term(Monomial::new(0, &exps), 1)
        }
        Some(i) => groth(&w.right_mul_s(i)).beta_divdiff(i),
    };
    let p = Arc::new(p);
    cache().write().expect("cache lock").insert(w.clone(), p.clone());
    p
}

/// `𝒢^{(β)}_w` along an arbitrary choice of ascents, without memoization.
///
/// `pick` chooses among the ascents of the current permutation; used to test
/// independence of the reduced word.
pub fn groth_via(w: &Permutation, n: usize, pick: &dyn Fn(&[usize]) -> usize) -> MultiPoly {
    let n = n.max(w.n());
    let mut word = Vec::new();
    let mut u = w.clone();
    loop {
        let asc: Vec<usize> = (1..n).filter(|&i| !u.has_right_descent(i)).collect();
        if asc.is_empty() {
            break;
        }
        let i = pick(&asc);
        word.push(i);
        u = u.right_mul_s(i);
    }
    let exps: Vec<u32> = (1..n).rev().map(|e| e as u32).collect();
    let mut p = MultiPoly::term(Monomial::new(0, &exps), 1);
    for &i in word.iter().rev() {
        p = p.beta_divdiff(i);
    }
    p
}

/// `𝒢^{(β)}_w` as a sum over bounded compatible sequences of Hecke words.
pub fn groth_oracle(w: &Permutation) -> MultiPoly {
    let letters = w.n().max(2) - 1;
    let lw = w.length() as u32;
    let mut terms: Vec<(Monomial, Int)> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        w: &Permutation,
        lw: u32,
        letters: usize,
        u: &Permutation,
        last: Option<(usize, usize)>,
        len: u32,
        xs: &mut Vec<u32>,
        terms: &mut Vec<(Monomial, Int)>,
    ) {
        if u == w {
            terms.push((Monomial::new(len - lw, xs), Int::ONE));
        }
        for a in 1..=letters {
            let lo = match last {
                None => 1,
                Some((la, li)) if la <= a => li + 1,
                Some((_, li)) => li,
            };
            let v = u.demazure_s(a);
            if lo > a || !v.bruhat_le(w) {
                continue;
            }
            for i in lo..=a {
                xs[i - 1] += 1;
                rec(w, lw, letters, &v, Some((a, i)), len + 1, xs, terms);
                xs[i - 1] -= 1;
            }
        }
    }
    let mut xs = vec![0u32; letters];
    rec(w, lw, letters, &Permutation::identity(), None, 0, &mut xs, &mut terms);
    MultiPoly::from_terms(terms)
}

/// A finite sum `Σ_w c_w(β) 𝒢^{(β)}_w` with coefficients in `Z[β]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GrothExpansion {
    coeffs: BTreeMap<Permutation, MultiPoly>,
}

impl GrothExpansion {
    pub fn new() -> GrothExpansion {
        GrothExpansion::default()
    }

    /// The single basis element `𝒢_w`.
    pub fn basis(w: Permutation) -> GrothExpansion {
        let mut e = GrothExpansion::new();
        e.add_term(w, &MultiPoly::one());
        e
    }

    /// Adds `c · 𝒢_w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Permutation, c: &MultiPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(old) => {
                let s = old.add(c);
                if s.is_zero() {
                    self.coeffs.remove(&w);
                } else {
                    *old = s;
                }
            }
            None => {
                self.coeffs.insert(w, c.clone());
            }
        }
    }

    pub fn get(&self, w: &Permutation) -> Option<&MultiPoly> {
        self.coeffs.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &MultiPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Permutation> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn add(&self, other: &GrothExpansion) -> GrothExpansion {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &GrothExpansion) -> GrothExpansion {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    /// Multiplies every coefficient by a polynomial in β.
    pub fn scale(&self, c: &MultiPoly) -> GrothExpansion {
        let mut out = GrothExpansion::new();
        for (w, k) in &self.coeffs {
            out.add_term(w.clone(), &k.mul(c));
        }
        out
    }

    /// Relabels basis indices; `None` drops the term.
    pub fn map_index(&self, f: impl Fn(&Permutation) -> Option<Permutation>) -> GrothExpansion {
        let mut out = GrothExpansion::new();
        for (w, c) in &self.coeffs {
            if let Some(v) = f(w) {
                out.add_term(v, c);
            }
        }
        out
    }

    /// `Σ_w c_w 𝒢_w` as a polynomial.
    pub fn eval(&self) -> MultiPoly {
        let mut terms = Vec::new();
        for (w, c) in &self.coeffs {
            let g = groth(w);
            for (m, k) in c.terms() {
                terms.extend(g.terms().iter().map(|(gm, gk)| (gm.mul(m), gk * k)));
            }
        }
        MultiPoly::from_terms(terms)
    }

    /// Terms in the canonical output order: by `ℓ(w)`, then one-line lex.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &MultiPoly)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
        v
    }

    /// Writes each coefficient as `γ_w β^{ℓ(w) − degree}` and returns the integers `γ_w`.
    pub fn normalized(&self, degree: usize) -> Result<BTreeMap<Permutation, Int>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let l = w.length();
            let (g, b) = c.as_beta_monomial().ok_or_else(|| {
                Error::Internal(format!("coefficient {c} of {w} is not a single β-power"))
            })?;
            if l < degree || b as usize != l - degree {
                return Err(Error::Internal(format!(
                    "coefficient {c} of {w} is not homogeneous of degree {degree}"
                )));
            }
            out.insert(w.clone(), g);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct ExpTerm {
    w: Permutation,
    coeff: MultiPoly,
}

#[derive(Serialize, Deserialize)]
struct ExpRepr {
    terms: Vec<ExpTerm>,
}

impl Serialize for GrothExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpRepr {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| ExpTerm { w: w.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrothExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExpRepr::deserialize(d)?;
        let mut e = GrothExpansion::new();
        for t in r.terms {
            e.add_term(t.w, &t.coeff);
        }
        Ok(e)
    }
}

impl fmt::Display for GrothExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| if *c == MultiPoly::one() { format!("G[{w}]") } else { format!("({c})*G[{w}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GrothExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The default step budget `10·(#terms + degree)²`, overridable by `GROTH_STEP_BUDGET`.
pub fn step_budget(p: &MultiPoly) -> usize {
    if let Some(b) = std::env::var("GROTH_STEP_BUDGET").ok().and_then(|s| s.parse().ok()) {
        return b;
    }
    let deg = p.terms().iter().map(|(m, _)| m.x_degree() as usize).max().unwrap_or(0);
    let t = p.len() + deg;
    10 * t * t
}

/// Expands a polynomial in the Grothendieck basis.
///
/// Peels the lexicographically smallest monomial `x^c` among the terms of
/// least x-degree: it occurs only in `𝔖_w` for the `w` with Lehmer code `c`,
/// where `𝔖_w` is the lowest-degree part of `𝒢_w`.
pub fn expand(p: &MultiPoly) -> Result<GrothExpansion> {
    let budget = step_budget(p);
    let mut rem: BTreeMap<(u32, Monomial, u32), Int> = BTreeMap::new();
    for (m, c) in p.terms() {
        rem.insert((m.x_degree(), m.x_part(), m.beta()), c.clone());
    }
    let mut out = GrothExpansion::new();
    let mut steps = 0;
    while let Some((&(deg, xm, _), _)) = rem.iter().next() {
        steps += 1;
        if steps > budget {
            return Err(Error::NonTermination(budget));
        }
        let lead: Vec<(u32, Int)> = rem
            .range((deg, xm, 0)..=(deg, xm, u32::MAX))
            .map(|(&(_, _, b), c)| (b, c.clone()))
            .collect();
        let code: Vec<usize> = xm.xs().into_iter().map(|e| e as usize).collect();
        let w = Permutation::from_code(&code);
        let g = groth(&w);
        let mut coeff = Vec::new();
        for (b, gamma) in lead {
            coeff.push((Monomial::ONE.with_beta(b), gamma.clone()));
            for (m, k) in g.terms() {
                let key = (m.x_degree(), m.x_part(), m.beta() + b);
                let delta = k * &gamma;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= &delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
        }
        out.add_term(w, &MultiPoly::from_terms(coeff));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }
    fn x(i: usize) -> MultiPoly {
        MultiPoly::x(i)
    }
    fn b() -> MultiPoly {
        MultiPoly::beta()
    }

    #[test]
    fn golden_polynomials() {
        assert_eq!(*groth(&p("132")), x(1) + x(2) + b() * x(1) * x(2));
        assert_eq!(*groth(&p("312")), x(1) * x(1));
        assert_eq!(*groth(&p("321")), x(1) * x(1) * x(2));
        assert_eq!(*groth(&p("213")), x(1));
        assert_eq!(*groth(&Permutation::identity()), MultiPoly::one());
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(groth_oracle(&Permutation::identity()), MultiPoly::one());
        assert_eq!(groth_oracle(&p("21")), x(1));
        assert_eq!(groth_oracle(&p("132")), x(1) + x(2) + b() * x(1) * x(2));
    }

    #[test]
    fn expansion_examples() {
        let e = expand(&groth(&p("25314"))).unwrap();
        assert_eq!(e, GrothExpansion::basis(p("25314")));
        let f = MultiPoly::constant(2) * x(1) + b() * x(1) * x(1);
        let e = expand(&f).unwrap();
        assert_eq!(e.get(&p("213")), Some(&MultiPoly::constant(2)));
        assert_eq!(e.get(&p("312")), Some(&b()));
        assert_eq!(e.len(), 2);
        assert_eq!(e.eval(), f);
    }

    #[test]
    fn expansion_json_order() {
        let mut e = GrothExpansion::new();
        e.add_term(p("312"), &b());
        e.add_term(p("213"), &MultiPoly::constant(2));
        assert_eq!(
            e.to_json(),
            r#"{"terms":[{"w":[2,1],"coeff":{"terms":[{"b":0,"x":[],"c":"2"}]}},{"w":[3,1,2],"coeff":{"terms":[{"b":1,"x":[],"c":"1"}]}}]}"#
        );
        let back: GrothExpansion = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(back, e);
    }
}
