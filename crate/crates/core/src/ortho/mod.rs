//! Involution and orthogonal Grothendieck polynomials and their `GC^O` expansions.

mod closed;
mod shiftable;
mod stable;
mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grothendieck::{expand, k_pieri_chains, GrothExpansion};
use crate::involutions::Involution;
use crate::permgroup::Permutation;
use crate::polyring::{Int, MultiPoly};

pub use closed::{closed_form, closed_gc, family_involution, g_words, t_words, ClosedFamily, TWords};
pub use shiftable::{
    ivex_formula, ivex_terms, is_locally_noncrossing, shiftable_data, Segment, ShiftableData,
    ShiftableSet,
};
pub use stable::{
    gq_shiftable_truncation, igrass_expansion, igrass_stable_truncation, igrass_sum,
    shift_expansion, stab_operator, stable_groth_truncation, stable_limit, stable_truncation,
    IgrassTerm, ShiftMode, StableKind,
};
pub use support::{binv_plus, BinvPlus};

type PolyCache = RwLock<FxHashMap<Involution, Arc<MultiPoly>>>;

fn ortho_cache() -> &'static PolyCache {
    static C: OnceLock<PolyCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(FxHashMap::default()))
}

fn invgroth_cache() -> &'static PolyCache {
    static C: OnceLock<PolyCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(FxHashMap::default()))
}

/// Drops all memoized `Ĝ_z` and `𝒢^O_z`.
pub fn clear_caches() {
    ortho_cache().write().expect("cache lock").clear();
    invgroth_cache().write().expect("cache lock").clear();
}

/// `Ĝ_z = Σ_{w ∈ B_inv(z)} β^{ℓ(w)−ℓ_inv(z)} 𝒢_w`.
pub fn invgroth(z: &Involution) -> Arc<MultiPoly> {
    if let Some(p) = invgroth_cache().read().expect("cache lock").get(z) {
        return p.clone();
    }
    let p = Arc::new(invgroth_expansion(z).eval());
    invgroth_cache().write().expect("cache lock").insert(z.clone(), p.clone());
    p
}

/// The defining expansion of `Ĝ_z`.
pub fn invgroth_expansion(z: &Involution) -> GrothExpansion {
    let l0 = z.ell_inv();
    let mut e = GrothExpansion::new();
    for w in z.binv() {
        let b = (w.length() - l0) as u32;
        e.add_term(w, &MultiPoly::beta_pow(b));
    }
    e
}

/// `∏_{(i,i)∈D_λ} x_i ∏_{(i,j)∈D_λ, i<j} x_i⊕x_j` for a symmetric partition λ.
pub fn invgroth_dominant(lambda: &[usize]) -> Result<MultiPoly> {
    let lam: Vec<usize> = lambda.iter().copied().filter(|&p| p > 0).collect();
    if lam.windows(2).any(|w| w[0] < w[1]) || crate::involutions::transpose(&lam) != lam {
        return Err(Error::InvalidParameter(format!("not symmetric: {lambda:?}")));
    }
    let mut p = MultiPoly::one();
    for (r, &len) in lam.iter().enumerate() {
        let i = r + 1;
        for j in i..=len {
            let f = if i == j { MultiPoly::x(i) } else { MultiPoly::x(i).oplus(&MultiPoly::x(j)) };
            p = p.mul(&f);
        }
    }
    Ok(p)
}

/// `∏_{(i,j) ∈ D(z), i ≤ j} x_i ⊕ x_j` for a dominant involution.
pub fn ortho_dominant(z: &Involution) -> Result<MultiPoly> {
    if !z.is_dominant() {
        return Err(Error::InvalidParameter(format!("{z} is not dominant")));
    }
    let mut p = MultiPoly::one();
    for (i, j) in z.hat_diagram() {
        p = p.mul(&MultiPoly::x(i).oplus(&MultiPoly::x(j)));
    }
    Ok(p)
}

/// `𝒢^O_z` for vexillary z, obtained from the dominant product at `dom_pq`
/// by the divided differences along the path to `dom_pq`. Memoized.
pub fn ortho_groth(z: &Involution) -> Result<Arc<MultiPoly>> {
    if !z.is_vexillary() {
        return Err(Error::NotVexillary(z.to_string()));
    }
    ortho_groth_vex(z)
}

fn ortho_groth_vex(z: &Involution) -> Result<Arc<MultiPoly>> {
    if let Some(p) = ortho_cache().read().expect("cache lock").get(z) {
        return Ok(p.clone());
    }
    let p = match z.dom_step() {
        None => ortho_dominant(z)?,
        Some(j) => {
            let next = z.conj_s(j);
            if next.length() != z.length() + 2 || !next.is_vexillary() {
                return Err(Error::Internal(format!("invalid weak-order step {z} -{j}-> {next}")));
            }
            ortho_groth_vex(&next)?.beta_divdiff(j)
        }
    };
    let p = Arc::new(p);
    ortho_cache().write().expect("cache lock").insert(z.clone(), p.clone());
    Ok(p)
}

/// The integer coefficients `GC^O_z(w)` together with the full expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gco {
    pub z: Involution,
    pub coeffs: BTreeMap<Permutation, u64>,
    #[serde(skip)]
    pub expansion: GrothExpansion,
}

impl Gco {
    pub fn get(&self, w: &Permutation) -> Option<&u64> {
        self.coeffs.get(w)
    }

    /// `GC^O_z(w)`, zero off the support.
    pub fn value(&self, w: &Permutation) -> u64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<Permutation> {
        self.coeffs.keys().cloned().collect()
    }

    /// Sorted distinct nonzero values.
    pub fn values(&self) -> BTreeSet<u64> {
        self.coeffs.values().copied().collect()
    }

    fn from_expansion(z: &Involution, e: GrothExpansion) -> Result<Gco> {
        let norm = e.normalized(z.ell_inv())?;
        let mut coeffs = BTreeMap::new();
        for (w, c) in norm {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(format!("GC^O_{z}({w}) = {c}")));
            }
            let v = c.to_i64().ok_or_else(|| Error::Internal(format!("GC^O_{z}({w}) too large")))?;
            coeffs.insert(w, v as u64);
        }
        Ok(Gco { z: z.clone(), coeffs, expansion: e })
    }
}

/// `GC^O_z` by expanding `𝒢^O_z` in the Grothendieck basis.
pub fn gco(z: &Involution) -> Result<Gco> {
    let e = expand(&*ortho_groth(z)?)?;
    Gco::from_expansion(z, e)
}

/// `GC^O_z` by expanding only `𝒢^O_{dom_pq}` and transporting the expansion
/// along the path to `dom_pq` with `∂^{(β)}_i 𝒢_w = 𝒢_{ws_i}` for `i ∈ Des_R(w)`
/// and `−β𝒢_w` otherwise.
pub fn gco_by_path(z: &Involution) -> Result<Gco> {
    let path = z.dom_path()?;
    let top = path.steps.last().map_or(z.clone(), |s| s.1.clone());
    let mut e = expand(&*ortho_groth(&top)?)?;
    for (i, _) in path.steps.iter().rev() {
        e = divdiff_expansion(&e, *i);
    }
    Gco::from_expansion(z, e)
}

/// `∂^{(β)}_i` applied termwise to an expansion.
pub fn divdiff_expansion(e: &GrothExpansion, i: usize) -> GrothExpansion {
    let mut out = GrothExpansion::new();
    let minus_beta = MultiPoly::beta_term(-1, 1);
    for (w, c) in e.iter() {
        if w.has_right_descent(i) {
            out.add_term(w.right_mul_s(i), c);
        } else {
            out.add_term(w.clone(), &c.mul(&minus_beta));
        }
    }
    out
}

/// `Ĝ_z ∏_{i ≤ k(z)} (2+βx_i)` for quasi-dominant vexillary z.
pub fn qd_formula(z: &Involution) -> Result<MultiPoly> {
    if !z.is_vexillary() {
        return Err(Error::NotVexillary(z.to_string()));
    }
    if !z.is_quasi_dominant() {
        return Err(Error::NotQuasiDominant(z.to_string()));
    }
    let mut p = (*invgroth(z)).clone();
    for i in 1..=z.k() {
        p = p.mul(&MultiPoly::c_plus_beta_x(2, i));
    }
    Ok(p)
}

/// `GC^O_z(w) = Σ_{v ∈ B_inv(z)} ε_k(v,w) ρ_k(v,w)` over unmarked k-Pieri chains, `k = k(z)`,
/// with `ε = (−1)^{1+F}`, `ρ = 2^{k+ℓ(v)−ℓ(w)+P}` and `ε·ρ = 2^k` for the trivial chain.
pub fn dom_thm_gco(z: &Involution) -> Result<BTreeMap<Permutation, u64>> {
    if !z.is_vexillary() {
        return Err(Error::NotVexillary(z.to_string()));
    }
    if !z.is_quasi_dominant() {
        return Err(Error::NotQuasiDominant(z.to_string()));
    }
    let k = z.k() as i64;
    let mut parts: BTreeMap<Permutation, Vec<(bool, i64)>> = BTreeMap::new();
    for v in z.binv() {
        let lv = v.length() as i64;
        for c in k_pieri_chains(&v, k as usize, &|_, _| true) {
            let term = if c.steps.is_empty() {
                (false, k)
            } else {
                let f = crate::grothendieck::f_stat(&c.steps) as i64;
                let p = crate::grothendieck::p_stat(&c.steps) as i64;
                ((1 + f) % 2 == 1, k + lv - c.end.length() as i64 + p)
            };
            parts.entry(c.end).or_default().push(term);
        }
    }
    let mut out = BTreeMap::new();
    for (w, terms) in parts {
        let shift = terms.iter().map(|t| t.1).min().unwrap_or(0).min(0);
        let mut total = Int::ZERO;
        for (neg, e) in terms {
            let t = Int::pow2((e - shift) as u32);
            total = if neg { total - t } else { total + t };
        }
        let total = total
            .div_exact(&Int::pow2((-shift) as u32))
            .ok_or_else(|| Error::Internal(format!("non-integral dom-thm sum at {w}")))?;
        if total.is_negative() {
            return Err(Error::NegativeCoefficient(format!("dom-thm sum at {w} is {total}")));
        }
        if !total.is_zero() {
            out.insert(w, total.to_i64().expect("small") as u64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> Involution {
        Involution::parse(s).unwrap()
    }
    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }
    fn x(i: usize) -> MultiPoly {
        MultiPoly::x(i)
    }
    fn b() -> MultiPoly {
        MultiPoly::beta()
    }
    fn c(v: i64) -> MultiPoly {
        MultiPoly::constant(v)
    }

    #[test]
    fn involution_grothendieck() {
        let want = x(1) * x(2) * x(1).oplus(&x(2)) * x(1).oplus(&x(3)) * x(2).oplus(&x(3));
        assert_eq!(*invgroth(&z("(1,4)(2,5)")), want);
        assert_eq!(invgroth_dominant(&[3, 3, 2]).unwrap(), want);
        assert_eq!(*invgroth(&Involution::identity()), c(1));
        assert_eq!(*invgroth(&z("(1,2)")), x(1));
        assert_eq!(invgroth_dominant(&[1]).unwrap(), x(1));
        assert_eq!(invgroth_dominant(&[2, 1]).unwrap(), x(1) * x(1).oplus(&x(2)));
        assert!(invgroth_dominant(&[2]).is_err());
    }

    #[test]
    fn orthogonal_examples() {
        assert_eq!(*ortho_groth(&z("(1,2)")).unwrap(), c(2) * x(1) + b() * x(1) * x(1));
        let want = c(2) * x(1) * x(2) + c(2) * x(1) * x(1) + c(3) * b() * x(1) * x(1) * x(2)
            + b() * x(1) * x(1) * x(1)
            + b() * b() * x(1) * x(1) * x(1) * x(2);
        assert_eq!(*ortho_groth(&z("(1,3)")).unwrap(), want);
        let w0 = z("54321");
        let mut prod = c(1);
        for i in 1..=5usize {
            for j in i..=5 - i {
                prod = prod * x(i).oplus(&x(j));
            }
        }
        assert_eq!(*ortho_groth(&w0).unwrap(), prod);
        assert!(ortho_groth(&z("(1,2)(3,4)")).is_err());
    }

    #[test]
    fn gco_examples() {
        let g = gco(&z("(2,3)")).unwrap();
        let want: BTreeMap<Permutation, u64> =
            [(p("132"), 2), (p("231"), 1), (p("1423"), 1), (p("2413"), 1)].into_iter().collect();
        assert_eq!(g.coeffs, want);
        let g = gco(&z("(1,4)")).unwrap();
        assert_eq!(g.value(&p("4213").inverse()), 3);
        assert_eq!(g.value(&p("4231").inverse()), 1);
        assert_eq!(g.value(&p("4123").inverse()), 2);
        let g = gco(&Involution::identity()).unwrap();
        assert_eq!(g.coeffs, [(Permutation::identity(), 1)].into_iter().collect());
    }

    #[test]
    fn quasi_dominant_formula() {
        assert_eq!(qd_formula(&z("(1,2)")).unwrap(), c(2) * x(1) + b() * x(1) * x(1));
        assert_eq!(qd_formula(&Involution::identity()).unwrap(), c(1));
        let y = z("(1,4)(2,5)");
        assert_eq!(qd_formula(&y).unwrap(), *ortho_groth(&y).unwrap());
        assert!(matches!(qd_formula(&z("(2,3)")), Err(Error::NotQuasiDominant(_))));
    }

    #[test]
    fn dom_thm_examples() {
        let d = dom_thm_gco(&z("(1,2)")).unwrap();
        assert_eq!(d, [(p("21"), 2), (p("312"), 1)].into_iter().collect());
        let d = dom_thm_gco(&z("(1,4)")).unwrap();
        assert_eq!(d.get(&p("4213").inverse()), Some(&3));
        assert_eq!(d, gco(&z("(1,4)")).unwrap().coeffs);
    }

    #[test]
    fn path_transport_matches_direct_expansion() {
        for y in Involution::all_vexillary(5) {
            assert_eq!(gco_by_path(&y).unwrap().coeffs, gco(&y).unwrap().coeffs, "{y}");
        }
    }
}
