//! Shift operators, stable limits and the I-Grassmannian expansion.

use crate::error::{Error, Result};
use crate::grothendieck::{groth, GrothExpansion};
use crate::involutions::Involution;
use crate::permgroup::Permutation;
use crate::polyring::MultiPoly;

use super::shiftable::shiftable_data;
use super::{invgroth, ortho_groth};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftMode {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableKind {
    /// Limit of `𝒢^O_{1^n×z}`.
    GQ,
    /// Limit of `Ĝ_{1^n×z}`.
    GP,
}

/// Up: `𝒢_w ↦ 𝒢_{1×w}`. Down: `𝒢_w ↦ 𝒢_{w↓1}` if `w(1) = 1`, else 0.
pub fn shift_expansion(e: &GrothExpansion, mode: ShiftMode) -> GrothExpansion {
    match mode {
        ShiftMode::Up => e.map_index(|w| Some(w.one_times(1))),
        ShiftMode::Down => e.map_index(|w| if w.apply(1) == 1 { w.shift_down(1).ok() } else { None }),
    }
}

/// `𝒢^O_{1^steps×z}` (or `Ĝ_{1^steps×z}`) with `x_i = 0` for `i > vars`.
pub fn stable_truncation(z: &Involution, kind: StableKind, steps: usize, vars: usize) -> Result<MultiPoly> {
    let y = z.one_times(steps);
    Ok(match kind {
        StableKind::GQ => ortho_groth(&y)?.truncate(vars),
        StableKind::GP => invgroth(&y).truncate(vars),
    })
}

/// The first truncation that agrees with the next one, with its step count.
pub fn stable_limit(z: &Involution, kind: StableKind, vars: usize, max_steps: usize) -> Result<(MultiPoly, usize)> {
    let mut prev = stable_truncation(z, kind, 0, vars)?;
    for steps in 1..=max_steps {
        let cur = stable_truncation(z, kind, steps, vars)?;
        if cur == prev {
            return Ok((cur, steps - 1));
        }
        prev = cur;
    }
    Err(Error::NonTermination(max_steps))
}

/// `G_w(x_1, …, x_vars)` as the stable truncation of `𝒢_{1^m×w}`.
pub fn stable_groth_truncation(w: &Permutation, vars: usize, max_steps: usize) -> Result<MultiPoly> {
    let mut prev = groth(w).truncate(vars);
    for m in 1..=max_steps {
        let cur = groth(&w.one_times(m)).truncate(vars);
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NonTermination(max_steps))
}

/// `stab_n = π_{2↘1} π_{3↘1} ⋯ π_{n↘1}` with `π_{b↘a} = π_{b−1} ⋯ π_a`.
pub fn stab_operator(n: usize, p: &MultiPoly) -> MultiPoly {
    let mut f = p.clone();
    for b in (2..=n).rev() {
        for i in 1..b {
            f = f.isobaric(i);
        }
    }
    f
}

/// One summand `(−1)^{cols(λ/μ)} ϖ^{(n)}_{λ/μ} (−β)^{|λ/μ|} Ĝ_{⟨λ|n⟩}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgrassTerm {
    pub lambda: Vec<usize>,
    pub z: Involution,
    /// `(−1)^{cols(λ/μ) + |λ/μ|}`.
    pub sign: i64,
    pub varpi: MultiPoly,
    pub beta_pow: u32,
    pub cols: usize,
    pub top_rows: Vec<usize>,
}

impl IgrassTerm {
    /// The coefficient of `Ĝ_{⟨λ|n⟩}`.
    pub fn coefficient(&self) -> MultiPoly {
        self.varpi.mul(&MultiPoly::beta_term(self.sign, self.beta_pow))
    }
}

/// All strict `λ ⊇ μ` with the same number of parts, `λ_1 ≤ n` and `λ_i − μ_i ∈ {0, 1}`.
pub fn igrass_expansion(mu: &[usize], n: usize) -> Result<Vec<IgrassTerm>> {
    let mu: Vec<usize> = mu.iter().copied().filter(|&m| m > 0).collect();
    Involution::igrassmannian(&mu, n)?;
    let r = mu.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << r) {
        let lambda: Vec<usize> = (0..r).map(|i| mu[i] + (mask >> i & 1) as usize).collect();
        if lambda.windows(2).any(|w| w[0] <= w[1]) || lambda.first().is_some_and(|&l| l > n) {
            continue;
        }
        // Row i (1-based) of SD_{λ/μ} holds at most the cell in column i + λ_i − 1.
        let cell = |i: usize| (lambda[i] > mu[i]).then(|| i + lambda[i]);
        let mut cols: Vec<usize> = (0..r).filter_map(cell).collect();
        cols.dedup();
        let top_rows: Vec<usize> = (0..r)
            .filter(|&i| match cell(i) {
                None => true,
                Some(c) => i + 1 >= r || cell(i + 1) != Some(c),
            })
            .map(|i| i + 1)
            .collect();
        let mut varpi = MultiPoly::one();
        for &i in &top_rows {
            let (m, l) = (mu[i - 1], lambda[i - 1]);
            varpi = varpi.mul(&MultiPoly::c_plus_beta_x(2 + m as i64 - l as i64, n + 1 - m));
        }
        let size = mask.count_ones();
        let sign = if (cols.len() + size as usize).is_multiple_of(2) { 1 } else { -1 };
        out.push(IgrassTerm {
            z: Involution::igrassmannian(&lambda, n)?,
            lambda,
            sign,
            varpi,
            beta_pow: size,
            cols: cols.len(),
            top_rows,
        });
    }
    Ok(out)
}

/// `Σ` of the I-Grassmannian terms; equals `𝒢^O_{⟨μ|n⟩}`.
pub fn igrass_sum(mu: &[usize], n: usize) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero();
    for t in igrass_expansion(mu, n)? {
        total = total.add(&t.coefficient().mul(&invgroth(&t.z)));
    }
    Ok(total)
}

/// `Σ_S Θ_{z,S} β^{|S|} Ĝ_{1^steps × z_S}` truncated to `vars` variables, the
/// finite stage of the shiftable-subset formula for `GQ_z`.
pub fn gq_shiftable_truncation(z: &Involution, steps: usize, vars: usize) -> Result<MultiPoly> {
    let d = shiftable_data(z)?;
    let mut total = MultiPoly::zero();
    for s in d.shiftable_sets {
        let c = MultiPoly::beta_term(s.theta, s.set.len() as u32);
        total = total.add(&c.mul(&invgroth(&s.conjugate.one_times(steps)).truncate(vars)));
    }
    Ok(total)
}

/// `Σ_λ (−1)^{cols} 2^{ℓ(μ)−|λ/μ|} (−β)^{|λ/μ|} Ĝ_{⟨λ|n+steps⟩}` truncated to `vars` variables.
/// The sum runs over the I-Grassmannian terms of `⟨μ|n+steps⟩`, so `λ_1 = n+1` occurs when `μ_1 = n`.
pub fn igrass_stable_truncation(mu: &[usize], n: usize, steps: usize, vars: usize) -> Result<MultiPoly> {
    Involution::igrassmannian(mu, n)?;
    let terms = igrass_expansion(mu, n + steps)?;
    let r = mu.iter().filter(|&&m| m > 0).count() as u32;
    let mut total = MultiPoly::zero();
    for t in terms {
        let c = MultiPoly::beta_term(t.sign, t.beta_pow).scale(&crate::polyring::Int::pow2(r - t.beta_pow));
        total = total.add(&c.mul(&invgroth(&t.z).truncate(vars)));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> Involution {
        Involution::parse(s).unwrap()
    }

    #[test]
    fn shifts() {
        let mut e = GrothExpansion::new();
        e.add_term(Permutation::parse("21").unwrap(), &MultiPoly::constant(2));
        e.add_term(Permutation::parse("312").unwrap(), &MultiPoly::beta());
        let up = shift_expansion(&e, ShiftMode::Up);
        let mut want = GrothExpansion::new();
        want.add_term(Permutation::parse("132").unwrap(), &MultiPoly::constant(2));
        want.add_term(Permutation::parse("1423").unwrap(), &MultiPoly::beta());
        assert_eq!(up, want);
        assert_eq!(shift_expansion(&up, ShiftMode::Down), e);
        let mut d = GrothExpansion::new();
        d.add_term(Permutation::parse("132").unwrap(), &MultiPoly::constant(2));
        d.add_term(Permutation::parse("231").unwrap(), &MultiPoly::beta());
        let mut want = GrothExpansion::new();
        want.add_term(Permutation::parse("21").unwrap(), &MultiPoly::constant(2));
        assert_eq!(shift_expansion(&d, ShiftMode::Down), want);
    }

    #[test]
    fn stab_examples() {
        let x1 = MultiPoly::x(1);
        assert_eq!(stab_operator(2, &x1), x1.oplus(&MultiPoly::x(2)));
        for (mu, n) in [(vec![2], 3), (vec![2, 1], 3), (vec![3, 1], 3)] {
            for w in Involution::igrassmannian(&mu, n).unwrap().binv() {
                assert_eq!(stab_operator(n, &groth(&w)), stable_groth_truncation(&w, n, 8).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn stable_limits() {
        let (gq, _) = stable_limit(&z("(1,2)"), StableKind::GQ, 2, 6).unwrap();
        assert!(gq.is_symmetric_in(2));
        let (gq1, _) = stable_limit(&z("(2,3)"), StableKind::GQ, 2, 6).unwrap();
        assert_eq!(gq, gq1);
        let (gp, steps) = stable_limit(&Involution::identity(), StableKind::GP, 2, 4).unwrap();
        assert_eq!((gp, steps), (MultiPoly::one(), 0));
    }

    #[test]
    fn igrass_display() {
        let terms = igrass_expansion(&[3, 2], 4).unwrap();
        let b = MultiPoly::beta();
        let f = MultiPoly::c_plus_beta_x;
        let got: Vec<(Vec<usize>, MultiPoly)> = terms.iter().map(|t| (t.lambda.clone(), t.coefficient())).collect();
        let want = vec![
            (vec![3, 2], f(2, 2) * f(2, 3)),
            (vec![4, 2], f(1, 2) * f(2, 3) * b.clone()),
            (vec![4, 3], -(f(1, 3) * b.clone() * b)),
        ];
        assert_eq!(got, want);
        assert_eq!(igrass_sum(&[3, 2], 4).unwrap(), *ortho_groth(&Involution::igrassmannian(&[3, 2], 4).unwrap()).unwrap());
    }

    #[test]
    fn igrass_large_example() {
        let terms = igrass_expansion(&[8, 7, 4, 3, 1], 9).unwrap();
        let t = terms.iter().find(|t| t.lambda == [9, 7, 5, 4, 2]).unwrap();
        assert_eq!(t.top_rows, vec![1, 2, 4, 5]);
        assert_eq!((t.cols, t.beta_pow), (3, 4));
        let f = MultiPoly::c_plus_beta_x;
        assert_eq!(t.varpi, f(1, 2) * f(2, 3) * f(1, 7) * f(1, 9));
    }
}
