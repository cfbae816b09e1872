//! Involutions of the positive integers, their atoms, and the vexillary weak order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::{parse_cycles, Permutation};

/// An involution `z = z^{-1}` in `S_∞`, viewed as a set of disjoint 2-cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Involution {
    perm: Permutation,
}

/// The statistics returned by [`Involution::stats`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvStats {
    pub cyc: usize,
    pub ell_inv: usize,
    pub des_v: BTreeSet<usize>,
    pub k: usize,
    pub quasi_dominant: bool,
    pub j: usize,
}

/// A path `z →^{i_1} ⋯ →^{i_k} dom_pq` in the vexillary weak order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomPath {
    /// Each step records the index `i` and the involution `s_i z s_i` reached.
    pub steps: Vec<(usize, Involution)>,
    pub p: usize,
    pub q: usize,
}

/// The named families of involutions used in examples and closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `t_n = (1,n)`.
    T(usize),
    /// `g_n = (1,n+1)(2,n+2)⋯(n,2n)`.
    G(usize),
    /// `w_ij = (i,j)(i+1,j−1)⋯`.
    W(usize, usize),
    /// `dom_pq = (1,q)(2,q−1)⋯(p,q−p+1)`.
    Dom(usize, usize),
    /// `g_ij = ⟨(m,…,2,1)|j⟩` with `m = j−i+1`.
    Gij(usize, usize),
}

impl Involution {
    pub fn identity() -> Involution {
        Involution { perm: Permutation::identity() }
    }

    pub fn from_perm(perm: Permutation) -> Result<Involution> {
        if perm.inverse() != perm {
            return Err(Error::Parse(format!("{perm} is not an involution")));
        }
        Ok(Involution { perm })
    }

    /// Builds an involution from disjoint pairs `(a,b)`.
    pub fn from_cycles(pairs: &[(usize, usize)]) -> Result<Involution> {
        let cycles: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        if pairs.iter().any(|&(a, b)| a == b) {
            return Err(Error::Parse(format!("invalid 2-cycle in {pairs:?}")));
        }
        Involution::from_perm(Permutation::from_cycles(&cycles)?)
    }

    /// Parses cycle notation `"(1,4)(2,5)"` or a one-line word such as `"4321"`.
    pub fn parse(s: &str) -> Result<Involution> {
        let t = s.trim();
        if t.starts_with('(') {
            let cycles = parse_cycles(t)?;
            if cycles.iter().any(|c| c.len() != 2) {
                return Err(Error::Parse(format!("{s:?} has a cycle that is not a 2-cycle")));
            }
            let pairs: Vec<(usize, usize)> = cycles.iter().map(|c| (c[0], c[1])).collect();
            Involution::from_cycles(&pairs)
        } else {
            Involution::from_perm(Permutation::parse(t)?)
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm.apply(i)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    /// The 2-cycles `(a, z(a))` with `a < z(a)`, sorted by `a`.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).filter(|&a| a < self.apply(a)).map(|a| (a, self.apply(a))).collect()
    }

    /// Left endpoints `a < z(a)`, ascending.
    pub fn left_endpoints(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&a| a < self.apply(a)).collect()
    }

    pub fn cyc(&self) -> usize {
        self.left_endpoints().len()
    }

    pub fn length(&self) -> usize {
        self.perm.length()
    }

    /// `ℓ_inv(z) = (ℓ(z) + cyc(z))/2`.
    pub fn ell_inv(&self) -> usize {
        (self.length() + self.cyc()) / 2
    }

    /// `D̂(z) = {(i,j) ∈ D(z) : i ≤ j}`.
    pub fn hat_diagram(&self) -> Vec<(usize, usize)> {
        self.perm.rothe_diagram().into_iter().filter(|&(i, j)| i <= j).collect()
    }

    /// `ĉ(z) = (|D̂_1(z)|, |D̂_2(z)|, …)`, untrimmed to length n.
    pub fn hat_code(&self) -> Vec<usize> {
        let mut c = vec![0; self.n()];
        for (i, _) in self.hat_diagram() {
            c[i - 1] += 1;
        }
        c
    }

    /// Visible descents `{ i : z(i) > z(i+1) ≤ i }`.
    pub fn des_v(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.apply(i) > self.apply(i + 1) && self.apply(i + 1) <= i).collect()
    }

    /// `k(z) = min{ i ≥ 0 : z(j) ≤ j for all j > i }`, the largest left endpoint.
    pub fn k(&self) -> usize {
        self.left_endpoints().last().copied().unwrap_or(0)
    }

    /// `j(z)`: the number of leading fixed points, but at least 1.
    pub fn j(&self) -> usize {
        match self.perm.support().first() {
            None => 1,
            Some(&m) => (m - 1).max(1),
        }
    }

    /// Quasi-dominant: the left endpoints are exactly `1, …, cyc(z)`.
    pub fn is_quasi_dominant(&self) -> bool {
        self.left_endpoints().iter().enumerate().all(|(t, &a)| a == t + 1)
    }

    pub fn is_vexillary(&self) -> bool {
        self.perm.is_vexillary()
    }

    pub fn is_dominant(&self) -> bool {
        self.perm.is_dominant()
    }

    pub fn stats(&self) -> InvStats {
        InvStats {
            cyc: self.cyc(),
            ell_inv: self.ell_inv(),
            des_v: self.des_v(),
            k: self.k(),
            quasi_dominant: self.is_quasi_dominant(),
            j: self.j(),
        }
    }

    /// `s_i z s_i`.
    pub fn conj_s(&self, i: usize) -> Involution {
        Involution { perm: self.perm.left_mul_s(i).right_mul_s(i) }
    }

    /// The Demazure conjugation `s_i ∘ z ∘ s_i`.
    pub fn demazure_conj(&self, i: usize) -> Involution {
        if self.perm.has_right_descent(i) {
            return self.clone();
        }
        let zs = self.perm.right_mul_s(i);
        if zs == self.perm.left_mul_s(i) {
            Involution { perm: zs }
        } else {
            self.conj_s(i)
        }
    }

    /// `α_inv(z)`: the inverse of `b_1a_1b_2a_2⋯` with repeated letters removed,
    /// over all `a ≤ z(a)` up to the largest point of the support.
    pub fn alpha_inv(&self) -> Permutation {
        let mut word = Vec::new();
        for a in 1..=self.n() {
            let b = self.apply(a);
            if a < b {
                word.push(b);
                word.push(a);
            } else if a == b {
                word.push(a);
            }
        }
        Permutation::from_one_line(&word).expect("valid word").inverse()
    }

    /// `B_inv(z)`: the ∼-class of `α_inv(z)`, explored on inverses.
    pub fn binv(&self) -> BTreeSet<Permutation> {
        let start = self.alpha_inv().inverse().one_line();
        window_closure(start, 3, 1, sim_moves)
            .into_iter()
            .map(|u| Permutation::from_one_line(&u).expect("valid").inverse())
            .collect()
    }

    /// Vexillarity through the forbidden arc-diagram patterns, taken on
    /// vertex sets closed under `z`.
    pub fn is_vexillary_by_arcs(&self) -> bool {
        const PATTERNS: [(usize, &[(usize, usize)]); 5] = [
            (4, &[(1, 2), (3, 4)]),
            (6, &[(1, 4), (3, 6)]),
            (7, &[(1, 5), (3, 7), (4, 6)]),
            (7, &[(1, 5), (2, 4), (3, 7)]),
            (8, &[(1, 6), (2, 5), (3, 8), (4, 7)]),
        ];
        let n = self.n();
        for &(m, arcs) in PATTERNS.iter() {
            if m > n {
                continue;
            }
            let mut chosen = Vec::with_capacity(m);
            if self.has_induced(&mut chosen, 1, m, arcs) {
                return false;
            }
        }
        true
    }

    fn has_induced(
        &self,
        chosen: &mut Vec<usize>,
        from: usize,
        m: usize,
        arcs: &[(usize, usize)],
    ) -> bool {
        if chosen.len() == m {
            let mut induced = Vec::new();
            for (x, &a) in chosen.iter().enumerate() {
                let b = self.apply(a);
                // The chosen vertices must be closed under z.
                let Some(y) = chosen.iter().position(|&c| c == b) else {
                    return false;
                };
                if a < b {
                    induced.push((x + 1, y + 1));
                }
            }
            return induced == arcs;
        }
        for v in from..=self.n() {
            if self.n() - v + 1 < m - chosen.len() {
                break;
            }
            chosen.push(v);
            if self.has_induced(chosen, v + 1, m, arcs) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// `(p, q) = (cyc(z), max support)`, or `(0, 0)` for the identity.
    pub fn pq(&self) -> (usize, usize) {
        (self.cyc(), self.perm.support().last().copied().unwrap_or(0))
    }

    /// `dom_pq = (1,q)(2,q−1)⋯(p,q−p+1)`.
    pub fn dom(p: usize, q: usize) -> Result<Involution> {
        if q < 2 * p || (p == 0 && q != 0) {
            return Err(Error::InvalidParameter(format!("dom_pq needs q ≥ 2p, got p={p}, q={q}")));
        }
        let pairs: Vec<(usize, usize)> = (1..=p).map(|i| (i, q + 1 - i)).collect();
        Involution::from_cycles(&pairs)
    }

    /// The next step of the path to `dom_pq`, or `None` at the end.
    pub fn dom_step(&self) -> Option<usize> {
        let (p, q) = self.pq();
        if self.is_identity() || *self == Involution::dom(p, q).expect("q ≥ 2p") {
            return None;
        }
        if !self.is_dominant() {
            let c = self.perm.code();
            let c_at = |i: usize| c.get(i - 1).copied().unwrap_or(0);
            let asc = (1..=q).filter(|&i| c_at(i) < c_at(i + 1));
            let m = asc.clone().map(|i| c_at(i + 1)).max().expect("not dominant");
            asc.filter(|&i| c_at(i + 1) == m).min()
        } else {
            let hc = self.hat_code();
            let i = (1..=p)
                .find(|&i| hc.get(i - 1).copied().unwrap_or(0) + 2 * i < q + 1)
                .expect("dominant and not dom_pq");
            Some(self.apply(i))
        }
    }

    /// The path `z → ⋯ → dom_pq`, validating each step.
    pub fn dom_path(&self) -> Result<DomPath> {
        if !self.is_vexillary() {
            return Err(Error::NotVexillary(self.to_string()));
        }
        let (p, q) = self.pq();
        let mut cur = self.clone();
        let mut steps = Vec::new();
        while let Some(j) = cur.dom_step() {
            let next = cur.conj_s(j);
            if next.length() != cur.length() + 2 || !next.is_vexillary() || j >= q.max(1) {
                return Err(Error::Internal(format!("invalid weak-order step {cur} -{j}-> {next}")));
            }
            steps.push((j, next.clone()));
            cur = next;
        }
        Ok(DomPath { steps, p, q })
    }

    /// `⟨μ|n⟩ = (n+1−μ_1, n+1)(n+1−μ_2, n+2)⋯(n+1−μ_r, n+r)`.
    pub fn igrassmannian(mu: &[usize], n: usize) -> Result<Involution> {
        let mu: Vec<usize> = mu.iter().copied().filter(|&m| m > 0).collect();
        if mu.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(format!("not strict: {mu:?}")));
        }
        if mu.first().is_some_and(|&m| m > n) {
            return Err(Error::InvalidParameter(format!("part too large: {mu:?} with n={n}")));
        }
        let pairs: Vec<(usize, usize)> =
            mu.iter().enumerate().map(|(t, &m)| (n + 1 - m, n + 1 + t)).collect();
        Involution::from_cycles(&pairs)
    }

    /// The involution shape: the transpose of the sorted column lengths of `D̂(z)`.
    pub fn shape(&self) -> Result<Vec<usize>> {
        if !self.is_vexillary() {
            return Err(Error::NotVexillary(self.to_string()));
        }
        let mut cols = vec![0usize; self.n() + 1];
        for (_, j) in self.hat_diagram() {
            cols[j] += 1;
        }
        let mut sorted: Vec<usize> = cols.into_iter().filter(|&c| c > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        Ok(transpose(&sorted))
    }

    pub fn family(f: Family) -> Result<Involution> {
        let bad = || Error::InvalidParameter(format!("invalid family parameters {f:?}"));
        match f {
            Family::T(n) => {
                if n < 2 {
                    return Err(bad());
                }
                Involution::from_cycles(&[(1, n)])
            }
            Family::G(n) => Involution::from_cycles(&(1..=n).map(|i| (i, n + i)).collect::<Vec<_>>()),
            Family::W(i, j) => {
                if i == 0 || j <= i {
                    return Err(bad());
                }
                let k = (j - i - 1) / 2;
                Involution::from_cycles(&(0..=k).map(|t| (i + t, j - t)).collect::<Vec<_>>())
            }
            Family::Dom(p, q) => Involution::dom(p, q),
            Family::Gij(i, j) => {
                if i == 0 || j <= i {
                    return Err(bad());
                }
                let m = j - i + 1;
                Involution::igrassmannian(&(1..=m).rev().collect::<Vec<_>>(), j)
            }
        }
    }

    /// `1^n × z`.
    pub fn one_times(&self, n: usize) -> Involution {
        Involution { perm: self.perm.one_times(n) }
    }

    /// `z↓n`, defined when z fixes `1..=n`.
    pub fn shift_down(&self, n: usize) -> Result<Involution> {
        Ok(Involution { perm: self.perm.shift_down(n)? })
    }

    /// All involutions in `S_n`, sorted by one-line notation.
    pub fn all(n: usize) -> Vec<Involution> {
        fn rec(w: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
            let n = w.len();
            if i > n {
                out.push(w.clone());
                return;
            }
            if w[i - 1] != 0 {
                rec(w, i + 1, out);
                return;
            }
            w[i - 1] = i;
            rec(w, i + 1, out);
            for j in i + 1..=n {
                if w[j - 1] == 0 {
                    w[i - 1] = j;
                    w[j - 1] = i;
                    rec(w, i + 1, out);
                    w[j - 1] = 0;
                }
            }
            w[i - 1] = 0;
        }
        let mut out = Vec::new();
        rec(&mut vec![0; n], 1, &mut out);
        let mut invs: Vec<Involution> = out
            .into_iter()
            .map(|w| Involution { perm: Permutation::from_one_line(&w).expect("valid") })
            .collect();
        invs.sort();
        invs
    }

    /// All vexillary involutions in `S_n`.
    pub fn all_vexillary(n: usize) -> Vec<Involution> {
        Involution::all(n).into_iter().filter(|z| z.is_vexillary()).collect()
    }
}

/// Transpose of a partition.
pub fn transpose(lambda: &[usize]) -> Vec<usize> {
    let m = lambda.first().copied().unwrap_or(0);
    (1..=m).map(|c| lambda.iter().filter(|&&p| p >= c).count()).collect()
}

/// The ∼ window moves on inverse words: `cba`, `cab`, `bca` interchange.
fn sim_moves(win: &[usize]) -> Vec<Vec<usize>> {
    let (x, y, z) = (win[0], win[1], win[2]);
    let mut s = [x, y, z];
    s.sort_unstable();
    let [a, b, c] = s;
    let pats = [[c, b, a], [c, a, b], [b, c, a]];
    if pats.contains(&[x, y, z]) {
        pats.iter().filter(|p| **p != [x, y, z]).map(|p| p.to_vec()).collect()
    } else {
        Vec::new()
    }
}

/// The ≈ window moves on inverse words: `adbc`, `bcad`, `bdac` interchange.
fn approx_moves(win: &[usize]) -> Vec<Vec<usize>> {
    let mut s = [win[0], win[1], win[2], win[3]];
    s.sort_unstable();
    let [a, b, c, d] = s;
    let pats = [[a, d, b, c], [b, c, a, d], [b, d, a, c]];
    if pats.iter().any(|p| p == win) {
        pats.iter().filter(|p| p.as_slice() != win).map(|p| p.to_vec()).collect()
    } else {
        Vec::new()
    }
}

/// Closure of a word under window substitutions of width `width` starting at
/// positions congruent to 0 mod `step` (0-based).
fn window_closure(
    start: Vec<usize>,
    width: usize,
    step: usize,
    moves: fn(&[usize]) -> Vec<Vec<usize>>,
) -> BTreeSet<Vec<usize>> {
    let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        let mut i = 0;
        while i + width <= u.len() {
            for rep in moves(&u[i..i + width]) {
                let mut v = u.clone();
                v[i..i + width].copy_from_slice(&rep);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            i += step;
        }
    }
    seen.into_iter().collect()
}

/// A fixed-point-free involution of `[n]`, n even.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpfInvolution {
    n: usize,
    z: Involution,
}

impl FpfInvolution {
    pub fn new(z: Involution, n: usize) -> Result<FpfInvolution> {
        if !n.is_multiple_of(2) || n == 0 {
            return Err(Error::InvalidParameter(format!("fpf involutions need even n ≥ 2, got {n}")));
        }
        if z.n() > n || (1..=n).any(|i| z.apply(i) == i) {
            return Err(Error::InvalidParameter(format!("{z} is not fixed-point-free on [{n}]")));
        }
        Ok(FpfInvolution { n, z })
    }

    pub fn parse(s: &str, n: usize) -> Result<FpfInvolution> {
        FpfInvolution::new(Involution::parse(s)?, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn involution(&self) -> &Involution {
        &self.z
    }

    /// `α_fpf(z)`: the inverse of `a_1b_1a_2b_2⋯`.
    pub fn alpha_fpf(&self) -> Permutation {
        let word: Vec<usize> = self.z.cycles().into_iter().flat_map(|(a, b)| [a, b]).collect();
        Permutation::from_one_line(&word).expect("valid word").inverse()
    }

    /// `ℓ_fpf(z) = ℓ(α_fpf(z))`.
    pub fn ell_fpf(&self) -> usize {
        self.alpha_fpf().length()
    }

    /// The ≈-class of `α_fpf(z)`.
    pub fn approx_class(&self) -> BTreeSet<Permutation> {
        let start = self.alpha_fpf().inverse().one_line_padded(self.n);
        window_closure(start, 4, 2, approx_moves)
            .into_iter()
            .map(|u| Permutation::from_one_line(&u).expect("valid").inverse())
            .collect()
    }

    /// `(α_fpf(z), ≈-class)`.
    pub fn fpf(&self) -> (Permutation, BTreeSet<Permutation>) {
        (self.alpha_fpf(), self.approx_class())
    }

    /// All fixed-point-free involutions of `[n]`.
    pub fn all(n: usize) -> Vec<FpfInvolution> {
        Involution::all(n)
            .into_iter()
            .filter(|z| (1..=n).all(|i| z.apply(i) != i))
            .map(|z| FpfInvolution { n, z })
            .collect()
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.z, f)
    }
}

impl fmt::Debug for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.z, f)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for (a, b) in self.cycles() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Involution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Involution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let pairs = Vec::<(usize, usize)>::deserialize(d)?;
        Involution::from_cycles(&pairs).map_err(D::Error::custom)
    }
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
    fn set(v: &[&str]) -> BTreeSet<Permutation> {
        v.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn statistics() {
        let s = z("(1,4)(2,5)").stats();
        assert_eq!((s.cyc, s.ell_inv), (2, 5));
        let id = Involution::identity().stats();
        assert_eq!(
            id,
            InvStats { cyc: 0, ell_inv: 0, des_v: BTreeSet::new(), k: 0, quasi_dominant: true, j: 1 }
        );
        let s = z("(1,2)").stats();
        assert_eq!((s.cyc, s.ell_inv, s.k, s.quasi_dominant), (1, 1, 1, true));
        assert_eq!(z("(2,4)(3,5)").j(), 1);
        assert_eq!(z("(3,5)").j(), 2);
    }

    #[test]
    fn atoms() {
        assert_eq!(z("(1,4)(2,5)").alpha_inv(), p("24513"));
        assert_eq!(Involution::identity().alpha_inv(), Permutation::identity());
        assert_eq!(z("(1,3)").alpha_inv(), p("231"));
        assert_eq!(
            z("(1,4)(2,5)").binv(),
            set(&["24513", "25413", "25314", "35214", "35124"])
        );
        assert_eq!(z("(1,2)").binv(), set(&["21"]));
        assert_eq!(z("(1,3)").binv(), set(&["231", "312", "321"]));
    }

    #[test]
    fn fpf_atoms() {
        let t = FpfInvolution::parse("(1,2)", 2).unwrap();
        assert_eq!(t.alpha_fpf(), Permutation::identity());
        assert_eq!(t.approx_class(), set(&["1"]));
        let t = FpfInvolution::parse("(1,3)(2,4)", 4).unwrap();
        assert_eq!(t.alpha_fpf(), p("1324"));
        let t = FpfInvolution::parse("(1,5)(2,6)(3,4)", 6).unwrap();
        let inv: BTreeSet<Permutation> =
            ["152634", "153624", "153426", "341526", "351426"].iter().map(|s| p(s).inverse()).collect();
        assert_eq!(t.approx_class(), inv);
    }

    #[test]
    fn dom_paths() {
        let d = Involution::dom(2, 5).unwrap();
        assert!(d.dom_path().unwrap().steps.is_empty());
        let path = z("(1,2)").dom_path().unwrap();
        assert_eq!((path.p, path.q, path.steps.len()), (1, 2, 0));
        let path = z("(2,3)").dom_path().unwrap();
        assert_eq!(path.steps.last().unwrap().1, z("(1,3)"));
        assert!(path.steps.iter().all(|(i, _)| *i <= 2));
        assert!(z("(1,2)(3,4)").dom_path().is_err());
    }

    #[test]
    fn igrassmannian_and_families() {
        assert_eq!(Involution::igrassmannian(&[], 3).unwrap(), Involution::identity());
        assert_eq!(Involution::igrassmannian(&[3, 2, 1], 4).unwrap(), z("(2,5)(3,6)(4,7)"));
        assert_eq!(Involution::family(Family::Gij(2, 4)).unwrap(), z("(2,5)(3,6)(4,7)"));
        assert_eq!(Involution::family(Family::Gij(2, 3)).unwrap(), z("(2,4)(3,5)"));
        assert_eq!(Involution::family(Family::T(4)).unwrap(), z("(1,4)"));
        assert_eq!(Involution::family(Family::G(3)).unwrap(), z("(1,4)(2,5)(3,6)"));
        assert_eq!(Involution::family(Family::W(1, 4)).unwrap(), z("4321"));
        assert!(Involution::igrassmannian(&[2, 2], 3).is_err());
        assert!(Involution::igrassmannian(&[4], 3).is_err());
    }

    #[test]
    fn shapes() {
        let g = Involution::igrassmannian(&[3, 1], 4).unwrap();
        assert_eq!(g.shape().unwrap(), vec![3, 1]);
        assert_eq!(Involution::identity().shape().unwrap(), Vec::<usize>::new());
        assert_eq!(z("(1,3)").shape().unwrap(), vec![2]);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| Involution::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
        assert_eq!(FpfInvolution::all(6).len(), 15);
    }
}
