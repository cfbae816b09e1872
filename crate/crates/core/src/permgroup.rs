//! Finitely supported permutations of the positive integers.
//!
//! A [`Permutation`] stores its one-line window `w(1) … w(n)` trimmed so that
//! `w(n) ≠ n`. Composition is `(u·v)(i) = u(v(i))`, so right multiplication by
//! `s_i` swaps positions and left multiplication swaps values.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    w: Vec<u8>,
}

impl Permutation {
    pub fn identity() -> Permutation {
        Permutation { w: Vec::new() }
    }

    fn from_raw(mut w: Vec<u8>) -> Permutation {
        while let Some(&last) = w.last() {
            if last as usize == w.len() {
                w.pop();
            } else {
                break;
            }
        }
        Permutation { w }
    }

    /// Builds a permutation from one-line values `w(1), …, w(n)`.
    pub fn from_one_line(vals: &[usize]) -> Result<Permutation> {
        let n = vals.len();
        if n > 255 {
            return Err(Error::InvalidParameter("window longer than 255".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in vals {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{vals:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation::from_raw(vals.iter().map(|&v| v as u8).collect()))
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[1,2,4,5]]` for `1→2→4→5→1`.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Permutation> {
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        let mut w: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || used[a] {
                    return Err(Error::Parse(format!("cycles {cycles:?} are not disjoint")));
                }
                used[a] = true;
                w[a - 1] = cyc[(k + 1) % cyc.len()];
            }
        }
        Permutation::from_one_line(&w)
    }

    /// Parses `"24513"`, `"2,4,5,1,3"`, or cycle notation `"(1,4)(2,5)"`.
    pub fn parse(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::identity());
        }
        if s.starts_with('(') {
            return Permutation::from_cycles(&parse_cycles(s)?);
        }
        let vals: Vec<usize> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&vals)
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn s(i: usize) -> Permutation {
        Permutation::transposition(i, i + 1)
    }

    pub fn transposition(a: usize, b: usize) -> Permutation {
        assert!(a >= 1 && b >= 1 && a != b, "invalid transposition ({a},{b})");
        let n = a.max(b);
        let mut w: Vec<u8> = (1..=n as u8).collect();
        w.swap(a - 1, b - 1);
        Permutation::from_raw(w)
    }

    /// Window length n: the smallest n with `w(i) = i` for all `i > n`.
    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_empty()
    }

    /// `w(i)` for `i ≥ 1`.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.w.len() {
            self.w[i - 1] as usize
        } else {
            i
        }
    }

    /// The canonical one-line window.
    pub fn one_line(&self) -> Vec<usize> {
        self.w.iter().map(|&v| v as usize).collect()
    }

    /// The one-line notation padded (or not trimmed) to length `max(n, len)`.
    pub fn one_line_padded(&self, len: usize) -> Vec<usize> {
        (1..=len.max(self.n())).map(|i| self.apply(i)).collect()
    }

    fn padded_raw(&self, len: usize) -> Vec<u8> {
        let mut w = self.w.clone();
        while w.len() < len {
            w.push(w.len() as u8 + 1);
        }
        w
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.w.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { w: inv }
    }

    /// The product `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.n().max(other.n());
        Permutation::from_raw((1..=n).map(|i| self.apply(other.apply(i)) as u8).collect())
    }

    /// `w s_i`: swaps positions i and i+1.
    pub fn right_mul_s(&self, i: usize) -> Permutation {
        let mut w = self.padded_raw(i + 1);
        w.swap(i - 1, i);
        Permutation::from_raw(w)
    }

    /// `s_i w`: swaps values i and i+1.
    pub fn left_mul_s(&self, i: usize) -> Permutation {
        let mut w = self.padded_raw(i + 1);
        for v in w.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Permutation::from_raw(w)
    }

    /// `w · (a,b)`: swaps positions a and b.
    pub fn swap_positions(&self, a: usize, b: usize) -> Permutation {
        let mut w = self.padded_raw(a.max(b));
        w.swap(a - 1, b - 1);
        Permutation::from_raw(w)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.w;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// `Des_R(w) = { i : w(i) > w(i+1) }`.
    pub fn des_r(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `Des_L(w) = Des_R(w^{-1})`.
    pub fn des_l(&self) -> BTreeSet<usize> {
        self.inverse().des_r()
    }

    /// `(ℓ(w), Des_R(w), Des_L(w))`.
    pub fn length_stats(&self) -> (usize, BTreeSet<usize>, BTreeSet<usize>) {
        (self.length(), self.des_r(), self.des_l())
    }

    /// The Rothe diagram `D(w) = {(i,j) : i < w^{-1}(j), j < w(i)}`, sorted.
    pub fn rothe_diagram(&self) -> Vec<(usize, usize)> {
        let inv = self.inverse();
        let n = self.n();
        let mut d = Vec::new();
        for i in 1..=n {
            for j in 1..self.apply(i) {
                if i < inv.apply(j) {
                    d.push((i, j));
                }
            }
        }
        d
    }

    /// The Lehmer code `c_i = |{ j > i : w(j) < w(i) }|`, trimmed of trailing zeros.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.w;
        let mut c: Vec<usize> =
            (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count()).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        c
    }

    /// Inverse of [`Permutation::code`]: `w(i)` is the `(c_i+1)`-th smallest unused value.
    pub fn from_code(code: &[usize]) -> Permutation {
        let n = code.iter().enumerate().map(|(i, &c)| i + 1 + c).max().unwrap_or(0);
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut w = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            w.push(avail.remove(c));
        }
        Permutation::from_raw(w)
    }

    /// The essential set of the Rothe diagram.
    pub fn essential_set(&self) -> Vec<(usize, usize)> {
        essential_set(&self.rothe_diagram())
    }

    /// `(D(w), c(w), Ess(D(w)))`.
    pub fn rothe(&self) -> (Vec<(usize, usize)>, Vec<usize>, Vec<(usize, usize)>) {
        let d = self.rothe_diagram();
        let e = essential_set(&d);
        (d, self.code(), e)
    }

    /// Dominant means the code is a partition (weakly decreasing).
    pub fn is_dominant(&self) -> bool {
        self.code().windows(2).all(|p| p[0] >= p[1])
    }

    /// Grassmannian means at most one right descent.
    pub fn is_grassmannian(&self) -> bool {
        self.des_r().len() <= 1
    }

    /// True iff `w` avoids the pattern 2143.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.w;
        let n = w.len();
        if n < 4 {
            return true;
        }
        // positions a<b<c<d with w(b) < w(a) < w(d) < w(c)
        for a in 0..n {
            for b in a + 1..n {
                if w[a] <= w[b] {
                    continue;
                }
                for c in b + 1..n {
                    if w[c] <= w[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if w[d] > w[a] && w[d] < w[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Vexillarity via the rows of the Rothe diagram being totally ordered by inclusion.
    pub fn is_vexillary_by_diagram(&self) -> bool {
        let n = self.n();
        let mut rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
        for (i, j) in self.rothe_diagram() {
            rows[i].insert(j);
        }
        for a in 1..=n {
            for b in a + 1..=n {
                if !(rows[a].is_subset(&rows[b]) || rows[b].is_subset(&rows[a])) {
                    return false;
                }
            }
        }
        true
    }

    /// A reduced word `a_1 … a_k` with `w = s_{a_1} ⋯ s_{a_k}`, peeling the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.right_mul_s(i);
        }
        word.reverse();
        word
    }

    /// Demazure product `w ∘ s_i`.
    pub fn demazure_s(&self, i: usize) -> Permutation {
        if self.has_right_descent(i) {
            self.clone()
        } else {
            self.right_mul_s(i)
        }
    }

    /// Demazure product `self ∘ other`, folding a reduced word of `other` into `self`.
    pub fn demazure(&self, other: &Permutation) -> Permutation {
        other.reduced_word().into_iter().fold(self.clone(), |u, i| u.demazure_s(i))
    }

    /// Demazure product of a word `s_{a_1} ∘ ⋯ ∘ s_{a_k}`.
    pub fn demazure_word(word: &[usize]) -> Permutation {
        word.iter().fold(Permutation::identity(), |u, &i| u.demazure_s(i))
    }

    /// All Hecke words for `w` of length at most `max_len`, letters below `max(n,2)`.
    pub fn hecke_words(&self, max_len: usize) -> BTreeSet<Vec<usize>> {
        let letters = self.n().max(2) - 1;
        let mut out = BTreeSet::new();
        // Extending a word only moves its Demazure product up in Bruhat order,
        // so states above w are pruned.
        fn rec(
            target: &Permutation,
            u: &Permutation,
            word: &mut Vec<usize>,
            max_len: usize,
            letters: usize,
            out: &mut BTreeSet<Vec<usize>>,
        ) {
            if u == target {
                out.insert(word.clone());
            }
            if word.len() == max_len {
                return;
            }
            for a in 1..=letters {
                let v = u.demazure_s(a);
                if v.bruhat_le(target) {
                    word.push(a);
                    rec(target, &v, word, max_len, letters, out);
                    word.pop();
                }
            }
        }
        rec(self, &Permutation::identity(), &mut Vec::new(), max_len, letters, &mut out);
        out
    }

    /// Bruhat order comparison by the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.n().max(other.n());
        if self.length() > other.length() {
            return false;
        }
        // u ≤ w iff for all i, j: |{a ≤ i : u(a) ≥ j}| ≤ |{a ≤ i : w(a) ≥ j}|.
        let mut cu = vec![0i32; n + 2];
        let mut cw = vec![0i32; n + 2];
        for i in 1..=n {
            let (u, w) = (self.apply(i), other.apply(i));
            for j in 1..=u {
                cu[j] += 1;
            }
            for j in 1..=w {
                cw[j] += 1;
            }
            if (1..=n).any(|j| cu[j] > cw[j]) {
                return false;
            }
        }
        true
    }

    /// `w·(a,b)` if it covers `w` in Bruhat order, i.e. `ℓ` rises by exactly one.
    pub fn bruhat_cover(&self, a: usize, b: usize) -> Option<Permutation> {
        assert!(a < b, "bruhat_cover needs a < b");
        let (va, vb) = (self.apply(a), self.apply(b));
        if va > vb {
            return None;
        }
        if (a + 1..b).any(|i| {
            let v = self.apply(i);
            va < v && v < vb
        }) {
            return None;
        }
        Some(self.swap_positions(a, b))
    }

    /// `1^n × w`: `i ↦ i` for `i ≤ n` and `i+n ↦ w(i)+n`.
    pub fn one_times(&self, n: usize) -> Permutation {
        if self.is_identity() {
            return Permutation::identity();
        }
        let mut w: Vec<u8> = (1..=n as u8).collect();
        w.extend(self.w.iter().map(|&v| v + n as u8));
        Permutation::from_raw(w)
    }

    /// `w↓n`: `i ↦ w(i+n) − n`, defined when `w` fixes `1..=n`.
    pub fn shift_down(&self, n: usize) -> Result<Permutation> {
        if (1..=n).any(|i| self.apply(i) != i) {
            return Err(Error::NotShiftable(format!("{self} moves some i ≤ {n}")));
        }
        Ok(Permutation::from_raw(self.w.iter().skip(n).map(|&v| v - n as u8).collect()))
    }

    /// The n-Grassmannian permutation `[λ|n]` with `w(i) − i = λ_{n+1−i}` for `i ≤ n`.
    pub fn grassmannian(lambda: &[usize], n: usize) -> Result<Permutation> {
        let parts: Vec<usize> = lambda.iter().copied().filter(|&p| p > 0).collect();
        if parts.len() > n {
            return Err(Error::InvalidParameter(format!(
                "too many parts: {lambda:?} has more than {n} nonzero parts"
            )));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidParameter(format!("{lambda:?} is not a partition")));
        }
        let first: Vec<usize> =
            (1..=n).map(|i| i + parts.get(n - i).copied().unwrap_or(0)).collect();
        let total = n + parts.first().copied().unwrap_or(0);
        let rest: Vec<usize> = (1..=total).filter(|v| !first.contains(v)).collect();
        let mut w = first;
        w.extend(rest);
        Permutation::from_one_line(&w)
    }

    /// Points moved by `w`.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.apply(i) != i).collect()
    }

    /// All permutations of `S_n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::from_one_line(&cur).expect("valid"));
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

/// `Ess(S) = {(i,j) ∈ S : (i+1,j) ∉ S and (i,j+1) ∉ S}`.
pub fn essential_set(cells: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
    set.iter()
        .copied()
        .filter(|&(i, j)| !set.contains(&(i + 1, j)) && !set.contains(&(i, j + 1)))
        .collect()
}

/// Parses `"(1,4)(2,5)"` into cycles.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "()" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')').map(|e| (&r[..e], &r[e + 1..])))
            .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
        let cyc: Vec<usize> = body
            .0
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<_>>()?;
        if cyc.contains(&0) {
            return Err(Error::Parse("cycle entries must be positive".into()));
        }
        let distinct: BTreeSet<usize> = cyc.iter().copied().collect();
        if distinct.len() != cyc.len() || cyc.len() < 2 {
            return Err(Error::Parse(format!("invalid cycle ({})", body.0)));
        }
        cycles.push(cyc);
        rest = body.1;
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        if self.n() <= 9 {
            for v in &self.w {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.w.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn parsing_and_canonical_form() {
        assert_eq!(p("123"), Permutation::identity());
        assert_eq!(p("2,1,3"), p("21"));
        assert_eq!(p("(1,2)"), p("21"));
        assert_eq!(p("(1,4)(2,5)").one_line(), vec![4, 5, 3, 1, 2]);
        assert_eq!(p("10,1,2,3,4,5,6,7,8,9").n(), 10);
        assert!(Permutation::parse("113").is_err());
        assert!(Permutation::parse("(1,1)").is_err());
    }

    #[test]
    fn length_and_descents() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(p("321").length_stats(), (3, set(&[1, 2]), set(&[1, 2])));
        assert_eq!(Permutation::identity().length_stats(), (0, set(&[]), set(&[])));
        assert_eq!(p("24513").length_stats(), (5, set(&[3]), set(&[1, 3])));
    }

    #[test]
    fn rothe_and_code() {
        let (d, c, _) = p("321").rothe();
        assert_eq!(d, vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(c, vec![2, 1]);
        assert_eq!(Permutation::identity().rothe(), (vec![], vec![], vec![]));
        assert_eq!(p("35124").code(), vec![2, 3]);
        assert_eq!(Permutation::from_code(&[2, 3]), p("35124"));
    }

    #[test]
    fn vexillary() {
        assert!(!p("2143").is_vexillary());
        assert!(!p("214365").is_vexillary());
        assert!(p("321").is_vexillary());
    }

    #[test]
    fn demazure_products() {
        let s1 = Permutation::s(1);
        assert_eq!(s1.demazure(&s1), s1);
        assert_eq!(s1.demazure(&Permutation::s(2)), p("231"));
        let w = p("24513");
        assert_eq!(w.inverse().demazure(&w), p("(1,4)(2,5)"));
    }

    #[test]
    fn hecke_words() {
        let single = |w: &[usize]| w.to_vec();
        assert_eq!(
            Permutation::identity().hecke_words(0),
            [Vec::<usize>::new()].into_iter().collect()
        );
        assert_eq!(Permutation::s(1).hecke_words(2), [single(&[1]), single(&[1, 1])].into());
        assert_eq!(p("321").hecke_words(3), [single(&[1, 2, 1]), single(&[2, 1, 2])].into());
    }

    #[test]
    fn covers_and_embeddings() {
        assert_eq!(Permutation::identity().bruhat_cover(1, 2), Some(p("21")));
        assert_eq!(Permutation::identity().bruhat_cover(1, 3), None);
        assert_eq!(p("132").bruhat_cover(1, 2), Some(p("312")));
        assert_eq!(p("21").one_times(1), p("132"));
        assert_eq!(p("132").shift_down(1).unwrap(), p("21"));
        assert_eq!(p("3467125").one_times(1), p("14578236"));
        assert!(p("21").shift_down(1).is_err());
    }

    #[test]
    fn grassmannian_permutations() {
        assert_eq!(Permutation::grassmannian(&[1, 1, 1], 3).unwrap(), p("2341"));
        assert_eq!(Permutation::grassmannian(&[], 4).unwrap(), Permutation::identity());
        // [1^{n-j}|n] = 1 2 … j (j+2) … (n+1) (j+1)
        assert_eq!(Permutation::grassmannian(&[1, 1], 4).unwrap(), p("12453"));
        assert!(Permutation::grassmannian(&[1, 1, 1], 2).is_err());
    }

    #[test]
    fn all_permutations() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(0), vec![Permutation::identity()]);
    }
}
