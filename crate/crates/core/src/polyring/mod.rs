//! Exact sparse polynomials in `Z[β][x_1, x_2, …]`.
//!
//! A [`MultiPoly`] is a sorted list of `(Monomial, Int)` pairs with no zero
//! coefficients. The sort order is the canonical serialization order:
//! ascending β exponent, then lexicographic on the x exponent vector.

mod int;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
pub use int::Int;

/// Number of exponent slots in a [`Monomial`]; slot 0 holds β.
const SLOTS: usize = 32;
/// Largest variable index a monomial can carry.
pub const MAX_VARS: usize = SLOTS - 1;

/// A monomial `β^b x_1^{e_1} ⋯ x_31^{e_31}` with exponents below 256.
///
/// The derived order compares the β exponent first and then the x exponents
/// lexicographically, which is the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u8; SLOTS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; SLOTS]);

    /// Builds `β^beta · x^xs`, rejecting exponents or variable counts out of range.
    pub fn try_new(beta: u32, xs: &[u32]) -> Result<Monomial> {
        let mut m = [0u8; SLOTS];
        m[0] = u8::try_from(beta)
            .map_err(|_| Error::InvalidParameter(format!("β exponent {beta} too large")))?;
        let used = xs.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        if used > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "monomial uses x_{used}, at most x_{MAX_VARS} supported"
            )));
        }
        for (i, &e) in xs[..used].iter().enumerate() {
            m[i + 1] = u8::try_from(e)
                .map_err(|_| Error::InvalidParameter(format!("exponent {e} too large")))?;
        }
        Ok(Monomial(m))
    }

    /// Panicking form of [`Monomial::try_new`] for internal construction.
    pub fn new(beta: u32, xs: &[u32]) -> Monomial {
        Monomial::try_new(beta, xs).expect("monomial out of range")
    }

    pub fn beta(&self) -> u32 {
        self.0[0] as u32
    }

    /// Exponent of `x_i` (1-based); zero beyond the supported range.
    pub fn x(&self, i: usize) -> u32 {
        if i == 0 || i > MAX_VARS {
            0
        } else {
            self.0[i] as u32
        }
    }

    /// Index of the last variable with nonzero exponent.
    pub fn nvars(&self) -> usize {
        self.0[1..].iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }

    /// The x exponent vector trimmed of trailing zeros.
    pub fn xs(&self) -> Vec<u32> {
        self.0[1..=self.nvars()].iter().map(|&e| e as u32).collect()
    }

    pub fn x_degree(&self) -> u32 {
        self.0[1..].iter().map(|&e| e as u32).sum()
    }

    pub fn with_beta(mut self, b: u32) -> Monomial {
        self.0[0] = u8::try_from(b).expect("β exponent overflow");
        self
    }

    pub fn with_x(mut self, i: usize, e: u32) -> Monomial {
        assert!((1..=MAX_VARS).contains(&i), "variable x_{i} out of range");
        self.0[i] = u8::try_from(e).expect("exponent overflow");
        self
    }

    /// The same monomial with β removed.
    pub fn x_part(self) -> Monomial {
        self.with_beta(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; SLOTS];
        for k in 0..SLOTS {
            m[k] = self.0[k].checked_add(other.0[k]).expect("exponent overflow");
        }
        Monomial(m)
    }

    fn swapped(mut self, i: usize) -> Monomial {
        assert!(i < MAX_VARS, "s_{i} acts beyond x_{MAX_VARS}");
        self.0.swap(i, i + 1);
        self
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b^{}x{:?}", self.beta(), self.xs())
    }
}

/// Sparse polynomial in β and `x_1, x_2, …` with arbitrary-precision coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Int)>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(1)
    }

    pub fn constant(c: impl Into<Int>) -> MultiPoly {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<Int>) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// The variable `x_i` (1-based).
    pub fn x(i: usize) -> MultiPoly {
        MultiPoly::term(Monomial::ONE.with_x(i, 1), 1)
    }

    pub fn beta() -> MultiPoly {
        MultiPoly::beta_pow(1)
    }

    pub fn beta_pow(b: u32) -> MultiPoly {
        MultiPoly::term(Monomial::ONE.with_beta(b), 1)
    }

    /// `c · β^b`.
    pub fn beta_term(c: impl Into<Int>, b: u32) -> MultiPoly {
        MultiPoly::term(Monomial::ONE.with_beta(b), c)
    }

    /// `c + β·x_i`, the factor shape used throughout.
    pub fn c_plus_beta_x(c: impl Into<Int>, i: usize) -> MultiPoly {
        let mut t = vec![(Monomial::ONE.with_x(i, 1).with_beta(1), Int::ONE)];
        let c = c.into();
        if !c.is_zero() {
            t.insert(0, (Monomial::ONE, c));
        }
        MultiPoly { terms: t }
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Int)>>(it: I) -> MultiPoly {
        let mut v: Vec<(Monomial, Int)> = it.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Monomial, Int)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MultiPoly { terms: out }
    }

    fn from_map(map: FxHashMap<Monomial, Int>) -> MultiPoly {
        let mut v: Vec<(Monomial, Int)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by_key(|a| a.0);
        MultiPoly { terms: v }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Int)] {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Int {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// Largest variable index occurring in any term.
    pub fn nvars(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.nvars()).max().unwrap_or(0)
    }

    /// True if no x variable occurs, i.e. the polynomial lies in `Z[β]`.
    pub fn is_beta_only(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.nvars() == 0)
    }

    /// Common value of `Σ x_exps − β_exp` over all terms, if there is one.
    pub fn graded_degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(m, _)| m.x_degree() as i64 - m.beta() as i64);
        let first = match it.next() {
            Some(d) => d,
            None => return Some(0),
        };
        it.all(|d| d == first).then_some(first)
    }

    /// If this is `c·β^b` for a single term, returns `(c, b)`.
    pub fn as_beta_monomial(&self) -> Option<(Int, u32)> {
        match self.terms.as_slice() {
            [(m, c)] if m.nvars() == 0 => Some((c.clone(), m.beta())),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Int) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    /// Multiplies by the single term `c·m`; translation preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Int) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Int| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
        MultiPoly { terms: out }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let mut acc: FxHashMap<Monomial, Int> = FxHashMap::default();
        acc.reserve(big.len() * 2);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let e = acc.entry(m1.mul(m2)).or_insert(Int::ZERO);
                *e += &(c1 * c2);
            }
        }
        MultiPoly::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(), |acc, _| acc.mul(self))
    }

    /// Product of an iterator of factors.
    pub fn product<'a, I: IntoIterator<Item = &'a MultiPoly>>(it: I) -> MultiPoly {
        it.into_iter().fold(MultiPoly::one(), |acc, f| acc.mul(f))
    }

    /// `s_i` acting by swapping `x_i` and `x_{i+1}`.
    pub fn act_si(&self, i: usize) -> MultiPoly {
        assert!(i >= 1, "s_i needs i ≥ 1");
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.swapped(i), c.clone())))
    }

    /// The divided difference `∂_i f = (f − s_i f)/(x_i − x_{i+1})`.
    ///
    /// Each monomial `x_i^a x_{i+1}^b m` is divided in closed form, so the
    /// quotient is exact term by term.
    pub fn divdiff(&self, i: usize) -> MultiPoly {
        assert!((1..MAX_VARS).contains(&i), "∂_{i} out of range");
        let mut out: Vec<(Monomial, Int)> = Vec::new();
        for (m, c) in &self.terms {
            let (a, b) = (m.x(i), m.x(i + 1));
            if a > b {
                for k in 0..(a - b) {
                    out.push((m.with_x(i, a - 1 - k).with_x(i + 1, b + k), c.clone()));
                }
            } else if a < b {
                let nc = -c;
                for k in 0..(b - a) {
                    out.push((m.with_x(i, a + k).with_x(i + 1, b - 1 - k), nc.clone()));
                }
            }
        }
        MultiPoly::from_terms(out)
    }

    /// `∂^{(β)}_i f = ∂_i((1+βx_{i+1})f) = −βf + (1+βx_i)∂_i f`.
    pub fn beta_divdiff(&self, i: usize) -> MultiPoly {
        let d = self.divdiff(i);
        let bx = Monomial::ONE.with_beta(1).with_x(i, 1);
        let b = Monomial::ONE.with_beta(1);
        let mut out: Vec<(Monomial, Int)> = Vec::with_capacity(2 * d.len() + self.len());
        for (m, c) in &d.terms {
            out.push((*m, c.clone()));
            out.push((m.mul(&bx), c.clone()));
        }
        for (m, c) in &self.terms {
            out.push((m.mul(&b), -c));
        }
        MultiPoly::from_terms(out)
    }

    /// The isobaric operator `π^{(β)}_i f = ∂^{(β)}_i(x_i f)`.
    pub fn isobaric(&self, i: usize) -> MultiPoly {
        let xi = Monomial::ONE.with_x(i, 1);
        self.mul_term(&xi, &Int::ONE).beta_divdiff(i)
    }

    /// `p ⊕ q = p + q + βpq`.
    pub fn oplus(&self, other: &MultiPoly) -> MultiPoly {
        self.add(other).add(&self.mul(other).mul(&MultiPoly::beta()))
    }

    /// The homomorphism `x_1 ↦ 0`, `x_{i+1} ↦ x_i`.
    pub fn shift_down(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x(1) == 0)
                .map(|(m, c)| {
                    let mut s = [0u8; SLOTS];
                    s[0] = m.0[0];
                    s[1..SLOTS - 1].copy_from_slice(&m.0[2..]);
                    (Monomial(s), c.clone())
                })
                .collect(),
        }
    }

    /// The homomorphism `x_i ↦ x_{i+1}`.
    pub fn shift_up(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    assert!(m.0[SLOTS - 1] == 0, "shift beyond x_{MAX_VARS}");
                    let mut s = [0u8; SLOTS];
                    s[0] = m.0[0];
                    s[2..].copy_from_slice(&m.0[1..SLOTS - 1]);
                    (Monomial(s), c.clone())
                })
                .collect(),
        }
    }

    /// Sets `x_i = 0` for every `i > vars`.
    pub fn truncate(&self, vars: usize) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().filter(|(m, _)| m.nvars() <= vars).cloned().collect(),
        }
    }

    /// Substitutes an integer for β.
    pub fn eval_beta(&self, beta: i64) -> MultiPoly {
        let b = Int::from(beta);
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut f = Int::ONE;
            for _ in 0..m.beta() {
                f = &f * &b;
            }
            (m.x_part(), c * &f)
        }))
    }

    /// Substitutes `x_i = 0` for all i, leaving a polynomial in β.
    pub fn constant_term(&self) -> MultiPoly {
        self.truncate(0)
    }

    /// True if invariant under `s_i` for every `i < n`.
    pub fn is_symmetric_in(&self, n: usize) -> bool {
        (1..n).all(|i| self.act_si(i) == *self)
    }

    /// Human-readable rendering, e.g. `2*x1 + 1*b^1*x1^2`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<MultiPoly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.beta() > 0 {
                factors.push(format!("b^{}", m.beta()));
            }
            for (i, e) in m.xs().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    b: u32,
    x: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr { b: m.beta(), x: m.xs(), c: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PolyRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            let m = Monomial::try_new(t.b, &t.x).map_err(D::Error::custom)?;
            let c: Int = t.c.parse().map_err(D::Error::custom)?;
            terms.push((m, c));
        }
        Ok(MultiPoly::from_terms(terms))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$m(self, rhs)
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                MultiPoly::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                MultiPoly::$m(&self, rhs)
            }
        }
    };
}
poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(&self)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn arithmetic() {
        assert_eq!(x(1).mul(&x(1)), MultiPoly::term(Monomial::new(0, &[2]), 1));
        let lhs = (c(2) + b() * x(1)) * (c(2) + b() * x(2));
        let rhs = c(4) + c(2) * b() * x(1) + c(2) * b() * x(2) + b() * b() * x(1) * x(2);
        assert_eq!(lhs, rhs);
        assert!((x(1) - x(1)).is_zero());
    }

    #[test]
    fn symmetric_group_action() {
        assert_eq!(x(1).act_si(1), x(2));
        assert_eq!((x(1) * x(2)).act_si(1), x(1) * x(2));
        assert_eq!((x(1) * x(1) * x(2)).act_si(2), x(1) * x(1) * x(3));
    }

    #[test]
    fn divided_differences() {
        assert_eq!(x(1).divdiff(1), c(1));
        assert!((x(1) * x(2)).divdiff(1).is_zero());
        assert_eq!((x(1) * x(1)).divdiff(1), x(1) + x(2));
        assert_eq!(c(1).beta_divdiff(1), -&b());
        assert_eq!(x(1).beta_divdiff(1), c(1));
        let f = (x(1) * x(1)).beta_divdiff(1);
        assert_eq!(f.beta_divdiff(1), (-&b()) * f.clone());
        assert_eq!(c(1).isobaric(1), c(1));
        assert_eq!(x(1).isobaric(1), x(1) + x(2) + b() * x(1) * x(2));
        let g = x(1).isobaric(1);
        assert_eq!(g.isobaric(1), g);
    }

    #[test]
    fn oplus_and_shifts() {
        assert_eq!(x(1).oplus(&x(1)), c(2) * x(1) + b() * x(1) * x(1));
        assert_eq!(x(1).oplus(&x(2)), x(1) + x(2) + b() * x(1) * x(2));
        assert_eq!(MultiPoly::zero().oplus(&x(3)), x(3));
        assert!(x(1).shift_down().is_zero());
        assert_eq!((x(2) + b() * x(2) * x(3)).shift_down(), x(1) + b() * x(1) * x(2));
        assert_eq!((c(2) + b() * x(1)).shift_down(), c(2));
        assert_eq!((x(1) * x(3)).shift_up().shift_down(), x(1) * x(3));
    }

    #[test]
    fn graded_degree() {
        assert_eq!((x(1) + x(2) + b() * x(1) * x(2)).graded_degree(), Some(1));
        assert_eq!(c(1).graded_degree(), Some(0));
        assert_eq!((x(1) + x(1) * x(1)).graded_degree(), None);
    }

    #[test]
    fn json_and_text() {
        let p = c(2) * b() * x(1) * x(1) * x(3) + x(2);
        assert_eq!(p.to_text(), "x2 + 2*b^1*x1^2*x3");
        let js = p.to_json();
        assert_eq!(js, r#"{"terms":[{"b":0,"x":[0,1],"c":"1"},{"b":1,"x":[2,0,1],"c":"2"}]}"#);
        assert_eq!(MultiPoly::from_json(&js).unwrap(), p);
        assert_eq!(MultiPoly::zero().to_text(), "0");
    }

    #[test]
    fn divdiff_times_difference_recovers_antisymmetric_part() {
        let f = x(1) * x(1) * x(1) * x(2) + c(3) * x(2) * x(2) * x(3) - b() * x(1) * x(3);
        for i in 1..4 {
            let lhs = (x(i) - x(i + 1)) * f.divdiff(i);
            assert_eq!(lhs, f.clone() - f.act_si(i));
        }
    }
}
