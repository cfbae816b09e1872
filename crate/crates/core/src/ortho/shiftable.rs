//! Left segments, crossing bounds and shiftable subsets of a vexillary involution.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::involutions::Involution;
use crate::permgroup::Permutation;
use crate::polyring::MultiPoly;

use super::invgroth;

/// A maximal run of consecutive left endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub elems: Vec<usize>,
    pub mobile: bool,
}

/// One shiftable subset `S` with `σ_S`, `σ_S^{-1} z σ_S`, `ϖ_{z,S}` and `Θ_{z,S}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftableSet {
    pub set: Vec<usize>,
    pub sigma: Permutation,
    pub conjugate: Involution,
    #[serde(serialize_with = "poly_text")]
    pub varpi: MultiPoly,
    pub theta: i64,
}

fn poly_text<S: serde::Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftableData {
    pub z: Involution,
    pub left_endpoints: Vec<usize>,
    pub left_segments: Vec<Segment>,
    pub crb: BTreeMap<usize, BTreeSet<usize>>,
    pub shiftable_sets: Vec<ShiftableSet>,
}

impl ShiftableData {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn get(&self, set: &[usize]) -> Option<&ShiftableSet> {
        self.shiftable_sets.iter().find(|s| s.set == set)
    }
}

fn segments(left: &[usize]) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for &a in left {
        match out.last_mut() {
            Some(seg) if seg.elems.last() == Some(&(a - 1)) => seg.elems.push(a),
            _ => out.push(Segment { elems: vec![a], mobile: a != 1 }),
        }
    }
    out
}

/// `crb_z(a_i)`: the `a_j`, `j > i`, in the same segment with
/// `{ t : i ≤ t < j, b_t < b_j } = {i}`.
fn crossing_bounds(z: &Involution, segs: &[Segment]) -> BTreeMap<usize, BTreeSet<usize>> {
    let mut crb = BTreeMap::new();
    for seg in segs {
        for (i, &ai) in seg.elems.iter().enumerate() {
            let mut set = BTreeSet::new();
            for (j, &aj) in seg.elems.iter().enumerate().skip(i + 1) {
                let bj = z.apply(aj);
                let below: Vec<usize> =
                    (i..j).filter(|&t| z.apply(seg.elems[t]) < bj).collect();
                if below == [i] {
                    set.insert(aj);
                }
            }
            crb.insert(ai, set);
        }
    }
    crb
}

/// `σ_S = ∏_L (c_0, c_1, …, c_k)` with `c_0 = min(L) − 1` and `S ∩ L = {c_1 < ⋯ < c_k}`.
fn sigma(segs: &[Segment], set: &[usize]) -> Permutation {
    let mut cycles = Vec::new();
    for seg in segs.iter().filter(|s| s.mobile) {
        let inside: Vec<usize> = set.iter().copied().filter(|a| seg.elems.contains(a)).collect();
        if !inside.is_empty() {
            let mut c = vec![seg.elems[0] - 1];
            c.extend(inside);
            cycles.push(c);
        }
    }
    Permutation::from_cycles(&cycles).expect("disjoint cycles")
}

fn varpi(left: &[usize], crb: &BTreeMap<usize, BTreeSet<usize>>, set: &BTreeSet<usize>) -> (MultiPoly, i64) {
    let mut p = MultiPoly::one();
    let mut theta = 1i64;
    for &a in left {
        if !set.contains(&a) {
            p = p.mul(&MultiPoly::c_plus_beta_x(2, a));
            theta *= 2;
        } else if crb[&a].iter().any(|b| set.contains(b)) {
            p = p.neg();
            theta = -theta;
        } else {
            p = p.mul(&MultiPoly::c_plus_beta_x(1, a));
        }
    }
    (p, theta)
}

/// The full shiftable-subset structure of a vexillary involution. Subsets are
/// listed by size, then lexicographically.
pub fn shiftable_data(z: &Involution) -> Result<ShiftableData> {
    if !z.is_vexillary() {
        return Err(Error::NotVexillary(z.to_string()));
    }
    let left = z.left_endpoints();
    let segs = segments(&left);
    let crb = crossing_bounds(z, &segs);
    let mobile: Vec<usize> = segs.iter().filter(|s| s.mobile).flat_map(|s| s.elems.clone()).collect();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..(1u64 << mobile.len()) {
        let s: BTreeSet<usize> =
            mobile.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, &a)| a).collect();
        let ok = left
            .iter()
            .filter(|a| !s.contains(a))
            .all(|a| crb[a].iter().all(|b| !s.contains(b)));
        if ok {
            sets.push(s.into_iter().collect());
        }
    }
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let shiftable_sets = sets
        .into_iter()
        .map(|set| {
            let sg = sigma(&segs, &set);
            let conj = sg.inverse().compose(z.perm()).compose(&sg);
            let conjugate = Involution::from_perm(conj).expect("conjugate of an involution");
            let (varpi, theta) = varpi(&left, &crb, &set.iter().copied().collect());
            ShiftableSet { set, sigma: sg, conjugate, varpi, theta }
        })
        .collect();
    Ok(ShiftableData { z: z.clone(), left_endpoints: left, left_segments: segs, crb, shiftable_sets })
}

/// The summands `ϖ_{z,S} β^{|S|} Ĝ_{z,S}` as `(S, ϖ_{z,S}·β^{|S|}, σ_S^{-1} z σ_S)`.
pub fn ivex_terms(z: &Involution) -> Result<Vec<(Vec<usize>, MultiPoly, Involution)>> {
    let d = shiftable_data(z)?;
    Ok(d.shiftable_sets
        .into_iter()
        .map(|s| {
            let c = s.varpi.mul(&MultiPoly::beta_pow(s.set.len() as u32));
            (s.set, c, s.conjugate)
        })
        .collect())
}

/// `Σ_{S ∈ shiftable(z)} ϖ_{z,S} β^{|S|} Ĝ_{z,S}`.
pub fn ivex_formula(z: &Involution) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero();
    for (_, c, y) in ivex_terms(z)? {
        total = total.add(&c.mul(&invgroth(&y)));
    }
    Ok(total)
}

/// Whether any `a < b` in the same mobile segment have `z(a) > z(b)`.
pub fn is_locally_noncrossing(z: &Involution) -> Result<bool> {
    if !z.is_vexillary() {
        return Err(Error::NotVexillary(z.to_string()));
    }
    let segs = segments(&z.left_endpoints());
    Ok(segs.iter().filter(|s| s.mobile).all(|s| {
        s.elems.windows(2).all(|w| z.apply(w[0]) > z.apply(w[1]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ortho::ortho_groth;

    fn one_b(c: i64, i: usize) -> MultiPoly {
        MultiPoly::c_plus_beta_x(c, i)
    }

    fn example() -> Involution {
        Involution::parse("(2,7)(3,8)(4,6)(5,9)").unwrap()
    }

    #[test]
    fn worked_example_structure() {
        let d = shiftable_data(&example()).unwrap();
        assert_eq!(d.left_segments, vec![Segment { elems: vec![2, 3, 4, 5], mobile: true }]);
        let sets: Vec<Vec<usize>> = d.shiftable_sets.iter().map(|s| s.set.clone()).collect();
        let want: Vec<Vec<usize>> = vec![
            vec![],
            vec![2],
            vec![4],
            vec![2, 3],
            vec![2, 4],
            vec![4, 5],
            vec![2, 3, 4],
            vec![2, 4, 5],
            vec![2, 3, 4, 5],
        ];
        assert_eq!(sets, want);
        let s = d.get(&[2, 4, 5]).unwrap();
        assert_eq!(s.sigma, Permutation::from_cycles(&[vec![1, 2, 4, 5]]).unwrap());
        assert_eq!(s.conjugate, Involution::parse("(1,7)(2,6)(3,8)(4,9)").unwrap());
        assert_eq!(s.varpi, one_b(1, 2).mul(&one_b(2, 3)).mul(&one_b(1, 5)).neg());
        let e = d.get(&[]).unwrap();
        assert_eq!(e.varpi, one_b(2, 2) * one_b(2, 3) * one_b(2, 4) * one_b(2, 5));
        for s in &d.shiftable_sets {
            assert_eq!(s.theta.unsigned_abs(), 1 << (4 - s.set.len()));
            assert_eq!(MultiPoly::constant(s.theta), s.varpi.truncate(0));
        }
    }

    #[test]
    fn worked_example_sum() {
        let z = example();
        assert_eq!(ivex_formula(&z).unwrap(), *ortho_groth(&z).unwrap());
    }

    #[test]
    fn small_cases() {
        for s in ["(2,3)", "(1,2)", "(1,4)(2,5)", "(2,4)(3,5)"] {
            let z = Involution::parse(s).unwrap();
            assert_eq!(ivex_formula(&z).unwrap(), *ortho_groth(&z).unwrap(), "{s}");
        }
        let d = shiftable_data(&Involution::identity()).unwrap();
        assert_eq!(d.shiftable_sets.len(), 1);
        assert_eq!(d.shiftable_sets[0].varpi, MultiPoly::one());
    }

    #[test]
    fn locally_noncrossing_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| {
                Involution::all_vexillary(n)
                    .iter()
                    .filter(|z| is_locally_noncrossing(z).unwrap())
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 20, 47]);
    }
}
