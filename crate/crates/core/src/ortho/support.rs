//! The outer support bound `B_inv⁺(z)` and its left weak order digraph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::Serialize;

use crate::grothendieck::k_pieri_chains;
use crate::involutions::Involution;
use crate::permgroup::Permutation;

/// `B_inv⁺(z)` with edges `v → w` whenever `w = s_i v` and `ℓ(w) = ℓ(v) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinvPlus {
    pub z: Involution,
    pub binv: BTreeSet<Permutation>,
    pub nodes: BTreeSet<Permutation>,
    pub edges: Vec<(Permutation, Permutation)>,
}

#[derive(Serialize)]
struct JsonNode {
    w: Permutation,
    w_inverse: Permutation,
    length: usize,
    in_binv: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gc: Option<u64>,
}

#[derive(Serialize)]
struct JsonGraph {
    z: Involution,
    nodes: Vec<JsonNode>,
    edges: Vec<(usize, usize)>,
}

/// Targets of unmarked `k(z)`-Pieri chains from `B_inv(z)` whose covers `(a,b)` satisfy
/// `j(z) ≤ a ≤ k(z) < b` and `a < z(a)` or `z(b) < b`.
pub fn binv_plus(z: &Involution) -> BinvPlus {
    let (j, k) = (z.j(), z.k());
    let binv = z.binv();
    let allow = |a: usize, b: usize| a >= j && (a < z.apply(a) || z.apply(b) < b);
    let mut nodes = BTreeSet::new();
    for v in &binv {
        for c in k_pieri_chains(v, k, &allow) {
            nodes.insert(c.end);
        }
    }
    let mut edges = Vec::new();
    for v in &nodes {
        let lv = v.length();
        for i in 1..=v.n() {
            let w = v.left_mul_s(i);
            if w.length() == lv + 1 && nodes.contains(&w) {
                edges.push((v.clone(), w));
            }
        }
    }
    edges.sort();
    BinvPlus { z: z.clone(), binv, nodes, edges }
}

impl BinvPlus {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.nodes.contains(w)
    }

    /// Nodes ordered by length descending, then by inverse one-line word.
    pub fn ordered_nodes(&self) -> Vec<&Permutation> {
        let mut v: Vec<&Permutation> = self.nodes.iter().collect();
        v.sort_by_key(|w| (std::cmp::Reverse(w.length()), w.inverse()));
        v
    }

    /// Weak connectivity of the digraph.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.nodes.iter().next() else {
            return true;
        };
        let mut adj: BTreeMap<&Permutation, Vec<&Permutation>> = BTreeMap::new();
        for (v, w) in &self.edges {
            adj.entry(v).or_default().push(w);
            adj.entry(w).or_default().push(v);
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &n in adj.get(u).into_iter().flatten() {
                if seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    /// Graphviz source with labels `w⁻¹:GC`, `B_inv` members filled blue.
    pub fn to_dot(&self, gc: Option<&BTreeMap<Permutation, u64>>) -> String {
        let order = self.ordered_nodes();
        let index: BTreeMap<&Permutation, usize> = order.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let mut s = String::new();
        writeln!(s, "digraph binv_plus {{").unwrap();
        writeln!(s, "  label=\"{}\";", self.z).unwrap();
        writeln!(s, "  node [shape=box];").unwrap();
        for (i, w) in order.iter().enumerate() {
            let mut label = w.inverse().to_string();
            if let Some(gc) = gc {
                write!(label, ":{}", gc.get(*w).copied().unwrap_or(0)).unwrap();
            }
            let style = if self.binv.contains(*w) { ", style=filled, fillcolor=lightskyblue" } else { "" };
            writeln!(s, "  n{i} [label=\"{label}\"{style}];").unwrap();
        }
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|(v, w)| (index[v], index[w])).collect();
        edges.sort_unstable();
        for (a, b) in edges {
            writeln!(s, "  n{a} -> n{b};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, gc: Option<&BTreeMap<Permutation, u64>>) -> String {
        let order = self.ordered_nodes();
        let index: BTreeMap<&Permutation, usize> = order.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let nodes = order
            .iter()
            .map(|w| JsonNode {
                w: (*w).clone(),
                w_inverse: w.inverse(),
                length: w.length(),
                in_binv: self.binv.contains(*w),
                gc: gc.map(|g| g.get(*w).copied().unwrap_or(0)),
            })
            .collect();
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|(v, w)| (index[v], index[w])).collect();
        edges.sort_unstable();
        serde_json::to_string_pretty(&JsonGraph { z: self.z.clone(), nodes, edges }).expect("serializable")
    }
}
