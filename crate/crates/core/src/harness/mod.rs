//! Exhaustive sweeps, census tables and exports.

mod census;
mod export;
mod sweeps;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use census::{equality_census, lnc_counts, values_table, CensusRow, LncRow};
pub use export::{binv_plus_dot, binv_plus_json, compute, poly_json, shiftable_json, Format, Input, Target};

/// One falsified case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of one sweep. Observational sweeps list their counterexamples
/// in `failures` but always pass.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub theorem_id: String,
    pub n_max: usize,
    pub cases_checked: usize,
    pub failures: Vec<Failure>,
    pub observational: bool,
    pub wall_time: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.cases_checked > 0 && (self.observational || self.failures.is_empty())
    }

    /// The report without timing, for comparing runs.
    pub fn canonical(&self) -> (String, usize, usize, Vec<Failure>) {
        (self.theorem_id.clone(), self.n_max, self.cases_checked, self.failures.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed(), self.observational) {
            (false, _) => "FAIL",
            (true, true) => "OBSERVED",
            (true, false) => "PASS",
        };
        writeln!(
            f,
            "{status} {} n_max={} cases={} failures={} time={:.2}s",
            self.theorem_id,
            self.n_max,
            self.cases_checked,
            self.failures.len(),
            self.wall_time
        )?;
        for fl in self.failures.iter().take(20) {
            writeln!(f, "  {}: expected {} got {}", fl.input, fl.expected, fl.actual)?;
        }
        if self.failures.len() > 20 {
            writeln!(f, "  … {} more", self.failures.len() - 20)?;
        }
        Ok(())
    }
}

/// Sweep identifiers with a short description and the default `n_max`.
pub const THEOREMS: &[(&str, &str, usize)] = &[
    ("qd-thm", "𝒢^O_z = Ĝ_z ∏_{i≤k(z)}(2+βx_i) on quasi-dominant vexillary I_n", 7),
    ("ivex-thm", "shiftable-subset formula equals 𝒢^O_z on vexillary I_n", 7),
    ("iG-thm", "∂^{(β)}_i Ĝ_z recursion on I_n, i ≤ n", 5),
    ("iG-thm2", "Ĝ_z product formula for dominant z ∈ I_n", 7),
    ("dom-thm", "k-Pieri chain formula for GC^O_z on quasi-dominant I_n", 6),
    ("orthogonal-recursion", "∂^{(β)}_i 𝒢^O_z recursion on vexillary I_n", 6),
    ("positivity", "GC^O_z ≥ 0 on vexillary I_n", 7),
    ("supp-thm", "shift↑ 𝒢^O_z = 𝒢^O_{1×z} iff z(1)=1 on vexillary I_n", 6),
    ("shift-cor", "GC^O index identities under z↓m and 1^m×z on vexillary I_n", 6),
    ("b+conj", "B_inv(z) ⊆ supp(GC^O_z) ⊆ B_inv⁺(z) on vexillary I_n", 8),
    ("supp-prop", "support bounds for B_inv(z) and B_inv⁺(z) on I_n", 7),
    ("fkgsp", "0/1 coefficients of 𝒢^Sp_z on fixed-point-free I_n", 6),
    ("lenart", "transition formula vs product-then-expand, v ∈ S_n, ℓ(v) ≤ 6, k ≤ 4", 5),
    ("lensot", "k-Pieri product rule vs product-then-expand, v ∈ S_n, ℓ(v) ≤ 6, p ≤ k ≤ 4", 5),
    ("pieri", "vertical-strip rule vs product-then-expand, |λ| ≤ 6, p ≤ k ≤ 4", 4),
    ("pieri-unique", "at most one unmarked k-Pieri chain between two permutations, v ∈ S_n, k ≤ 4", 5),
    ("1gr-lem", "(1+βx_{n+1})𝒢_{[1^j|n]} expansion, 0 ≤ j ≤ n", 5),
    ("prod-lem", "∏_{i≤k}(2+βx_i) expansion, k ≤ n", 6),
    ("igrass-cor", "I-Grassmannian expansion equals 𝒢^O_{⟨μ|n⟩}, μ_1 ≤ n", 5),
    ("almost-eq", "stable I-Grassmannian and shiftable-subset identities, truncated", 4),
    ("stab", "stab_n identities for ⟨μ|n⟩", 4),
    ("g-prop", "closed form for g_{2n}, 3 ≤ n", 4),
    ("t-prop", "closed form for (2,n), 3 ≤ n", 7),
    ("wij", "supp(GC^O_{w_ij}) = B_inv⁺(w_ij) when i=1 or j−i odd (observational)", 8),
    ("connectivity", "B_inv⁺(z) digraph is connected (observational)", 7),
];

pub fn default_n_max(id: &str) -> Option<usize> {
    THEOREMS.iter().find(|t| t.0 == id).map(|t| t.2)
}

/// Runs `check` on every case in a pool of `jobs` threads (0 = all cores),
/// keeping failures in input order.
pub(crate) fn run_cases<T, F>(cases: &[T], jobs: usize, check: F) -> Result<Vec<Failure>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Failure>> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let results: Vec<Result<Option<Failure>>> = pool.install(|| cases.par_iter().map(&check).collect());
    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(failures)
}

/// Runs one sweep by identifier. Memo caches are cleared afterwards.
pub fn verify(theorem: &str, n_max: usize, jobs: usize) -> Result<SweepReport> {
    let start = Instant::now();
    let observational = matches!(theorem, "wij" | "connectivity");
    let outcome = sweeps::run(theorem, n_max, jobs);
    crate::ortho::clear_caches();
    crate::grothendieck::clear_cache();
    let (cases_checked, failures) = outcome?;
    Ok(SweepReport {
        theorem_id: theorem.to_string(),
        n_max,
        cases_checked,
        failures,
        observational,
        wall_time: start.elapsed().as_secs_f64(),
    })
}
