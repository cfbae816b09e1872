//! Census tables over all involutions of a given size.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::involutions::Involution;
use crate::ortho::{binv_plus, gco_by_path, is_locally_noncrossing};
use crate::permgroup::Permutation;

/// Agreement of `supp(GC^O_z)` with `B_inv⁺(z)` over vexillary `z ∈ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub dominant_eq: usize,
    pub dominant: usize,
    pub vexillary_eq: usize,
    pub vexillary: usize,
    /// Vexillary `z` with `supp(GC^O_z) ≠ B_inv⁺(z)`.
    pub differ: Vec<Involution>,
}

/// Locally noncrossing counts: among vexillary `z ∈ S_n`, and among vexillary
/// `z ∈ S_{n+1}` with `z(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LncRow {
    pub n: usize,
    pub vexillary: usize,
    pub lnc: usize,
    pub fixed_vexillary: usize,
    pub fixed_lnc: usize,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// The distinct nonzero values of `GC^O_{w_0}` for `w_0 = n⋯21`.
pub fn values_table(n: usize) -> Result<BTreeSet<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let w0 = Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>())?;
    Ok(gco_by_path(&Involution::from_perm(w0)?)?.values())
}

/// Counts dominant and vexillary `z ∈ S_n` with `supp(GC^O_z) = B_inv⁺(z)`.
pub fn equality_census(n: usize, jobs: usize) -> Result<CensusRow> {
    let cases = Involution::all_vexillary(n);
    let eq: Vec<Result<bool>> = pool(jobs)?.install(|| {
        cases.par_iter().map(|z| Ok(gco_by_path(z)?.support() == binv_plus(z).nodes)).collect()
    });
    let mut row = CensusRow { n, dominant_eq: 0, dominant: 0, vexillary_eq: 0, vexillary: 0, differ: Vec::new() };
    for (z, e) in cases.into_iter().zip(eq) {
        let e = e?;
        row.vexillary += 1;
        row.vexillary_eq += e as usize;
        if z.is_dominant() {
            row.dominant += 1;
            row.dominant_eq += e as usize;
        }
        if !e {
            row.differ.push(z);
        }
    }
    Ok(row)
}

/// One row per `n ≤ n_max`.
pub fn lnc_counts(n_max: usize) -> Result<Vec<LncRow>> {
    (1..=n_max)
        .map(|n| {
            let count = |zs: Vec<Involution>| -> Result<(usize, usize)> {
                let mut lnc = 0;
                for z in &zs {
                    lnc += is_locally_noncrossing(z)? as usize;
                }
                Ok((zs.len(), lnc))
            };
            let (vexillary, lnc) = count(Involution::all_vexillary(n))?;
            let fixed = Involution::all_vexillary(n + 1).into_iter().filter(|z| z.apply(1) == 1).collect();
            let (fixed_vexillary, fixed_lnc) = count(fixed)?;
            Ok(LncRow { n, vexillary, lnc, fixed_vexillary, fixed_lnc })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert_eq!(values_table(4).unwrap(), BTreeSet::from([1, 2, 3, 4, 6]));
        let lnc: Vec<(usize, usize)> = lnc_counts(5).unwrap().iter().map(|r| (r.lnc, r.fixed_lnc)).collect();
        assert_eq!(lnc, vec![(1, 1), (2, 2), (4, 4), (9, 8), (20, 17)]);
        let row = equality_census(5, 2).unwrap();
        assert_eq!((row.dominant_eq, row.dominant, row.vexillary_eq, row.vexillary), (10, 10, 17, 21));
    }
}
