//! Brute-force checks of the lower bounds at small `n`: exact decision-tree
//! depth, the counting bound, relational-adversary quantities, and the
//! linear-size zero-certificate for half graphs.

mod adversary;
mod certificate;
mod minimax;
mod table;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::instances::{ColumnPermutedHalfGraph, Family, HalfGraph, HiddenInstance, Matching};
use crate::perm::all_permutations;

pub use adversary::{
    cra_report_matching, cra_value_matching, quantum_adversary_params_colperm, AdversaryParams,
    CraReport, CRA_CAP, QUANTUM_PARAMS_CAP,
};
pub use certificate::{
    count_consistent, one_certificate, verify_unique, verify_unique_with, zero_certificate,
    Certificate, VERIFY_CAP,
};
pub use minimax::{depth_cap, exact_det_depth};
pub use table::{bounds_table, BoundsRow};

/// `ceil(log2(family_size))`: with binary answers, a decision tree that
/// tells `family_size` instances apart needs at least this depth.
pub fn info_lower_bound(family_size: &BigUint) -> Result<u64> {
    if family_size.bits() == 0 {
        return Err(Error::Config("family size must be at least 1".into()));
    }
    Ok((family_size - 1u32).bits())
}

/// `n!` as a big integer.
pub fn factorial_big(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Number of members of `family` at size `n`.
pub fn family_size(family: Family, n: usize) -> BigUint {
    let f = factorial_big(n);
    match family {
        Family::Matching | Family::ColPermuted => f,
        Family::HalfGraph => &f * &f,
    }
}

/// Every member of `family` at size `n`, in a fixed order.
pub fn enumerate_family(family: Family, n: usize) -> Vec<HiddenInstance> {
    match family {
        Family::Matching => all_permutations(n, 0)
            .into_iter()
            .map(|p| Matching::new(p).expect("permutation").into())
            .collect(),
        Family::ColPermuted => all_permutations(n, 1)
            .into_iter()
            .map(|p| ColumnPermutedHalfGraph::new(p).expect("permutation").into())
            .collect(),
        Family::HalfGraph => {
            let perms = all_permutations(n, 1);
            let mut out = Vec::with_capacity(perms.len() * perms.len());
            for r in &perms {
                for b in &perms {
                    out.push(
                        HalfGraph::new(r.clone(), b.clone())
                            .expect("permutation")
                            .into(),
                    );
                }
            }
            out
        }
    }
}

/// Row-major bit mask of a dense instance, `n <= 8`.
pub(crate) fn cell_mask(inst: &HiddenInstance) -> u64 {
    let n = inst.n();
    debug_assert!(n * n <= 64);
    let mut mask = 0u64;
    for i in 0..n {
        for j in 0..n {
            if inst.cell(i, j) {
                mask |= 1 << (i * n + j);
            }
        }
    }
    mask
}
