use serde::Serialize;

use super::{
    cra_value_matching, depth_cap, exact_det_depth, family_size, info_lower_bound, one_certificate,
    quantum_adversary_params_colperm, verify_unique, zero_certificate, CRA_CAP, QUANTUM_PARAMS_CAP,
};
use crate::error::Result;
use crate::instances::Family;

/// Largest `n` at which the table runs the certificate check by default.
const TABLE_CERT_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub quantity: String,
    pub n: usize,
    pub computed: String,
    pub predicted: String,
    pub matched: bool,
}

/// Every brute-force quantity for `2 <= n <= max_n`, each clipped to its own
/// enumeration cap, against the closed form it should equal.
pub fn bounds_table(max_n: usize) -> Result<Vec<BoundsRow>> {
    let mut rows = Vec::new();
    let row = |quantity: &str, n, computed: String, predicted: String, matched| BoundsRow {
        quantity: quantity.to_string(),
        n,
        computed,
        predicted,
        matched,
    };

    for n in 2..=max_n.min(depth_cap(Family::Matching)) {
        let d = exact_det_depth(Family::Matching, n)?;
        let p = n * (n - 1) / 2;
        rows.push(row(
            "det_depth_matching",
            n,
            d.to_string(),
            p.to_string(),
            d as usize == p,
        ));
    }
    for n in 2..=max_n.min(depth_cap(Family::ColPermuted)) {
        let d = exact_det_depth(Family::ColPermuted, n)?;
        let info = info_lower_bound(&family_size(Family::ColPermuted, n))?;
        rows.push(row(
            "det_depth_col_permuted",
            n,
            d.to_string(),
            format!(">={info}"),
            u64::from(d) >= info,
        ));
    }
    for n in 2..=max_n.min(CRA_CAP) {
        let v = cra_value_matching(n)?;
        let p = (n * (n - 1) / 2) as u64;
        rows.push(row(
            "cra_matching",
            n,
            v.to_string(),
            p.to_string(),
            v == p.into(),
        ));
    }
    for n in 2..=max_n.min(QUANTUM_PARAMS_CAP) {
        let q = quantum_adversary_params_colperm(n)?;
        let computed = format!("({},{},{},{})", q.m, q.m_prime, q.l, q.l_prime);
        let predicted = format!("({},{},1,1)", n - 1, n - 1);
        let matched = computed == predicted;
        rows.push(row(
            "quantum_params_col_permuted",
            n,
            computed,
            predicted,
            matched,
        ));
    }
    for n in 2..=max_n.min(TABLE_CERT_CAP) {
        let c = zero_certificate(n)?;
        let unique = verify_unique(&c)?;
        rows.push(row(
            "zero_certificate",
            n,
            format!("size={} unique={unique}", c.len()),
            format!("size={} unique=true", 2 * n - 3),
            unique && c.len() == 2 * n - 3,
        ));
    }
    for n in 2..=max_n.min(TABLE_CERT_CAP) {
        let c = one_certificate(n)?;
        let unique = verify_unique(&c)?;
        rows.push(row(
            "one_certificate",
            n,
            format!("size={} unique={unique}", c.len()),
            format!("size={} unique=true", 2 * n - 1),
            unique && c.len() == 2 * n - 1,
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_n_4() {
        let rows = bounds_table(4).unwrap();
        let depths: Vec<&str> = rows
            .iter()
            .filter(|r| r.quantity == "det_depth_matching")
            .map(|r| r.computed.as_str())
            .collect();
        assert_eq!(depths, ["1", "3", "6"]);
        assert!(rows.iter().all(|r| r.matched), "{rows:#?}");
    }
}
