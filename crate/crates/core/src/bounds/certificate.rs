//! Linear-size certificates for `L_n` within the half graphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::all_permutations;

pub const VERIFY_CAP: usize = 7;

/// Cells of `L_n` (0-based) that all carry `polarity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub cells: BTreeSet<(usize, usize)>,
    pub polarity: bool,
}

impl Certificate {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn without(&self, cell: (usize, usize)) -> Certificate {
        let mut c = self.clone();
        c.cells.remove(&cell);
        c
    }
}

/// Grid with the certified cells marked by their polarity, other cells `.`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.polarity { '1' } else { '0' };
        for i in 0..self.n {
            let line: Vec<String> = (0..self.n)
                .map(|j| {
                    if self.cells.contains(&(i, j)) {
                        mark.to_string()
                    } else {
                        ".".to_string()
                    }
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The 0-cells `(i, i + 1)` and `(i, i + 2)` of `L_n`, `2n - 3` in total.
pub fn zero_certificate(n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Config("a certificate needs n >= 2".into()));
    }
    let cells = (0..n)
        .flat_map(|i| [(i, i + 1), (i, i + 2)])
        .filter(|&(_, j)| j < n)
        .collect();
    Ok(Certificate {
        n,
        cells,
        polarity: false,
    })
}

/// The 1-cells `(j, j)` and `(j + 1, j)` of `L_n`, `2n - 1` in total.
///
/// This is the zero pattern reflected and shifted onto the diagonal. The
/// plain 180 degree rotation of the zero pattern misses the diagonal ties
/// and is never unique.
pub fn one_certificate(n: usize) -> Result<Certificate> {
    if n < 2 {
        return Err(Error::Config("a certificate needs n >= 2".into()));
    }
    let cells = (0..n)
        .flat_map(|j| [(j, j), (j + 1, j)])
        .filter(|&(i, _)| i < n)
        .collect();
    Ok(Certificate {
        n,
        cells,
        polarity: true,
    })
}

/// Number of half graphs of size `cert.n` that carry `cert.polarity` on every
/// certificate cell, by enumerating all `(n!)^2` row/column value pairs.
pub fn count_consistent(cert: &Certificate, exec: Exec) -> Result<u64> {
    let n = cert.n;
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if n > VERIFY_CAP {
        return Err(Error::EnumerationCap {
            what: "certificate verification",
            n,
            cap: VERIFY_CAP,
        });
    }
    if let Some(&(i, j)) = cert.cells.iter().find(|&&(i, j)| i >= n || j >= n) {
        return Err(Error::IndexOutOfRange { row: i, col: j, n });
    }
    let perms = all_permutations(n, 1);
    let cells: Vec<(usize, usize)> = cert.cells.iter().copied().collect();
    let polarity = cert.polarity;
    Ok(exec.sum_range(perms.len(), |r| {
        let rows = &perms[r];
        perms
            .iter()
            .filter(|cols| cells.iter().all(|&(i, j)| (rows[i] >= cols[j]) == polarity))
            .count() as u64
    }))
}

/// True iff exactly one half graph is consistent with the certificate.
pub fn verify_unique(cert: &Certificate) -> Result<bool> {
    verify_unique_with(cert, Exec::default())
}

pub fn verify_unique_with(cert: &Certificate, exec: Exec) -> Result<bool> {
    Ok(count_consistent(cert, exec)? == 1)
}
