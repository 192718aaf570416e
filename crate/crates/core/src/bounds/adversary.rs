//! Relational adversary quantities by enumeration.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::all_permutations;

pub const CRA_CAP: usize = 5;
pub const QUANTUM_PARAMS_CAP: usize = 7;

/// Outcome of the classical relational adversary enumeration for matchings
/// under the column-swap relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CraReport {
    /// Minimum over related pairs and distinguishing cells of
    /// `max(theta(M1, c), theta(M2, c))`.
    pub value: Ratio<u64>,
    /// Distinct numerators `sum_y R(x, y)` seen.
    pub numerators: BTreeSet<u64>,
    /// Distinct denominators of the maximizing `theta` at each triple.
    pub maximizing_denominators: BTreeSet<u64>,
    /// Number of related ordered pairs.
    pub related_pairs: usize,
}

/// The CRA value of learning a matching, with `R(M1, M2) = 1` iff the two
/// permutation matrices differ by swapping two columns.
pub fn cra_value_matching(n: usize) -> Result<Ratio<u64>> {
    Ok(cra_report_matching(n, Exec::default())?.value)
}

pub fn cra_report_matching(n: usize, exec: Exec) -> Result<CraReport> {
    if n < 2 {
        return Err(Error::Config(
            "the column-swap relation needs n >= 2".into(),
        ));
    }
    if n > CRA_CAP {
        return Err(Error::EnumerationCap {
            what: "CRA enumeration",
            n,
            cap: CRA_CAP,
        });
    }
    let perms = all_permutations(n, 0);

    // relation by brute force over all pairs: a column swap of a permutation
    // matrix changes exactly two rows' partners
    let neighbours: Vec<Vec<usize>> = exec.map_range(perms.len(), |x| {
        (0..perms.len())
            .filter(|&y| {
                perms[x]
                    .iter()
                    .zip(&perms[y])
                    .filter(|(a, b)| a != b)
                    .count()
                    == 2
            })
            .collect()
    });

    let cell = |p: &[usize], i: usize, j: usize| p[i] == j;
    // theta(x, (i, j)) as (numerator, denominator); denominator 0 = undefined
    let theta = |x: usize, i: usize, j: usize| -> (u64, u64) {
        let num = neighbours[x].len() as u64;
        let den = neighbours[x]
            .iter()
            .filter(|&&y| cell(&perms[x], i, j) != cell(&perms[y], i, j))
            .count() as u64;
        (num, den)
    };

    struct Partial {
        value: Option<Ratio<u64>>,
        numerators: BTreeSet<u64>,
        dens: BTreeSet<u64>,
        pairs: usize,
    }

    let partials: Vec<Partial> = exec.map_range(perms.len(), |x| {
        let mut p = Partial {
            value: None,
            numerators: BTreeSet::new(),
            dens: BTreeSet::new(),
            pairs: 0,
        };
        for &y in &neighbours[x] {
            p.pairs += 1;
            for i in 0..n {
                for j in 0..n {
                    if cell(&perms[x], i, j) == cell(&perms[y], i, j) {
                        continue;
                    }
                    let (nx, dx) = theta(x, i, j);
                    let (ny, dy) = theta(y, i, j);
                    p.numerators.insert(nx);
                    p.numerators.insert(ny);
                    // both denominators are >= 1: the pair itself differs here
                    let tx = Ratio::new(nx, dx);
                    let ty = Ratio::new(ny, dy);
                    let (best, den) = if tx >= ty { (tx, dx) } else { (ty, dy) };
                    p.dens.insert(den);
                    p.value = Some(p.value.map_or(best, |v: Ratio<u64>| v.min(best)));
                }
            }
        }
        p
    });

    let mut report = CraReport {
        value: Ratio::from_integer(u64::MAX),
        numerators: BTreeSet::new(),
        maximizing_denominators: BTreeSet::new(),
        related_pairs: 0,
    };
    for p in partials {
        if let Some(v) = p.value {
            report.value = report.value.min(v);
        }
        report.numerators.extend(p.numerators);
        report.maximizing_denominators.extend(p.dens);
        report.related_pairs += p.pairs;
    }
    Ok(report)
}

/// Extremal degrees `(m, m', l, l')` of a relation between inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdversaryParams {
    pub m: usize,
    pub m_prime: usize,
    pub l: usize,
    pub l_prime: usize,
}

impl AdversaryParams {
    /// `sqrt(m m' / (l l'))`.
    pub fn value(&self) -> f64 {
        ((self.m * self.m_prime) as f64 / (self.l * self.l_prime) as f64).sqrt()
    }
}

/// Enumerates the relation on column-permuted half graphs that exchanges the
/// columns of weights `w` and `w + 1`, for every `w < n`, and returns its
/// extremal parameters: `m` the least number of partners of any input,
/// `l` the most partners of one input that differ from it at one fixed cell,
/// and the primed versions from the other side of the relation.
pub fn quantum_adversary_params_colperm(n: usize) -> Result<AdversaryParams> {
    if n < 2 {
        return Err(Error::Config(
            "the weight-swap relation needs n >= 2".into(),
        ));
    }
    if n > QUANTUM_PARAMS_CAP {
        return Err(Error::EnumerationCap {
            what: "quantum adversary parameters",
            n,
            cap: QUANTUM_PARAMS_CAP,
        });
    }
    let lists = all_permutations(n, 1);
    let index: HashMap<&[usize], usize> = lists
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_slice(), i))
        .collect();

    let mut forward: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); lists.len()];
    for (x, list) in lists.iter().enumerate() {
        for w in 1..n {
            let mut y = list.clone();
            let a = y.iter().position(|&v| v == w).expect("permutation");
            let b = y.iter().position(|&v| v == w + 1).expect("permutation");
            y.swap(a, b);
            forward[x].insert(index[y.as_slice()]);
        }
    }
    let mut backward: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); lists.len()];
    for (x, ys) in forward.iter().enumerate() {
        for &y in ys {
            backward[y].insert(x);
        }
    }

    // entry (i, j) of the matrix with column weights X is 1 iff i + X[j] >= n
    let differs =
        |x: usize, y: usize, i: usize, j: usize| (i + lists[x][j] >= n) != (i + lists[y][j] >= n);
    let max_at_cell = |side: &[BTreeSet<usize>]| -> usize {
        (0..lists.len())
            .map(|x| {
                (0..n * n)
                    .map(|c| {
                        side[x]
                            .iter()
                            .filter(|&&y| differs(x, y, c / n, c % n))
                            .count()
                    })
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    };

    Ok(AdversaryParams {
        m: forward.iter().map(BTreeSet::len).min().unwrap_or(0),
        m_prime: backward.iter().map(BTreeSet::len).min().unwrap_or(0),
        l: max_at_cell(&forward),
        l_prime: max_at_cell(&backward),
    })
}
