use super::{
    grover_charge, Answer, ComparisonOracle, EdgeOracle, Query, RowOrdering, ThresholdOracle,
    Transcript,
};
use crate::error::{Error, Result};
use crate::instances::{Family, HiddenInstance};

/// Answers queries from a concrete hidden instance and records every one.
///
/// No caching: asking the same cell twice is charged twice.
#[derive(Debug, Clone)]
pub struct CountingOracle {
    instance: HiddenInstance,
    transcript: Transcript,
}

impl CountingOracle {
    pub fn new(instance: HiddenInstance) -> Self {
        CountingOracle {
            instance,
            transcript: Transcript::new(),
        }
    }

    /// Same oracle, but only totals are kept.
    pub fn totals_only(instance: HiddenInstance) -> Self {
        CountingOracle {
            instance,
            transcript: Transcript::totals_only(),
        }
    }

    pub fn instance(&self) -> &HiddenInstance {
        &self.instance
    }

    pub fn transcript(&self) -> &Transcript {
        &self.transcript
    }

    pub fn into_transcript(self) -> Transcript {
        self.transcript
    }

    fn check_cell(&self, row: usize, col: usize) -> Result<()> {
        let n = self.instance.n();
        if row >= n || col >= n {
            return Err(Error::IndexOutOfRange { row, col, n });
        }
        Ok(())
    }

    /// Compares rows `a` and `b` on the columns `cols` without issuing edge
    /// queries. The answer is read from the ground truth and charged
    /// `ceil(sqrt(|cols| / d))`, `d` being the number of columns of `cols`
    /// on which the rows differ. Stands in for an amplitude-amplification
    /// search for a differing column; only its cost is modelled.
    pub fn charged_row_compare(
        &mut self,
        a: usize,
        b: usize,
        cols: &[usize],
    ) -> Result<RowOrdering> {
        let HiddenInstance::HalfGraph(h) = &self.instance else {
            return Err(Error::WrongFamily {
                family: self.instance.family(),
                query: "charged_row_compare",
            });
        };
        for &c in cols {
            self.check_cell(a, c)?;
            self.check_cell(b, c)?;
        }
        let (mut a_only, mut b_only) = (0usize, 0usize);
        for &c in cols {
            match (h.cell(a, c), h.cell(b, c)) {
                (true, false) => a_only += 1,
                (false, true) => b_only += 1,
                _ => {}
            }
        }
        let ordering = match (a_only, b_only) {
            (0, 0) => return Err(Error::EqualRows { a, b }),
            (0, _) => RowOrdering::Less,
            (_, 0) => RowOrdering::Greater,
            _ => {
                return Err(Error::Inconsistent {
                    expected: "half graph",
                    detail: format!("rows {a} and {b} are incomparable on the live columns"),
                })
            }
        };
        let charge = grover_charge(cols.len(), a_only + b_only);
        self.transcript.push(
            Query::ChargedCompare {
                a,
                b,
                width: cols.len(),
            },
            Answer::Order(ordering),
            charge,
        );
        Ok(ordering)
    }
}

impl EdgeOracle for CountingOracle {
    fn n(&self) -> usize {
        self.instance.n()
    }

    fn edge_query(&mut self, row: usize, col: usize) -> Result<bool> {
        self.check_cell(row, col)?;
        let answer = self.instance.cell(row, col);
        self.transcript
            .push(Query::Edge { row, col }, Answer::Bit(answer), 1);
        Ok(answer)
    }
}

impl ThresholdOracle for CountingOracle {
    fn n(&self) -> usize {
        self.instance.n()
    }

    /// One edge query at row `n - t` of column `col`, logged as a threshold
    /// query.
    fn threshold_query(&mut self, col: usize, t: usize) -> Result<bool> {
        let HiddenInstance::ColPermuted(c) = &self.instance else {
            return Err(Error::WrongFamily {
                family: self.instance.family(),
                query: "threshold_query",
            });
        };
        let n = c.n();
        if col >= n || t == 0 || t > n {
            return Err(Error::IndexOutOfRange { row: t, col, n });
        }
        let answer = c.cell(c.threshold_row(t), col);
        self.transcript
            .push(Query::Threshold { col, t }, Answer::Bit(answer), 1);
        Ok(answer)
    }
}

impl ComparisonOracle for CountingOracle {
    fn n(&self) -> usize {
        self.instance.n()
    }

    /// `R[r] >= B[b]`, which is exactly the edge query at `(r, b)`.
    fn comparison_query(&mut self, r: usize, b: usize) -> Result<bool> {
        if self.instance.family() != Family::HalfGraph {
            return Err(Error::WrongFamily {
                family: self.instance.family(),
                query: "comparison_query",
            });
        }
        self.check_cell(r, b)?;
        let answer = self.instance.cell(r, b);
        self.transcript
            .push(Query::Comparison { r, b }, Answer::Bit(answer), 1);
        Ok(answer)
    }
}
