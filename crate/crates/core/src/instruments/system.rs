//! The assembled linear pricing system `C d = p`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// How an instrument's market quote enters the pricing system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuoteChannel {
    /// Quote is the price `p_i` (coupon bonds, the unit constraint).
    Price,
    /// Quote scales cashflow entries of `C` (deposits, FRAs, swaps).
    Rate,
}

/// Sorted cashflow dates, cashflow matrix, and price vector of a set of
/// benchmark instruments, plus per-row quote metadata.
#[derive(Debug, Clone)]
pub struct PricingSystem {
    dates: Vec<f64>,
    c: DMatrix<f64>,
    p: DVector<f64>,
    labels: Vec<String>,
    channels: Vec<QuoteChannel>,
    quotes: Vec<f64>,
    /// `∂(row i)/∂quote_i` as sparse `(column, coefficient)` pairs.
    jacobians: Vec<Option<Vec<(usize, f64)>>>,
}

impl PricingSystem {
    /// Build a system from raw parts, treating every row as price-quoted.
    ///
    /// Validates shape, strictly increasing nonnegative dates, nonempty
    /// columns, and full row rank.
    pub fn from_parts(
        dates: Vec<f64>,
        c: DMatrix<f64>,
        p: DVector<f64>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let quotes = p.iter().copied().collect();
        let n = c.nrows();
        Self::with_metadata(
            dates,
            c,
            p,
            labels,
            vec![QuoteChannel::Price; n],
            quotes,
            vec![None; n],
        )
    }

    pub(crate) fn with_metadata(
        dates: Vec<f64>,
        c: DMatrix<f64>,
        p: DVector<f64>,
        labels: Vec<String>,
        channels: Vec<QuoteChannel>,
        quotes: Vec<f64>,
        jacobians: Vec<Option<Vec<(usize, f64)>>>,
    ) -> Result<Self> {
        let n = c.nrows();
        let cols = c.ncols();
        if dates.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: dates.len(),
            });
        }
        if p.len() != n || labels.len() != n || channels.len() != n || quotes.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        if n > cols {
            return Err(Error::InvalidArgument(format!(
                "more instruments ({n}) than cashflow dates ({cols})"
            )));
        }
        for (i, &d) in dates.iter().enumerate() {
            if !d.is_finite() || d < 0.0 {
                return Err(Error::InvalidDates(format!("date {d} at index {i}")));
            }
            if i > 0 && d <= dates[i - 1] {
                return Err(Error::InvalidDates(format!(
                    "dates not strictly increasing at index {i}"
                )));
            }
        }
        for j in 0..cols {
            if c.column(j).iter().all(|&v| v == 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "cashflow column {j} (x = {}) has no entries",
                    dates[j]
                )));
            }
        }
        let sys = Self {
            dates,
            c,
            p,
            labels,
            channels,
            quotes,
            jacobians,
        };
        sys.check_full_rank()?;
        Ok(sys)
    }

    /// Rank-revealing pass over the instrument rows (pivoted Gram-Schmidt).
    ///
    /// A numerically dependent row is classified as either a redundant
    /// instrument (its price matches the replicating combination) or an
    /// arbitrage inconsistency (it does not).
    fn check_full_rank(&self) -> Result<()> {
        let n = self.c.nrows();
        let mut members: Vec<usize> = Vec::with_capacity(n);
        let mut residuals: Vec<(usize, DVector<f64>)> = (0..n)
            .map(|i| (i, self.c.row(i).transpose().clone_owned()))
            .collect();
        let scale = residuals
            .iter()
            .map(|(_, r)| r.norm())
            .fold(0.0_f64, f64::max);
        let tol = 1e-10 * scale;
        while !residuals.is_empty() {
            let (k, norm) = residuals
                .iter()
                .enumerate()
                .map(|(k, (_, r))| (k, r.norm()))
                .fold((0, f64::NEG_INFINITY), |acc, cur| {
                    if cur.1 > acc.1 {
                        cur
                    } else {
                        acc
                    }
                });
            let (row_idx, vec) = residuals.swap_remove(k);
            if norm <= tol {
                return Err(self.classify_dependent_row(row_idx, &members));
            }
            let q = &vec / norm;
            for (_, r) in residuals.iter_mut() {
                let proj = q.dot(r);
                *r -= proj * &q;
            }
            members.push(row_idx);
        }
        Ok(())
    }

    fn classify_dependent_row(&self, row_idx: usize, independent: &[usize]) -> Error {
        let label = self.labels[row_idx].clone();
        if independent.is_empty() {
            return Error::RedundantInstrument { label };
        }
        // Replicate the dependent row from the independent ones and compare
        // prices (law of one price).
        let cols = self.c.ncols();
        let mut b = DMatrix::zeros(cols, independent.len());
        for (j, &i) in independent.iter().enumerate() {
            b.set_column(j, &self.c.row(i).transpose());
        }
        let target = self.c.row(row_idx).transpose();
        let svd = b.svd(true, true);
        match svd.solve(&target, 1e-12) {
            Ok(gamma) => {
                let replicated: f64 = independent
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| gamma[j] * self.p[i])
                    .sum();
                let quoted = self.p[row_idx];
                let tol = 1e-8 * quoted.abs().max(1.0);
                if (replicated - quoted).abs() > tol {
                    Error::ArbitrageInconsistent {
                        label,
                        quoted,
                        replicated,
                    }
                } else {
                    Error::RedundantInstrument { label }
                }
            }
            Err(_) => Error::RedundantInstrument { label },
        }
    }

    pub fn num_instruments(&self) -> usize {
        self.c.nrows()
    }

    pub fn num_dates(&self) -> usize {
        self.dates.len()
    }

    /// Cashflow dates as year fractions, strictly increasing.
    pub fn dates(&self) -> &[f64] {
        &self.dates
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.c
    }

    pub fn prices(&self) -> &DVector<f64> {
        &self.p
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn channels(&self) -> &[QuoteChannel] {
        &self.channels
    }

    /// Quote value per row (price or rate, depending on the channel).
    pub fn quotes(&self) -> &[f64] {
        &self.quotes
    }

    /// Sparse derivative of row `i` with respect to its quote, if the quote
    /// enters through the cashflow matrix.
    pub fn quote_jacobian(&self, i: usize) -> Option<&[(usize, f64)]> {
        self.jacobians[i].as_deref()
    }

    /// Nonzero cashflows of row `i` as `(year fraction, amount)` pairs.
    pub fn row_cashflows(&self, i: usize) -> Vec<(f64, f64)> {
        self.c
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(j, &v)| (self.dates[j], v))
            .collect()
    }

    /// Same dates and cashflows with a new price vector.
    pub fn with_prices(&self, p: DVector<f64>) -> Result<Self> {
        if p.len() != self.p.len() {
            return Err(Error::DimensionMismatch {
                expected: self.p.len(),
                got: p.len(),
            });
        }
        let mut out = self.clone();
        for (i, channel) in out.channels.iter().enumerate() {
            if *channel == QuoteChannel::Price {
                out.quotes[i] = p[i];
            }
        }
        out.p = p;
        Ok(out)
    }

    /// Rebuild the system at new rate quotes. Rows whose quotes enter through
    /// `C` are affine in the quote, so the update is
    /// `row_i(α) = row_i(α₀) + (α_i − α₀_i) · ∂row_i/∂α`.
    pub fn with_rate_quotes(&self, alpha: &[f64]) -> Result<Self> {
        if alpha.len() != self.quotes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.quotes.len(),
                got: alpha.len(),
            });
        }
        let mut out = self.clone();
        for i in 0..self.num_instruments() {
            match &self.jacobians[i] {
                Some(jac) => {
                    let shift = alpha[i] - self.quotes[i];
                    if shift != 0.0 {
                        for &(j, coeff) in jac {
                            out.c[(i, j)] += shift * coeff;
                        }
                        out.quotes[i] = alpha[i];
                    }
                }
                None => {
                    if (alpha[i] - self.quotes[i]).abs() > 1e-14 * self.quotes[i].abs().max(1.0) {
                        return Err(Error::InvalidArgument(format!(
                            "quote of {} does not enter the cashflow matrix and cannot be moved",
                            self.labels[i]
                        )));
                    }
                }
            }
        }
        Ok(out)
    }
}
