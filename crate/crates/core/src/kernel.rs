//! Closed-form representers of the curve Hilbert space and their Gram matrices.
//!
//! The space consists of functions on `[0, τ̄]` with absolutely continuous
//! first derivative and inner product
//!
//! ```text
//! ⟨f, g⟩ = f(0) g(0) + f'(0) g'(0) + ∫ f''(x) g''(x) dx.
//! ```
//!
//! Point evaluation at `τ` is represented by the element `φ_τ` computed by
//! [`phi`]; evaluation of the initial slope is represented by `ψ(x) = x`. All
//! formulas here are independent of the horizon `τ̄`, which is implicitly the
//! largest cashflow date of the system being solved.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

fn check_nonnegative_finite(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::InvalidArgument(format!("{name} must be finite, got {v}")));
    }
    if v < 0.0 {
        return Err(Error::InvalidArgument(format!("{name} must be >= 0, got {v}")));
    }
    Ok(())
}

/// `φ_τ(x) = 1 − (x∧τ)³/6 + x·τ·(2 + x∧τ)/2` with `x∧τ = min(x, τ)`.
///
/// Symmetric in its arguments, so it doubles as the kernel function whose
/// Gram matrix entries are `φ_{x_i}(x_j)`.
pub fn phi(tau: f64, x: f64) -> Result<f64> {
    check_nonnegative_finite("tau", tau)?;
    check_nonnegative_finite("x", x)?;
    Ok(phi_unchecked(tau, x))
}

#[inline]
pub(crate) fn phi_unchecked(tau: f64, x: f64) -> f64 {
    let m = x.min(tau);
    1.0 - m * m * m / 6.0 + 0.5 * x * tau * (2.0 + m)
}

/// Derivative of `φ_τ` in its evaluation argument:
/// `φ'_τ(x) = τ − (x∧τ)²/2 + τ·(x∧τ)`.
pub fn phi_prime(tau: f64, x: f64) -> Result<f64> {
    check_nonnegative_finite("tau", tau)?;
    check_nonnegative_finite("x", x)?;
    Ok(phi_prime_unchecked(tau, x))
}

#[inline]
pub(crate) fn phi_prime_unchecked(tau: f64, x: f64) -> f64 {
    let m = x.min(tau);
    tau - 0.5 * m * m + tau * m
}

/// Second derivative `φ''_τ(x) = (τ − x)` on `[0, τ]` and `0` beyond.
#[inline]
pub fn phi_second(tau: f64, x: f64) -> f64 {
    if x <= tau {
        tau - x
    } else {
        0.0
    }
}

/// A representer `φ_τ` anchored at maturity `tau`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Representer {
    tau: f64,
}

impl Representer {
    pub fn new(tau: f64) -> Result<Self> {
        check_nonnegative_finite("tau", tau)?;
        Ok(Self { tau })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn value(&self, x: f64) -> f64 {
        phi_unchecked(self.tau, x)
    }

    pub fn slope(&self, x: f64) -> f64 {
        phi_prime_unchecked(self.tau, x)
    }

    pub fn curvature(&self, x: f64) -> f64 {
        phi_second(self.tau, x)
    }
}

fn check_dates(dates: &[f64]) -> Result<()> {
    if dates.is_empty() {
        return Err(Error::InvalidDates("empty date list".into()));
    }
    for (i, &d) in dates.iter().enumerate() {
        check_nonnegative_finite("date", d)?;
        if i > 0 && d <= dates[i - 1] {
            return Err(Error::InvalidDates(format!(
                "dates[{}] = {} does not exceed dates[{}] = {}",
                i,
                d,
                i - 1,
                dates[i - 1]
            )));
        }
    }
    Ok(())
}

/// Gram matrix `A` with `A_ij = φ_{x_i}(x_j)`, symmetric positive definite.
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    dates: Vec<f64>,
    entries: DMatrix<f64>,
}

impl KernelMatrix {
    pub fn dates(&self) -> &[f64] {
        &self.dates
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.dates.len()
    }
}

/// Assemble the Gram matrix for a strictly increasing set of year fractions.
///
/// The upper triangle is computed once and mirrored, so the result is exactly
/// symmetric. Positive definiteness is verified with a Cholesky attempt.
pub fn gram(dates: &[f64]) -> Result<KernelMatrix> {
    gram_with_jitter(dates, None)
}

/// [`gram`] with an optional diagonal jitter for near-duplicate dates.
///
/// Jitter breaks the exact-repricing contract of the downstream solve; a
/// warning is logged whenever it is applied. A reasonable magnitude is
/// `1e-12 * trace / N`.
pub fn gram_with_jitter(dates: &[f64], jitter: Option<f64>) -> Result<KernelMatrix> {
    check_dates(dates)?;
    let n = dates.len();
    let mut a = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = phi_unchecked(dates[i], dates[j]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
    if let Some(eps) = jitter {
        log::warn!(
            "applying diagonal jitter {eps:.3e} to the kernel Gram matrix; \
             repricing will no longer be exact"
        );
        for i in 0..n {
            a[(i, i)] += eps;
        }
    }
    if a.clone().cholesky().is_none() {
        return Err(Error::IllConditionedKernel);
    }
    Ok(KernelMatrix {
        dates: dates.to_vec(),
        entries: a,
    })
}

/// Gram matrix `Ã` augmented with the slope representer `ψ(x) = x`:
/// border entries `⟨φ_{x_i}, ψ⟩ = x_i` and corner `⟨ψ, ψ⟩ = 1`.
#[derive(Debug, Clone)]
pub struct AugmentedKernelMatrix {
    base_dates: Vec<f64>,
    entries: DMatrix<f64>,
}

impl AugmentedKernelMatrix {
    pub fn base_dates(&self) -> &[f64] {
        &self.base_dates
    }

    /// Full `(N+1) × (N+1)` matrix.
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.base_dates.len() + 1
    }
}

/// Assemble the augmented Gram matrix for the short-rate-constrained solve.
pub fn gram_augmented(dates: &[f64]) -> Result<AugmentedKernelMatrix> {
    let base = gram(dates)?;
    let n = base.dim();
    let mut a = DMatrix::zeros(n + 1, n + 1);
    a.view_mut((0, 0), (n, n)).copy_from(base.entries());
    for i in 0..n {
        a[(i, n)] = dates[i];
        a[(n, i)] = dates[i];
    }
    a[(n, n)] = 1.0;
    if a.clone().cholesky().is_none() {
        return Err(Error::IllConditionedKernel);
    }
    Ok(AugmentedKernelMatrix {
        base_dates: dates.to_vec(),
        entries: a,
    })
}
