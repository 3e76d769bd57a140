//! Small dense linear-algebra helpers shared by the solver modules.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use crate::error::{Error, Result};

/// Cholesky factorization of a symmetric positive-definite matrix with
/// symmetric (Jacobi) equilibration and one step of iterative refinement.
///
/// Pricing systems mix unit-notional and 100-notional rows, so the raw
/// `C A Cᵀ` matrix can be badly scaled; equilibration keeps the factorization
/// accurate and refinement pushes solve residuals toward machine level.
#[derive(Debug, Clone)]
pub struct SpdFactor {
    matrix: DMatrix<f64>,
    scale: DVector<f64>,
    chol: Cholesky<f64, Dyn>,
}

impl SpdFactor {
    /// Factorize `k`. Returns `Err` with the most collinear pair of row labels
    /// when the matrix is numerically indefinite.
    pub fn new(k: DMatrix<f64>, labels: &[String]) -> Result<Self> {
        let n = k.nrows();
        assert_eq!(n, k.ncols(), "SpdFactor requires a square matrix");
        let mut scale = DVector::from_element(n, 1.0);
        for i in 0..n {
            let d = k[(i, i)];
            if d > 0.0 && d.is_finite() {
                scale[i] = 1.0 / d.sqrt();
            }
        }
        let mut scaled = k.clone();
        for i in 0..n {
            for j in 0..n {
                scaled[(i, j)] *= scale[i] * scale[j];
            }
        }
        match scaled.cholesky() {
            Some(chol) => Ok(Self {
                matrix: k,
                scale,
                chol,
            }),
            None => {
                let (a, b) = most_collinear_pair(&k);
                Err(Error::IllConditionedSystem {
                    first: labels.get(a).cloned().unwrap_or_else(|| format!("row {a}")),
                    second: labels.get(b).cloned().unwrap_or_else(|| format!("row {b}")),
                })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    fn solve_once(&self, b: &DVector<f64>) -> DVector<f64> {
        let bs = b.component_mul(&self.scale);
        let y = self.chol.solve(&bs);
        y.component_mul(&self.scale)
    }

    /// Solve `k x = b` with one refinement pass.
    pub fn solve(&self, b: &DVector<f64>) -> DVector<f64> {
        let mut x = self.solve_once(b);
        for _ in 0..2 {
            let r = b - &self.matrix * &x;
            let dx = self.solve_once(&r);
            x += dx;
        }
        x
    }

    /// Solve for several right-hand sides stacked as matrix columns.
    pub fn solve_matrix(&self, b: &DMatrix<f64>) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(b.nrows(), b.ncols());
        for j in 0..b.ncols() {
            let col = DVector::from_column_slice(b.column(j).as_slice());
            out.set_column(j, &self.solve(&col));
        }
        out
    }
}

/// Off-diagonal pair with the highest Gram correlation `|k_ij| / √(k_ii k_jj)`.
fn most_collinear_pair(k: &DMatrix<f64>) -> (usize, usize) {
    let n = k.nrows();
    let mut best = (0, if n > 1 { 1 } else { 0 });
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let denom = (k[(i, i)] * k[(j, j)]).sqrt();
            if denom > 0.0 {
                let c = (k[(i, j)] / denom).abs();
                if c > best_val {
                    best_val = c;
                    best = (i, j);
                }
            }
        }
    }
    best
}
