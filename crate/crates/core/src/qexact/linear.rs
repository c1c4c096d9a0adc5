use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use super::{Affine, Rational};
use crate::trace::{trace_op, Op};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, got: usize, expected: usize },
    #[error("right-hand side has {got} entries, expected {expected}")]
    RhsLength { got: usize, expected: usize },
}

/// Dense rectangular matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(MatrixError::Empty);
        }
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::Ragged { row: i, got: row.len(), expected: cols });
            }
            data.extend(row);
        }
        Ok(QMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|r| self.row(r).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Parametric(ParametricSolution),
    Inconsistent,
}

/// Every variable as an affine function of the free variables.
///
/// `values[j]` is over `free.len()` symbols; the `i`-th symbol stands for
/// variable `free[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSolution {
    pub free: Vec<usize>,
    pub values: Vec<Affine>,
}

impl ParametricSolution {
    /// Concrete solution for the given free-variable values.
    pub fn instantiate(&self, free_values: &[Rational]) -> Vec<Rational> {
        self.values.iter().map(|v| v.eval(free_values)).collect()
    }
}

/// Solves `m x = rhs` exactly by reduction to reduced row-echelon form.
///
/// Pivots are chosen left to right in column order, so trailing columns are
/// the ones that stay free. Put symbolic parameters last to keep them
/// symbolic.
pub fn solve_linear(m: &QMatrix, rhs: &[Rational]) -> Result<LinearSolution, MatrixError> {
    trace_op(Op::SolveLinear);
    if rhs.len() != m.rows {
        return Err(MatrixError::RhsLength { got: rhs.len(), expected: m.rows });
    }
    let (rows, cols) = (m.rows, m.cols);
    // augmented rows
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for v in a[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    if a[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(LinearSolution::Inconsistent);
    }

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        let mut x = alloc::vec![Rational::zero(); cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = a[i][cols].clone();
        }
        return Ok(LinearSolution::Unique(x));
    }

    let nf = free.len();
    let mut values: Vec<Affine> = (0..cols).map(|_| Affine::zero(nf)).collect();
    for (i, &fc) in free.iter().enumerate() {
        values[fc] = Affine::var(nf, i);
    }
    for (i, &pc) in pivots.iter().enumerate() {
        let coeffs = free.iter().map(|&fc| -a[i][fc].clone()).collect();
        values[pc] = Affine::from_parts(coeffs, a[i][cols].clone());
    }
    Ok(LinearSolution::Parametric(ParametricSolution { free, values }))
}
