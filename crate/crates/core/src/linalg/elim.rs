//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every row is first scaled by the lcm of its denominators, which leaves the
//! row space unchanged. Elimination then proceeds column by column, taking the
//! first nonzero entry at or below the current row as pivot; all later
//! divisions by the previous pivot are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{RatMatrix, RatVector};
use super::rational::Rational;
use crate::error::Error;
use crate::par::{for_each_mut, Exec};

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each of the first `pivots.len()` rows.
    pivots: Vec<usize>,
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn integer_rows(m: &RatMatrix, rhs: Option<&RatVector>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| match rhs {
            None => integer_row(m.row(i)),
            Some(b) => {
                let mut row = m.row(i).to_vec();
                row.push(b[i].clone());
                integer_row(&row)
            }
        })
        .collect()
}

fn bareiss(mut rows: Vec<Vec<BigInt>>, cols: usize, exec: Exec) -> Echelon {
    let n_rows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for_each_mut(exec, tail, |_, row| {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        });
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Exact rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    rank_with(m, Exec::default())
}

pub fn rank_with(m: &RatMatrix, exec: Exec) -> usize {
    bareiss(integer_rows(m, None), m.cols(), exec).pivots.len()
}

/// Basis of the right nullspace, one vector per non-pivot column, with a 1 in
/// that column and zeros in the other free columns.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    kernel_basis_with(m, Exec::default())
}

pub fn kernel_basis_with(m: &RatMatrix, exec: Exec) -> Vec<RatVector> {
    let cols = m.cols();
    let ech = bareiss(integer_rows(m, None), cols, exec);
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            back_substitute(&ech, cols, &mut x, None);
            RatVector::new(x)
        })
        .collect()
}

/// Fills the pivot coordinates of `x` so that every echelon row is satisfied,
/// given the free coordinates already set. `rhs_col` selects an augmented right-hand side.
fn back_substitute(ech: &Echelon, cols: usize, x: &mut [Rational], rhs_col: Option<usize>) {
    for (r, &p) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[r];
        let mut acc = match rhs_col {
            Some(k) => Rational::from_integer(row[k].clone()),
            None => Rational::zero(),
        };
        for c in p + 1..cols {
            if !row[c].is_zero() && !x[c].is_zero() {
                acc -= &x[c] * Rational::from_integer(row[c].clone());
            }
        }
        x[p] = acc / Rational::from_integer(row[p].clone());
    }
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &RatMatrix, b: &RatVector) -> Result<Option<RatVector>, Error> {
    solve_with(m, b, Exec::default())
}

pub fn solve_with(m: &RatMatrix, b: &RatVector, exec: Exec) -> Result<Option<RatVector>, Error> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let ech = bareiss(integer_rows(m, Some(b)), cols + 1, exec);
    if ech.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    back_substitute(&ech, cols, &mut x, Some(cols));
    Ok(Some(RatVector::new(x)))
}

pub fn in_column_space(m: &RatMatrix, b: &RatVector) -> Result<bool, Error> {
    in_column_space_with(m, b, Exec::default())
}

pub fn in_column_space_with(m: &RatMatrix, b: &RatVector, exec: Exec) -> Result<bool, Error> {
    Ok(solve_with(m, b, exec)?.is_some())
}

/// Exact inverse of a square matrix, or `None` when it is singular.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    if !m.is_square() || rank(m) != m.rows() {
        return None;
    }
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        cols.push(solve(m, &RatVector::unit(n, j)).ok()??);
    }
    Some(RatMatrix::from_columns(n, &cols))
}
