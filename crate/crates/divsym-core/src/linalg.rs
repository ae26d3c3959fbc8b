//! Dense Gaussian elimination over exact rationals, sized for the small
//! per-level systems of the absorption solver.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solve `A x = B` for a square `A` with multiple right-hand columns.
/// Returns the solution with the same shape as `B`, or an error for a
/// singular matrix.
// index loops throughout: the pivot row and the target row are borrowed
// from the same matrix
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Vec<Rational>>) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Err(Error::SingularSystem),
        };
        a.swap(col, pivot);
        b.swap(col, pivot);

        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        for v in b[col].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }

        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut a[r][col], Rational::zero());
            for c in col + 1..n {
                if !a[col][c].is_zero() {
                    let delta = &a[col][c] * &factor;
                    a[r][c] -= delta;
                }
            }
            for c in 0..b[0].len() {
                if !b[col][c].is_zero() {
                    let delta = &b[col][c] * &factor;
                    b[r][c] -= delta;
                }
            }
        }
    }
    Ok(b)
}
