//! Small exact linear-algebra helpers: determinants, inverses and
//! definiteness of rational matrices. Everything is Gaussian elimination
//! over exact scalars; the matrices here are at most 7x7.

use num_traits::{One, Signed, Zero};

use crate::rational::{ComplexRational, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Definiteness classification of a symmetric matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    /// Nonsingular but indefinite.
    Indefinite,
    Singular,
}

/// Exact determinant by fraction-producing Gaussian elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut result = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        result *= a[col][col].clone();
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    result
}

/// Exact determinant of a complex rational matrix.
pub fn det_complex(m: &[Vec<ComplexRational>]) -> ComplexRational {
    let n = m.len();
    let mut a: Vec<Vec<ComplexRational>> = m.to_vec();
    let mut result = ComplexRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return ComplexRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -&result;
        }
        result = &result * &a[col][col];
        let inv = a[col][col].inverse().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    result
}

/// Exact inverse by Gauss-Jordan elimination; `None` for singular input.
pub fn invert(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut inv: Matrix = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let scale = a[col][col].recip();
        for c in 0..n {
            a[col][c] *= scale.clone();
            inv[col][c] *= scale.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let da = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &da;
                let di = &factor * &inv[col][c];
                inv[r][c] = &inv[r][c] - &di;
            }
        }
    }
    Some(inv)
}

/// Leading principal minors `det(M[..k][..k])` for `k = 1..=n`.
pub fn leading_principal_minors(m: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=m.len())
        .map(|k| {
            let sub: Matrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            det(&sub)
        })
        .collect()
}

/// Sylvester's criterion on an (assumed symmetric) exact matrix.
pub fn definiteness(m: &[Vec<Rational>]) -> Definiteness {
    let minors = leading_principal_minors(m);
    if minors.last().map(Zero::is_zero).unwrap_or(true) {
        return Definiteness::Singular;
    }
    if minors.iter().all(Signed::is_positive) {
        return Definiteness::PositiveDefinite;
    }
    let alternating = minors
        .iter()
        .enumerate()
        .all(|(i, d)| if i % 2 == 0 { d.is_negative() } else { d.is_positive() });
    if alternating {
        return Definiteness::NegativeDefinite;
    }
    // A definite matrix has all leading minors nonzero with one of the two
    // sign patterns above, so anything else (even with a zero inner minor)
    // is not definite.
    Definiteness::Indefinite
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| (0..k).map(|j| &a[r][j] * &b[j][c]).sum())
                .collect()
        })
        .collect()
}
