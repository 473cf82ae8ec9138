//! Exact linear algebra over ℚ on small dense matrices.
//!
//! Rows are `Vec<Rational>`. Elimination is done incrementally so callers can
//! feed equations in a meaningful order (by degree) and learn which equation
//! first made a system inconsistent.

use num_traits::{One, Zero};

use crate::Rational;

/// Rank tracker that accepts one vector at a time.
///
/// Reduction is fraction-free: a new vector `v` is reduced against a stored
/// vector `b` with pivot `p` as `b[p]·v − v[p]·b`.
#[derive(Clone, Debug, Default)]
pub struct IncrementalRank {
    basis: Vec<(usize, Vec<Rational>)>,
}

impl IncrementalRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Add a vector; returns true when it raises the rank.
    pub fn push(&mut self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (p, b) in &self.basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                let g = &b[*p];
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x * g - &f * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.basis.push((p, v));
                true
            }
            None => false,
        }
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut r = IncrementalRank::new();
    for row in rows {
        r.push(row);
    }
    r.rank()
}

/// An inconsistent linear system: `multipliers · A = 0` while
/// `multipliers · b ≠ 0`. `equation` is the first equation (in input order)
/// whose addition made the system inconsistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub equation: usize,
    pub multipliers: Vec<Rational>,
}

impl Inconsistency {
    /// Re-check the witness against the system.
    pub fn verify(&self, a: &[Vec<Rational>], b: &[Rational]) -> bool {
        let cols = a.first().map_or(0, Vec::len);
        let lhs_zero = (0..cols).all(|c| {
            self.multipliers.iter().zip(a).map(|(y, row)| y * &row[c]).sum::<Rational>().is_zero()
        });
        let rhs: Rational = self.multipliers.iter().zip(b).map(|(y, r)| y * r).sum();
        lhs_zero && !rhs.is_zero()
    }
}

struct Row {
    pivot: usize,
    coeffs: Vec<Rational>,
    rhs: Rational,
    combo: Vec<Rational>,
}

/// Solve `A x = b`. Free variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, Inconsistency> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let m = a.len();
    let mut basis: Vec<Row> = Vec::new();
    for (e, (row, rhs)) in a.iter().zip(b).enumerate() {
        let mut coeffs = row.clone();
        let mut rhs = rhs.clone();
        let mut combo = vec![Rational::zero(); m];
        combo[e] = Rational::one();
        for r in &basis {
            if coeffs[r.pivot].is_zero() {
                continue;
            }
            let f = &coeffs[r.pivot] / &r.coeffs[r.pivot];
            for (x, y) in coeffs.iter_mut().zip(&r.coeffs) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            rhs -= &f * &r.rhs;
            for (x, y) in combo.iter_mut().zip(&r.combo) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        match coeffs.iter().position(|x| !x.is_zero()) {
            Some(pivot) => basis.push(Row { pivot, coeffs, rhs, combo }),
            None if rhs.is_zero() => {}
            None => return Err(Inconsistency { equation: e, multipliers: combo }),
        }
    }
    let mut x = vec![Rational::zero(); cols];
    // Row k is reduced against the pivots of rows < k, so back-substitution
    // in reverse insertion order only reads already-known values.
    for r in basis.iter().rev() {
        let mut acc = r.rhs.clone();
        for (c, y) in r.coeffs.iter().enumerate() {
            if c != r.pivot && !y.is_zero() {
                acc -= y * &x[c];
            }
        }
        x[r.pivot] = acc / &r.coeffs[r.pivot];
    }
    Ok(x)
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        Rational::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}
