//! Fraction-free integer linear algebra for the zero-sum system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_i8(matrix: &[Vec<i8>]) -> BigInt {
    let m: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
    bareiss_det(&m)
}

/// Incremental row-echelon basis over `Q`, kept with integer entries.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    /// Adds `v` if it is independent of the rows so far; returns whether it was.
    pub(crate) fn insert(&mut self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (p, b) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x * &b[*p] - &f * y;
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in v.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Lexicographically first maximal independent subset of `rows`, by index.
pub(crate) fn greedy_basis(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut ech = Echelon::default();
    let width = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if ech.rank() == width {
            break;
        }
        if ech.insert(r) {
            out.push(i);
        }
    }
    out
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    greedy_basis(rows).len()
}

pub(crate) fn is_unit_mod(det: &BigInt, m: &BigInt) -> bool {
    det.mod_floor(m).gcd(m).is_one()
}
