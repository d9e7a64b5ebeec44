//! Does `A w = 0` have a strictly positive solution?

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact test by a phase-one simplex over the rationals. Positivity is
/// reduced to `w >= 1` by scaling: substitute `w = 1 + y` with `y >= 0`.
pub fn has_positive_solution(a: &[Vec<i64>], n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let rows: Vec<&Vec<i64>> = a.iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    if rows.is_empty() {
        return true;
    }
    let m = rows.len();
    // tableau columns: y (n), artificials (m), rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, r) in rows.iter().enumerate() {
        let b: i64 = -r.iter().sum::<i64>();
        let flip = if b < 0 { -1 } else { 1 };
        let mut row = vec![BigRational::zero(); width];
        for j in 0..n {
            row[j] = BigRational::from_integer((flip * r[j]).into());
        }
        row[n + i] = BigRational::one();
        row[width - 1] = BigRational::from_integer((flip * b).into());
        t.push(row);
    }
    // objective: minimise the sum of artificials, written as reduced costs
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..width {
            if j < n || j == width - 1 {
                obj[j] -= &row[j];
            }
        }
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Bland's rule: smallest entering column with negative cost
    while let Some(col) = (0..n + m).find(|&j| t[m][j].is_negative()) {
        let mut pick: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][col];
                let better = match &pick {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
                };
                if better {
                    pick = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = pick else {
            // unbounded below cannot happen for a sum of nonnegative artificials
            break;
        };
        let pivot = t[row][col].clone();
        for v in t[row].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (v, p) in r.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        basis[row] = col;
    }
    t[m][width - 1].is_zero()
}

/// Bounded search over integer weights `1..=bound` in every coordinate.
pub fn has_positive_solution_bounded(a: &[Vec<i64>], n: usize, bound: i64) -> bool {
    if n == 0 {
        return false;
    }
    let mut w = vec![1i64; n];
    loop {
        if a
            .iter()
            .all(|r| r.iter().zip(&w).map(|(x, y)| x * y).sum::<i64>() == 0)
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if w[i] < bound {
                w[i] += 1;
                break;
            }
            w[i] = 1;
            i += 1;
        }
    }
}
