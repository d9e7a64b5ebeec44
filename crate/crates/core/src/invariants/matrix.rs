//! Exact linear algebra: fraction-free determinants over `Z[t]`, the
//! inertia of symmetric integer matrices and Smith normal forms.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficient rings for the determinant. Operations return `None` on
/// overflow or on a division that is not exact.
trait Ring: Clone {
    fn from_i64(v: i64) -> Self;
    fn nil(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn nil(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        (*o != 0 && self % o == 0).then(|| self / o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense polynomial, lowest degree first, no trailing zeros.
type Poly<T> = Vec<T>;

fn trim<T: Ring>(mut p: Poly<T>) -> Poly<T> {
    while p.last().is_some_and(Ring::nil) {
        p.pop();
    }
    p
}

fn poly_mul<T: Ring>(a: &Poly<T>, b: &Poly<T>) -> Option<Poly<T>> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![T::from_i64(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.nil() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some(trim(out))
}

fn poly_sub<T: Ring>(a: &Poly<T>, b: &Poly<T>) -> Option<Poly<T>> {
    let n = a.len().max(b.len());
    let zero = T::from_i64(0);
    let out = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero).sub(b.get(i).unwrap_or(&zero)))
        .collect::<Option<Vec<T>>>()?;
    Some(trim(out))
}

/// Exact quotient `a / b`; `None` if `b` does not divide `a`.
fn poly_div<T: Ring>(a: &Poly<T>, b: &Poly<T>) -> Option<Poly<T>> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() == 1 {
        return a.iter().map(|x| x.div_exact(&b[0])).collect();
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lead = b.last().expect("nonempty");
    let mut q = vec![T::from_i64(0); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = rem[k + b.len() - 1].div_exact(lead)?;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].sub(&c.mul(y)?)?;
        }
        q[k] = c;
    }
    rem.iter().all(Ring::nil).then(|| trim(q))
}

fn bareiss<T: Ring>(entries: &[Vec<Vec<i64>>]) -> Option<Poly<T>> {
    let n = entries.len();
    let mut m: Vec<Vec<Poly<T>>> = entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| trim(p.iter().map(|&c| T::from_i64(c)).collect()))
                .collect()
        })
        .collect();
    if n == 0 {
        return Some(vec![T::from_i64(1)]);
    }
    let mut negate = false;
    let mut prev: Poly<T> = vec![T::from_i64(1)];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            // prefer the pivot of lowest degree
            let swap = (k + 1..n)
                .filter(|&i| !m[i][k].is_empty())
                .min_by_key(|&i| m[i][k].len());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(Vec::new()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = poly_mul(&m[k][k], &m[i][j])?;
                let b = poly_mul(&m[i][k], &m[k][j])?;
                m[i][j] = poly_div(&poly_sub(&a, &b)?, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.iter().map(Ring::neg).collect()
    } else {
        Some(det)
    }
}

/// Determinant of a square matrix over `Z[t]`. Each entry is a dense
/// coefficient list, constant term first. Tries 128-bit arithmetic before
/// falling back to big integers.
pub fn poly_determinant(entries: &[Vec<Vec<i64>>]) -> Vec<BigInt> {
    debug_assert!(entries.iter().all(|r| r.len() == entries.len()));
    if let Some(d) = bareiss::<i128>(entries) {
        return d.iter().map(Ring::to_big).collect();
    }
    bareiss::<BigInt>(entries).expect("Bareiss quotients over Z[t] are exact")
}

/// Integer determinant.
pub fn int_determinant(m: &[Vec<i64>]) -> BigInt {
    let lifted: Vec<Vec<Vec<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| vec![x]).collect())
        .collect();
    poly_determinant(&lifted)
        .into_iter()
        .next()
        .unwrap_or_else(BigInt::zero)
}

/// Signature (positive minus negative eigenvalue count) of a symmetric
/// integer matrix, by congruence diagonalisation over the rationals.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        if a[0][0].is_zero() {
            if let Some(j) = (1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(0, j);
                for row in a.iter_mut() {
                    row.swap(0, j);
                }
            } else if let Some(j) = (1..n).find(|&j| !a[0][j].is_zero()) {
                // row/column j into 0: the new diagonal entry is 2 a[0][j]
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[0][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][0] += v;
                }
            }
            // otherwise row 0 is zero and contributes nothing
        }
        let pivot = a[0][0].clone();
        if pivot.is_positive() {
            sig += 1;
        } else if pivot.is_negative() {
            sig -= 1;
        }
        if !pivot.is_zero() {
            for i in 1..n {
                if a[i][0].is_zero() {
                    continue;
                }
                let f = &a[i][0] / &pivot;
                for j in 1..n {
                    let v = &f * &a[0][j];
                    a[i][j] -= v;
                }
            }
        }
        a.remove(0);
        for row in a.iter_mut() {
            row.remove(0);
        }
    }
    sig
}

/// Invariant factors of an integer matrix, without the unit factors but
/// including zeros for the free part.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block as pivot
        let pos = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pos else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    diag.into_iter().filter(|d| !d.is_one()).collect()
}

/// Converts to `i64`, panicking on overflow. Invariants of the diagrams
/// handled here are far below that range.
pub fn small(v: &BigInt) -> i64 {
    v.to_i64().expect("coefficient fits in 64 bits")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(int_determinant(&[vec![2, 1], vec![1, 2]]), BigInt::from(3));
        assert_eq!(int_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(int_determinant(&[]), BigInt::from(1));
        assert_eq!(int_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
    }

    #[test]
    fn polynomial_determinant() {
        // [[1-t, t], [t, 1-t]] -> 1 - 2t
        let m = vec![vec![vec![1, -1], vec![0, 1]], vec![vec![0, 1], vec![1, -1]]];
        assert_eq!(poly_determinant(&m), big(&[1, -2]));
        let zero_pivot = vec![vec![vec![], vec![1]], vec![vec![1], vec![0, 1]]];
        assert_eq!(poly_determinant(&zero_pivot), big(&[-1]));
    }

    #[test]
    fn bigint_fallback_agrees() {
        let m: Vec<Vec<Vec<i64>>> = (0..6)
            .map(|i| (0..6).map(|j| vec![((i * 7 + j * 3) % 11) as i64 - 5, (i + j) as i64 % 3 - 1]).collect())
            .collect();
        let fast = bareiss::<i128>(&m).unwrap();
        let slow = bareiss::<BigInt>(&m).unwrap();
        assert_eq!(fast.iter().map(Ring::to_big).collect::<Vec<_>>(), slow);
    }

    #[test]
    fn signatures() {
        assert_eq!(symmetric_signature(&[vec![2, 1], vec![1, 2]]), 2);
        assert_eq!(symmetric_signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![-3]]), -1);
        assert_eq!(symmetric_signature(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(symmetric_signature(&[vec![1, 2], vec![2, 1]]), 0);
    }

    #[test]
    fn smith_forms() {
        assert_eq!(smith_invariants(&[vec![3, 0], vec![0, 3]]), big(&[3, 3]));
        assert_eq!(smith_invariants(&[vec![9]]), big(&[9]));
        assert_eq!(smith_invariants(&[vec![2, 1], vec![1, 5]]), big(&[9]));
        assert_eq!(smith_invariants(&[vec![2, 4], vec![4, 2]]), big(&[2, 6]));
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), big(&[0, 0]));
    }
}
