//! Dense exact linear algebra over rationals and integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[BigInt], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + y * Rational::from_integer(x.clone()))
}

pub fn dot_ints(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref(rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let m: Matrix = rows.iter().map(|r| to_rational(r)).collect();
    rank(&m)
}

/// Basis of `{x : rows * x = 0}` in `ncols` unknowns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Unique solution of the square system `a x = b`, or `None` when singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Any solution of the (possibly overdetermined) system `a x = b`, or `None`
/// when inconsistent.
pub fn solve_consistent(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][ncols].clone();
    }
    Some(x)
}

pub fn inverse(a: &[Vec<Rational>]) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter().map(|r| dot(r, x)).collect()
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Integer normal of the hyperplane spanned by `d - 1` vectors in `Z^d`
/// (generalized cross product; zero when they are dependent).
pub fn cross_int(vectors: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    debug_assert_eq!(vectors.len() + 1, d);
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let det = det_int(&minor);
            if (j + d - 1).is_multiple_of(2) {
                det
            } else {
                -det
            }
        })
        .collect()
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Primitive integer vector on the same ray as `v` (zero stays zero).
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let den = crate::rational::common_denominator(v);
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    primitive_int(&scaled)
}

pub fn primitive_int(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Unimodular `U` (as a list of columns) with `v · U[0] = 1` and
/// `v · U[j] = 0` for `j >= 1`; requires `v` primitive.
///
/// Columns `1..n` are then a basis of the sublattice `v^⊥ ∩ Z^n`.
pub fn unimodular_completion(v: &[BigInt]) -> Option<Vec<Vec<BigInt>>> {
    let n = v.len();
    let mut row = v.to_vec();
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    // Euclid on the row entries via column operations.
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&j| row[j].abs()).unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = row[j].div_floor(&row[p]);
            let step = &q * &row[p];
            row[j] -= step;
            let src = cols[p].clone();
            for (x, y) in cols[j].iter_mut().zip(&src[..n]) {
                *x -= &q * y;
            }
        }
    }
    let p = (0..n).find(|&j| !row[j].is_zero())?;
    if !row[p].abs().is_one() {
        return None;
    }
    if row[p].is_negative() {
        for x in cols[p].iter_mut() {
            *x = -x.clone();
        }
    }
    cols.swap(0, p);
    Some(cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solve_and_inverse() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_vec(&inv, &[int(3), int(5)]), x);
        assert!(solve(&[vec![int(1), int(2)], vec![int(2), int(4)]], &[int(1), int(2)]).is_none());
    }

    #[test]
    fn determinants_and_cross() {
        let m = vec![ints(&[2, 0, 1]), ints(&[1, 3, 2]), ints(&[1, 1, 1])];
        assert_eq!(det_int(&m), BigInt::from(2 + (1 - 3)));
        let n = cross_int(&[ints(&[1, 0, 0]), ints(&[0, 1, 0])], 3);
        assert_eq!(n, ints(&[0, 0, 1]));
        let n2 = cross_int(&[ints(&[1, 1])], 2);
        assert_eq!(dot_ints(&n2, &ints(&[1, 1])), BigInt::zero());
    }

    #[test]
    fn kernel_basis() {
        let v = ints(&[2, 3, 5]);
        let u = unimodular_completion(&v).unwrap();
        assert_eq!(dot_ints(&v, &u[0]), BigInt::one());
        assert!(u[1..].iter().all(|c| dot_ints(&v, c).is_zero()));
        let m: Vec<Vec<BigInt>> = u.clone();
        assert!(det_int(&m).abs().is_one());
        assert!(unimodular_completion(&ints(&[2, 4])).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let rows = vec![vec![int(1), int(1), int(0)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert!(dot(&rows[0], &x).is_zero());
        }
    }
}
