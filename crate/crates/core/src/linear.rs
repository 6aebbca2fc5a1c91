//! Dense linear algebra over ℚ used for coordinates, eigenspaces and
//! determinants. Matrices are row-major `Vec<Vec<Rational>>`.

use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> RatMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(&mut a.clone()).len()
}

/// Basis of `{v : a·v = 0}`.
pub fn nullspace(a: &RatMatrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Exact determinant by fraction-producing elimination.
pub fn det(a: &RatMatrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (lo, hi) = m.split_at_mut(i);
            for (x, y) in hi[0].iter_mut().zip(lo[c].iter()).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    d
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut aug: RatMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![Rational::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(b[k].iter()) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Pivots of a symmetric LDLᵀ factorisation without pivoting;
/// `None` if a zero pivot appears before the end.
pub fn ldl_pivots(a: &RatMatrix) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m = a.clone();
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        let p = m[c][c].clone();
        if p.is_zero() {
            return None;
        }
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &p;
            let (lo, hi) = m.split_at_mut(i);
            for (x, y) in hi[0].iter_mut().zip(lo[c].iter()).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out.push(p);
    }
    Some(out)
}

/// Negative definiteness of a symmetric rational matrix via LDLᵀ pivots.
pub fn is_negative_definite(a: &RatMatrix) -> bool {
    ldl_pivots(a).is_some_and(|p| p.iter().all(|x| x.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(det(&a), rat(1));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), rat(-1));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 1, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Rational = v.iter().sum();
            assert_eq!(s, rat(0));
        }
    }

    #[test]
    fn definiteness() {
        assert!(is_negative_definite(&m(&[&[-2, 1], &[1, -2]])));
        assert!(!is_negative_definite(&m(&[&[-1, 2], &[2, -1]])));
        assert_eq!(ldl_pivots(&m(&[&[-2, 1], &[1, -2]])).unwrap()[1], ratio(-3, 2));
    }
}
