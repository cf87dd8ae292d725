use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::hermite::{int_echelon, rref};
use super::{ArithError, Elem, Matrix, Ring};

/// Solves `x·a = b` for `x`, returning `None` when there is no solution.
///
/// ```
/// use freyd::arith::{solve_left, Matrix, Ring};
/// let z = |rows: &[&[i64]]| Matrix::from_i64(&Ring::Integers, rows);
/// assert_eq!(solve_left(&z(&[&[2]]), &z(&[&[4]])).unwrap(), Some(z(&[&[2]])));
/// assert_eq!(solve_left(&z(&[&[2]]), &z(&[&[3]])).unwrap(), None);
/// ```
pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>, ArithError> {
    let ring = a.ring();
    if ring != b.ring() {
        return Err(ArithError::RingMismatch(ring.clone(), b.ring().clone()));
    }
    if a.cols() != b.cols() {
        return Err(ArithError::DimensionMismatch(format!(
            "solve_left needs equal column counts, got {} and {}",
            a.cols(),
            b.cols()
        )));
    }
    if b.is_zero() {
        return Ok(Some(Matrix::zero(ring, b.rows(), a.rows())));
    }
    match ring {
        Ring::Integers => Ok(solve_int(&a.int_rows(), &b.int_rows(), a.cols())
            .map(|x| Matrix::from_int_rows(ring, a.rows(), x))),
        Ring::IntegersMod(n) => {
            let lifted = stack_modulus(a.int_rows(), a.cols(), n);
            Ok(solve_int(&lifted, &b.int_rows(), a.cols()).map(|x| {
                let x = x.into_iter().map(|row| row[..a.rows()].to_vec()).collect();
                Matrix::from_int_rows(ring, a.rows(), x)
            }))
        }
        Ring::Rationals => Ok(solve_rat(a, b)),
    }
}

/// A matrix `s` with `s·a = 0` whose rows generate every row vector `x`
/// with `x·a = 0`. Rows may be redundant.
///
/// ```
/// use freyd::arith::{row_syzygies, Matrix, Ring};
/// let a = Matrix::from_i64(&Ring::Integers, &[&[2], &[3]]);
/// let s = row_syzygies(&a).unwrap();
/// assert!(s.mul(&a).unwrap().is_zero());
/// assert_eq!(s.rows(), 1);
/// ```
pub fn row_syzygies(a: &Matrix) -> Result<Matrix, ArithError> {
    let ring = a.ring();
    match ring {
        Ring::Integers => {
            let e = int_echelon(a.int_rows(), a.cols(), None);
            let rank = e.pivots.len();
            Ok(Matrix::from_int_rows(ring, a.rows(), e.u[rank..].to_vec()))
        }
        Ring::IntegersMod(n) => {
            let lifted = stack_modulus(a.int_rows(), a.cols(), n);
            let e = int_echelon(lifted, a.cols(), None);
            let rank = e.pivots.len();
            let rows: Vec<Vec<BigInt>> = e.u[rank..]
                .iter()
                .map(|row| row[..a.rows()].to_vec())
                .filter(|row| row.iter().any(|x| !x.mod_floor(n).is_zero()))
                .collect();
            Ok(Matrix::from_int_rows(ring, a.rows(), rows))
        }
        Ring::Rationals => {
            let rows = (0..a.rows())
                .map(|i| a.row(i).iter().map(|e| e.as_rat().clone()).collect())
                .collect();
            let (h, u) = rref(rows, a.cols());
            let kept: Vec<Elem> = h
                .iter()
                .zip(u)
                .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
                .flat_map(|(_, ur)| ur.into_iter().map(Elem::Rat))
                .collect();
            let n = kept.len() / a.rows().max(1);
            Ok(Matrix::new(ring.clone(), n, a.rows(), kept).expect("consistent shape"))
        }
    }
}

/// `a` stacked on top of `n·I`, which turns a problem over `Z/n` into one over `Z`.
fn stack_modulus(mut rows: Vec<Vec<BigInt>>, cols: usize, n: &BigInt) -> Vec<Vec<BigInt>> {
    for j in 0..cols {
        let mut row = vec![BigInt::zero(); cols];
        row[j] = n.clone();
        rows.push(row);
    }
    rows
}

fn solve_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>], cols: usize) -> Option<Vec<Vec<BigInt>>> {
    let e = int_echelon(a.to_vec(), cols, None);
    let mut x = Vec::with_capacity(b.len());
    for brow in b {
        let mut residual = brow.clone();
        let mut y = vec![BigInt::zero(); a.len()];
        for (i, &p) in e.pivots.iter().enumerate() {
            if residual[p].is_zero() {
                continue;
            }
            let (q, r) = residual[p].div_rem(&e.h[i][p]);
            if !r.is_zero() {
                return None;
            }
            for (t, h) in residual.iter_mut().zip(&e.h[i]) {
                *t -= &q * h;
            }
            y[i] = q;
        }
        if residual.iter().any(|t| !t.is_zero()) {
            return None;
        }
        let row = (0..a.len())
            .map(|k| {
                y.iter()
                    .zip(&e.u)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(BigInt::zero(), |acc, (c, u)| acc + c * &u[k])
            })
            .collect();
        x.push(row);
    }
    Some(x)
}

fn solve_rat(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let rows = (0..a.rows())
        .map(|i| a.row(i).iter().map(|e| e.as_rat().clone()).collect())
        .collect();
    let (h, u) = rref(rows, a.cols());
    let pivots: Vec<(usize, usize)> = h
        .iter()
        .enumerate()
        .filter_map(|(i, row)| row.iter().position(|v| !v.is_zero()).map(|p| (i, p)))
        .collect();
    let mut entries = Vec::with_capacity(b.rows() * a.rows());
    for r in 0..b.rows() {
        let mut residual: Vec<BigRational> = b.row(r).iter().map(|e| e.as_rat().clone()).collect();
        let mut y = vec![BigRational::zero(); a.rows()];
        for &(i, p) in &pivots {
            let q = residual[p].clone();
            if q.is_zero() {
                continue;
            }
            for (t, hv) in residual.iter_mut().zip(&h[i]) {
                *t -= &q * hv;
            }
            y[i] = q;
        }
        if residual.iter().any(|t| !t.is_zero()) {
            return None;
        }
        for k in 0..a.rows() {
            let v = y
                .iter()
                .zip(&u)
                .fold(BigRational::zero(), |acc, (c, ur)| acc + c * &ur[k]);
            entries.push(Elem::Rat(v));
        }
    }
    Some(Matrix::new(Ring::Rationals, b.rows(), a.rows(), entries).expect("consistent shape"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(&Ring::Integers, rows)
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_left(&z(&[&[2]]), &z(&[&[4]])).unwrap(), Some(z(&[&[2]])));
        assert_eq!(solve_left(&z(&[&[2]]), &z(&[&[3]])).unwrap(), None);
        let a = z(&[&[1, 2], &[3, 4]]);
        let zero = Matrix::zero(&Ring::Integers, 3, 2);
        assert_eq!(solve_left(&a, &zero).unwrap(), Some(Matrix::zero(&Ring::Integers, 3, 2)));
    }

    #[test]
    fn solve_shape_errors() {
        assert!(solve_left(&z(&[&[1, 2]]), &z(&[&[1]])).is_err());
    }

    #[test]
    fn syzygy_examples() {
        let id = Matrix::identity(&Ring::Integers, 3);
        assert_eq!(row_syzygies(&id).unwrap().rows(), 0);
        let zero = Matrix::zero(&Ring::Integers, 2, 1);
        let s = row_syzygies(&zero).unwrap();
        assert_eq!(s.shape(), (2, 2));
        assert_eq!(s.rows(), 2);
        let s = row_syzygies(&z(&[&[2], &[3]])).unwrap();
        assert!(s == z(&[&[3, -2]]) || s == z(&[&[-3, 2]]));
    }

    #[test]
    fn modular_solve_uses_the_modulus() {
        let ring = Ring::integers_mod(6).unwrap();
        let a = Matrix::from_i64(&ring, &[&[4]]);
        let b = Matrix::from_i64(&ring, &[&[2]]);
        let x = solve_left(&a, &b).unwrap().unwrap();
        assert_eq!(x.mul(&a).unwrap(), b);
        let b = Matrix::from_i64(&ring, &[&[3]]);
        assert_eq!(solve_left(&a, &b).unwrap(), None);
    }

    #[test]
    fn modular_syzygies() {
        let ring = Ring::integers_mod(4).unwrap();
        let a = Matrix::from_i64(&ring, &[&[2]]);
        let s = row_syzygies(&a).unwrap();
        assert!(s.mul(&a).unwrap().is_zero());
        // 2 annihilates 2 modulo 4, so it must be generated.
        let target = Matrix::from_i64(&ring, &[&[2]]);
        assert!(solve_left(&s, &target).unwrap().is_some());
    }

    #[test]
    fn rational_solve() {
        let q = Ring::Rationals;
        let a = Matrix::from_i64(&q, &[&[2]]);
        let b = Matrix::from_i64(&q, &[&[3]]);
        let x = solve_left(&a, &b).unwrap().unwrap();
        assert_eq!(x.get(0, 0).to_string(), "3/2");
        let s = row_syzygies(&Matrix::from_i64(&q, &[&[1, 1], &[2, 2]])).unwrap();
        assert_eq!(s.rows(), 1);
    }
}
