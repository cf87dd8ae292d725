use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Matrix, Ring};

/// Smith normal form over `Z`: returns `(s, u, v)` with `u·m·v = s`, where
/// `s` is diagonal with nonnegative entries `d_1 | d_2 | ...` and `u`, `v`
/// are unimodular.
///
/// ```
/// use freyd::arith::{snf, Matrix, Ring};
/// let m = Matrix::from_i64(&Ring::Integers, &[&[2, 0], &[0, 3]]);
/// let (s, _, _) = snf(&m).unwrap();
/// assert_eq!(s, Matrix::from_i64(&Ring::Integers, &[&[1, 0], &[0, 6]]));
/// ```
pub fn snf(m: &Matrix) -> Result<(Matrix, Matrix, Matrix), ArithError> {
    let ring = m.ring();
    if *ring != Ring::Integers {
        return Err(ArithError::UnsupportedRing { op: "snf", ring: ring.clone() });
    }
    let (s, u, v) = int_snf(m.int_rows(), m.rows(), m.cols());
    Ok((
        Matrix::from_int_rows(ring, m.cols(), s),
        Matrix::from_int_rows(ring, m.rows(), u),
        Matrix::from_int_rows(ring, m.cols(), v),
    ))
}

/// The diagonal of the Smith normal form, `min(rows, cols)` entries.
pub(crate) fn invariant_factors(m: &Matrix) -> Result<Vec<BigInt>, ArithError> {
    let (s, _, _) = snf(m)?;
    Ok((0..s.rows().min(s.cols())).map(|i| s.get(i, i).as_int().clone()).collect())
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_sub(m: &mut [Vec<BigInt>], t: usize, s: usize, q: &BigInt) {
    let src = m[s].clone();
    for (x, y) in m[t].iter_mut().zip(&src) {
        *x -= q * y;
    }
}

fn col_sub(m: &mut [Vec<BigInt>], t: usize, s: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let y = row[s].clone();
        row[t] -= q * y;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

type IntRows = Vec<Vec<BigInt>>;

fn int_snf(rows: IntRows, nrows: usize, ncols: usize) -> (IntRows, IntRows, IntRows) {
    let mut s = rows;
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let n = nrows.min(ncols);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if s[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut s, t, pj);
            col_swap(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..nrows {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = s[i][t].div_floor(&s[t][t]);
                row_sub(&mut s, i, t, &q);
                row_sub(&mut u, i, t, &q);
                clean &= s[i][t].is_zero();
            }
            for j in t + 1..ncols {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = s[t][j].div_floor(&s[t][t]);
                col_sub(&mut s, j, t, &q);
                col_sub(&mut v, j, t, &q);
                clean &= s[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold a row with a non-multiple into the pivot row.
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !s[i][j].is_multiple_of(&s[t][t])));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_sub(&mut s, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            for x in s[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
    }
    (s, u, v)
}
