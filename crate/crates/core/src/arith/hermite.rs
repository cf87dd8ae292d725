use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Elem, Matrix, Ring};

/// Row echelon form `h` of `m` with a transformation `u`, `u·m = h`, where
/// `u` is invertible over the ring.
///
/// Over `Z` this is the Hermite normal form: pivots are positive and the
/// entries above a pivot lie in `[0, pivot)`. Over `Z/n` pivots are
/// normalised to divisors of `n` and entries above them reduced modulo the
/// pivot. Over `Q` the result is the reduced row echelon form.
///
/// ```
/// use freyd::arith::{hnf, Matrix, Ring};
/// let m = Matrix::from_i64(&Ring::Integers, &[&[4], &[6]]);
/// let (h, u) = hnf(&m).unwrap();
/// assert_eq!(h, Matrix::from_i64(&Ring::Integers, &[&[2], &[0]]));
/// assert_eq!(u.mul(&m).unwrap(), h);
/// ```
pub fn hnf(m: &Matrix) -> Result<(Matrix, Matrix), ArithError> {
    let ring = m.ring();
    match ring {
        Ring::Integers => {
            let e = int_echelon(m.int_rows(), m.cols(), None);
            Ok((
                Matrix::from_int_rows(ring, m.cols(), e.h),
                Matrix::from_int_rows(ring, m.rows(), e.u),
            ))
        }
        Ring::IntegersMod(n) => {
            let e = int_echelon(m.int_rows(), m.cols(), Some(n));
            Ok((
                Matrix::from_int_rows(ring, m.cols(), e.h),
                Matrix::from_int_rows(ring, m.rows(), e.u),
            ))
        }
        Ring::Rationals => {
            let rows = (0..m.rows())
                .map(|i| m.row(i).iter().map(|e| e.as_rat().clone()).collect())
                .collect();
            let (h, u) = rref(rows, m.cols());
            let to_matrix = |rows: Vec<Vec<BigRational>>, cols: usize| {
                let n = rows.len();
                let entries = rows.into_iter().flatten().map(Elem::Rat).collect();
                Matrix::new(Ring::Rationals, n, cols, entries).expect("consistent shape")
            };
            Ok((to_matrix(h, m.cols()), to_matrix(u, m.rows())))
        }
    }
}

/// Echelon form over `Z` or `Z/n` with the pivot columns recorded.
pub(crate) struct IntEchelon {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// `pivots[i]` is the pivot column of row `i`; rows past the end are zero.
    pub pivots: Vec<usize>,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn reduce_row(row: &mut [BigInt], modulus: Option<&BigInt>) {
    if let Some(n) = modulus {
        for x in row.iter_mut() {
            *x = x.mod_floor(n);
        }
    }
}

/// `row[t] -= q * row[s]` for both the matrix and its transform.
fn sub_multiple(rows: &mut [Vec<BigInt>], t: usize, s: usize, q: &BigInt, modulus: Option<&BigInt>) {
    if q.is_zero() {
        return;
    }
    let src = rows[s].clone();
    for (x, y) in rows[t].iter_mut().zip(&src) {
        *x -= q * y;
    }
    reduce_row(&mut rows[t], modulus);
}

/// Replaces rows `s` and `t` by `(a·s + b·t, c·s + d·t)`.
#[allow(clippy::too_many_arguments)]
fn combine(
    rows: &mut [Vec<BigInt>],
    s: usize,
    t: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    d: &BigInt,
    modulus: Option<&BigInt>,
) {
    let rs = rows[s].clone();
    let rt = rows[t].clone();
    rows[s] = rs.iter().zip(&rt).map(|(x, y)| a * x + b * y).collect();
    rows[t] = rs.iter().zip(&rt).map(|(x, y)| c * x + d * y).collect();
    reduce_row(&mut rows[s], modulus);
    reduce_row(&mut rows[t], modulus);
}

/// A unit `c` modulo `n` with `c·p ≡ gcd(p, n)`.
fn normalising_unit(p: &BigInt, n: &BigInt) -> BigInt {
    let g = p.gcd(n);
    let m = n / &g;
    let p1 = (p / &g).mod_floor(&m);
    let c0 = if m.is_one() {
        BigInt::one()
    } else {
        let e = p1.extended_gcd(&m);
        e.x.mod_floor(&m)
    };
    let mut c = c0;
    while !c.gcd(n).is_one() {
        c += &m;
    }
    c
}

/// Echelon form over `Z` (`modulus = None`) or `Z/n`.
pub(crate) fn int_echelon(rows: Vec<Vec<BigInt>>, cols: usize, modulus: Option<&BigInt>) -> IntEchelon {
    let nrows = rows.len();
    let mut h = rows;
    let mut u = identity_rows(nrows);
    for row in h.iter_mut() {
        reduce_row(row, modulus);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        if r == nrows {
            break;
        }
        match modulus {
            None => {
                // Euclid on the column: repeatedly use the smallest nonzero
                // entry as pivot until it is the only nonzero one.
                loop {
                    let best = (r..nrows)
                        .filter(|&i| !h[i][j].is_zero())
                        .min_by(|&a, &b| h[a][j].abs().cmp(&h[b][j].abs()));
                    let Some(best) = best else { break };
                    h.swap(r, best);
                    u.swap(r, best);
                    let mut done = true;
                    for i in r + 1..nrows {
                        if h[i][j].is_zero() {
                            continue;
                        }
                        let q = h[i][j].div_floor(&h[r][j]);
                        sub_multiple(&mut h, i, r, &q, None);
                        sub_multiple(&mut u, i, r, &q, None);
                        if !h[i][j].is_zero() {
                            done = false;
                        }
                    }
                    if done {
                        break;
                    }
                }
            }
            Some(n) => {
                for i in r + 1..nrows {
                    if h[i][j].is_zero() {
                        continue;
                    }
                    if h[r][j].is_zero() {
                        h.swap(r, i);
                        u.swap(r, i);
                        continue;
                    }
                    // Unimodular 2x2 step making row i vanish in column j.
                    let x = h[r][j].clone();
                    let y = h[i][j].clone();
                    let e = x.extended_gcd(&y);
                    let (a, b) = (e.x, e.y);
                    let c = -(&y / &e.gcd);
                    let d = &x / &e.gcd;
                    combine(&mut h, r, i, &a, &b, &c, &d, Some(n));
                    combine(&mut u, r, i, &a, &b, &c, &d, Some(n));
                }
            }
        }
        if h[r][j].is_zero() {
            continue;
        }
        match modulus {
            None => {
                if h[r][j].is_negative() {
                    for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                        *x = -&*x;
                    }
                }
            }
            Some(n) => {
                let c = normalising_unit(&h[r][j], n);
                for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                    *x = (&*x * &c).mod_floor(n);
                }
            }
        }
        for i in 0..r {
            let q = h[i][j].div_floor(&h[r][j]);
            sub_multiple(&mut h, i, r, &q, modulus);
            sub_multiple(&mut u, i, r, &q, modulus);
        }
        pivots.push(j);
        r += 1;
    }
    IntEchelon { h, u, pivots }
}

/// Reduced row echelon form over `Q` with its transform.
pub(crate) fn rref(rows: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>) {
    let nrows = rows.len();
    let mut h = rows;
    let mut u: Vec<Vec<BigRational>> = (0..nrows)
        .map(|i| {
            (0..nrows)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    let mut r = 0;
    for j in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        h.swap(r, p);
        u.swap(r, p);
        let inv = h[r][j].recip();
        for x in h[r].iter_mut().chain(u[r].iter_mut()) {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i == r || h[i][j].is_zero() {
                continue;
            }
            let q = h[i][j].clone();
            let (hr, ur) = (h[r].clone(), u[r].clone());
            for (x, y) in h[i].iter_mut().zip(&hr) {
                *x -= &q * y;
            }
            for (x, y) in u[i].iter_mut().zip(&ur) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    (h, u)
}
