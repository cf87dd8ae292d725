//! Classical answers for finitely generated abelian groups, computed with a
//! small `i128` Smith form that shares no code with the library.

#![allow(dead_code, clippy::needless_range_loop)]

use freyd::arith::{Matrix, Ring};

pub type Mat = Vec<Vec<i128>>;

pub fn to_mat(m: &Matrix) -> Mat {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| i128::try_from(m.get(i, j).as_int()).expect("entry fits in i128"))
                .collect()
        })
        .collect()
}

/// Smith form `U·M·V = D`; returns the diagonal (length `min(rows, cols)`,
/// nonnegative, divisibility chain) and `V`.
pub fn smith(m: &Mat, cols: usize) -> (Vec<i128>, Mat) {
    let rows = m.len();
    let mut a = m.clone();
    let mut v: Mat = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offending {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    let diag = (0..n).map(|i| a[i][i].abs()).collect();
    (diag, v)
}

/// Free rank and torsion factors `> 1` of `Z^cols / rowspace(m)`.
pub fn invariants(m: &Mat, cols: usize) -> (usize, Vec<i128>) {
    let (d, _) = smith(m, cols);
    let rank = d.iter().filter(|&&x| x != 0).count();
    (cols - rank, d.into_iter().filter(|&x| x > 1).collect())
}

pub fn invariants_of(m: &Matrix) -> (usize, Vec<i128>) {
    invariants(&to_mat(m), m.cols())
}

/// Invariants of a direct sum of cyclic groups `Z/n_i` (`n_i = 0` meaning `Z`).
pub fn cyclic_sum(orders: &[i128]) -> (usize, Vec<i128>) {
    let k = orders.len();
    let m: Mat = (0..k).map(|i| (0..k).map(|j| if i == j { orders[i] } else { 0 }).collect()).collect();
    invariants(&m, k)
}

/// The orders of the cyclic summands of a module, free summands as `0`.
pub fn cyclic_orders(m: &Matrix) -> Vec<i128> {
    let (free, torsion) = invariants_of(m);
    torsion.into_iter().chain(std::iter::repeat_n(0, free)).collect()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// `M ⊗ N = ⊕ Z/gcd(d_i, e_j)`.
pub fn tensor_by_cyclics(m: &Matrix, n: &Matrix) -> (usize, Vec<i128>) {
    let (a, b) = (cyclic_orders(m), cyclic_orders(n));
    let orders: Vec<_> = a.iter().flat_map(|&d| b.iter().map(move |&e| gcd(d, e))).collect();
    cyclic_sum(&orders)
}

/// `Hom(Z/d, Z/e) = Z/gcd(d, e)`, `Hom(Z/d, Z) = 0` for `d > 0`, `Hom(Z, N) = N`.
pub fn hom_by_cyclics(m: &Matrix, n: &Matrix) -> (usize, Vec<i128>) {
    let (a, b) = (cyclic_orders(m), cyclic_orders(n));
    let orders: Vec<_> = a
        .iter()
        .flat_map(|&d| {
            b.iter().map(move |&e| match (d, e) {
                (0, e) => e,
                (_, 0) => 1,
                (d, e) => gcd(d, e),
            })
        })
        .collect();
    cyclic_sum(&orders)
}

fn kron(a: &Mat, ac: usize, b: &Mat, bc: usize) -> Mat {
    let mut out = Vec::new();
    for ra in a {
        for rb in b {
            let mut row = Vec::with_capacity(ac * bc);
            for x in ra {
                for y in rb {
                    row.push(x * y);
                }
            }
            out.push(row);
        }
    }
    out
}

fn eye(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

/// The classical presentation `[ρ_M ⊗ I; I ⊗ ρ_N]` of `M ⊗ N`.
pub fn tensor_presentation(m: &Matrix, n: &Matrix) -> (Mat, usize) {
    let (gm, gn) = (m.cols(), n.cols());
    let mut rows = kron(&to_mat(m), gm, &eye(gn), gn);
    rows.extend(kron(&eye(gm), gm, &to_mat(n), gn));
    (rows, gm * gn)
}

/// The image of `α: Z^a → Z^b / rowspace(ρ)`, as invariants. With
/// `U·[α; ρ]·V = D`, the lattice spanned by `α` and `ρ` has basis
/// `d_i·e_i·V⁻¹`; the coordinates of `ρ` in that basis present the image.
pub fn image(alpha: &Matrix, rho: &Matrix) -> (usize, Vec<i128>) {
    let b = rho.cols();
    let mut stacked = to_mat(alpha);
    stacked.extend(to_mat(rho));
    let (d, v) = smith(&stacked, b);
    let basis: Vec<usize> = (0..d.len()).filter(|&i| d[i] != 0).collect();
    let coords: Mat = to_mat(rho)
        .iter()
        .map(|row| {
            basis
                .iter()
                .map(|&i| {
                    let x: i128 = (0..b).map(|k| row[k] * v[k][i]).sum();
                    assert_eq!(x % d[i], 0, "relation outside the lattice");
                    x / d[i]
                })
                .collect()
        })
        .collect();
    invariants(&coords, basis.len())
}

pub fn z(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(&Ring::Integers, rows)
}

pub fn zero_rows(cols: usize) -> Matrix {
    Matrix::zero(&Ring::Integers, 0, cols)
}
