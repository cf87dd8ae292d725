//! The category `Rows_R` of free row modules `R^{1×n}` and matrices.

use crate::arith::{self, Matrix, Ring};
use crate::category::{Capabilities, Category, LinearSystem};
use crate::error::{Error, Result};

/// `Rows_R`: objects are ranks, a morphism `m → n` is an `m × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rows {
    ring: Ring,
}

/// Builds `Rows_R` for one of the supported rings.
pub fn rows_category(ring: Ring) -> Rows {
    Rows { ring }
}

impl Rows {
    pub fn new(ring: Ring) -> Self {
        Rows { ring }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Shorthand for a matrix over this category's ring.
    pub fn matrix(&self, rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(&self.ring, rows)
    }

    /// A weak kernel embedding of `f`: generators of the row syzygies.
    pub fn weak_kernel_of(&self, f: &Matrix) -> Result<Matrix> {
        Ok(arith::row_syzygies(f)?)
    }

    fn check_ring(&self, m: &Matrix) -> Result<()> {
        if m.ring() != &self.ring {
            return Err(Error::Mismatch(format!("matrix over {} in Rows over {}", m.ring(), self.ring)));
        }
        Ok(())
    }

    fn offsets(objects: &[usize]) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(objects.len());
        for &n in objects {
            out.push(acc);
            acc += n;
        }
        out
    }

    fn solve_vectorized(&self, system: &LinearSystem<usize, Matrix>) -> Result<Option<Vec<Matrix>>> {
        let ring = &self.ring;
        let sizes: Vec<usize> = system.unknowns.iter().map(|(s, t)| s * t).collect();
        let row_offsets = Self::offsets(&sizes);
        let nrows: usize = sizes.iter().sum();
        let eq_sizes: Vec<usize> = system.equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).collect();
        let col_offsets = Self::offsets(&eq_sizes);
        let ncols: usize = eq_sizes.iter().sum();

        // vec(A·X·B) = vec(X)·(Aᵀ ⊗ B) in row-major order.
        let mut big = Matrix::zero(ring, nrows, ncols);
        let mut rhs = Matrix::zero(ring, 1, ncols);
        for (e, eq) in system.equations.iter().enumerate() {
            let (p, q) = eq.rhs.shape();
            self.check_ring(&eq.rhs)?;
            for (idx, v) in eq.rhs.entries().iter().enumerate() {
                rhs.set(0, col_offsets[e] + idx, v.clone());
            }
            for term in &eq.terms {
                let j = term.unknown;
                let &(s, t) = system
                    .unknowns
                    .get(j)
                    .ok_or_else(|| Error::Mismatch(format!("unknown {j} is not declared")))?;
                if term.left.shape() != (p, s) || term.right.shape() != (t, q) {
                    return Err(Error::Mismatch(format!(
                        "term {}x{} · X{j}[{s}x{t}] · {}x{} in an equation of shape {p}x{q}",
                        term.left.rows(),
                        term.left.cols(),
                        term.right.rows(),
                        term.right.cols()
                    )));
                }
                for k in 0..s {
                    for pi in 0..p {
                        let a = term.left.get(pi, k);
                        if ring.is_zero(a) {
                            continue;
                        }
                        for l in 0..t {
                            let row = row_offsets[j] + k * t + l;
                            for qi in 0..q {
                                let b = term.right.get(l, qi);
                                if ring.is_zero(b) {
                                    continue;
                                }
                                let col = col_offsets[e] + pi * q + qi;
                                let v = ring.add(big.get(row, col), &ring.mul(a, b));
                                big.set(row, col, v);
                            }
                        }
                    }
                }
            }
        }
        let Some(x) = arith::solve_left(&big, &rhs)? else {
            return Ok(None);
        };
        Ok(Some(
            system
                .unknowns
                .iter()
                .enumerate()
                .map(|(j, &(s, t))| Matrix::from_fn(ring, s, t, |k, l| x.get(0, row_offsets[j] + k * t + l).clone()))
                .collect(),
        ))
    }
}

impl Category for Rows {
    type Obj = usize;
    type Mor = Matrix;

    fn name(&self) -> String {
        format!("Rows({})", self.ring)
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            lifts: true,
            colifts: true,
            linear_systems: true,
            weak_kernels: true,
            weak_cokernels: true,
            kernels: false,
            cokernels: false,
        }
    }

    fn source(&self, f: &Matrix) -> usize {
        f.rows()
    }

    fn target(&self, f: &Matrix) -> usize {
        f.cols()
    }

    fn identity(&self, a: &usize) -> Matrix {
        Matrix::identity(&self.ring, *a)
    }

    fn compose(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        Ok(f.mul(g)?)
    }

    fn add(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        Ok(f.add(g)?)
    }

    fn negate(&self, f: &Matrix) -> Matrix {
        f.neg()
    }

    fn zero_morphism(&self, a: &usize, b: &usize) -> Matrix {
        Matrix::zero(&self.ring, *a, *b)
    }

    fn zero_object(&self) -> usize {
        0
    }

    fn direct_sum(&self, objects: &[usize]) -> usize {
        objects.iter().sum()
    }

    fn injection(&self, objects: &[usize], i: usize) -> Matrix {
        let offset: usize = objects[..i].iter().sum();
        let total = self.direct_sum(objects);
        Matrix::from_fn(&self.ring, objects[i], total, |r, c| {
            if c == offset + r { self.ring.one() } else { self.ring.zero() }
        })
    }

    fn projection(&self, objects: &[usize], i: usize) -> Matrix {
        self.injection(objects, i).transpose()
    }

    fn is_equal(&self, f: &Matrix, g: &Matrix) -> Result<bool> {
        if f.shape() != g.shape() {
            return Err(Error::Mismatch(format!(
                "comparing {}x{} with {}x{}",
                f.rows(),
                f.cols(),
                g.rows(),
                g.cols()
            )));
        }
        Ok(f == g)
    }

    fn lift(&self, f: &Matrix, g: &Matrix) -> Result<Option<Matrix>> {
        Ok(arith::solve_left(f, g)?)
    }

    fn colift(&self, f: &Matrix, g: &Matrix) -> Result<Option<Matrix>> {
        Ok(arith::solve_left(&f.transpose(), &g.transpose())?.map(|x| x.transpose()))
    }

    fn solve_linear_system(&self, system: &LinearSystem<usize, Matrix>) -> Result<Option<Vec<Matrix>>> {
        self.solve_vectorized(system)
    }

    fn weak_kernel_embedding(&self, f: &Matrix) -> Result<Matrix> {
        self.weak_kernel_of(f)
    }

    fn weak_kernel_lift(&self, f: &Matrix, test: &Matrix) -> Result<Matrix> {
        let embedding = self.weak_kernel_embedding(f)?;
        arith::solve_left(&embedding, test)?
            .ok_or_else(|| Error::Precondition("test morphism does not annihilate f".into()))
    }

    fn weak_cokernel_projection(&self, f: &Matrix) -> Result<Matrix> {
        Ok(arith::row_syzygies(&f.transpose())?.transpose())
    }

    fn weak_cokernel_colift(&self, f: &Matrix, test: &Matrix) -> Result<Matrix> {
        let projection = self.weak_cokernel_projection(f)?;
        self.colift(&projection, test)?
            .ok_or_else(|| Error::Precondition("test morphism is not annihilated by f".into()))
    }

    fn morphism_into_direct_sum(&self, source: &usize, targets: &[usize], components: &[Matrix]) -> Result<Matrix> {
        let blocks: Vec<&Matrix> = components.iter().collect();
        if blocks.len() != targets.len() {
            return Err(Error::Mismatch("component count differs from summand count".into()));
        }
        Ok(Matrix::hstack(&self.ring, *source, &blocks)?)
    }

    fn morphism_from_direct_sum(&self, sources: &[usize], target: &usize, components: &[Matrix]) -> Result<Matrix> {
        let blocks: Vec<&Matrix> = components.iter().collect();
        if blocks.len() != sources.len() {
            return Err(Error::Mismatch("component count differs from summand count".into()));
        }
        Ok(Matrix::vstack(&self.ring, *target, &blocks)?)
    }

    fn direct_sum_morphism(&self, fs: &[Matrix]) -> Result<Matrix> {
        let blocks: Vec<&Matrix> = fs.iter().collect();
        Ok(Matrix::block_diagonal(&self.ring, &blocks))
    }
}
