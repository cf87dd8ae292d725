use crate::arith::{Matrix, Ring};
use crate::category::Category;
use crate::error::Result;
use crate::rows::Rows;

use super::{EmbeddedPromonoidal, MonoidalStructure};

/// The tensor product of free modules on `Rows_R`: ranks multiply and
/// morphisms tensor as Kronecker products. Strictly associative and unital;
/// the braiding is the commutation permutation and `Hom(m, n) = R^{1×mn}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Kronecker {
    rows: Rows,
}

impl Kronecker {
    pub fn new(rows: Rows) -> Self {
        Kronecker { rows }
    }

    fn ring(&self) -> &Ring {
        self.rows.ring()
    }

    /// The commutation matrix `K: m·n → n·m` sending `e_i ⊗ e_j` to `e_j ⊗ e_i`.
    pub fn commutation(&self, m: usize, n: usize) -> Matrix {
        let ring = self.ring();
        Matrix::from_fn(ring, m * n, n * m, |r, c| {
            let (i, j) = (r / n, r % n);
            if c == j * m + i { ring.one() } else { ring.zero() }
        })
    }
}

/// The promonoidal structure on `Rows_R` given by the Kronecker product,
/// with values embedded into `A(Rows_R)`.
///
/// ```
/// use freyd::arith::Ring;
/// use freyd::monoidal::{kronecker_promonoidal, Promonoidal};
/// use freyd::rows::rows_category;
///
/// let p = kronecker_promonoidal(Ring::Integers).unwrap();
/// let rows = rows_category(Ring::Integers);
/// let t = p.tensor_morphism(&rows.matrix(&[&[2]]), &rows.matrix(&[&[3]])).unwrap();
/// assert_eq!(t.datum(), &rows.matrix(&[&[6]]));
/// ```
pub fn kronecker_promonoidal(ring: Ring) -> Result<EmbeddedPromonoidal<Kronecker>> {
    EmbeddedPromonoidal::new(Kronecker::new(Rows::new(ring)))
}

impl MonoidalStructure for Kronecker {
    type Cat = Rows;

    fn category(&self) -> &Rows {
        &self.rows
    }

    fn tensor_objects(&self, a: &usize, b: &usize) -> Result<usize> {
        Ok(a * b)
    }

    fn tensor_morphisms(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        Ok(f.kron(g)?)
    }

    fn unit(&self) -> usize {
        1
    }

    fn associator(&self, a: &usize, b: &usize, c: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(&(a * b * c)))
    }

    fn associator_inverse(&self, a: &usize, b: &usize, c: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(&(a * b * c)))
    }

    fn left_unitor(&self, a: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(a))
    }

    fn left_unitor_inverse(&self, a: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(a))
    }

    fn right_unitor(&self, a: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(a))
    }

    fn right_unitor_inverse(&self, a: &usize) -> Result<Matrix> {
        Ok(self.rows.identity(a))
    }

    fn has_braiding(&self) -> bool {
        true
    }

    fn braiding(&self, a: &usize, b: &usize) -> Result<Matrix> {
        Ok(self.commutation(*a, *b))
    }

    fn has_internal_hom(&self) -> bool {
        true
    }

    fn internal_hom(&self, a: &usize, c: &usize) -> Result<usize> {
        Ok(a * c)
    }

    /// An element of `Hom(a, c)` is an `a × c` matrix `X`, flattened row by
    /// row; it is sent to `f·X·g`.
    fn internal_hom_morphisms(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        Ok(f.transpose().kron(g)?)
    }

    /// `(X ⊗ v) ↦ v·X`.
    fn evaluation(&self, a: &usize, c: &usize) -> Result<Matrix> {
        let (a, c) = (*a, *c);
        let ring = self.ring();
        Ok(Matrix::from_fn(ring, a * c * a, c, |r, col| {
            let (ij, k) = (r / a, r % a);
            let (i, j) = (ij / c, ij % c);
            if k == i && j == col { ring.one() } else { ring.zero() }
        }))
    }

    /// `w ↦ (v ↦ w ⊗ v)`.
    fn coevaluation(&self, b: &usize, a: &usize) -> Result<Matrix> {
        let (b, a) = (*b, *a);
        let ring = self.ring();
        let width = b * a;
        Ok(Matrix::from_fn(ring, b, a * width, |j, col| {
            let (k, rest) = (col / width, col % width);
            if rest == j * a + k { ring.one() } else { ring.zero() }
        }))
    }
}
