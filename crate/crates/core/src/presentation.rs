//! Finitely presented modules as relation matrices, and their canonical
//! forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{hnf, ArithError, Elem, Matrix, Ring};
use crate::freyd::ObjectOf;
use crate::rows::Rows;

/// The module `R^{1×cols} / R^{1×rows}·relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub relations: Matrix,
}

/// Free rank and torsion invariant factors `d_1 | d_2 | ...`, each `> 1`.
///
/// Over `Z/n` a cyclic summand `Z/n` counts towards the free rank and the
/// factors are proper divisors of `n`. Over `Q` there is never torsion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Presentation {
    pub fn new(relations: Matrix) -> Self {
        Presentation { relations }
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn generators(&self) -> usize {
        self.relations.cols()
    }

    pub fn of_object(object: &ObjectOf<Rows>) -> Self {
        Presentation::new(object.relation().clone())
    }

    pub fn canonical(&self) -> Result<CanonicalForm, ArithError> {
        canonical_form(&self.relations)
    }
}

impl CanonicalForm {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The diagonal presentation `⊕ R/d_i ⊕ R^free` over `ring`.
    pub fn to_presentation(&self, ring: &Ring) -> Presentation {
        let t = self.torsion.len();
        let relations = Matrix::from_fn(ring, t, t + self.free_rank, |i, j| {
            if i == j { Elem::Int(self.torsion[i].clone()) } else { ring.zero() }
        });
        Presentation::new(relations)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "free {}; torsion", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

/// The canonical form of the module presented by `relations`.
///
/// ```
/// use freyd::arith::{Matrix, Ring};
/// use freyd::presentation::canonical_form;
///
/// let m = Matrix::from_i64(&Ring::Integers, &[&[2, 0, 0], &[0, 3, 0]]);
/// assert_eq!(canonical_form(&m).unwrap().to_string(), "free 1; torsion 6");
/// ```
pub fn canonical_form(relations: &Matrix) -> Result<CanonicalForm, ArithError> {
    let generators = relations.cols();
    match relations.ring() {
        Ring::Integers => {
            let factors = crate::arith::invariant_factors(relations)?;
            let rank = factors.iter().filter(|d| !d.is_zero()).count();
            let torsion = factors.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
            Ok(CanonicalForm { free_rank: generators - rank, torsion })
        }
        Ring::IntegersMod(n) => {
            // The same module as an abelian group: add n·e_j for every generator.
            let z = Ring::Integers;
            let lifted = Matrix::from_fn(&z, relations.rows() + generators, generators, |i, j| {
                if i < relations.rows() {
                    relations.get(i, j).clone()
                } else if i - relations.rows() == j {
                    Elem::Int(n.clone())
                } else {
                    z.zero()
                }
            });
            let factors = crate::arith::invariant_factors(&lifted)?;
            let free_rank = factors.iter().filter(|d| *d == n).count();
            let torsion = factors.into_iter().filter(|d| !d.is_one() && d != n).collect();
            Ok(CanonicalForm { free_rank, torsion })
        }
        Ring::Rationals => {
            let (h, _) = hnf(relations)?;
            let rank = (0..h.rows()).filter(|&i| h.row(i).iter().any(|e| !h.ring().is_zero(e))).count();
            Ok(CanonicalForm { free_rank: generators - rank, torsion: Vec::new() })
        }
    }
}
