use std::fmt;

use crate::category::Category;
use crate::error::Result;

use super::{MonoidalStructure, Obj};

/// The outcome of one diagram on one sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceEntry {
    pub diagram: &'static str,
    pub sample: usize,
    pub passed: bool,
    /// Set when building the diagram failed with an error.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoherenceReport {
    pub entries: Vec<CoherenceEntry>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn checked(&self) -> usize {
        self.entries.len()
    }

    pub fn first_failure(&self) -> Option<&CoherenceEntry> {
        self.entries.iter().find(|e| !e.passed)
    }

    pub fn extend(&mut self, other: CoherenceReport) {
        self.entries.extend(other.entries);
    }

    fn record(&mut self, diagram: &'static str, sample: usize, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.entries.push(CoherenceEntry { diagram, sample, passed, detail });
    }
}

impl fmt::Display for CoherenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.entries.iter().filter(|e| !e.passed).count();
        write!(f, "{} checks, {} failed", self.entries.len(), failed)?;
        for e in self.entries.iter().filter(|e| !e.passed) {
            write!(f, "\n  {} on sample {}", e.diagram, e.sample)?;
            if let Some(d) = &e.detail {
                write!(f, ": {d}")?;
            }
        }
        Ok(())
    }
}

fn equal<M: MonoidalStructure>(m: &M, chain_a: &[&<M::Cat as Category>::Mor], chain_b: &[&<M::Cat as Category>::Mor]) -> Result<bool> {
    let c = m.category();
    c.is_equal(&c.compose_all(chain_a)?, &c.compose_all(chain_b)?)
}

fn is_identity<M: MonoidalStructure>(m: &M, chain: &[&<M::Cat as Category>::Mor]) -> Result<bool> {
    let c = m.category();
    let f = c.compose_all(chain)?;
    c.is_equal(&f, &c.identity(&c.source(&f)))
}

type Quadruple<M> = (Obj<M>, Obj<M>, Obj<M>, Obj<M>);

/// `(A⊗Ass_{B,C,D})·Ass_{A,B⊗C,D}·(Ass_{A,B,C}⊗D) = Ass_{A,B,C⊗D}·Ass_{A⊗B,C,D}`.
pub fn check_pentagon<M: MonoidalStructure>(m: &M, samples: &[Quadruple<M>]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b, c, d)) in samples.iter().enumerate() {
        let outcome = (|| {
            let cat = m.category();
            let bc = m.tensor_objects(b, c)?;
            let ab = m.tensor_objects(a, b)?;
            let cd = m.tensor_objects(c, d)?;
            let p1 = m.tensor_morphisms(&cat.identity(a), &m.associator(b, c, d)?)?;
            let p2 = m.associator(a, &bc, d)?;
            let p3 = m.tensor_morphisms(&m.associator(a, b, c)?, &cat.identity(d))?;
            let q1 = m.associator(a, b, &cd)?;
            let q2 = m.associator(&ab, c, d)?;
            equal(m, &[&p1, &p2, &p3], &[&q1, &q2])
        })();
        report.record("pentagon", i, outcome);
    }
    report
}

/// `A⊗LU_B = Ass_{A,1,B}·(RU_A⊗B)`.
pub fn check_triangle<M: MonoidalStructure>(m: &M, samples: &[(Obj<M>, Obj<M>)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b)) in samples.iter().enumerate() {
        let outcome = (|| {
            let cat = m.category();
            let lhs = m.tensor_morphisms(&cat.identity(a), &m.left_unitor(b)?)?;
            let ass = m.associator(a, &m.unit(), b)?;
            let ru = m.tensor_morphisms(&m.right_unitor(a)?, &cat.identity(b))?;
            equal(m, &[&lhs], &[&ass, &ru])
        })();
        report.record("triangle", i, outcome);
    }
    report
}

/// The structure morphisms compose with their stated inverses to identities.
pub fn check_inverses<M: MonoidalStructure>(m: &M, samples: &[(Obj<M>, Obj<M>, Obj<M>)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b, c)) in samples.iter().enumerate() {
        let ass = (|| {
            let f = m.associator(a, b, c)?;
            let g = m.associator_inverse(a, b, c)?;
            Ok(is_identity(m, &[&f, &g])? && is_identity(m, &[&g, &f])?)
        })();
        report.record("associator inverse", i, ass);
        let lu = (|| {
            let f = m.left_unitor(a)?;
            let g = m.left_unitor_inverse(a)?;
            Ok(is_identity(m, &[&f, &g])? && is_identity(m, &[&g, &f])?)
        })();
        report.record("left unitor inverse", i, lu);
        let ru = (|| {
            let f = m.right_unitor(a)?;
            let g = m.right_unitor_inverse(a)?;
            Ok(is_identity(m, &[&f, &g])? && is_identity(m, &[&g, &f])?)
        })();
        report.record("right unitor inverse", i, ru);
    }
    report
}

/// Both hexagons, written with `Ass: A⊗(B⊗C) → (A⊗B)⊗C`:
///
/// `Ass·Br_{A⊗B,C}·Ass = (A⊗Br_{B,C})·Ass·(Br_{A,C}⊗B)` and
/// `Br_{A,B⊗C}·Ass⁻¹ = Ass·(Br_{A,B}⊗C)·Ass⁻¹·(B⊗Br_{A,C})`.
pub fn check_hexagons<M: MonoidalStructure>(m: &M, samples: &[(Obj<M>, Obj<M>, Obj<M>)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b, c)) in samples.iter().enumerate() {
        let cat = m.category();
        let first = (|| {
            let ab = m.tensor_objects(a, b)?;
            let l1 = m.associator(a, b, c)?;
            let l2 = m.braiding(&ab, c)?;
            let l3 = m.associator(c, a, b)?;
            let r1 = m.tensor_morphisms(&cat.identity(a), &m.braiding(b, c)?)?;
            let r2 = m.associator(a, c, b)?;
            let r3 = m.tensor_morphisms(&m.braiding(a, c)?, &cat.identity(b))?;
            equal(m, &[&l1, &l2, &l3], &[&r1, &r2, &r3])
        })();
        report.record("hexagon (braiding past a product)", i, first);
        let second = (|| {
            let bc = m.tensor_objects(b, c)?;
            let l1 = m.braiding(a, &bc)?;
            let l2 = m.associator_inverse(b, c, a)?;
            let r1 = m.associator(a, b, c)?;
            let r2 = m.tensor_morphisms(&m.braiding(a, b)?, &cat.identity(c))?;
            let r3 = m.associator_inverse(b, a, c)?;
            let r4 = m.tensor_morphisms(&cat.identity(b), &m.braiding(a, c)?)?;
            equal(m, &[&l1, &l2], &[&r1, &r2, &r3, &r4])
        })();
        report.record("hexagon (product braided past)", i, second);
    }
    report
}

/// `Br_{A,B}·Br_{B,A} = id`.
pub fn check_symmetry<M: MonoidalStructure>(m: &M, samples: &[(Obj<M>, Obj<M>)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b)) in samples.iter().enumerate() {
        let outcome = (|| is_identity(m, &[&m.braiding(a, b)?, &m.braiding(b, a)?]))();
        report.record("symmetry", i, outcome);
    }
    report
}

/// `RU_A = Br_{A,1}·LU_A`.
pub fn check_unitor_braiding<M: MonoidalStructure>(m: &M, samples: &[Obj<M>]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, a) in samples.iter().enumerate() {
        let outcome = (|| {
            let br = m.braiding(a, &m.unit())?;
            equal(m, &[&m.right_unitor(a)?], &[&br, &m.left_unitor(a)?])
        })();
        report.record("unitors and braiding", i, outcome);
    }
    report
}

/// The triangle identities of the tensor-hom adjunction, at `(A, B)`:
///
/// `(coev_{B,A}⊗A)·ev_{A,B⊗A} = id_{B⊗A}` and
/// `coev_{Hom(A,B),A}·Hom(A, ev_{A,B}) = id_{Hom(A,B)}`.
pub fn check_adjunction_triangles<M: MonoidalStructure>(m: &M, samples: &[(Obj<M>, Obj<M>)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (i, (a, b)) in samples.iter().enumerate() {
        let cat = m.category();
        let first = (|| {
            let ba = m.tensor_objects(b, a)?;
            let coev = m.tensor_morphisms(&m.coevaluation(b, a)?, &cat.identity(a))?;
            let ev = m.evaluation(a, &ba)?;
            is_identity(m, &[&coev, &ev])
        })();
        report.record("adjunction triangle (tensor side)", i, first);
        let second = (|| {
            let hom = m.internal_hom(a, b)?;
            let coev = m.coevaluation(&hom, a)?;
            let ev = m.internal_hom_morphisms(&cat.identity(a), &m.evaluation(a, b)?)?;
            is_identity(m, &[&coev, &ev])
        })();
        report.record("adjunction triangle (hom side)", i, second);
    }
    report
}
