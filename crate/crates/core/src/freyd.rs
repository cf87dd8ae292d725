//! The Freyd category `A(A)` of an additive category `A`.
//!
//! An object is a relation morphism `ρ_a: r_a → a` of `A`, read as "the
//! generators `a` modulo the image of `ρ_a`". A morphism `(a ← r_a) → (b ← r_b)`
//! is a datum `α: a → b` together with a witness `ω: r_a → r_b` satisfying
//! `ρ_a·α = ω·ρ_b`. Two morphisms are equal when their data differ by
//! something factoring through `ρ_b`.

use crate::category::{Capabilities, Category, LinearSystem};
use crate::error::{Error, Result};

/// An object `(generators ← relation_object)` of a Freyd category.
#[derive(Clone, Debug, PartialEq)]
pub struct FreydObject<O, M> {
    generators: O,
    relation_object: O,
    relation: M,
}

impl<O, M> FreydObject<O, M> {
    /// The generator object `a`.
    pub fn generators(&self) -> &O {
        &self.generators
    }

    /// The relation object `r_a`.
    pub fn relation_object(&self) -> &O {
        &self.relation_object
    }

    /// The relation morphism `ρ_a: r_a → a`.
    pub fn relation(&self) -> &M {
        &self.relation
    }
}

/// A morphism of a Freyd category: datum between generators and a witness
/// between relation objects.
#[derive(Clone, Debug, PartialEq)]
pub struct FreydMorphism<O, M> {
    source: FreydObject<O, M>,
    target: FreydObject<O, M>,
    datum: M,
    witness: M,
}

impl<O, M> FreydMorphism<O, M> {
    pub fn source(&self) -> &FreydObject<O, M> {
        &self.source
    }

    pub fn target(&self) -> &FreydObject<O, M> {
        &self.target
    }

    pub fn datum(&self) -> &M {
        &self.datum
    }

    pub fn witness(&self) -> &M {
        &self.witness
    }
}

pub type ObjectOf<C> = FreydObject<<C as Category>::Obj, <C as Category>::Mor>;
pub type MorphismOf<C> = FreydMorphism<<C as Category>::Obj, <C as Category>::Mor>;

/// The Freyd category over `C`. The base needs lifts so that equality of
/// morphisms is decidable.
#[derive(Clone, Debug, PartialEq)]
pub struct Freyd<C> {
    base: C,
}

/// Builds `A(base)`.
///
/// ```
/// use freyd::arith::Ring;
/// use freyd::category::Category;
/// use freyd::freyd::freyd;
/// use freyd::rows::rows_category;
///
/// let a = freyd(rows_category(Ring::Integers)).unwrap();
/// assert!(a.capabilities().cokernels && a.capabilities().kernels);
/// ```
pub fn freyd<C: Category>(base: C) -> Result<Freyd<C>> {
    Freyd::new(base)
}

impl<C: Category> Freyd<C> {
    pub fn new(base: C) -> Result<Self> {
        if !base.capabilities().lifts {
            return Err(Error::missing("lifts", base.name()));
        }
        Ok(Freyd { base })
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    /// The object presented by `relation`.
    pub fn object(&self, relation: C::Mor) -> ObjectOf<C> {
        FreydObject {
            generators: self.base.target(&relation),
            relation_object: self.base.source(&relation),
            relation,
        }
    }

    /// `a` with no relations.
    pub fn emb_object(&self, a: &C::Obj) -> ObjectOf<C> {
        self.object(self.base.zero_morphism(&self.base.zero_object(), a))
    }

    /// `f` between objects with no relations; the witness is zero.
    pub fn emb_morphism(&self, f: &C::Mor) -> MorphismOf<C> {
        let source = self.emb_object(&self.base.source(f));
        let target = self.emb_object(&self.base.target(f));
        let witness = self.base.zero_morphism(&source.relation_object, &target.relation_object);
        FreydMorphism { source, target, datum: f.clone(), witness }
    }

    fn check_datum(&self, source: &ObjectOf<C>, target: &ObjectOf<C>, datum: &C::Mor) -> Result<()> {
        if self.base.source(datum) != source.generators || self.base.target(datum) != target.generators {
            return Err(Error::Mismatch("datum does not connect the generator objects".into()));
        }
        Ok(())
    }

    /// Builds a morphism from a datum. A given witness is checked; a missing
    /// one is found with the base lift solver.
    ///
    /// ```
    /// use freyd::arith::Ring;
    /// use freyd::freyd::freyd;
    /// use freyd::rows::rows_category;
    ///
    /// let rows = rows_category(Ring::Integers);
    /// let a = freyd(rows.clone()).unwrap();
    /// let z2 = a.object(rows.matrix(&[&[2]]));
    /// let z = a.emb_object(&1);
    /// // ℤ → ℤ/2 is well defined, ℤ/2 → ℤ given by 1 is not.
    /// assert!(a.morphism(&z, &z2, rows.matrix(&[&[1]]), None).is_ok());
    /// assert!(a.morphism(&z2, &z, rows.matrix(&[&[1]]), None).is_err());
    /// ```
    pub fn morphism(
        &self,
        source: &ObjectOf<C>,
        target: &ObjectOf<C>,
        datum: C::Mor,
        witness: Option<C::Mor>,
    ) -> Result<MorphismOf<C>> {
        self.check_datum(source, target, &datum)?;
        let witness = match witness {
            Some(w) => {
                if !self.witness_holds(source, target, &datum, &w)? {
                    return Err(Error::Precondition("witness does not satisfy ρ_a·α = ω·ρ_b".into()));
                }
                w
            }
            None => self.derive_witness(source, target, &datum)?.ok_or(Error::NotWellDefined)?,
        };
        Ok(FreydMorphism { source: source.clone(), target: target.clone(), datum, witness })
    }

    /// Like [`Freyd::morphism`], but a failing candidate witness is replaced
    /// by a derived one instead of being an error.
    pub fn morphism_with_candidate(
        &self,
        source: &ObjectOf<C>,
        target: &ObjectOf<C>,
        datum: C::Mor,
        candidate: C::Mor,
    ) -> Result<MorphismOf<C>> {
        self.check_datum(source, target, &datum)?;
        let fits = self.base.source(&candidate) == source.relation_object
            && self.base.target(&candidate) == target.relation_object;
        if fits && self.witness_holds(source, target, &datum, &candidate)? {
            return Ok(FreydMorphism { source: source.clone(), target: target.clone(), datum, witness: candidate });
        }
        self.morphism(source, target, datum, None)
    }

    /// Assembles a morphism without checking the witness equation.
    pub fn morphism_unchecked(
        &self,
        source: &ObjectOf<C>,
        target: &ObjectOf<C>,
        datum: C::Mor,
        witness: C::Mor,
    ) -> MorphismOf<C> {
        FreydMorphism { source: source.clone(), target: target.clone(), datum, witness }
    }

    fn witness_holds(&self, source: &ObjectOf<C>, target: &ObjectOf<C>, datum: &C::Mor, w: &C::Mor) -> Result<bool> {
        let lhs = self.base.compose(&source.relation, datum)?;
        let rhs = self.base.compose(w, &target.relation)?;
        self.base.is_equal(&lhs, &rhs)
    }

    /// A witness `ω` with `ρ_a·α = ω·ρ_b`, if the datum is well defined.
    pub fn derive_witness(&self, source: &ObjectOf<C>, target: &ObjectOf<C>, datum: &C::Mor) -> Result<Option<C::Mor>> {
        let lhs = self.base.compose(&source.relation, datum)?;
        self.base.lift(&target.relation, &lhs)
    }

    /// Checks that `f` satisfies its witness equation.
    pub fn is_well_defined(&self, f: &MorphismOf<C>) -> Result<bool> {
        self.witness_holds(&f.source, &f.target, &f.datum, &f.witness)
    }

    /// A morphism `λ: a → r_b` with `α − α′ = λ·ρ_b`, if `f` and `g` are equal.
    pub fn equality_witness(&self, f: &MorphismOf<C>, g: &MorphismOf<C>) -> Result<Option<C::Mor>> {
        self.check_parallel(f, g)?;
        let diff = self.base.subtract(&f.datum, &g.datum)?;
        self.base.lift(&f.target.relation, &diff)
    }

    fn check_parallel(&self, f: &MorphismOf<C>, g: &MorphismOf<C>) -> Result<()> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Mismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    /// The column `(α; ρ_b): a ⊕ r_b → b` whose weak kernel yields the kernel of `f`.
    fn kernel_column(&self, f: &MorphismOf<C>) -> Result<(Vec<C::Obj>, C::Mor)> {
        let parts = vec![f.source.generators.clone(), f.target.relation_object.clone()];
        let column = self.base.morphism_from_direct_sum(
            &parts,
            &f.target.generators,
            &[f.datum.clone(), f.target.relation.clone()],
        )?;
        Ok((parts, column))
    }

    /// Returns the kernel data `(parts1, column1, u, parts2, column2, w2)`.
    fn kernel_data(&self, f: &MorphismOf<C>) -> Result<KernelData<C>> {
        let (parts1, column1) = self.kernel_column(f)?;
        let w = self.base.weak_kernel_embedding(&column1)?;
        let k = self.base.source(&w);
        let u = self.base.component(&w, &parts1, 0)?;
        let parts2 = vec![k.clone(), f.source.relation_object.clone()];
        let column2 = self
            .base
            .morphism_from_direct_sum(&parts2, &f.source.generators, &[u.clone(), f.source.relation.clone()])?;
        let w2 = self.base.weak_kernel_embedding(&column2)?;
        Ok(KernelData { parts1, column1, u, parts2, column2, w2 })
    }
}

struct KernelData<C: Category> {
    parts1: Vec<C::Obj>,
    column1: C::Mor,
    u: C::Mor,
    parts2: Vec<C::Obj>,
    column2: C::Mor,
    w2: C::Mor,
}

impl<C: Category> Category for Freyd<C> {
    type Obj = ObjectOf<C>;
    type Mor = MorphismOf<C>;

    fn name(&self) -> String {
        format!("Freyd({})", self.base.name())
    }

    fn capabilities(&self) -> Capabilities {
        let base = self.base.capabilities();
        Capabilities {
            lifts: base.linear_systems,
            colifts: base.linear_systems,
            linear_systems: base.linear_systems,
            weak_kernels: base.weak_kernels,
            weak_cokernels: true,
            kernels: base.weak_kernels,
            cokernels: true,
        }
    }

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        f.source.clone()
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        f.target.clone()
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        FreydMorphism {
            source: a.clone(),
            target: a.clone(),
            datum: self.base.identity(&a.generators),
            witness: self.base.identity(&a.relation_object),
        }
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        if f.target != g.source {
            return Err(Error::Mismatch("target of the first morphism is not the source of the second".into()));
        }
        Ok(FreydMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            datum: self.base.compose(&f.datum, &g.datum)?,
            witness: self.base.compose(&f.witness, &g.witness)?,
        })
    }

    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.check_parallel(f, g)?;
        Ok(FreydMorphism {
            source: f.source.clone(),
            target: f.target.clone(),
            datum: self.base.add(&f.datum, &g.datum)?,
            witness: self.base.add(&f.witness, &g.witness)?,
        })
    }

    fn negate(&self, f: &Self::Mor) -> Self::Mor {
        FreydMorphism {
            source: f.source.clone(),
            target: f.target.clone(),
            datum: self.base.negate(&f.datum),
            witness: self.base.negate(&f.witness),
        }
    }

    fn zero_morphism(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        FreydMorphism {
            source: a.clone(),
            target: b.clone(),
            datum: self.base.zero_morphism(&a.generators, &b.generators),
            witness: self.base.zero_morphism(&a.relation_object, &b.relation_object),
        }
    }

    fn zero_object(&self) -> Self::Obj {
        self.emb_object(&self.base.zero_object())
    }

    fn direct_sum(&self, objects: &[Self::Obj]) -> Self::Obj {
        let relations: Vec<C::Mor> = objects.iter().map(|o| o.relation.clone()).collect();
        let relation = self
            .base
            .direct_sum_morphism(&relations)
            .expect("direct sum of relations");
        FreydObject {
            generators: self.base.direct_sum(&generators_of(objects)),
            relation_object: self.base.direct_sum(&relation_objects_of(objects)),
            relation,
        }
    }

    fn injection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        FreydMorphism {
            source: objects[i].clone(),
            target: self.direct_sum(objects),
            datum: self.base.injection(&generators_of(objects), i),
            witness: self.base.injection(&relation_objects_of(objects), i),
        }
    }

    fn projection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        FreydMorphism {
            source: self.direct_sum(objects),
            target: objects[i].clone(),
            datum: self.base.projection(&generators_of(objects), i),
            witness: self.base.projection(&relation_objects_of(objects), i),
        }
    }

    fn is_equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        Ok(self.equality_witness(f, g)?.is_some())
    }

    /// Reduces the system to one in the base: besides the data `x_j` the
    /// unknowns are the witnesses `w_j` and the equality witnesses `μ_i` of
    /// each equation.
    fn solve_linear_system(&self, system: &LinearSystem<Self::Obj, Self::Mor>) -> Result<Option<Vec<Self::Mor>>> {
        if !self.base.capabilities().linear_systems {
            return Err(Error::missing("linear systems", self.base.name()));
        }
        let b = &self.base;
        let n = system.unknowns.len();
        let mut unknowns = Vec::new();
        for (s, t) in &system.unknowns {
            unknowns.push((s.generators.clone(), t.generators.clone()));
        }
        for (s, t) in &system.unknowns {
            unknowns.push((s.relation_object.clone(), t.relation_object.clone()));
        }
        for eq in &system.equations {
            unknowns.push((eq.rhs.source.generators.clone(), eq.rhs.target.relation_object.clone()));
        }
        let mut base_system = LinearSystem::new(unknowns);
        for (j, (s, t)) in system.unknowns.iter().enumerate() {
            base_system.equation(
                vec![
                    (s.relation.clone(), j, b.identity(&t.generators)),
                    (b.identity(&s.relation_object), n + j, b.negate(&t.relation)),
                ],
                b.zero_morphism(&s.relation_object, &t.generators),
            );
        }
        for (i, eq) in system.equations.iter().enumerate() {
            let mut terms: Vec<_> = eq
                .terms
                .iter()
                .map(|t| (t.left.datum.clone(), t.unknown, t.right.datum.clone()))
                .collect();
            terms.push((
                b.identity(&eq.rhs.source.generators),
                2 * n + i,
                b.negate(&eq.rhs.target.relation),
            ));
            base_system.equation(terms, eq.rhs.datum.clone());
        }
        let Some(solution) = b.solve_linear_system(&base_system)? else {
            return Ok(None);
        };
        Ok(Some(
            system
                .unknowns
                .iter()
                .enumerate()
                .map(|(j, (s, t))| self.morphism_unchecked(s, t, solution[j].clone(), solution[n + j].clone()))
                .collect(),
        ))
    }

    fn weak_kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.kernel_embedding(f)
    }

    fn weak_kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.kernel_lift(f, test)
    }

    fn weak_cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.cokernel_projection(f)
    }

    fn weak_cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.cokernel_colift(f, test)
    }

    /// With `w` a weak kernel of `(α; ρ_b)` and `u` its first component, the
    /// kernel is `(k ← s)` where `s` is the first component of a weak kernel
    /// of `(u; ρ_a)`. The embedding has datum `u`.
    fn kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        let data = self.kernel_data(f)?;
        let b = &self.base;
        let s = b.component(&data.w2, &data.parts2, 0)?;
        let witness = b.negate(&b.component(&data.w2, &data.parts2, 1)?);
        let kernel = self.object(s);
        Ok(self.morphism_unchecked(&kernel, &f.source, data.u, witness))
    }

    fn kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        if test.target != f.source {
            return Err(Error::Mismatch("test morphism does not end in the source".into()));
        }
        let data = self.kernel_data(f)?;
        let b = &self.base;
        let t = &test.source;
        let ta = b.compose(&test.datum, &f.datum)?;
        let mu = b
            .lift(&f.target.relation, &ta)?
            .ok_or_else(|| Error::Precondition("test morphism does not compose to zero".into()))?;
        let into1 = b.morphism_into_direct_sum(&t.generators, &data.parts1, &[test.datum.clone(), b.negate(&mu)])?;
        let lambda = b.weak_kernel_lift(&data.column1, &into1)?;
        let kernel_gens = data.parts2[0].clone();
        debug_assert_eq!(b.target(&lambda), kernel_gens);
        let into2 = b.morphism_into_direct_sum(
            &t.relation_object,
            &data.parts2,
            &[b.compose(&t.relation, &lambda)?, b.negate(&test.witness)],
        )?;
        let z = b.weak_kernel_lift(&data.column2, &into2)?;
        let s = b.component(&data.w2, &data.parts2, 0)?;
        let kernel = self.object(s);
        Ok(self.morphism_unchecked(t, &kernel, lambda, z))
    }

    /// The cokernel of `α: (a ← r_a) → (b ← r_b)` is `b` with relations
    /// `(ρ_b; α): r_b ⊕ a → b`; the projection has identity datum.
    fn cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        let b = &self.base;
        let parts = [f.target.relation_object.clone(), f.source.generators.clone()];
        let column =
            b.morphism_from_direct_sum(&parts, &f.target.generators, &[f.target.relation.clone(), f.datum.clone()])?;
        let cokernel = self.object(column);
        Ok(self.morphism_unchecked(&f.target, &cokernel, b.identity(&f.target.generators), b.injection(&parts, 0)))
    }

    fn cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        if test.source != f.target {
            return Err(Error::Mismatch("test morphism does not start at the target".into()));
        }
        let b = &self.base;
        let composite = b.compose(&f.datum, &test.datum)?;
        let lambda = b
            .lift(&test.target.relation, &composite)?
            .ok_or_else(|| Error::Precondition("test morphism does not compose to zero".into()))?;
        let projection = self.cokernel_projection(f)?;
        let parts = [f.target.relation_object.clone(), f.source.generators.clone()];
        let witness = b.morphism_from_direct_sum(&parts, &test.target.relation_object, &[test.witness.clone(), lambda])?;
        Ok(self.morphism_unchecked(&projection.target, &test.target, test.datum.clone(), witness))
    }

    fn morphism_into_direct_sum(
        &self,
        source: &Self::Obj,
        targets: &[Self::Obj],
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        let data: Vec<_> = components.iter().map(|f| f.datum.clone()).collect();
        let witnesses: Vec<_> = components.iter().map(|f| f.witness.clone()).collect();
        Ok(FreydMorphism {
            source: source.clone(),
            target: self.direct_sum(targets),
            datum: self.base.morphism_into_direct_sum(&source.generators, &generators_of(targets), &data)?,
            witness: self.base.morphism_into_direct_sum(
                &source.relation_object,
                &relation_objects_of(targets),
                &witnesses,
            )?,
        })
    }

    fn morphism_from_direct_sum(
        &self,
        sources: &[Self::Obj],
        target: &Self::Obj,
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        let data: Vec<_> = components.iter().map(|f| f.datum.clone()).collect();
        let witnesses: Vec<_> = components.iter().map(|f| f.witness.clone()).collect();
        Ok(FreydMorphism {
            source: self.direct_sum(sources),
            target: target.clone(),
            datum: self.base.morphism_from_direct_sum(&generators_of(sources), &target.generators, &data)?,
            witness: self.base.morphism_from_direct_sum(
                &relation_objects_of(sources),
                &target.relation_object,
                &witnesses,
            )?,
        })
    }

    fn block_morphism(
        &self,
        sources: &[Self::Obj],
        targets: &[Self::Obj],
        blocks: &[Vec<Self::Mor>],
    ) -> Result<Self::Mor> {
        let data: Vec<Vec<_>> = blocks.iter().map(|r| r.iter().map(|f| f.datum.clone()).collect()).collect();
        let witnesses: Vec<Vec<_>> = blocks.iter().map(|r| r.iter().map(|f| f.witness.clone()).collect()).collect();
        Ok(FreydMorphism {
            source: self.direct_sum(sources),
            target: self.direct_sum(targets),
            datum: self.base.block_morphism(&generators_of(sources), &generators_of(targets), &data)?,
            witness: self.base.block_morphism(
                &relation_objects_of(sources),
                &relation_objects_of(targets),
                &witnesses,
            )?,
        })
    }

    fn direct_sum_morphism(&self, fs: &[Self::Mor]) -> Result<Self::Mor> {
        let sources: Vec<_> = fs.iter().map(|f| f.source.clone()).collect();
        let targets: Vec<_> = fs.iter().map(|f| f.target.clone()).collect();
        let data: Vec<_> = fs.iter().map(|f| f.datum.clone()).collect();
        let witnesses: Vec<_> = fs.iter().map(|f| f.witness.clone()).collect();
        Ok(FreydMorphism {
            source: self.direct_sum(&sources),
            target: self.direct_sum(&targets),
            datum: self.base.direct_sum_morphism(&data)?,
            witness: self.base.direct_sum_morphism(&witnesses)?,
        })
    }
}

fn generators_of<O: Clone, M>(objects: &[FreydObject<O, M>]) -> Vec<O> {
    objects.iter().map(|o| o.generators.clone()).collect()
}

fn relation_objects_of<O: Clone, M>(objects: &[FreydObject<O, M>]) -> Vec<O> {
    objects.iter().map(|o| o.relation_object.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Ring;
    use crate::category::{check_biproduct_axioms, Opposite};
    use crate::rows::{rows_category, Rows};

    fn setup() -> (Rows, Freyd<Rows>) {
        let rows = rows_category(Ring::Integers);
        (rows.clone(), freyd(rows).unwrap())
    }

    #[test]
    fn equality_modulo_relations() {
        let (r, a) = setup();
        let z = a.emb_object(&1);
        let z2 = a.object(r.matrix(&[&[2]]));
        let one = a.morphism(&z, &z2, r.matrix(&[&[1]]), None).unwrap();
        let three = a.morphism(&z, &z2, r.matrix(&[&[3]]), None).unwrap();
        let two = a.morphism(&z, &z2, r.matrix(&[&[2]]), None).unwrap();
        assert!(a.is_equal(&one, &three).unwrap());
        assert!(!a.is_equal(&one, &two).unwrap());
        assert!(a.is_equal(&one, &one).unwrap());
    }

    #[test]
    fn embedding_is_faithful() {
        let (r, a) = setup();
        let f = r.matrix(&[&[1, 2]]);
        let g = r.matrix(&[&[1, 3]]);
        assert!(!a.is_equal(&a.emb_morphism(&f), &a.emb_morphism(&g)).unwrap());
        assert_eq!(a.emb_morphism(&r.identity(&2)), a.identity(&a.emb_object(&2)));
        assert_eq!(a.emb_object(&1).relation_object(), &0);
    }

    #[test]
    fn cokernel_of_two() {
        let (r, a) = setup();
        let two = a.emb_morphism(&r.matrix(&[&[2]]));
        let c = a.cokernel_object(&two).unwrap();
        assert_eq!(c.relation(), &r.matrix(&[&[2]]));
        let id = a.identity(&a.emb_object(&2));
        assert!(a.is_zero_object(&a.cokernel_object(&id).unwrap()).unwrap());
        let zero = a.zero_morphism(&a.emb_object(&1), &a.emb_object(&1));
        let p = a.cokernel_projection(&zero).unwrap();
        assert!(a.is_equal(&p.clone(), &p).unwrap());
    }

    #[test]
    fn colift_rejects_nonzero_composites() {
        let (r, a) = setup();
        let two = a.emb_morphism(&r.matrix(&[&[2]]));
        let id = a.identity(&a.emb_object(&1));
        assert!(matches!(a.cokernel_colift(&two, &id), Err(Error::Precondition(_))));
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let (_, a) = setup();
        let x = a.emb_object(&2);
        let k = a.kernel_object(&a.identity(&x)).unwrap();
        assert!(a.is_zero_object(&k).unwrap());
        let e = a.kernel_embedding(&a.zero_morphism(&x, &x)).unwrap();
        let back = a.kernel_lift(&a.zero_morphism(&x, &x), &a.identity(&x)).unwrap();
        assert!(a.is_equal(&a.compose(&back, &e).unwrap(), &a.identity(&x)).unwrap());
    }

    #[test]
    fn construction_checks_witnesses() {
        let (r, a) = setup();
        let z2 = a.object(r.matrix(&[&[2]]));
        let z4 = a.object(r.matrix(&[&[4]]));
        // 2: ℤ/2 → ℤ/4 is well defined with witness 1.
        assert!(a.morphism(&z2, &z4, r.matrix(&[&[2]]), Some(r.matrix(&[&[1]]))).is_ok());
        assert!(a.morphism(&z2, &z4, r.matrix(&[&[2]]), Some(r.matrix(&[&[0]]))).is_err());
        assert!(matches!(a.morphism(&z2, &z4, r.matrix(&[&[1]]), None), Err(Error::NotWellDefined)));
    }

    #[test]
    fn requires_lifts() {
        #[derive(Clone, Debug)]
        struct NoLifts(Rows);
        impl Category for NoLifts {
            type Obj = usize;
            type Mor = crate::arith::Matrix;
            fn name(&self) -> String {
                "no lifts".into()
            }
            fn capabilities(&self) -> Capabilities {
                Capabilities::default()
            }
            fn source(&self, f: &Self::Mor) -> usize {
                self.0.source(f)
            }
            fn target(&self, f: &Self::Mor) -> usize {
                self.0.target(f)
            }
            fn identity(&self, a: &usize) -> Self::Mor {
                self.0.identity(a)
            }
            fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
                self.0.compose(f, g)
            }
            fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
                self.0.add(f, g)
            }
            fn negate(&self, f: &Self::Mor) -> Self::Mor {
                self.0.negate(f)
            }
            fn zero_morphism(&self, a: &usize, b: &usize) -> Self::Mor {
                self.0.zero_morphism(a, b)
            }
            fn zero_object(&self) -> usize {
                0
            }
            fn direct_sum(&self, objects: &[usize]) -> usize {
                self.0.direct_sum(objects)
            }
            fn injection(&self, objects: &[usize], i: usize) -> Self::Mor {
                self.0.injection(objects, i)
            }
            fn projection(&self, objects: &[usize], i: usize) -> Self::Mor {
                self.0.projection(objects, i)
            }
            fn is_equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
                self.0.is_equal(f, g)
            }
        }
        let err = freyd(NoLifts(rows_category(Ring::Integers))).unwrap_err();
        assert!(matches!(err, Error::MissingCapability { capability: "lifts", .. }));
    }

    #[test]
    fn iterated_construction_has_biproducts() {
        let rows = rows_category(Ring::Integers);
        let inner = freyd(Opposite::new(rows.clone())).unwrap();
        let outer = freyd(Opposite::new(inner.clone())).unwrap();
        let caps = outer.capabilities();
        assert!(caps.kernels && caps.cokernels && caps.lifts);
        let x = outer.emb_object(&inner.emb_object(&1));
        let y = outer.emb_object(&inner.object(rows.matrix(&[&[2]]).transpose()));
        let report = check_biproduct_axioms(&outer, &[x, y]);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn opposite_swaps_kernel_capability() {
        let (_, a) = setup();
        let op = Opposite::new(a.clone());
        assert_eq!(op.capabilities().kernels, a.capabilities().cokernels);
    }
}
