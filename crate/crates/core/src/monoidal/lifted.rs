use crate::category::Category;
use crate::error::{Error, Result};
use crate::freyd::{Freyd, MorphismOf, ObjectOf};
use crate::functor::MultilinearFunctor;

use super::coherence::{
    check_adjunction_triangles, check_hexagons, check_inverses, check_pentagon, check_triangle,
    CoherenceReport,
};
use super::{MonoidalStructure, Promonoidal};

type SObj<P> = <<P as Promonoidal>::Base as Category>::Obj;
type SMor<P> = <<P as Promonoidal>::Base as Category>::Mor;
type FObj<P> = ObjectOf<<P as Promonoidal>::Base>;
type FMor<P> = MorphismOf<<P as Promonoidal>::Base>;

/// The right exact monoidal structure on `A(A)` induced by a finitely
/// presented promonoidal structure on `A`.
///
/// For `A = (a ← r_a)` and `B = (b ← r_b)` the tensor `A⊗B` has generators
/// `g_T(a,b)` and relations `r_T(a,b) ⊕ g_T(a,r_b) ⊕ g_T(r_a,b)`. Witnesses of
/// the structure morphisms are assembled from the promonoidal data; a
/// candidate that fails its witness equation is replaced by a solved one.
#[derive(Clone, Debug)]
pub struct LiftedMonoidal<P: Promonoidal> {
    promonoidal: P,
    freyd: Freyd<P::Base>,
}

/// Builds the lifted structure and checks the coherence diagrams on the
/// embedded `samples`, in every combination of consecutive samples.
///
/// ```
/// use freyd::arith::Ring;
/// use freyd::category::Category;
/// use freyd::monoidal::{kronecker_promonoidal, lift_promonoidal, MonoidalStructure};
///
/// let m = lift_promonoidal(kronecker_promonoidal(Ring::Integers).unwrap(), &[1, 2]).unwrap();
/// let a = m.category();
/// let rows = a.base().clone();
/// let z2 = a.object(rows.matrix(&[&[2]]));
/// let z3 = a.object(rows.matrix(&[&[3]]));
/// // ℤ/2 ⊗ ℤ/3 = 0
/// assert!(a.is_zero_object(&m.tensor_objects(&z2, &z3).unwrap()).unwrap());
/// ```
pub fn lift_promonoidal<P: Promonoidal>(promonoidal: P, samples: &[SObj<P>]) -> Result<LiftedMonoidal<P>> {
    let lifted = LiftedMonoidal::new(promonoidal)?;
    if samples.is_empty() {
        return Ok(lifted);
    }
    let objects: Vec<_> = samples.iter().map(|s| lifted.freyd.emb_object(s)).collect();
    let at = |i: usize| objects[i % objects.len()].clone();
    let n = objects.len();
    let pairs: Vec<_> = (0..n).map(|i| (at(i), at(i + 1))).collect();
    let triples: Vec<_> = (0..n).map(|i| (at(i), at(i + 1), at(i + 2))).collect();
    let quads: Vec<_> = (0..n).map(|i| (at(i), at(i + 1), at(i + 2), at(i + 3))).collect();

    let mut report = CoherenceReport::default();
    report.extend(check_pentagon(&lifted, &quads));
    report.extend(check_triangle(&lifted, &pairs));
    report.extend(check_inverses(&lifted, &triples));
    if lifted.has_braiding() {
        report.extend(check_hexagons(&lifted, &triples));
    }
    if lifted.has_internal_hom() {
        report.extend(check_adjunction_triangles(&lifted, &pairs));
    }
    match report.first_failure() {
        None => Ok(lifted),
        Some(entry) => Err(Error::Coherence(format!(
            "{} fails on embedded sample {}",
            entry.diagram, entry.sample
        ))),
    }
}

impl<P: Promonoidal> LiftedMonoidal<P> {
    pub fn new(promonoidal: P) -> Result<Self> {
        let freyd = promonoidal.freyd().clone();
        Ok(LiftedMonoidal { promonoidal, freyd })
    }

    pub fn promonoidal(&self) -> &P {
        &self.promonoidal
    }

    fn base(&self) -> &P::Base {
        self.promonoidal.base()
    }

    fn t(&self, a: &SObj<P>, b: &SObj<P>) -> Result<FObj<P>> {
        self.promonoidal.tensor_object(a, b)
    }

    fn dt(&self, f: &SMor<P>, g: &SMor<P>) -> Result<SMor<P>> {
        Ok(self.promonoidal.tensor_morphism(f, g)?.datum().clone())
    }

    fn id(&self, a: &SObj<P>) -> SMor<P> {
        self.base().identity(a)
    }

    fn zero(&self, a: &SObj<P>, b: &SObj<P>) -> SMor<P> {
        self.base().zero_morphism(a, b)
    }

    /// `[r_T(a,b), g_T(a,r_b), g_T(r_a,b)]`, the summands of the relation
    /// object of `A⊗B`.
    pub fn relation_parts(&self, a: &FObj<P>, b: &FObj<P>) -> Result<Vec<SObj<P>>> {
        Ok(vec![
            self.t(a.generators(), b.generators())?.relation_object().clone(),
            self.t(a.generators(), b.relation_object())?.generators().clone(),
            self.t(a.relation_object(), b.generators())?.generators().clone(),
        ])
    }

    /// The candidate witness of the associator at `(A, B, C)`.
    pub fn associator_witness_candidate(&self, a: &FObj<P>, b: &FObj<P>, c: &FObj<P>) -> Result<SMor<P>> {
        let s = self.base();
        let p = &self.promonoidal;
        let (ga, gb, gc) = (a.generators(), b.generators(), c.generators());
        let bc = self.tensor_objects(b, c)?;
        let ab = self.tensor_objects(a, b)?;
        let rbc = self.relation_parts(b, c)?;
        let rab = self.relation_parts(a, b)?;

        let s1 = self.t(ga, bc.generators())?.relation_object().clone();
        let s2 = self.t(ga, bc.relation_object())?.generators().clone();
        let s3 = self.t(a.relation_object(), bc.generators())?.generators().clone();
        let s2p = rbc.iter().map(|x| Ok(self.t(ga, x)?.generators().clone())).collect::<Result<Vec<_>>>()?;
        let t1 = self.t(ab.generators(), gc)?.relation_object().clone();
        let t2 = self.t(ab.generators(), c.relation_object())?.generators().clone();
        let t3 = self.t(ab.relation_object(), gc)?.generators().clone();
        let t3p = rab.iter().map(|x| Ok(self.t(x, gc)?.generators().clone())).collect::<Result<Vec<_>>>()?;

        let x = [s1.clone(), s2p[0].clone()];
        let y = [t1.clone(), t3p[0].clone()];
        let (xs, ys) = (s.direct_sum(&x), s.direct_sum(&y));

        let d = (0..3)
            .map(|k| self.dt(&self.id(ga), &s.projection(&rbc, k)))
            .collect::<Result<Vec<_>>>()?;
        let left = s.block_morphism(
            &[s1.clone(), s2.clone(), s3.clone()],
            &[xs.clone(), s2p[1].clone(), s2p[2].clone(), s3.clone()],
            &[
                vec![s.injection(&x, 0), self.zero(&s1, &s2p[1]), self.zero(&s1, &s2p[2]), self.zero(&s1, &s3)],
                vec![s.compose(&d[0], &s.injection(&x, 1))?, d[1].clone(), d[2].clone(), self.zero(&s2, &s3)],
                vec![self.zero(&s3, &xs), self.zero(&s3, &s2p[1]), self.zero(&s3, &s2p[2]), self.id(&s3)],
            ],
        )?;
        let middle = s.direct_sum_morphism(&[
            p.associator_witness(ga, gb, gc)?,
            p.associator_datum(ga, gb, c.relation_object())?,
            p.associator_datum(ga, b.relation_object(), gc)?,
            p.associator_datum(a.relation_object(), gb, gc)?,
        ])?;
        let e = (0..3)
            .map(|k| self.dt(&s.injection(&rab, k), &self.id(gc)))
            .collect::<Result<Vec<_>>>()?;
        let right = s.block_morphism(
            &[ys.clone(), t2.clone(), t3p[1].clone(), t3p[2].clone()],
            &[t1.clone(), t2.clone(), t3.clone()],
            &[
                vec![s.projection(&y, 0), self.zero(&ys, &t2), s.compose(&s.projection(&y, 1), &e[0])?],
                vec![self.zero(&t2, &t1), self.id(&t2), self.zero(&t2, &t3)],
                vec![self.zero(&t3p[1], &t1), self.zero(&t3p[1], &t2), e[1].clone()],
                vec![self.zero(&t3p[2], &t1), self.zero(&t3p[2], &t2), e[2].clone()],
            ],
        )?;
        s.compose_all(&[&left, &middle, &right])
    }

    /// The candidate witness of the inverse associator at `(A, B, C)`.
    pub fn associator_inverse_witness_candidate(&self, a: &FObj<P>, b: &FObj<P>, c: &FObj<P>) -> Result<SMor<P>> {
        let s = self.base();
        let p = &self.promonoidal;
        let (ga, gb, gc) = (a.generators(), b.generators(), c.generators());
        let bc = self.tensor_objects(b, c)?;
        let ab = self.tensor_objects(a, b)?;
        let rbc = self.relation_parts(b, c)?;
        let rab = self.relation_parts(a, b)?;

        let s1 = self.t(ga, bc.generators())?.relation_object().clone();
        let s2 = self.t(ga, bc.relation_object())?.generators().clone();
        let s3 = self.t(a.relation_object(), bc.generators())?.generators().clone();
        let s2p = rbc.iter().map(|x| Ok(self.t(ga, x)?.generators().clone())).collect::<Result<Vec<_>>>()?;
        let t1 = self.t(ab.generators(), gc)?.relation_object().clone();
        let t2 = self.t(ab.generators(), c.relation_object())?.generators().clone();
        let t3 = self.t(ab.relation_object(), gc)?.generators().clone();
        let t3p = rab.iter().map(|x| Ok(self.t(x, gc)?.generators().clone())).collect::<Result<Vec<_>>>()?;

        let x = [s1.clone(), s2p[0].clone()];
        let y = [t1.clone(), t3p[0].clone()];
        let (xs, ys) = (s.direct_sum(&x), s.direct_sum(&y));

        let f = (0..3)
            .map(|k| self.dt(&s.projection(&rab, k), &self.id(gc)))
            .collect::<Result<Vec<_>>>()?;
        let left = s.block_morphism(
            &[t1.clone(), t2.clone(), t3.clone()],
            &[ys.clone(), t2.clone(), t3p[1].clone(), t3p[2].clone()],
            &[
                vec![s.injection(&y, 0), self.zero(&t1, &t2), self.zero(&t1, &t3p[1]), self.zero(&t1, &t3p[2])],
                vec![self.zero(&t2, &ys), self.id(&t2), self.zero(&t2, &t3p[1]), self.zero(&t2, &t3p[2])],
                vec![s.compose(&f[0], &s.injection(&y, 1))?, self.zero(&t3, &t2), f[1].clone(), f[2].clone()],
            ],
        )?;
        let middle = s.direct_sum_morphism(&[
            p.associator_inverse_witness(ga, gb, gc)?,
            p.associator_inverse_datum(ga, gb, c.relation_object())?,
            p.associator_inverse_datum(ga, b.relation_object(), gc)?,
            p.associator_inverse_datum(a.relation_object(), gb, gc)?,
        ])?;
        let g = (0..3)
            .map(|k| self.dt(&self.id(ga), &s.injection(&rbc, k)))
            .collect::<Result<Vec<_>>>()?;
        let right = s.block_morphism(
            &[xs.clone(), s2p[1].clone(), s2p[2].clone(), s3.clone()],
            &[s1.clone(), s2.clone(), s3.clone()],
            &[
                vec![s.projection(&x, 0), s.compose(&s.projection(&x, 1), &g[0])?, self.zero(&xs, &s3)],
                vec![self.zero(&s2p[1], &s1), g[1].clone(), self.zero(&s2p[1], &s3)],
                vec![self.zero(&s2p[2], &s1), g[2].clone(), self.zero(&s2p[2], &s3)],
                vec![self.zero(&s3, &s1), self.zero(&s3, &s2), self.id(&s3)],
            ],
        )?;
        s.compose_all(&[&left, &middle, &right])
    }

    /// `Ĥom(a, C)` for a generator object `a`: generators `g_H(a,c)` and
    /// relations `r_H(a,c) ⊕ g_H(a,r_c)`.
    pub fn generator_hom(&self, a: &SObj<P>, c: &FObj<P>) -> Result<FObj<P>> {
        let s = self.base();
        let p = &self.promonoidal;
        let h = p.hom_object(a, c.generators())?;
        let hr = p.hom_object(a, c.relation_object())?;
        let parts = [h.relation_object().clone(), hr.generators().clone()];
        let along = p.hom_morphism(&self.id(a), c.relation())?;
        let column = s.morphism_from_direct_sum(&parts, h.generators(), &[h.relation().clone(), along.datum().clone()])?;
        Ok(self.freyd.object(column))
    }

    /// `Ĥom(f, g): Ĥom(a, C) → Ĥom(a′, C′)` for `f: a′ → a` in `A` and
    /// `g: C → C′` in `A(A)`.
    pub fn generator_hom_morphism(&self, f: &SMor<P>, g: &FMor<P>) -> Result<FMor<P>> {
        let s = self.base();
        let p = &self.promonoidal;
        let source = self.generator_hom(&s.target(f), g.source())?;
        let target = self.generator_hom(&s.source(f), g.target())?;
        let h = p.hom_morphism(f, g.datum())?;
        let candidate = s.direct_sum_morphism(&[h.witness().clone(), p.hom_morphism(f, g.witness())?.datum().clone()])?;
        self.freyd.morphism_with_candidate(&source, &target, h.datum().clone(), candidate)
    }

    /// `Ĥom(ρ_a, C): Ĥom(a, C) → Ĥom(r_a, C)`, whose kernel is `Hom(A, C)`.
    pub fn hom_relation_map(&self, a: &FObj<P>, c: &FObj<P>) -> Result<FMor<P>> {
        self.generator_hom_morphism(a.relation(), &self.freyd.identity(c))
    }

    /// The kernel embedding `Hom(A, C) → Ĥom(a, C)`.
    pub fn internal_hom_embedding(&self, a: &FObj<P>, c: &FObj<P>) -> Result<FMor<P>> {
        self.freyd.kernel_embedding(&self.hom_relation_map(a, c)?)
    }

    fn require_hom(&self) -> Result<()> {
        if !self.has_internal_hom() {
            return Err(Error::missing("internal homs", self.freyd.name()));
        }
        Ok(())
    }
}

impl<P: Promonoidal> MonoidalStructure for LiftedMonoidal<P> {
    type Cat = Freyd<P::Base>;

    fn category(&self) -> &Freyd<P::Base> {
        &self.freyd
    }

    fn tensor_objects(&self, a: &FObj<P>, b: &FObj<P>) -> Result<FObj<P>> {
        let s = self.base();
        let (ga, gb) = (a.generators(), b.generators());
        let tab = self.t(ga, gb)?;
        let parts = self.relation_parts(a, b)?;
        let column = s.morphism_from_direct_sum(
            &parts,
            tab.generators(),
            &[tab.relation().clone(), self.dt(&self.id(ga), b.relation())?, self.dt(a.relation(), &self.id(gb))?],
        )?;
        Ok(self.freyd.object(column))
    }

    fn tensor_morphisms(&self, f: &FMor<P>, g: &FMor<P>) -> Result<FMor<P>> {
        let source = self.tensor_objects(f.source(), g.source())?;
        let target = self.tensor_objects(f.target(), g.target())?;
        let tm = self.promonoidal.tensor_morphism(f.datum(), g.datum())?;
        let candidate = self.base().direct_sum_morphism(&[
            tm.witness().clone(),
            self.dt(f.datum(), g.witness())?,
            self.dt(f.witness(), g.datum())?,
        ])?;
        self.freyd.morphism_with_candidate(&source, &target, tm.datum().clone(), candidate)
    }

    fn unit(&self) -> FObj<P> {
        self.promonoidal.unit()
    }

    fn associator(&self, a: &FObj<P>, b: &FObj<P>, c: &FObj<P>) -> Result<FMor<P>> {
        let source = self.tensor_objects(a, &self.tensor_objects(b, c)?)?;
        let target = self.tensor_objects(&self.tensor_objects(a, b)?, c)?;
        let datum = self.promonoidal.associator_datum(a.generators(), b.generators(), c.generators())?;
        let candidate = self.associator_witness_candidate(a, b, c)?;
        self.freyd.morphism_with_candidate(&source, &target, datum, candidate)
    }

    fn associator_inverse(&self, a: &FObj<P>, b: &FObj<P>, c: &FObj<P>) -> Result<FMor<P>> {
        let source = self.tensor_objects(&self.tensor_objects(a, b)?, c)?;
        let target = self.tensor_objects(a, &self.tensor_objects(b, c)?)?;
        let datum = self.promonoidal.associator_inverse_datum(a.generators(), b.generators(), c.generators())?;
        let candidate = self.associator_inverse_witness_candidate(a, b, c)?;
        self.freyd.morphism_with_candidate(&source, &target, datum, candidate)
    }

    fn left_unitor(&self, a: &FObj<P>) -> Result<FMor<P>> {
        let unit = self.unit();
        let source = self.tensor_objects(&unit, a)?;
        let parts = self.relation_parts(&unit, a)?;
        let ra = a.relation_object();
        let candidate = self.base().morphism_from_direct_sum(
            &parts,
            ra,
            &[self.zero(&parts[0], ra), self.promonoidal.left_unitor_datum(ra)?, self.zero(&parts[2], ra)],
        )?;
        let datum = self.promonoidal.left_unitor_datum(a.generators())?;
        self.freyd.morphism_with_candidate(&source, a, datum, candidate)
    }

    fn left_unitor_inverse(&self, a: &FObj<P>) -> Result<FMor<P>> {
        let unit = self.unit();
        let target = self.tensor_objects(&unit, a)?;
        let parts = self.relation_parts(&unit, a)?;
        let ra = a.relation_object();
        let candidate = self.base().morphism_into_direct_sum(
            ra,
            &parts,
            &[self.zero(ra, &parts[0]), self.promonoidal.left_unitor_inverse_datum(ra)?, self.zero(ra, &parts[2])],
        )?;
        let datum = self.promonoidal.left_unitor_inverse_datum(a.generators())?;
        self.freyd.morphism_with_candidate(a, &target, datum, candidate)
    }

    fn right_unitor(&self, a: &FObj<P>) -> Result<FMor<P>> {
        let unit = self.unit();
        let source = self.tensor_objects(a, &unit)?;
        let parts = self.relation_parts(a, &unit)?;
        let ra = a.relation_object();
        let candidate = self.base().morphism_from_direct_sum(
            &parts,
            ra,
            &[self.zero(&parts[0], ra), self.zero(&parts[1], ra), self.promonoidal.right_unitor_datum(ra)?],
        )?;
        let datum = self.promonoidal.right_unitor_datum(a.generators())?;
        self.freyd.morphism_with_candidate(&source, a, datum, candidate)
    }

    fn right_unitor_inverse(&self, a: &FObj<P>) -> Result<FMor<P>> {
        let unit = self.unit();
        let target = self.tensor_objects(a, &unit)?;
        let parts = self.relation_parts(a, &unit)?;
        let ra = a.relation_object();
        let candidate = self.base().morphism_into_direct_sum(
            ra,
            &parts,
            &[self.zero(ra, &parts[0]), self.zero(ra, &parts[1]), self.promonoidal.right_unitor_inverse_datum(ra)?],
        )?;
        let datum = self.promonoidal.right_unitor_inverse_datum(a.generators())?;
        self.freyd.morphism_with_candidate(a, &target, datum, candidate)
    }

    fn has_braiding(&self) -> bool {
        self.promonoidal.has_braiding()
    }

    fn braiding(&self, a: &FObj<P>, b: &FObj<P>) -> Result<FMor<P>> {
        if !self.has_braiding() {
            return Err(Error::missing("a braiding", self.freyd.name()));
        }
        let p = &self.promonoidal;
        let source = self.tensor_objects(a, b)?;
        let target = self.tensor_objects(b, a)?;
        let sp = self.relation_parts(a, b)?;
        let tp = self.relation_parts(b, a)?;
        let (ga, gb) = (a.generators(), b.generators());
        let candidate = self.base().block_morphism(
            &sp,
            &tp,
            &[
                vec![p.braiding_witness(ga, gb)?, self.zero(&sp[0], &tp[1]), self.zero(&sp[0], &tp[2])],
                vec![self.zero(&sp[1], &tp[0]), self.zero(&sp[1], &tp[1]), p.braiding_datum(ga, b.relation_object())?],
                vec![self.zero(&sp[2], &tp[0]), p.braiding_datum(a.relation_object(), gb)?, self.zero(&sp[2], &tp[2])],
            ],
        )?;
        self.freyd.morphism_with_candidate(&source, &target, p.braiding_datum(ga, gb)?, candidate)
    }

    fn has_internal_hom(&self) -> bool {
        self.promonoidal.has_internal_hom() && self.base().capabilities().weak_kernels
    }

    fn internal_hom(&self, a: &FObj<P>, c: &FObj<P>) -> Result<FObj<P>> {
        self.require_hom()?;
        self.freyd.kernel_object(&self.hom_relation_map(a, c)?)
    }

    fn internal_hom_morphisms(&self, f: &FMor<P>, g: &FMor<P>) -> Result<FMor<P>> {
        self.require_hom()?;
        let u = self.internal_hom_embedding(f.target(), g.source())?;
        let h = self.generator_hom_morphism(f.datum(), g)?;
        let test = self.freyd.compose(&u, &h)?;
        self.freyd.kernel_lift(&self.hom_relation_map(f.source(), g.target())?, &test)
    }

    fn evaluation(&self, a: &FObj<P>, c: &FObj<P>) -> Result<FMor<P>> {
        self.require_hom()?;
        let u = self.internal_hom_embedding(a, c)?;
        let hom = self.freyd.source(&u);
        let source = self.tensor_objects(&hom, a)?;
        let ga = a.generators();
        let datum = self.base().compose(
            &self.dt(u.datum(), &self.id(ga))?,
            &self.promonoidal.evaluation_datum(ga, c.generators())?,
        )?;
        self.freyd.morphism(&source, c, datum, None)
    }

    fn coevaluation(&self, b: &FObj<P>, a: &FObj<P>) -> Result<FMor<P>> {
        self.require_hom()?;
        let ba = self.tensor_objects(b, a)?;
        let ga = a.generators();
        let target = self.generator_hom(ga, &ba)?;
        let datum = self.promonoidal.coevaluation_datum(b.generators(), ga)?;
        let test = self.freyd.morphism(b, &target, datum, None)?;
        self.freyd.kernel_lift(&self.hom_relation_map(a, &ba)?, &test)
    }
}

/// `- ⊗ -` of a monoidal structure as a bilinear functor.
#[derive(Clone, Debug)]
pub struct TensorFunctor<M> {
    monoidal: M,
}

impl<M: MonoidalStructure> TensorFunctor<M> {
    pub fn new(monoidal: M) -> Self {
        TensorFunctor { monoidal }
    }
}

fn pair<T>(xs: &[T]) -> Result<(&T, &T)> {
    match xs {
        [a, b] => Ok((a, b)),
        _ => Err(Error::Mismatch(format!("tensor functor applied to {} arguments", xs.len()))),
    }
}

impl<M: MonoidalStructure> MultilinearFunctor for TensorFunctor<M> {
    type Source = M::Cat;
    type Target = M::Cat;

    fn arity(&self) -> usize {
        2
    }

    fn source(&self) -> &M::Cat {
        self.monoidal.category()
    }

    fn target(&self) -> &M::Cat {
        self.monoidal.category()
    }

    fn apply_objects(&self, objects: &[<M::Cat as Category>::Obj]) -> Result<<M::Cat as Category>::Obj> {
        let (a, b) = pair(objects)?;
        self.monoidal.tensor_objects(a, b)
    }

    fn apply_morphisms(&self, morphisms: &[<M::Cat as Category>::Mor]) -> Result<<M::Cat as Category>::Mor> {
        let (f, g) = pair(morphisms)?;
        self.monoidal.tensor_morphisms(f, g)
    }
}
