use crate::category::{Category, Opposite};
use crate::error::Result;
use crate::freyd::{Freyd, MorphismOf, ObjectOf};

use super::{MonoidalStructure, Mor, Obj, Promonoidal};

/// The monoidal structure of `M` read on the opposite category. The
/// structure isomorphisms are the inverses of those of `M`; the braiding at
/// `(A, B)` is the braiding of `M` at `(B, A)`. No internal hom is offered.
#[derive(Clone, Debug)]
pub struct OppositeMonoidal<M: MonoidalStructure> {
    inner: M,
    category: Opposite<M::Cat>,
}

impl<M: MonoidalStructure> OppositeMonoidal<M> {
    pub fn new(inner: M) -> Self {
        let category = Opposite::new(inner.category().clone());
        OppositeMonoidal { inner, category }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: MonoidalStructure> MonoidalStructure for OppositeMonoidal<M> {
    type Cat = Opposite<M::Cat>;

    fn category(&self) -> &Self::Cat {
        &self.category
    }

    fn tensor_objects(&self, a: &Obj<Self>, b: &Obj<Self>) -> Result<Obj<Self>> {
        self.inner.tensor_objects(a, b)
    }

    fn tensor_morphisms(&self, f: &Mor<Self>, g: &Mor<Self>) -> Result<Mor<Self>> {
        self.inner.tensor_morphisms(f, g)
    }

    fn unit(&self) -> Obj<Self> {
        self.inner.unit()
    }

    fn associator(&self, a: &Obj<Self>, b: &Obj<Self>, c: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.associator_inverse(a, b, c)
    }

    fn associator_inverse(&self, a: &Obj<Self>, b: &Obj<Self>, c: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.associator(a, b, c)
    }

    fn left_unitor(&self, a: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.left_unitor_inverse(a)
    }

    fn left_unitor_inverse(&self, a: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.left_unitor(a)
    }

    fn right_unitor(&self, a: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.right_unitor_inverse(a)
    }

    fn right_unitor_inverse(&self, a: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.right_unitor(a)
    }

    fn has_braiding(&self) -> bool {
        self.inner.has_braiding()
    }

    fn braiding(&self, a: &Obj<Self>, b: &Obj<Self>) -> Result<Mor<Self>> {
        self.inner.braiding(b, a)
    }
}

/// A monoidal structure on `A` viewed as a promonoidal structure with
/// `T(a, b) = emb(a⊗b)`. All witnesses are zero.
#[derive(Clone, Debug)]
pub struct EmbeddedPromonoidal<M: MonoidalStructure> {
    inner: M,
    freyd: Freyd<M::Cat>,
}

impl<M: MonoidalStructure> EmbeddedPromonoidal<M> {
    /// Fails if the category has no lifts.
    pub fn new(inner: M) -> Result<Self> {
        let freyd = Freyd::new(inner.category().clone())?;
        Ok(EmbeddedPromonoidal { inner, freyd })
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    fn zero_from_pair(&self, first: &Obj<M>, second: &Obj<M>, target: &Obj<M>) -> Mor<M> {
        let c = self.inner.category();
        c.zero_morphism(&c.direct_sum(&[first.clone(), second.clone()]), target)
    }

    fn associator_witness_between(&self, a: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        let cat = self.inner.category();
        let z = cat.zero_object();
        let target = cat.direct_sum(&[z.clone(), self.inner.tensor_objects(&z, c)?]);
        Ok(self.zero_from_pair(&z, &self.inner.tensor_objects(a, &z)?, &target))
    }
}

impl<M: MonoidalStructure> Promonoidal for EmbeddedPromonoidal<M> {
    type Base = M::Cat;

    fn base(&self) -> &M::Cat {
        self.inner.category()
    }

    fn freyd(&self) -> &Freyd<M::Cat> {
        &self.freyd
    }

    fn tensor_object(&self, a: &Obj<M>, b: &Obj<M>) -> Result<ObjectOf<M::Cat>> {
        Ok(self.freyd.emb_object(&self.inner.tensor_objects(a, b)?))
    }

    fn tensor_morphism(&self, f: &Mor<M>, g: &Mor<M>) -> Result<MorphismOf<M::Cat>> {
        Ok(self.freyd.emb_morphism(&self.inner.tensor_morphisms(f, g)?))
    }

    fn unit(&self) -> ObjectOf<M::Cat> {
        self.freyd.emb_object(&self.inner.unit())
    }

    fn associator_datum(&self, a: &Obj<M>, b: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        self.inner.associator(a, b, c)
    }

    fn associator_witness(&self, a: &Obj<M>, _b: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        self.associator_witness_between(a, c)
    }

    fn associator_inverse_datum(&self, a: &Obj<M>, b: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        self.inner.associator_inverse(a, b, c)
    }

    fn associator_inverse_witness(&self, a: &Obj<M>, _b: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        let cat = self.inner.category();
        let z = cat.zero_object();
        let target = cat.direct_sum(&[z.clone(), self.inner.tensor_objects(a, &z)?]);
        Ok(self.zero_from_pair(&z, &self.inner.tensor_objects(&z, c)?, &target))
    }

    fn left_unitor_datum(&self, a: &Obj<M>) -> Result<Mor<M>> {
        self.inner.left_unitor(a)
    }

    fn left_unitor_inverse_datum(&self, a: &Obj<M>) -> Result<Mor<M>> {
        self.inner.left_unitor_inverse(a)
    }

    fn right_unitor_datum(&self, a: &Obj<M>) -> Result<Mor<M>> {
        self.inner.right_unitor(a)
    }

    fn right_unitor_inverse_datum(&self, a: &Obj<M>) -> Result<Mor<M>> {
        self.inner.right_unitor_inverse(a)
    }

    fn has_braiding(&self) -> bool {
        self.inner.has_braiding()
    }

    fn braiding_datum(&self, a: &Obj<M>, b: &Obj<M>) -> Result<Mor<M>> {
        self.inner.braiding(a, b)
    }

    fn braiding_witness(&self, _a: &Obj<M>, _b: &Obj<M>) -> Result<Mor<M>> {
        let cat = self.inner.category();
        let z = cat.zero_object();
        Ok(cat.zero_morphism(&z, &z))
    }

    fn has_internal_hom(&self) -> bool {
        self.inner.has_internal_hom()
    }

    fn hom_object(&self, a: &Obj<M>, c: &Obj<M>) -> Result<ObjectOf<M::Cat>> {
        Ok(self.freyd.emb_object(&self.inner.internal_hom(a, c)?))
    }

    fn hom_morphism(&self, f: &Mor<M>, g: &Mor<M>) -> Result<MorphismOf<M::Cat>> {
        Ok(self.freyd.emb_morphism(&self.inner.internal_hom_morphisms(f, g)?))
    }

    fn evaluation_datum(&self, a: &Obj<M>, c: &Obj<M>) -> Result<Mor<M>> {
        self.inner.evaluation(a, c)
    }

    fn coevaluation_datum(&self, b: &Obj<M>, a: &Obj<M>) -> Result<Mor<M>> {
        self.inner.coevaluation(b, a)
    }
}
