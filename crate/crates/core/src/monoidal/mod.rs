//! Monoidal structures, finitely presented promonoidal structures, and the
//! lift of the latter to right exact monoidal structures on Freyd categories.
//!
//! Conventions: the associator goes `A⊗(B⊗C) → (A⊗B)⊗C`, the left unitor
//! `1⊗A → A`, the right unitor `A⊗1 → A`, the braiding `A⊗B → B⊗A`, the
//! evaluation `Hom(A,C)⊗A → C` and the coevaluation `B → Hom(A, B⊗A)`.

mod adapters;
mod coherence;
mod kronecker;
mod lifted;

pub use adapters::{EmbeddedPromonoidal, OppositeMonoidal};
pub use coherence::{
    check_adjunction_triangles, check_hexagons, check_inverses, check_pentagon, check_symmetry,
    check_triangle, check_unitor_braiding, CoherenceEntry, CoherenceReport,
};
pub use kronecker::{kronecker_promonoidal, Kronecker};
pub use lifted::{lift_promonoidal, LiftedMonoidal, TensorFunctor};

use crate::category::{Category, Opposite};
use crate::error::{Error, Result};
use crate::freyd::{Freyd, MorphismOf, ObjectOf};

type Obj<M> = <<M as MonoidalStructure>::Cat as Category>::Obj;
type Mor<M> = <<M as MonoidalStructure>::Cat as Category>::Mor;

/// A monoidal structure on a category, optionally braided and closed.
pub trait MonoidalStructure: Send + Sync {
    type Cat: Category;

    fn category(&self) -> &Self::Cat;
    fn tensor_objects(&self, a: &Obj<Self>, b: &Obj<Self>) -> Result<Obj<Self>>;
    fn tensor_morphisms(&self, f: &Mor<Self>, g: &Mor<Self>) -> Result<Mor<Self>>;
    fn unit(&self) -> Obj<Self>;
    /// `A⊗(B⊗C) → (A⊗B)⊗C`.
    fn associator(&self, a: &Obj<Self>, b: &Obj<Self>, c: &Obj<Self>) -> Result<Mor<Self>>;
    fn associator_inverse(&self, a: &Obj<Self>, b: &Obj<Self>, c: &Obj<Self>) -> Result<Mor<Self>>;
    /// `1⊗A → A`.
    fn left_unitor(&self, a: &Obj<Self>) -> Result<Mor<Self>>;
    fn left_unitor_inverse(&self, a: &Obj<Self>) -> Result<Mor<Self>>;
    /// `A⊗1 → A`.
    fn right_unitor(&self, a: &Obj<Self>) -> Result<Mor<Self>>;
    fn right_unitor_inverse(&self, a: &Obj<Self>) -> Result<Mor<Self>>;

    fn has_braiding(&self) -> bool {
        false
    }

    /// `A⊗B → B⊗A`.
    fn braiding(&self, _a: &Obj<Self>, _b: &Obj<Self>) -> Result<Mor<Self>> {
        Err(Error::missing("a braiding", self.category().name()))
    }

    fn has_internal_hom(&self) -> bool {
        false
    }

    fn internal_hom(&self, _a: &Obj<Self>, _c: &Obj<Self>) -> Result<Obj<Self>> {
        Err(Error::missing("internal homs", self.category().name()))
    }

    /// `Hom(f, g): Hom(A, C) → Hom(A′, C′)` for `f: A′ → A` and `g: C → C′`.
    fn internal_hom_morphisms(&self, _f: &Mor<Self>, _g: &Mor<Self>) -> Result<Mor<Self>> {
        Err(Error::missing("internal homs", self.category().name()))
    }

    /// `Hom(A, C)⊗A → C`.
    fn evaluation(&self, _a: &Obj<Self>, _c: &Obj<Self>) -> Result<Mor<Self>> {
        Err(Error::missing("internal homs", self.category().name()))
    }

    /// `B → Hom(A, B⊗A)`.
    fn coevaluation(&self, _b: &Obj<Self>, _a: &Obj<Self>) -> Result<Mor<Self>> {
        Err(Error::missing("internal homs", self.category().name()))
    }
}

type PObj<P> = <<P as Promonoidal>::Base as Category>::Obj;
type PMor<P> = <<P as Promonoidal>::Base as Category>::Mor;

/// A finitely presented promonoidal structure on `A`: a protensor
/// `T: A × A → A(A)` with its coherence data, all given on generators.
///
/// For `T(a, b) = (g_T(a,b) ← ρ_T(a,b): r_T(a,b))` the data below are
/// morphisms of `A` between generator and relation objects.
pub trait Promonoidal: Send + Sync {
    type Base: Category;

    fn base(&self) -> &Self::Base;
    fn freyd(&self) -> &Freyd<Self::Base>;

    /// `T(a, b)`.
    fn tensor_object(&self, a: &PObj<Self>, b: &PObj<Self>) -> Result<ObjectOf<Self::Base>>;
    /// `T(α, β)` with datum `δ_T(α, β)` and witness `ω_T(α, β)`.
    fn tensor_morphism(&self, f: &PMor<Self>, g: &PMor<Self>) -> Result<MorphismOf<Self::Base>>;
    fn unit(&self) -> ObjectOf<Self::Base>;

    /// `δ_Ass: g_T(a, g_T(b,c)) → g_T(g_T(a,b), c)`.
    fn associator_datum(&self, a: &PObj<Self>, b: &PObj<Self>, c: &PObj<Self>) -> Result<PMor<Self>>;
    /// `ω_Ass: r_T(a, g_T(b,c)) ⊕ g_T(a, r_T(b,c)) → r_T(g_T(a,b), c) ⊕ g_T(r_T(a,b), c)`.
    fn associator_witness(&self, a: &PObj<Self>, b: &PObj<Self>, c: &PObj<Self>) -> Result<PMor<Self>>;
    fn associator_inverse_datum(&self, a: &PObj<Self>, b: &PObj<Self>, c: &PObj<Self>) -> Result<PMor<Self>>;
    /// The witness of the inverse, with source and target of
    /// [`Promonoidal::associator_witness`] exchanged.
    fn associator_inverse_witness(&self, a: &PObj<Self>, b: &PObj<Self>, c: &PObj<Self>) -> Result<PMor<Self>>;

    /// `δ_LU: g_T(g_1, a) → a`.
    fn left_unitor_datum(&self, a: &PObj<Self>) -> Result<PMor<Self>>;
    fn left_unitor_inverse_datum(&self, a: &PObj<Self>) -> Result<PMor<Self>>;
    /// `δ_RU: g_T(a, g_1) → a`.
    fn right_unitor_datum(&self, a: &PObj<Self>) -> Result<PMor<Self>>;
    fn right_unitor_inverse_datum(&self, a: &PObj<Self>) -> Result<PMor<Self>>;

    fn has_braiding(&self) -> bool {
        false
    }

    /// `δ_Br: g_T(a, b) → g_T(b, a)`.
    fn braiding_datum(&self, _a: &PObj<Self>, _b: &PObj<Self>) -> Result<PMor<Self>> {
        Err(Error::missing("a probraiding", self.base().name()))
    }

    /// `ω_Br: r_T(a, b) → r_T(b, a)`.
    fn braiding_witness(&self, _a: &PObj<Self>, _b: &PObj<Self>) -> Result<PMor<Self>> {
        Err(Error::missing("a probraiding", self.base().name()))
    }

    fn has_internal_hom(&self) -> bool {
        false
    }

    /// `H(a, c) = (g_H(a,c) ← r_H(a,c))`.
    fn hom_object(&self, _a: &PObj<Self>, _c: &PObj<Self>) -> Result<ObjectOf<Self::Base>> {
        Err(Error::missing("a prointernal hom", self.base().name()))
    }

    /// `H(f, g): H(a, c) → H(a′, c′)` for `f: a′ → a`, `g: c → c′`.
    fn hom_morphism(&self, _f: &PMor<Self>, _g: &PMor<Self>) -> Result<MorphismOf<Self::Base>> {
        Err(Error::missing("a prointernal hom", self.base().name()))
    }

    /// `g_T(g_H(a,c), a) → c`.
    fn evaluation_datum(&self, _a: &PObj<Self>, _c: &PObj<Self>) -> Result<PMor<Self>> {
        Err(Error::missing("a prointernal hom", self.base().name()))
    }

    /// `b → g_H(a, g_T(b,a))`.
    fn coevaluation_datum(&self, _b: &PObj<Self>, _a: &PObj<Self>) -> Result<PMor<Self>> {
        Err(Error::missing("a prointernal hom", self.base().name()))
    }
}

/// The free abelian category `A(A(A^op)^op)` over the category of `base`,
/// with the monoidal structure obtained in four steps: reinterpret on the
/// opposite, lift, reinterpret on the opposite again, lift again.
pub type FreeAbelianMonoidal<M> =
    LiftedMonoidal<EmbeddedPromonoidal<OppositeMonoidal<LiftedMonoidal<EmbeddedPromonoidal<OppositeMonoidal<M>>>>>>;

/// The category underlying [`FreeAbelianMonoidal`].
pub type FreeAbelian<C> = Freyd<Opposite<Freyd<Opposite<C>>>>;

/// `emb(emb(a))`, the image of an object of the base in the free abelian
/// category.
pub fn double_embedding_object<C: Category>(fa: &FreeAbelian<C>, a: &C::Obj) -> ObjectOf<Opposite<Freyd<Opposite<C>>>> {
    fa.emb_object(&fa.base().base().emb_object(a))
}

/// `emb(emb(f))`; covariant because both opposites cancel.
pub fn double_embedding_morphism<C: Category>(fa: &FreeAbelian<C>, f: &C::Mor) -> MorphismOf<Opposite<Freyd<Opposite<C>>>> {
    fa.emb_morphism(&fa.base().base().emb_morphism(f))
}

/// Runs the four-step construction of the monoidal structure on the free
/// abelian category.
pub fn free_abelian_monoidal<M>(base: M) -> Result<FreeAbelianMonoidal<M>>
where
    M: MonoidalStructure,
{
    let step1 = OppositeMonoidal::new(base);
    let step2 = LiftedMonoidal::new(EmbeddedPromonoidal::new(step1)?)?;
    let step3 = OppositeMonoidal::new(step2);
    LiftedMonoidal::new(EmbeddedPromonoidal::new(step3)?)
}
