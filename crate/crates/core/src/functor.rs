//! Multilinear functors, their extension to Freyd categories, restriction
//! along the embedding, and natural transformations between them.
//!
//! A functor of arity `n` is defined on `C × ... × C` and given
//! extensionally by its action on object and morphism tuples.

use std::fmt;
use std::sync::Arc;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::freyd::{Freyd, MorphismOf, ObjectOf};

/// A functor `C^n → D` that is additive in each argument.
pub trait MultilinearFunctor: Send + Sync {
    type Source: Category;
    type Target: Category;

    fn arity(&self) -> usize;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply_objects(
        &self,
        objects: &[<Self::Source as Category>::Obj],
    ) -> Result<<Self::Target as Category>::Obj>;
    fn apply_morphisms(
        &self,
        morphisms: &[<Self::Source as Category>::Mor],
    ) -> Result<<Self::Target as Category>::Mor>;
}

impl<F: MultilinearFunctor + ?Sized> MultilinearFunctor for Arc<F> {
    type Source = F::Source;
    type Target = F::Target;

    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn source(&self) -> &Self::Source {
        (**self).source()
    }

    fn target(&self) -> &Self::Target {
        (**self).target()
    }

    fn apply_objects(&self, objects: &[<Self::Source as Category>::Obj]) -> Result<<Self::Target as Category>::Obj> {
        (**self).apply_objects(objects)
    }

    fn apply_morphisms(&self, morphisms: &[<Self::Source as Category>::Mor]) -> Result<<Self::Target as Category>::Mor> {
        (**self).apply_morphisms(morphisms)
    }
}

type ObjFn<S, T> = dyn Fn(&[<S as Category>::Obj]) -> Result<<T as Category>::Obj> + Send + Sync;
type MorFn<S, T> = dyn Fn(&[<S as Category>::Mor]) -> Result<<T as Category>::Mor> + Send + Sync;

/// A functor given by a pair of closures.
#[derive(Clone)]
pub struct FnFunctor<S: Category, T: Category> {
    arity: usize,
    source: S,
    target: T,
    on_objects: Arc<ObjFn<S, T>>,
    on_morphisms: Arc<MorFn<S, T>>,
}

impl<S: Category, T: Category> FnFunctor<S, T> {
    pub fn new(
        arity: usize,
        source: S,
        target: T,
        on_objects: impl Fn(&[S::Obj]) -> Result<T::Obj> + Send + Sync + 'static,
        on_morphisms: impl Fn(&[S::Mor]) -> Result<T::Mor> + Send + Sync + 'static,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Precondition("functors need at least one argument".into()));
        }
        Ok(FnFunctor {
            arity,
            source,
            target,
            on_objects: Arc::new(on_objects),
            on_morphisms: Arc::new(on_morphisms),
        })
    }
}

impl<S: Category, T: Category> fmt::Debug for FnFunctor<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnFunctor")
            .field("arity", &self.arity)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .finish()
    }
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::Mismatch(format!("functor of arity {expected} applied to {got} arguments")));
    }
    Ok(())
}

impl<S: Category, T: Category> MultilinearFunctor for FnFunctor<S, T> {
    type Source = S;
    type Target = T;

    fn arity(&self) -> usize {
        self.arity
    }

    fn source(&self) -> &S {
        &self.source
    }

    fn target(&self) -> &T {
        &self.target
    }

    fn apply_objects(&self, objects: &[S::Obj]) -> Result<T::Obj> {
        check_arity(self.arity, objects.len())?;
        (self.on_objects)(objects)
    }

    fn apply_morphisms(&self, morphisms: &[S::Mor]) -> Result<T::Mor> {
        check_arity(self.arity, morphisms.len())?;
        (self.on_morphisms)(morphisms)
    }
}

/// The identity functor of a category, as a unary functor.
#[derive(Clone, Debug)]
pub struct IdentityFunctor<C> {
    category: C,
}

impl<C: Category> IdentityFunctor<C> {
    pub fn new(category: C) -> Self {
        IdentityFunctor { category }
    }
}

impl<C: Category> MultilinearFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn arity(&self) -> usize {
        1
    }

    fn source(&self) -> &C {
        &self.category
    }

    fn target(&self) -> &C {
        &self.category
    }

    fn apply_objects(&self, objects: &[C::Obj]) -> Result<C::Obj> {
        check_arity(1, objects.len())?;
        Ok(objects[0].clone())
    }

    fn apply_morphisms(&self, morphisms: &[C::Mor]) -> Result<C::Mor> {
        check_arity(1, morphisms.len())?;
        Ok(morphisms[0].clone())
    }
}

/// The embedding `C → A(C)` as a unary functor.
#[derive(Clone, Debug)]
pub struct Embedding<C> {
    freyd: Freyd<C>,
}

impl<C: Category> Embedding<C> {
    pub fn new(freyd: Freyd<C>) -> Self {
        Embedding { freyd }
    }
}

impl<C: Category> MultilinearFunctor for Embedding<C> {
    type Source = C;
    type Target = Freyd<C>;

    fn arity(&self) -> usize {
        1
    }

    fn source(&self) -> &C {
        self.freyd.base()
    }

    fn target(&self) -> &Freyd<C> {
        &self.freyd
    }

    fn apply_objects(&self, objects: &[C::Obj]) -> Result<ObjectOf<C>> {
        check_arity(1, objects.len())?;
        Ok(self.freyd.emb_object(&objects[0]))
    }

    fn apply_morphisms(&self, morphisms: &[C::Mor]) -> Result<MorphismOf<C>> {
        check_arity(1, morphisms.len())?;
        Ok(self.freyd.emb_morphism(&morphisms[0]))
    }
}

/// The extension `F̂: A(C)^n → D` of a multilinear `F: C^n → D` into a
/// category with cokernels.
///
/// `F̂(A_1, ..., A_n)` is the cokernel of the map
/// `⊕_j F(a_1, ..., r_{a_j}, ..., a_n) → F(a_1, ..., a_n)` with components
/// `F(id, ..., ρ_{a_j}, ..., id)`.
#[derive(Clone, Debug)]
pub struct Extended<F: MultilinearFunctor> {
    functor: F,
    source: Freyd<F::Source>,
}

/// Extends `f` to the Freyd category of its source.
///
/// ```
/// use freyd::arith::Ring;
/// use freyd::category::Category;
/// use freyd::freyd::freyd;
/// use freyd::functor::{extend_functor, Embedding, MultilinearFunctor};
/// use freyd::rows::rows_category;
///
/// let rows = rows_category(Ring::Integers);
/// let a = freyd(rows.clone()).unwrap();
/// let ext = extend_functor(Embedding::new(a.clone())).unwrap();
/// let z2 = a.object(rows.matrix(&[&[2]]));
/// let image = ext.apply_objects(&[z2]).unwrap();
/// assert_eq!(image.generators(), &1);
/// ```
pub fn extend_functor<F: MultilinearFunctor>(functor: F) -> Result<Extended<F>> {
    if !functor.target().capabilities().cokernels {
        return Err(Error::missing("cokernels", functor.target().name()));
    }
    let source = Freyd::new(functor.source().clone())?;
    Ok(Extended { functor, source })
}

type SObj<F> = <<F as MultilinearFunctor>::Source as Category>::Obj;
type SMor<F> = <<F as MultilinearFunctor>::Source as Category>::Mor;
type TObj<F> = <<F as MultilinearFunctor>::Target as Category>::Obj;
type TMor<F> = <<F as MultilinearFunctor>::Target as Category>::Mor;

impl<F: MultilinearFunctor> Extended<F> {
    pub fn inner(&self) -> &F {
        &self.functor
    }

    /// The map `⊕_j F(a_1, ..., r_{a_j}, ..., a_n) → F(a_1, ..., a_n)`.
    pub fn relation_map(&self, objects: &[ObjectOf<F::Source>]) -> Result<TMor<F>> {
        check_arity(self.functor.arity(), objects.len())?;
        let s = self.functor.source();
        let t = self.functor.target();
        let generators: Vec<SObj<F>> = objects.iter().map(|o| o.generators().clone()).collect();
        let top = self.functor.apply_objects(&generators)?;
        let mut sources = Vec::with_capacity(objects.len());
        let mut components = Vec::with_capacity(objects.len());
        for j in 0..objects.len() {
            let mut slots = generators.clone();
            slots[j] = objects[j].relation_object().clone();
            sources.push(self.functor.apply_objects(&slots)?);
            let maps: Vec<SMor<F>> = (0..objects.len())
                .map(|k| if k == j { objects[k].relation().clone() } else { s.identity(&generators[k]) })
                .collect();
            components.push(self.functor.apply_morphisms(&maps)?);
        }
        t.morphism_from_direct_sum(&sources, &top, &components)
    }

    /// The cokernel projection `F(a_1, ..., a_n) → F̂(A_1, ..., A_n)`.
    pub fn projection(&self, objects: &[ObjectOf<F::Source>]) -> Result<TMor<F>> {
        self.functor.target().cokernel_projection(&self.relation_map(objects)?)
    }
}

impl<F: MultilinearFunctor> MultilinearFunctor for Extended<F> {
    type Source = Freyd<F::Source>;
    type Target = F::Target;

    fn arity(&self) -> usize {
        self.functor.arity()
    }

    fn source(&self) -> &Freyd<F::Source> {
        &self.source
    }

    fn target(&self) -> &F::Target {
        self.functor.target()
    }

    fn apply_objects(&self, objects: &[ObjectOf<F::Source>]) -> Result<TObj<F>> {
        self.functor.target().cokernel_object(&self.relation_map(objects)?)
    }

    /// The morphism induced on cokernels by `F(α_1, ..., α_n)`.
    fn apply_morphisms(&self, morphisms: &[MorphismOf<F::Source>]) -> Result<TMor<F>> {
        check_arity(self.functor.arity(), morphisms.len())?;
        let t = self.functor.target();
        let sources: Vec<_> = morphisms.iter().map(|m| m.source().clone()).collect();
        let targets: Vec<_> = morphisms.iter().map(|m| m.target().clone()).collect();
        let data: Vec<SMor<F>> = morphisms.iter().map(|m| m.datum().clone()).collect();
        let test = t.compose(&self.functor.apply_morphisms(&data)?, &self.projection(&targets)?)?;
        t.cokernel_colift(&self.relation_map(&sources)?, &test)
    }
}

/// `G ∘ emb` for a functor `G` on a Freyd category.
#[derive(Clone, Debug)]
pub struct Restricted<G> {
    functor: G,
}

pub fn restrict<G>(functor: G) -> Restricted<G> {
    Restricted { functor }
}

impl<G> Restricted<G> {
    pub fn inner(&self) -> &G {
        &self.functor
    }
}

impl<S, G> MultilinearFunctor for Restricted<G>
where
    S: Category,
    G: MultilinearFunctor<Source = Freyd<S>>,
{
    type Source = S;
    type Target = G::Target;

    fn arity(&self) -> usize {
        self.functor.arity()
    }

    fn source(&self) -> &S {
        self.functor.source().base()
    }

    fn target(&self) -> &G::Target {
        self.functor.target()
    }

    fn apply_objects(&self, objects: &[S::Obj]) -> Result<<G::Target as Category>::Obj> {
        let freyd = self.functor.source();
        let embedded: Vec<_> = objects.iter().map(|a| freyd.emb_object(a)).collect();
        self.functor.apply_objects(&embedded)
    }

    fn apply_morphisms(&self, morphisms: &[S::Mor]) -> Result<<G::Target as Category>::Mor> {
        let freyd = self.functor.source();
        let embedded: Vec<_> = morphisms.iter().map(|f| freyd.emb_morphism(f)).collect();
        self.functor.apply_morphisms(&embedded)
    }
}

/// A family of morphisms `ν_a: F(a) → G(a)` indexed by object tuples.
pub trait NaturalTransformation: Send + Sync {
    type Source: Category;
    type Target: Category;

    fn component(
        &self,
        objects: &[<Self::Source as Category>::Obj],
    ) -> Result<<Self::Target as Category>::Mor>;
}

type ComponentFn<S, T> = dyn Fn(&[<S as Category>::Obj]) -> Result<<T as Category>::Mor> + Send + Sync;

/// A transformation given by a closure computing its components.
#[derive(Clone)]
pub struct FnTransformation<S: Category, T: Category> {
    component: Arc<ComponentFn<S, T>>,
}

impl<S: Category, T: Category> FnTransformation<S, T> {
    pub fn new(component: impl Fn(&[S::Obj]) -> Result<T::Mor> + Send + Sync + 'static) -> Self {
        FnTransformation { component: Arc::new(component) }
    }
}

impl<S: Category, T: Category> NaturalTransformation for FnTransformation<S, T> {
    type Source = S;
    type Target = T;

    fn component(&self, objects: &[S::Obj]) -> Result<T::Mor> {
        (self.component)(objects)
    }
}

/// The identity transformation of `F`.
pub fn identity_transformation<F>(functor: F) -> FnTransformation<F::Source, F::Target>
where
    F: MultilinearFunctor + 'static,
{
    FnTransformation::new(move |objects| {
        let image = functor.apply_objects(objects)?;
        Ok(functor.target().identity(&image))
    })
}

/// The vertical composite "first `first`, then `second`".
pub fn composite_transformation<M, N>(target: M::Target, first: M, second: N) -> FnTransformation<M::Source, M::Target>
where
    M: NaturalTransformation + 'static,
    N: NaturalTransformation<Source = M::Source, Target = M::Target> + 'static,
{
    FnTransformation::new(move |objects| {
        target.compose(&first.component(objects)?, &second.component(objects)?)
    })
}

/// The extension `ν̂: F̂ → Ĝ` of `ν: F → G`, induced on cokernels.
pub struct ExtendedTransformation<F: MultilinearFunctor, G: MultilinearFunctor, N> {
    from: Extended<F>,
    to: Extended<G>,
    transformation: N,
}

pub fn extend_nat_trans<F, G, N>(from: Extended<F>, to: Extended<G>, transformation: N) -> ExtendedTransformation<F, G, N>
where
    F: MultilinearFunctor,
    G: MultilinearFunctor<Source = F::Source, Target = F::Target>,
    N: NaturalTransformation<Source = F::Source, Target = F::Target>,
{
    ExtendedTransformation { from, to, transformation }
}

impl<F, G, N> NaturalTransformation for ExtendedTransformation<F, G, N>
where
    F: MultilinearFunctor,
    G: MultilinearFunctor<Source = F::Source, Target = F::Target>,
    N: NaturalTransformation<Source = F::Source, Target = F::Target>,
{
    type Source = Freyd<F::Source>;
    type Target = F::Target;

    fn component(&self, objects: &[ObjectOf<F::Source>]) -> Result<TMor<F>> {
        let t = self.from.target();
        let generators: Vec<_> = objects.iter().map(|o| o.generators().clone()).collect();
        let test = t.compose(&self.transformation.component(&generators)?, &self.to.projection(objects)?)?;
        t.cokernel_colift(&self.from.relation_map(objects)?, &test)
    }
}

/// Checks the naturality square `F(f)·ν_b = ν_a·G(f)` for one morphism tuple.
pub fn check_naturality<F, G, N>(from: &F, to: &G, transformation: &N, morphisms: &[SMor<F>]) -> Result<bool>
where
    F: MultilinearFunctor,
    G: MultilinearFunctor<Source = F::Source, Target = F::Target>,
    N: NaturalTransformation<Source = F::Source, Target = F::Target>,
{
    let s = from.source();
    let t = from.target();
    let sources: Vec<_> = morphisms.iter().map(|m| s.source(m)).collect();
    let targets: Vec<_> = morphisms.iter().map(|m| s.target(m)).collect();
    let left = t.compose(&from.apply_morphisms(morphisms)?, &transformation.component(&targets)?)?;
    let right = t.compose(&transformation.component(&sources)?, &to.apply_morphisms(morphisms)?)?;
    t.is_equal(&left, &right)
}

/// An isomorphism together with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoPair<M> {
    pub forward: M,
    pub backward: M,
}

/// Checks that `forward` and `backward` compose to identities both ways.
pub fn is_inverse_pair<C: Category>(c: &C, pair: &IsoPair<C::Mor>) -> Result<bool> {
    let there = c.compose(&pair.forward, &pair.backward)?;
    let back = c.compose(&pair.backward, &pair.forward)?;
    Ok(c.is_equal(&there, &c.identity(&c.source(&pair.forward)))?
        && c.is_equal(&back, &c.identity(&c.target(&pair.forward)))?)
}

/// The comparison `F(a) ≅ F̂(emb a)`: the cokernel projection and its
/// inverse, the colift of the identity.
pub fn restriction_comparison<F: MultilinearFunctor>(
    extended: &Extended<F>,
    objects: &[SObj<F>],
) -> Result<IsoPair<TMor<F>>> {
    let t = extended.target();
    let embedded: Vec<_> = objects.iter().map(|a| extended.source().emb_object(a)).collect();
    let relations = extended.relation_map(&embedded)?;
    let forward = t.cokernel_projection(&relations)?;
    let identity = t.identity(&t.source(&forward));
    let backward = t.cokernel_colift(&relations, &identity)?;
    Ok(IsoPair { forward, backward })
}

/// The comparison `Ĝ|(A) ≅ G(A)` for a right exact `G`: the colift of
/// `G(π_{A_1}, ..., π_{A_n})` where `π_A: emb(a) → A` has identity datum.
/// The inverse is found by a lift, which exists exactly when the colift is
/// an isomorphism.
pub fn extension_comparison<S, G>(
    restricted: &Extended<Restricted<G>>,
    objects: &[ObjectOf<S>],
) -> Result<IsoPair<<G::Target as Category>::Mor>>
where
    S: Category,
    G: MultilinearFunctor<Source = Freyd<S>>,
{
    let g = restricted.inner().inner();
    let freyd = g.source();
    let t = g.target();
    let projections: Vec<_> = objects
        .iter()
        .map(|a| {
            let emb = freyd.emb_object(a.generators());
            let witness = freyd.base().zero_morphism(emb.relation_object(), a.relation_object());
            freyd.morphism_unchecked(&emb, a, freyd.base().identity(a.generators()), witness)
        })
        .collect();
    let test = g.apply_morphisms(&projections)?;
    let forward = t.cokernel_colift(&restricted.relation_map(objects)?, &test)?;
    let identity = t.identity(&t.target(&forward));
    let backward = t
        .lift(&forward, &identity)?
        .ok_or_else(|| Error::Precondition("comparison morphism is not an isomorphism".into()))?;
    Ok(IsoPair { forward, backward })
}

/// Decides whether
/// `⊕_j F(a_1, ..., b_j, ..., a_n) → F(a_1, ..., a_n) → F(cok α_1, ..., cok α_n) → 0`
/// is exact for the tuple `α_j: b_j → a_j`. Needs kernels and cokernels in
/// the target.
pub fn check_right_exactness<F>(functor: &F, morphisms: &[SMor<F>]) -> Result<bool>
where
    F: MultilinearFunctor,
{
    check_arity(functor.arity(), morphisms.len())?;
    let s = functor.source();
    let t = functor.target();
    let caps = t.capabilities();
    if !(caps.kernels && caps.cokernels) {
        return Err(Error::missing("kernels and cokernels", t.name()));
    }
    let generators: Vec<_> = morphisms.iter().map(|m| s.target(m)).collect();
    let mut sources = Vec::new();
    let mut components = Vec::new();
    for j in 0..morphisms.len() {
        let maps: Vec<_> = (0..morphisms.len())
            .map(|k| if k == j { morphisms[k].clone() } else { s.identity(&generators[k]) })
            .collect();
        let mut slots = generators.clone();
        slots[j] = s.source(&morphisms[j]);
        sources.push(functor.apply_objects(&slots)?);
        components.push(functor.apply_morphisms(&maps)?);
    }
    let top = functor.apply_objects(&generators)?;
    let column = t.morphism_from_direct_sum(&sources, &top, &components)?;
    let projections = morphisms
        .iter()
        .map(|m| s.cokernel_projection(m))
        .collect::<Result<Vec<_>>>()?;
    let p = functor.apply_morphisms(&projections)?;
    let composite = t.compose(&column, &p)?;
    if !t.is_zero(&composite)? {
        return Ok(false);
    }
    // Surjectivity of F(π).
    if !t.is_zero_object(&t.cokernel_object(&p)?)? {
        return Ok(false);
    }
    // Exactness in the middle: cok(column) → F(cok α) is a monomorphism.
    let induced = t.cokernel_colift(&column, &p)?;
    t.is_zero_object(&t.kernel_object(&induced)?)
}
