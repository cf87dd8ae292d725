//! Additive categories as operation records with optional capabilities.
//!
//! Composition is written in diagrammatic order: `compose(f, g)` is "first
//! `f`, then `g`", matching the row convention of matrix categories.

use std::fmt::Debug;

use crate::error::{Error, Result};

/// Which optional operations a category supports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Capabilities {
    /// Solving `x·f = g` for `x`.
    pub lifts: bool,
    /// Solving `f·x = g` for `x`.
    pub colifts: bool,
    /// Solving systems of two-sided linear equations, see [`LinearSystem`].
    pub linear_systems: bool,
    pub weak_kernels: bool,
    pub weak_cokernels: bool,
    pub kernels: bool,
    pub cokernels: bool,
}

impl Capabilities {
    /// The capabilities of the opposite category.
    pub fn dual(self) -> Self {
        Capabilities {
            lifts: self.colifts,
            colifts: self.lifts,
            linear_systems: self.linear_systems,
            weak_kernels: self.weak_cokernels,
            weak_cokernels: self.weak_kernels,
            kernels: self.cokernels,
            cokernels: self.kernels,
        }
    }

    pub fn intersect(self, other: Self) -> Self {
        Capabilities {
            lifts: self.lifts && other.lifts,
            colifts: self.colifts && other.colifts,
            linear_systems: self.linear_systems && other.linear_systems,
            weak_kernels: self.weak_kernels && other.weak_kernels,
            weak_cokernels: self.weak_cokernels && other.weak_cokernels,
            kernels: self.kernels && other.kernels,
            cokernels: self.cokernels && other.cokernels,
        }
    }
}

/// The summand `left · X_unknown · right` of a linear equation.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearTerm<M> {
    pub left: M,
    pub unknown: usize,
    pub right: M,
}

/// `Σ left · X · right = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearEquation<M> {
    pub terms: Vec<LinearTerm<M>>,
    pub rhs: M,
}

/// A system of linear equations in unknown morphisms `X_j: s_j → t_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem<O, M> {
    /// Source and target of each unknown.
    pub unknowns: Vec<(O, O)>,
    pub equations: Vec<LinearEquation<M>>,
}

impl<O, M> LinearSystem<O, M> {
    pub fn new(unknowns: Vec<(O, O)>) -> Self {
        LinearSystem { unknowns, equations: Vec::new() }
    }

    pub fn equation(&mut self, terms: Vec<(M, usize, M)>, rhs: M) {
        let terms = terms
            .into_iter()
            .map(|(left, unknown, right)| LinearTerm { left, unknown, right })
            .collect();
        self.equations.push(LinearEquation { terms, rhs });
    }
}

/// An additive category given by its operations.
///
/// Optional operations return [`Error::MissingCapability`] unless
/// [`Category::capabilities`] advertises them.
pub trait Category: Clone + Debug + Send + Sync {
    type Obj: Clone + Debug + PartialEq + Send + Sync;
    type Mor: Clone + Debug + PartialEq + Send + Sync;

    fn name(&self) -> String;
    fn capabilities(&self) -> Capabilities;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// `f` followed by `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn negate(&self, f: &Self::Mor) -> Self::Mor;
    fn zero_morphism(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn zero_object(&self) -> Self::Obj;

    fn direct_sum(&self, objects: &[Self::Obj]) -> Self::Obj;
    fn injection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor;
    fn projection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor;

    /// Decides equality of two parallel morphisms.
    fn is_equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool>;

    /// A morphism `x` with `x·f = g`, if one exists.
    fn lift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        if !self.capabilities().linear_systems {
            return Err(Error::missing("lifts", self.name()));
        }
        let mut system = LinearSystem::new(vec![(self.source(g), self.source(f))]);
        let id = self.identity(&self.source(g));
        system.equation(vec![(id, 0, f.clone())], g.clone());
        Ok(self.solve_linear_system(&system)?.map(|mut xs| xs.remove(0)))
    }

    /// A morphism `x` with `f·x = g`, if one exists.
    fn colift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        if !self.capabilities().linear_systems {
            return Err(Error::missing("colifts", self.name()));
        }
        let mut system = LinearSystem::new(vec![(self.target(f), self.target(g))]);
        let id = self.identity(&self.target(g));
        system.equation(vec![(f.clone(), 0, id)], g.clone());
        Ok(self.solve_linear_system(&system)?.map(|mut xs| xs.remove(0)))
    }

    fn solve_linear_system(&self, _system: &LinearSystem<Self::Obj, Self::Mor>) -> Result<Option<Vec<Self::Mor>>> {
        Err(Error::missing("linear systems", self.name()))
    }

    /// A morphism `w` into the source of `f` with `w·f = 0` through which
    /// every such morphism factors.
    fn weak_kernel_embedding(&self, _f: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("weak kernels", self.name()))
    }

    /// A factorisation of `test` through [`Category::weak_kernel_embedding`].
    fn weak_kernel_lift(&self, _f: &Self::Mor, _test: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("weak kernels", self.name()))
    }

    fn weak_cokernel_projection(&self, _f: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("weak cokernels", self.name()))
    }

    fn weak_cokernel_colift(&self, _f: &Self::Mor, _test: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("weak cokernels", self.name()))
    }

    fn kernel_embedding(&self, _f: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("kernels", self.name()))
    }

    fn kernel_lift(&self, _f: &Self::Mor, _test: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("kernels", self.name()))
    }

    fn cokernel_projection(&self, _f: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("cokernels", self.name()))
    }

    fn cokernel_colift(&self, _f: &Self::Mor, _test: &Self::Mor) -> Result<Self::Mor> {
        Err(Error::missing("cokernels", self.name()))
    }

    fn kernel_object(&self, f: &Self::Mor) -> Result<Self::Obj> {
        Ok(self.source(&self.kernel_embedding(f)?))
    }

    fn cokernel_object(&self, f: &Self::Mor) -> Result<Self::Obj> {
        Ok(self.target(&self.cokernel_projection(f)?))
    }

    fn subtract(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.add(f, &self.negate(g))
    }

    fn is_zero(&self, f: &Self::Mor) -> Result<bool> {
        let zero = self.zero_morphism(&self.source(f), &self.target(f));
        self.is_equal(f, &zero)
    }

    fn is_zero_object(&self, a: &Self::Obj) -> Result<bool> {
        self.is_zero(&self.identity(a))
    }

    /// Composes a non-empty chain of morphisms left to right.
    fn compose_all(&self, chain: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::Mismatch("empty composition chain".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| self.compose(&acc, f))
    }

    /// The morphism `source → ⊕ targets` with the given components.
    fn morphism_into_direct_sum(
        &self,
        source: &Self::Obj,
        targets: &[Self::Obj],
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        let sum = self.direct_sum(targets);
        let mut acc = self.zero_morphism(source, &sum);
        for (i, f) in components.iter().enumerate() {
            acc = self.add(&acc, &self.compose(f, &self.injection(targets, i))?)?;
        }
        Ok(acc)
    }

    /// The morphism `⊕ sources → target` with the given components.
    fn morphism_from_direct_sum(
        &self,
        sources: &[Self::Obj],
        target: &Self::Obj,
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        let sum = self.direct_sum(sources);
        let mut acc = self.zero_morphism(&sum, target);
        for (i, f) in components.iter().enumerate() {
            acc = self.add(&acc, &self.compose(&self.projection(sources, i), f)?)?;
        }
        Ok(acc)
    }

    /// The morphism `⊕ sources → ⊕ targets` whose block `(i, j)` is
    /// `blocks[i][j]: sources[i] → targets[j]`.
    fn block_morphism(
        &self,
        sources: &[Self::Obj],
        targets: &[Self::Obj],
        blocks: &[Vec<Self::Mor>],
    ) -> Result<Self::Mor> {
        let rows = blocks
            .iter()
            .zip(sources)
            .map(|(row, s)| self.morphism_into_direct_sum(s, targets, row))
            .collect::<Result<Vec<_>>>()?;
        self.morphism_from_direct_sum(sources, &self.direct_sum(targets), &rows)
    }

    /// `⊕ f_i: ⊕ source(f_i) → ⊕ target(f_i)`.
    fn direct_sum_morphism(&self, fs: &[Self::Mor]) -> Result<Self::Mor> {
        let sources: Vec<_> = fs.iter().map(|f| self.source(f)).collect();
        let targets: Vec<_> = fs.iter().map(|f| self.target(f)).collect();
        let blocks = (0..fs.len())
            .map(|i| {
                (0..fs.len())
                    .map(|j| {
                        if i == j { fs[i].clone() } else { self.zero_morphism(&sources[i], &targets[j]) }
                    })
                    .collect()
            })
            .collect::<Vec<Vec<_>>>();
        self.block_morphism(&sources, &targets, &blocks)
    }

    /// The `i`-th component `f·π_i` of a morphism into a direct sum.
    fn component(&self, f: &Self::Mor, targets: &[Self::Obj], i: usize) -> Result<Self::Mor> {
        self.compose(f, &self.projection(targets, i))
    }
}

/// The opposite category. Objects and morphisms are shared with the base;
/// only the direction of composition changes.
#[derive(Clone, Debug, PartialEq)]
pub struct Opposite<C> {
    base: C,
}

impl<C: Category> Opposite<C> {
    pub fn new(base: C) -> Self {
        Opposite { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }
}

impl<C: Category> Category for Opposite<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn name(&self) -> String {
        format!("op({})", self.base.name())
    }

    fn capabilities(&self) -> Capabilities {
        self.base.capabilities().dual()
    }

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        self.base.target(f)
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        self.base.source(f)
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        self.base.identity(a)
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.base.compose(g, f)
    }

    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.base.add(f, g)
    }

    fn negate(&self, f: &Self::Mor) -> Self::Mor {
        self.base.negate(f)
    }

    fn zero_morphism(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        self.base.zero_morphism(b, a)
    }

    fn zero_object(&self) -> Self::Obj {
        self.base.zero_object()
    }

    fn direct_sum(&self, objects: &[Self::Obj]) -> Self::Obj {
        self.base.direct_sum(objects)
    }

    fn injection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        self.base.projection(objects, i)
    }

    fn projection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        self.base.injection(objects, i)
    }

    fn is_equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        self.base.is_equal(f, g)
    }

    fn lift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        self.base.colift(f, g)
    }

    fn colift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        self.base.lift(f, g)
    }

    fn solve_linear_system(&self, system: &LinearSystem<Self::Obj, Self::Mor>) -> Result<Option<Vec<Self::Mor>>> {
        let dual = LinearSystem {
            unknowns: system.unknowns.iter().map(|(s, t)| (t.clone(), s.clone())).collect(),
            equations: system
                .equations
                .iter()
                .map(|eq| LinearEquation {
                    terms: eq
                        .terms
                        .iter()
                        .map(|t| LinearTerm { left: t.right.clone(), unknown: t.unknown, right: t.left.clone() })
                        .collect(),
                    rhs: eq.rhs.clone(),
                })
                .collect(),
        };
        self.base.solve_linear_system(&dual)
    }

    fn weak_kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.base.weak_cokernel_projection(f)
    }

    fn weak_kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.base.weak_cokernel_colift(f, test)
    }

    fn weak_cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.base.weak_kernel_embedding(f)
    }

    fn weak_cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.base.weak_kernel_lift(f, test)
    }

    fn kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.base.cokernel_projection(f)
    }

    fn kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.base.cokernel_colift(f, test)
    }

    fn cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.base.kernel_embedding(f)
    }

    fn cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.base.kernel_lift(f, test)
    }

    fn morphism_into_direct_sum(
        &self,
        source: &Self::Obj,
        targets: &[Self::Obj],
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        self.base.morphism_from_direct_sum(targets, source, components)
    }

    fn morphism_from_direct_sum(
        &self,
        sources: &[Self::Obj],
        target: &Self::Obj,
        components: &[Self::Mor],
    ) -> Result<Self::Mor> {
        self.base.morphism_into_direct_sum(target, sources, components)
    }

    fn block_morphism(
        &self,
        sources: &[Self::Obj],
        targets: &[Self::Obj],
        blocks: &[Vec<Self::Mor>],
    ) -> Result<Self::Mor> {
        let transposed: Vec<Vec<_>> = (0..targets.len())
            .map(|j| blocks.iter().map(|row| row[j].clone()).collect())
            .collect();
        self.base.block_morphism(targets, sources, &transposed)
    }
}

/// The product `C × ... × C` of a non-empty list of categories; objects and
/// morphisms are tuples and every operation acts componentwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductCategory<C> {
    factors: Vec<C>,
}

impl<C: Category> ProductCategory<C> {
    pub fn new(factors: Vec<C>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(ProductCategory { factors })
    }

    pub fn factors(&self) -> &[C] {
        &self.factors
    }

    fn zip_mor(
        &self,
        f: &[C::Mor],
        g: &[C::Mor],
        op: impl Fn(&C, &C::Mor, &C::Mor) -> Result<C::Mor>,
    ) -> Result<Vec<C::Mor>> {
        self.factors
            .iter()
            .zip(f.iter().zip(g))
            .map(|(c, (a, b))| op(c, a, b))
            .collect()
    }

    fn column<T: Clone>(items: &[Vec<T>], k: usize) -> Vec<T> {
        items.iter().map(|t| t[k].clone()).collect()
    }
}

impl<C: Category> Category for ProductCategory<C> {
    type Obj = Vec<C::Obj>;
    type Mor = Vec<C::Mor>;

    fn name(&self) -> String {
        let names: Vec<_> = self.factors.iter().map(C::name).collect();
        names.join(" x ")
    }

    fn capabilities(&self) -> Capabilities {
        let all = self.factors.iter().map(C::capabilities).reduce(Capabilities::intersect);
        // Systems could be solved factor by factor, but nothing needs it yet.
        Capabilities { linear_systems: false, ..all.expect("non-empty product") }
    }

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        self.factors.iter().zip(f).map(|(c, f)| c.source(f)).collect()
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        self.factors.iter().zip(f).map(|(c, f)| c.target(f)).collect()
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        self.factors.iter().zip(a).map(|(c, a)| c.identity(a)).collect()
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, g, C::compose)
    }

    fn add(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, g, C::add)
    }

    fn negate(&self, f: &Self::Mor) -> Self::Mor {
        self.factors.iter().zip(f).map(|(c, f)| c.negate(f)).collect()
    }

    fn zero_morphism(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        (0..self.factors.len())
            .map(|k| self.factors[k].zero_morphism(&a[k], &b[k]))
            .collect()
    }

    fn zero_object(&self) -> Self::Obj {
        self.factors.iter().map(C::zero_object).collect()
    }

    fn direct_sum(&self, objects: &[Self::Obj]) -> Self::Obj {
        (0..self.factors.len())
            .map(|k| self.factors[k].direct_sum(&Self::column(objects, k)))
            .collect()
    }

    fn injection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        (0..self.factors.len())
            .map(|k| self.factors[k].injection(&Self::column(objects, k), i))
            .collect()
    }

    fn projection(&self, objects: &[Self::Obj], i: usize) -> Self::Mor {
        (0..self.factors.len())
            .map(|k| self.factors[k].projection(&Self::column(objects, k), i))
            .collect()
    }

    fn is_equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        for (c, (a, b)) in self.factors.iter().zip(f.iter().zip(g)) {
            if !c.is_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn lift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        let mut out = Vec::with_capacity(f.len());
        for (c, (a, b)) in self.factors.iter().zip(f.iter().zip(g)) {
            match c.lift(a, b)? {
                Some(x) => out.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    fn colift(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Option<Self::Mor>> {
        let mut out = Vec::with_capacity(f.len());
        for (c, (a, b)) in self.factors.iter().zip(f.iter().zip(g)) {
            match c.colift(a, b)? {
                Some(x) => out.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    fn weak_kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.factors.iter().zip(f).map(|(c, f)| c.weak_kernel_embedding(f)).collect()
    }

    fn weak_kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, test, C::weak_kernel_lift)
    }

    fn weak_cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.factors.iter().zip(f).map(|(c, f)| c.weak_cokernel_projection(f)).collect()
    }

    fn weak_cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, test, C::weak_cokernel_colift)
    }

    fn kernel_embedding(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.factors.iter().zip(f).map(|(c, f)| c.kernel_embedding(f)).collect()
    }

    fn kernel_lift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, test, C::kernel_lift)
    }

    fn cokernel_projection(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.factors.iter().zip(f).map(|(c, f)| c.cokernel_projection(f)).collect()
    }

    fn cokernel_colift(&self, f: &Self::Mor, test: &Self::Mor) -> Result<Self::Mor> {
        self.zip_mor(f, test, C::cokernel_colift)
    }
}

/// Outcome of [`check_biproduct_axioms`]; empty `failures` means all passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiproductReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl BiproductReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `ι_i·π_j = δ_ij` and `Σ π_i·ι_i = id` for each sample on its own,
/// for every pair of samples, and for the whole list.
pub fn check_biproduct_axioms<C: Category>(c: &C, samples: &[C::Obj]) -> BiproductReport {
    let mut report = BiproductReport::default();
    let mut families: Vec<Vec<C::Obj>> = samples.iter().map(|a| vec![a.clone()]).collect();
    for (i, a) in samples.iter().enumerate() {
        for b in &samples[i..] {
            families.push(vec![a.clone(), b.clone()]);
        }
    }
    if samples.len() > 2 {
        families.push(samples.to_vec());
    }
    for family in &families {
        if let Err(e) = check_family(c, family, &mut report) {
            report.failures.push(format!("{family:?}: {e}"));
        }
    }
    report
}

fn check_family<C: Category>(c: &C, family: &[C::Obj], report: &mut BiproductReport) -> Result<()> {
    let sum = c.direct_sum(family);
    let mut total = c.zero_morphism(&sum, &sum);
    for i in 0..family.len() {
        let inj = c.injection(family, i);
        for j in 0..family.len() {
            let composite = c.compose(&inj, &c.projection(family, j))?;
            let expected = if i == j {
                c.identity(&family[i])
            } else {
                c.zero_morphism(&family[i], &family[j])
            };
            report.checked += 1;
            if c.source(&composite) != c.source(&expected)
                || c.target(&composite) != c.target(&expected)
                || !c.is_equal(&composite, &expected)?
            {
                report
                    .failures
                    .push(format!("injection {i} then projection {j} on {family:?}"));
            }
        }
        total = c.add(&total, &c.compose(&c.projection(family, i), &inj)?)?;
    }
    report.checked += 1;
    if !c.is_equal(&total, &c.identity(&sum))? {
        report.failures.push(format!("sum of projection-injection composites on {family:?}"));
    }
    Ok(())
}
