//! Seeded random objects and morphisms for property checks.
//!
//! Every sampler takes an explicit RNG; [`seeded`] gives the reproducible
//! ChaCha stream used by the test suites and the command line.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{row_syzygies, Matrix, Ring};
use crate::category::{Category, Opposite};
use crate::error::Result;
use crate::freyd::{Freyd, MorphismOf, ObjectOf};
use crate::rows::Rows;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A `rows × cols` matrix with entries drawn uniformly from `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, ring: &Ring, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |_, _| ring.from_i64(rng.gen_range(-bound..=bound)))
}

/// An object of `A(Rows_R)` with at most `max_rank` generators and relations.
///
/// Objects without generators are drawn one time in ten; and when there are
/// at least as many relations as generators, a relation is dropped half of
/// the time, since square random relation matrices over `Z` mostly present
/// the zero module.
pub fn random_object(rng: &mut impl Rng, a: &Freyd<Rows>, max_rank: usize, bound: i64) -> ObjectOf<Rows> {
    let g = if max_rank == 0 || rng.gen_ratio(1, 10) { 0 } else { rng.gen_range(1..=max_rank) };
    let mut r = rng.gen_range(0..=max_rank);
    if g > 0 && r >= g && rng.gen_bool(0.5) {
        r -= 1;
    }
    a.object(random_matrix(rng, a.base().ring(), r, g, bound))
}

/// A random morphism `source → target` of `A(Rows_R)`.
///
/// The pairs `(α, ω)` with `ρ_s·α = ω·ρ_t` form a submodule; the result is a
/// combination of its syzygy generators with coefficients in
/// `[-bound, bound]`, so entries can exceed `bound`.
pub fn random_morphism(
    rng: &mut impl Rng,
    a: &Freyd<Rows>,
    source: &ObjectOf<Rows>,
    target: &ObjectOf<Rows>,
    bound: i64,
) -> Result<MorphismOf<Rows>> {
    let ring = a.base().ring();
    let (g_s, r_s) = (*source.generators(), *source.relation_object());
    let (g_t, r_t) = (*target.generators(), *target.relation_object());
    // vec(ρ_s·α) = vec(α)·kron(ρ_sᵀ, I) and vec(ω·ρ_t) = vec(ω)·kron(I, ρ_t).
    let top = source.relation().transpose().kron(&Matrix::identity(ring, g_t))?;
    let bottom = Matrix::identity(ring, r_s).kron(target.relation())?.neg();
    let system = Matrix::vstack(ring, r_s * g_t, &[&top, &bottom])?;
    let generators = row_syzygies(&system)?;
    let coefficients = random_matrix(rng, ring, 1, generators.rows(), bound);
    let v = coefficients.mul(&generators)?;
    let datum = Matrix::from_fn(ring, g_s, g_t, |i, j| v.get(0, i * g_t + j).clone());
    let witness = Matrix::from_fn(ring, r_s, r_t, |i, j| v.get(0, g_s * g_t + i * r_t + j).clone());
    a.morphism(source, target, datum, Some(witness))
}

/// A random morphism out of a random object into a random object.
pub fn random_arrow(rng: &mut impl Rng, a: &Freyd<Rows>, max_rank: usize, bound: i64) -> Result<MorphismOf<Rows>> {
    let s = random_object(rng, a, max_rank, bound);
    let t = random_object(rng, a, max_rank, bound);
    random_morphism(rng, a, &s, &t, bound)
}

/// A presentation of a finitely presented `Z`-module, `m × n` with
/// `m, n ∈ [1, max_rank]` and entries in `[-bound, bound]`.
pub fn random_presentation(rng: &mut impl Rng, max_rank: usize, bound: i64) -> Matrix {
    let m = rng.gen_range(1..=max_rank);
    let n = rng.gen_range(1..=max_rank);
    random_matrix(rng, &Ring::Integers, m, n, bound)
}

type Inner = Freyd<Opposite<Rows>>;

fn tiny_entry(rng: &mut impl Rng, ring: &Ring) -> crate::arith::Elem {
    ring.from_i64([0, 1, -1, 2][rng.gen_range(0..4)])
}

fn tiny_inner_object(rng: &mut impl Rng, inner: &Inner) -> ObjectOf<Opposite<Rows>> {
    let ring = inner.base().base().ring().clone();
    let g = rng.gen_range(0..=1);
    let r = rng.gen_range(0..=1);
    // A relation r → g of Rows^op is a g × r matrix.
    inner.object(Matrix::from_fn(&ring, g, r, |_, _| tiny_entry(rng, &ring)))
}

/// An object of the free abelian category `A(A(Rows^op)^op)` with all ranks
/// at most one and entries in `{0, ±1, 2}`. A random relation datum that is
/// not well defined is replaced by zero.
pub fn tiny_free_abelian_object(
    rng: &mut impl Rng,
    outer: &Freyd<Opposite<Inner>>,
) -> ObjectOf<Opposite<Inner>> {
    let inner = outer.base().base();
    let ring = inner.base().base().ring().clone();
    let g = tiny_inner_object(rng, inner);
    let r = tiny_inner_object(rng, inner);
    // A relation r → g of A(Rows^op)^op is a morphism g → r of A(Rows^op),
    // whose datum is a morphism of Rows^op, i.e. a matrix gens(r) × gens(g).
    let datum = Matrix::from_fn(&ring, *r.generators(), *g.generators(), |_, _| tiny_entry(rng, &ring));
    let relation = inner
        .morphism(&g, &r, datum, None)
        .unwrap_or_else(|_| inner.zero_morphism(&g, &r));
    outer.object(relation)
}

/// `count` tiny objects of the free abelian category that are not zero.
pub fn nonzero_tiny_free_abelian_objects(
    rng: &mut impl Rng,
    outer: &Freyd<Opposite<Inner>>,
    count: usize,
) -> Result<Vec<ObjectOf<Opposite<Inner>>>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let o = tiny_free_abelian_object(rng, outer);
        if !outer.is_zero_object(&o)? {
            out.push(o);
        }
    }
    Ok(out)
}
