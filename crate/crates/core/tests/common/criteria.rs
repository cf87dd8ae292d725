//! The acceptance checks, parameterised by sample count so that the regular
//! test suite can run them small and the acceptance harness at full size.
//! Each returns `Err` with a description of the first failing sample.

use freyd::arith::{Matrix, Ring};
use freyd::category::Category;
use freyd::freyd::{Freyd, MorphismOf, ObjectOf};
use freyd::functor::{
    check_naturality, check_right_exactness, extend_functor, extension_comparison, is_inverse_pair, restrict,
    restriction_comparison, FnTransformation, IdentityFunctor, MultilinearFunctor,
};
use freyd::monoidal::*;
use freyd::presentation::canonical_form;
use freyd::rows::Rows;
use freyd::sampling::*;
use rand::Rng;

use super::oracle;
use super::{cycle, cyclic, fixtures, integers, lifted_integers};

pub type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond { Ok(()) } else { Err(what()) }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|err| format!("{ctx}: {err}"))
}

/// Cokernels: `f·π = 0`, every `π·h` colifts uniquely to `h`, and tests
/// that do not kill `f` are rejected.
pub fn cokernels(samples: usize, seed: u64) -> Outcome {
    let a = integers();
    let mut rng = seeded(seed);
    for i in 0..samples {
        let f = e(random_arrow(&mut rng, &a, 3, 5), "sampling")?;
        let p = e(a.cokernel_projection(&f), "cokernel")?;
        ensure(e(a.is_zero(&e(a.compose(&f, &p), "compose")?), "zero")?, || format!("sample {i}: f·π ≠ 0"))?;
        let cok = a.target(&p);
        let x = random_object(&mut rng, &a, 3, 5);
        let h = e(random_morphism(&mut rng, &a, &cok, &x, 3), "sampling")?;
        let test = e(a.compose(&p, &h), "compose")?;
        let c = e(a.cokernel_colift(&f, &test), "colift")?;
        ensure(e(a.is_equal(&e(a.compose(&p, &c), "compose")?, &test), "equal")?, || {
            format!("sample {i}: π·colift ≠ test")
        })?;
        ensure(e(a.is_equal(&c, &h), "equal")?, || format!("sample {i}: colift is not unique"))?;
        let t = e(random_morphism(&mut rng, &a, f.target(), &x, 3), "sampling")?;
        if !e(a.is_zero(&e(a.compose(&f, &t), "compose")?), "zero")? {
            ensure(a.cokernel_colift(&f, &t).is_err(), || format!("sample {i}: colift accepted f·t ≠ 0"))?;
        }
    }
    Ok(())
}

/// Kernels: `ι·f = 0`, every `h·ι` lifts uniquely to `h`, `ι` is mono,
/// bad tests are rejected; the first `image_samples` kernels of cokernel
/// projections match the classical image.
pub fn kernels(samples: usize, image_samples: usize, seed: u64) -> Outcome {
    let a = integers();
    let mut rng = seeded(seed);
    for i in 0..samples {
        let f = e(random_arrow(&mut rng, &a, 3, 5), "sampling")?;
        let k = e(a.kernel_embedding(&f), "kernel")?;
        ensure(e(a.is_zero(&e(a.compose(&k, &f), "compose")?), "zero")?, || format!("sample {i}: ι·f ≠ 0"))?;
        let ker = a.source(&k);
        let y = random_object(&mut rng, &a, 3, 5);
        let h = e(random_morphism(&mut rng, &a, &y, &ker, 3), "sampling")?;
        let test = e(a.compose(&h, &k), "compose")?;
        let l = e(a.kernel_lift(&f, &test), "lift")?;
        ensure(e(a.is_equal(&e(a.compose(&l, &k), "compose")?, &test), "equal")?, || {
            format!("sample {i}: lift·ι ≠ test")
        })?;
        ensure(e(a.is_equal(&l, &h), "equal")?, || format!("sample {i}: lift is not unique"))?;
        let kk = e(a.kernel_object(&k), "kernel of ι")?;
        ensure(e(a.is_zero_object(&kk), "zero object")?, || format!("sample {i}: ι is not mono"))?;
        let t = e(random_morphism(&mut rng, &a, &y, f.source(), 3), "sampling")?;
        if !e(a.is_zero(&e(a.compose(&t, &f), "compose")?), "zero")? {
            ensure(a.kernel_lift(&f, &t).is_err(), || format!("sample {i}: lift accepted t·f ≠ 0"))?;
        }
        if i < image_samples {
            let p = e(a.cokernel_projection(&f), "cokernel")?;
            let im = e(a.kernel_object(&p), "image")?;
            let got = oracle::invariants_of(im.relation());
            let want = oracle::image(f.datum(), f.target().relation());
            ensure(got == want, || format!("sample {i}: image {got:?}, oracle {want:?}"))?;
        }
    }
    Ok(())
}

fn random_rows_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    random_matrix(rng, &Ring::Integers, rows, cols, 4)
}

/// `F ≅ F̂∘emb` and `G ≅ (G|)^` for the Kronecker protensor and the five
/// fixtures, with both isomorphisms natural, on `samples` tuples per
/// functor.
pub fn extension(samples: usize, seed: u64) -> Outcome {
    let a = integers();
    let mut rng = seeded(seed);
    let mut functors = vec![("Kronecker protensor", fixtures::kronecker(&a, 2))];
    functors.extend(fixtures::all(&a));
    for (name, f) in functors {
        let n = f.arity();
        let ext = e(extend_functor(f.clone()), name)?;
        let restricted = e(extend_functor(restrict(ext.clone())), name)?;
        for i in 0..samples {
            // F(a) ≅ F̂(emb a), natural in a.
            let xs: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let ys: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let fs: Vec<Matrix> = xs.iter().zip(&ys).map(|(&x, &y)| random_rows_matrix(&mut rng, x, y)).collect();
            let pair = e(restriction_comparison(&ext, &xs), name)?;
            ensure(e(is_inverse_pair(&a, &pair), name)?, || format!("{name}, sample {i}: F ≅ F̂∘emb fails"))?;
            let ext2 = ext.clone();
            let nu = FnTransformation::<Rows, Freyd<Rows>>::new(move |objs| Ok(restriction_comparison(&ext2, objs)?.forward));
            let composite = FnComposite { outer: ext.clone(), freyd: a.clone() };
            ensure(e(check_naturality(&f, &composite, &nu, &fs), name)?, || {
                format!("{name}, sample {i}: F ≅ F̂∘emb is not natural")
            })?;

            // Ĝ|(A) ≅ G(A) for G = F̂, natural in A.
            let objs: Vec<ObjectOf<Rows>> = (0..n).map(|_| random_object(&mut rng, &a, 2, 4)).collect();
            let pair = e(extension_comparison(&restricted, &objs), name)?;
            ensure(e(is_inverse_pair(&a, &pair), name)?, || format!("{name}, sample {i}: G ≅ (G|)^ fails"))?;
            let arrows = (0..n).map(|_| random_arrow(&mut rng, &a, 2, 3)).collect::<Result<Vec<_>, _>>();
            let arrows = e(arrows, "sampling")?;
            let r2 = restricted.clone();
            let nu = FnTransformation::<Freyd<Rows>, Freyd<Rows>>::new(move |objs| {
                Ok(extension_comparison(&r2, objs)?.forward)
            });
            ensure(e(check_naturality(&restricted, &ext, &nu, &arrows), name)?, || {
                format!("{name}, sample {i}: G ≅ (G|)^ is not natural")
            })?;
        }
    }
    // The same round trip for two functors that are not extensions: the
    // identity of A(Rows) and the lifted tensor.
    let id = IdentityFunctor::new(a.clone());
    let restricted_id = e(extend_functor(restrict(id)), "identity")?;
    let tensor = TensorFunctor::new(lifted_integers());
    let restricted_tensor = e(extend_functor(restrict(tensor)), "tensor")?;
    for i in 0..samples {
        let x = random_object(&mut rng, &a, 2, 4);
        let y = random_object(&mut rng, &a, 2, 4);
        let pair = e(extension_comparison(&restricted_id, std::slice::from_ref(&x)), "identity")?;
        ensure(e(is_inverse_pair(&a, &pair), "identity")?, || format!("identity, sample {i}: round trip fails"))?;
        let pair = e(extension_comparison(&restricted_tensor, &[x, y]), "tensor")?;
        ensure(e(is_inverse_pair(&a, &pair), "tensor")?, || format!("tensor, sample {i}: round trip fails"))?;
    }
    Ok(())
}

/// `F̂∘emb` as a functor on the base.
#[derive(Clone)]
struct FnComposite<G> {
    outer: G,
    freyd: Freyd<Rows>,
}

impl<G: MultilinearFunctor<Source = Freyd<Rows>, Target = Freyd<Rows>>> MultilinearFunctor for FnComposite<G> {
    type Source = Rows;
    type Target = Freyd<Rows>;

    fn arity(&self) -> usize {
        self.outer.arity()
    }

    fn source(&self) -> &Rows {
        self.freyd.base()
    }

    fn target(&self) -> &Freyd<Rows> {
        &self.freyd
    }

    fn apply_objects(&self, objects: &[usize]) -> freyd::Result<ObjectOf<Rows>> {
        let emb: Vec<_> = objects.iter().map(|o| self.freyd.emb_object(o)).collect();
        self.outer.apply_objects(&emb)
    }

    fn apply_morphisms(&self, morphisms: &[Matrix]) -> freyd::Result<MorphismOf<Rows>> {
        let emb: Vec<_> = morphisms.iter().map(|f| self.freyd.emb_morphism(f)).collect();
        self.outer.apply_morphisms(&emb)
    }
}

/// The lifted tensor is right exact in each slot and jointly.
pub fn right_exactness(samples: usize, seed: u64) -> Outcome {
    let m = lifted_integers();
    let a = m.category().clone();
    let tensor = TensorFunctor::new(m);
    let mut rng = seeded(seed);
    for i in 0..samples {
        let f = e(random_arrow(&mut rng, &a, 2, 4), "sampling")?;
        let g = e(random_arrow(&mut rng, &a, 2, 4), "sampling")?;
        let zero = a.zero_object();
        let into_f = a.zero_morphism(&zero, f.target());
        let into_g = a.zero_morphism(&zero, g.target());
        for (label, tuple) in [("joint", [f.clone(), g.clone()]), ("first slot", [f, into_g]), ("second slot", [into_f, g])] {
            ensure(e(check_right_exactness(&tensor, &tuple), label)?, || format!("sample {i}: {label} not exact"))?;
        }
    }
    Ok(())
}

fn objects(rng: &mut impl Rng, a: &Freyd<Rows>, n: usize) -> Vec<ObjectOf<Rows>> {
    (0..n).map(|_| random_object(rng, a, 2, 5)).collect()
}

fn report(r: CoherenceReport) -> Outcome {
    ensure(r.passed(), || r.to_string())
}

/// Pentagon, triangle, hexagons and symmetry on random presented modules.
pub fn coherence(samples: usize, seed: u64) -> Outcome {
    let m = lifted_integers();
    let a = m.category().clone();
    let mut rng = seeded(seed);
    let os = objects(&mut rng, &a, samples + 3);
    let quads: Vec<_> = (0..samples).map(|i| (os[i].clone(), os[i + 1].clone(), os[i + 2].clone(), os[i + 3].clone())).collect();
    let triples: Vec<_> = (0..samples).map(|i| (os[i].clone(), os[i + 1].clone(), os[i + 2].clone())).collect();
    let pairs: Vec<_> = (0..samples).map(|i| (os[i].clone(), os[i + 1].clone())).collect();
    report(check_pentagon(&m, &quads))?;
    report(check_triangle(&m, &pairs))?;
    report(check_hexagons(&m, &triples))?;
    report(check_symmetry(&m, &pairs))?;
    report(check_inverses(&m, &triples))?;
    report(check_unitor_braiding(&m, &os[..samples]))
}

fn hom_invariants(m: &ZLiftedRef, x: &ObjectOf<Rows>, y: &ObjectOf<Rows>) -> Result<(usize, Vec<i128>), String> {
    let h = e(m.internal_hom(x, y), "internal hom")?;
    Ok(oracle::invariants_of(h.relation()))
}

type ZLiftedRef = super::ZLifted;

/// Adjunction triangles on random pairs and classical hom groups.
pub fn closedness(samples: usize, seed: u64) -> Outcome {
    let m = lifted_integers();
    let a = m.category().clone();
    let mut rng = seeded(seed);
    let os = objects(&mut rng, &a, samples + 1);
    let pairs: Vec<_> = (0..samples).map(|i| (os[i].clone(), os[i + 1].clone())).collect();
    report(check_adjunction_triangles(&m, &pairs))?;

    let known = [((2, 4), (0, vec![2])), ((2, 0), (0, vec![])), ((0, 3), (0, vec![3])), ((4, 6), (0, vec![2]))];
    for ((p, q), want) in known {
        let got = hom_invariants(&m, &cyclic(&a, p), &cyclic(&a, q))?;
        ensure(got == want, || format!("Hom(Z/{p}, Z/{q}) = {got:?}, expected {want:?}"))?;
    }
    let z = cyclic(&a, 0);
    for (i, x) in os.iter().take(samples).enumerate() {
        let got = hom_invariants(&m, &z, x)?;
        let want = oracle::invariants_of(x.relation());
        ensure(got == want, || format!("sample {i}: Hom(Z, M) = {got:?}, M = {want:?}"))?;
        let y = cycle(&os, i + 1);
        let got = hom_invariants(&m, x, &y)?;
        let want = oracle::hom_by_cyclics(x.relation(), y.relation());
        ensure(got == want, || format!("sample {i}: Hom = {got:?}, oracle {want:?}"))?;
    }
    Ok(())
}

/// Tensor products of random presented groups against the classical block
/// presentation and the cyclic decomposition.
pub fn tensor_oracle(samples: usize, seed: u64) -> Outcome {
    let m = lifted_integers();
    let a = m.category().clone();
    let mut rng = seeded(seed);
    for i in 0..samples {
        let p = random_presentation(&mut rng, 3, 6);
        let q = random_presentation(&mut rng, 3, 6);
        let t = e(m.tensor_objects(&a.object(p.clone()), &a.object(q.clone())), "tensor")?;
        let got = oracle::invariants_of(t.relation());
        let (block, cols) = oracle::tensor_presentation(&p, &q);
        let want = oracle::invariants(&block, cols);
        ensure(got == want, || format!("sample {i}: {got:?} vs block presentation {want:?}"))?;
        let cyc = oracle::tensor_by_cyclics(&p, &q);
        ensure(got == cyc, || format!("sample {i}: {got:?} vs cyclic decomposition {cyc:?}"))?;
        let lib = e(canonical_form(t.relation()), "canonical form")?;
        let lib = (lib.free_rank, lib.torsion.iter().map(|d| i128::try_from(d).unwrap()).collect::<Vec<_>>());
        ensure(lib == got, || format!("sample {i}: canonical form {lib:?} vs oracle {got:?}"))?;
    }
    Ok(())
}

/// The four-step construction over `Rows_Z`, coherence on tiny nonzero
/// samples, and compatibility with the double embedding.
pub fn free_abelian(samples: usize, seed: u64) -> Outcome {
    let base = Kronecker::new(Rows::new(Ring::Integers));
    let m = e(free_abelian_monoidal(base.clone()), "construction")?;
    let fa = m.category().clone();
    let mut rng = seeded(seed);
    let os = e(nonzero_tiny_free_abelian_objects(&mut rng, &fa, samples), "sampling")?;
    let quads: Vec<_> = (0..samples).map(|i| (cycle(&os, i), cycle(&os, i + 1), cycle(&os, i + 2), cycle(&os, i + 3))).collect();
    let pairs: Vec<_> = (0..samples).map(|i| (cycle(&os, i), cycle(&os, i + 1))).collect();
    report(check_pentagon(&m, &quads))?;
    report(check_triangle(&m, &pairs))?;

    let unit = double_embedding_object(&fa, &1);
    ensure(m.unit() == unit, || "unit is not the doubly embedded base unit".into())?;
    let rows = base.category().clone();
    for x in 0..=2usize {
        for y in 0..=2usize {
            let t = e(m.tensor_objects(&double_embedding_object(&fa, &x), &double_embedding_object(&fa, &y)), "tensor")?;
            let want = double_embedding_object(&fa, &(x * y));
            ensure(t == want, || format!("emb²({x})⊗emb²({y}) ≠ emb²({})", x * y))?;
            let f = random_matrix(&mut rng, rows.ring(), x, x, 3);
            let g = random_matrix(&mut rng, rows.ring(), y, y, 3);
            let lhs = e(m.tensor_morphisms(&double_embedding_morphism(&fa, &f), &double_embedding_morphism(&fa, &g)), "tensor")?;
            let rhs = double_embedding_morphism(&fa, &e(f.kron(&g), "kron")?);
            ensure(e(fa.is_equal(&lhs, &rhs), "equal")?, || format!("emb²(f)⊗emb²(g) ≠ emb²(f⊗g) at ({x}, {y})"))?;
        }
    }
    Ok(())
}
