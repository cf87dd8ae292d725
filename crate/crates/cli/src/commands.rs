//! The subcommands as library functions. All module arithmetic is delegated
//! to the `freyd` crate.

use freyd::arith::Ring;
use freyd::category::Category;
use freyd::freyd::{Freyd, MorphismOf, ObjectOf};
use freyd::monoidal::*;
use freyd::presentation::{CanonicalForm, Presentation};
use freyd::rows::Rows;
use freyd::sampling::{nonzero_tiny_free_abelian_objects, random_object, seeded};
use serde::Serialize;

use crate::error::CliError;
use crate::format::MorphismFile;

/// A computed module, as a presentation and in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub presentation: Presentation,
    pub canonical: CanonicalForm,
}

impl Answer {
    fn of(object: &ObjectOf<Rows>) -> Result<Self, CliError> {
        let presentation = Presentation::of_object(object);
        let canonical = presentation.canonical().map_err(freyd::Error::from)?;
        Ok(Answer { presentation, canonical })
    }
}

fn same_ring<'a>(ps: &[&'a Presentation]) -> Result<&'a Ring, CliError> {
    let ring = ps[0].ring();
    match ps.iter().find(|p| p.ring() != ring) {
        Some(p) => Err(CliError::Ring(format!("ring mismatch: {ring} vs {}", p.ring()))),
        None => Ok(ring),
    }
}

fn lifted(ring: &Ring) -> Result<LiftedMonoidal<EmbeddedPromonoidal<Kronecker>>, CliError> {
    Ok(LiftedMonoidal::new(kronecker_promonoidal(ring.clone())?)?)
}

fn morphism(file: &MorphismFile) -> Result<(Freyd<Rows>, MorphismOf<Rows>), CliError> {
    let ring = same_ring(&[&file.source, &file.target])?;
    let a = Freyd::new(Rows::new(ring.clone()))?;
    let s = a.object(file.source.relations.clone());
    let t = a.object(file.target.relations.clone());
    let f = a
        .morphism(&s, &t, file.datum.clone(), None)
        .map_err(|_| CliError::NotAMorphism)?;
    Ok((a, f))
}

pub fn cmd_canonical(p: &Presentation) -> Result<Answer, CliError> {
    let canonical = p.canonical().map_err(freyd::Error::from)?;
    Ok(Answer { presentation: p.clone(), canonical })
}

/// `P ⊗ Q` under the tensor lifted from the Kronecker product.
///
/// ```
/// use freyd_cli::commands::cmd_tensor;
/// use freyd_cli::format::parse_presentation;
///
/// let p = parse_presentation("ring Z\nmatrix 1 1\n4\n").unwrap();
/// let q = parse_presentation("ring Z\nmatrix 1 1\n6\n").unwrap();
/// assert_eq!(cmd_tensor(&p, &q).unwrap().canonical.to_string(), "free 0; torsion 2");
/// ```
pub fn cmd_tensor(p: &Presentation, q: &Presentation) -> Result<Answer, CliError> {
    let m = lifted(same_ring(&[p, q])?)?;
    let a = m.category();
    Answer::of(&m.tensor_objects(&a.object(p.relations.clone()), &a.object(q.relations.clone()))?)
}

/// The internal hom `Hom(P, Q)`.
pub fn cmd_hom(p: &Presentation, q: &Presentation) -> Result<Answer, CliError> {
    let m = lifted(same_ring(&[p, q])?)?;
    let a = m.category();
    Answer::of(&m.internal_hom(&a.object(p.relations.clone()), &a.object(q.relations.clone()))?)
}

pub fn cmd_kernel(file: &MorphismFile) -> Result<Answer, CliError> {
    let (a, f) = morphism(file)?;
    Answer::of(&a.kernel_object(&f)?)
}

pub fn cmd_cokernel(file: &MorphismFile) -> Result<Answer, CliError> {
    let (a, f) = morphism(file)?;
    Answer::of(&a.cokernel_object(&f)?)
}

/// The coherence suite on `count` random objects over `ring`.
pub fn cmd_check_axioms(ring: &Ring, seed: u64, count: usize) -> Result<CoherenceReport, CliError> {
    let m = lifted(ring)?;
    let a = m.category().clone();
    let mut rng = seeded(seed);
    let os: Vec<_> = (0..count + 3).map(|_| random_object(&mut rng, &a, 2, 5)).collect();
    let quads: Vec<_> = (0..count).map(|i| (os[i].clone(), os[i + 1].clone(), os[i + 2].clone(), os[i + 3].clone())).collect();
    let triples: Vec<_> = quads.iter().map(|q| (q.0.clone(), q.1.clone(), q.2.clone())).collect();
    let pairs: Vec<_> = quads.iter().map(|q| (q.0.clone(), q.1.clone())).collect();
    let mut report = check_pentagon(&m, &quads);
    report.extend(check_triangle(&m, &pairs));
    report.extend(check_inverses(&m, &triples));
    report.extend(check_hexagons(&m, &triples));
    report.extend(check_symmetry(&m, &pairs));
    report.extend(check_unitor_braiding(&m, &os[..count]));
    report.extend(check_adjunction_triangles(&m, &pairs));
    Ok(report)
}

/// What the free abelian demo built and checked.
#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub steps: Vec<String>,
    pub compatibility: Vec<String>,
    #[serde(skip)]
    pub coherence: CoherenceReport,
}

/// Builds the free abelian category over `Rows_Z` with its tensor product
/// and checks coherence on a few small objects.
pub fn cmd_free_abelian_demo(seed: u64) -> Result<DemoReport, CliError> {
    let base = Kronecker::new(Rows::new(Ring::Integers));
    let m = free_abelian_monoidal(base)?;
    let fa = m.category().clone();
    let inner = fa.base().base();
    let steps = vec![
        format!("1. opposite of the Kronecker structure on {}", inner.base().base().name()),
        format!("2. lift to {}", inner.name()),
        format!("3. opposite of the lifted structure on {}", fa.base().name()),
        format!("4. lift to {}", fa.name()),
    ];
    let mut compatibility = Vec::new();
    for (x, y) in [(1usize, 1usize), (2, 3)] {
        let t = m.tensor_objects(&double_embedding_object(&fa, &x), &double_embedding_object(&fa, &y))?;
        let ok = t == double_embedding_object(&fa, &(x * y));
        compatibility.push(format!("emb({x}) ⊗ emb({y}) = emb({}): {}", x * y, if ok { "yes" } else { "no" }));
    }
    let mut rng = seeded(seed);
    let os = nonzero_tiny_free_abelian_objects(&mut rng, &fa, 3)?;
    let n = os.len();
    let at = |i: usize| os[i % n].clone();
    let quads: Vec<_> = (0..n).map(|i| (at(i), at(i + 1), at(i + 2), at(i + 3))).collect();
    let triples: Vec<_> = (0..n).map(|i| (at(i), at(i + 1), at(i + 2))).collect();
    let pairs: Vec<_> = (0..n).map(|i| (at(i), at(i + 1))).collect();
    let mut coherence = check_pentagon(&m, &quads);
    coherence.extend(check_triangle(&m, &pairs));
    coherence.extend(check_inverses(&m, &triples));
    coherence.extend(check_hexagons(&m, &triples));
    coherence.extend(check_symmetry(&m, &pairs));
    Ok(DemoReport { steps, compatibility, coherence })
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        self.coherence.passed() && self.compatibility.iter().all(|l| l.ends_with("yes"))
    }
}
