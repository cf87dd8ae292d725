use freyd::arith::{Matrix, Ring};
use freyd::category::*;
use freyd::freyd::Freyd;
use freyd::rows::Rows;
use freyd::sampling::*;
use freyd::Result;
use proptest::prelude::*;
use rand::Rng;

fn ring(k: u8) -> Ring {
    match k {
        0 => Ring::Integers,
        1 => Ring::integers_mod(12).unwrap(),
        _ => Ring::Rationals,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rows_and_derived_categories_have_biproducts(seed: u64, k in 0u8..3) {
        let rows = Rows::new(ring(k));
        let mut rng = seeded(seed);
        let ranks: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=3)).collect();
        prop_assert!(check_biproduct_axioms(&rows, &ranks).passed());
        prop_assert!(check_biproduct_axioms(&Opposite::new(rows.clone()), &ranks).passed());
        let product = ProductCategory::new(vec![rows.clone(), rows.clone()]).unwrap();
        let pairs: Vec<Vec<usize>> = ranks.iter().map(|&r| vec![r, 3 - r]).collect();
        prop_assert!(check_biproduct_axioms(&product, &pairs).passed());

        let a = Freyd::new(rows).unwrap();
        let objects: Vec<_> = (0..3).map(|_| random_object(&mut rng, &a, 2, 4)).collect();
        let report = check_biproduct_axioms(&a, &objects);
        prop_assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn free_abelian_category_has_biproducts(seed: u64) {
        let inner = Freyd::new(Opposite::new(Rows::new(Ring::Integers))).unwrap();
        let outer = Freyd::new(Opposite::new(inner)).unwrap();
        let mut rng = seeded(seed);
        let objects: Vec<_> = (0..2).map(|_| tiny_free_abelian_object(&mut rng, &outer)).collect();
        let report = check_biproduct_axioms(&outer, &objects);
        prop_assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn equality_is_a_congruence(seed: u64, k in 0u8..3) {
        let a = Freyd::new(Rows::new(ring(k))).unwrap();
        let r = a.base();
        let mut rng = seeded(seed);
        let os: Vec<_> = (0..4).map(|_| random_object(&mut rng, &a, 2, 4)).collect();
        let f = random_morphism(&mut rng, &a, &os[1], &os[2], 3).unwrap();
        let lambda = random_matrix(&mut rng, r.ring(), *os[1].generators(), *os[2].relation_object(), 3);
        let datum = r.add(f.datum(), &r.compose(&lambda, os[2].relation()).unwrap()).unwrap();
        let g = a.morphism(&os[1], &os[2], datum, None).unwrap();
        prop_assert!(a.is_equal(&f, &g).unwrap());
        let h = random_morphism(&mut rng, &a, &os[0], &os[1], 3).unwrap();
        let k = random_morphism(&mut rng, &a, &os[2], &os[3], 3).unwrap();
        prop_assert!(a.is_equal(&a.compose(&h, &f).unwrap(), &a.compose(&h, &g).unwrap()).unwrap());
        prop_assert!(a.is_equal(&a.compose(&f, &k).unwrap(), &a.compose(&g, &k).unwrap()).unwrap());
    }

    #[test]
    fn witnesses_do_not_matter(seed: u64) {
        let a = Freyd::new(Rows::new(Ring::Integers)).unwrap();
        let r = a.base();
        let mut rng = seeded(seed);
        let s = random_object(&mut rng, &a, 3, 4);
        let t = random_object(&mut rng, &a, 3, 4);
        let f = random_morphism(&mut rng, &a, &s, &t, 3).unwrap();
        // Any κ with κ·ρ_t = 0 can be added to the witness.
        let syzygies = r.weak_kernel_embedding(t.relation()).unwrap();
        let c = random_matrix(&mut rng, r.ring(), *s.relation_object(), syzygies.rows(), 3);
        let witness = r.add(f.witness(), &r.compose(&c, &syzygies).unwrap()).unwrap();
        let g = a.morphism(&s, &t, f.datum().clone(), Some(witness)).unwrap();
        prop_assert!(a.is_equal(&f, &g).unwrap());
        prop_assert_eq!(a.cokernel_object(&f).unwrap(), a.cokernel_object(&g).unwrap());
        let (kf, kg) = (a.kernel_object(&f).unwrap(), a.kernel_object(&g).unwrap());
        prop_assert_eq!(canonical(&kf), canonical(&kg));
    }
}

fn canonical(o: &freyd::freyd::ObjectOf<Rows>) -> String {
    freyd::presentation::Presentation::of_object(o).canonical().unwrap().to_string()
}

#[test]
fn opposite_is_an_involution() {
    let rows = Rows::new(Ring::Integers);
    let twice = Opposite::new(Opposite::new(rows.clone()));
    let mut rng = seeded(9);
    for _ in 0..20 {
        let f = random_matrix(&mut rng, rows.ring(), 2, 3, 4);
        let g = random_matrix(&mut rng, rows.ring(), 3, 1, 4);
        assert_eq!(twice.compose(&f, &g).unwrap(), rows.compose(&f, &g).unwrap());
        assert_eq!(twice.source(&f), rows.source(&f));
        assert_eq!(twice.injection(&[1, 2], 1), rows.injection(&[1, 2], 1));
    }
}

/// `Rows_Z` with every composite doubled.
#[derive(Clone, Debug)]
struct DoubledComposition(Rows);

impl Category for DoubledComposition {
    type Obj = usize;
    type Mor = Matrix;

    fn name(&self) -> String {
        "doubled".into()
    }
    fn capabilities(&self) -> Capabilities {
        Capabilities::default()
    }
    fn source(&self, f: &Matrix) -> usize {
        self.0.source(f)
    }
    fn target(&self, f: &Matrix) -> usize {
        self.0.target(f)
    }
    fn identity(&self, a: &usize) -> Matrix {
        self.0.identity(a)
    }
    fn compose(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        let fg = self.0.compose(f, g)?;
        self.0.add(&fg, &fg)
    }
    fn add(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        self.0.add(f, g)
    }
    fn negate(&self, f: &Matrix) -> Matrix {
        self.0.negate(f)
    }
    fn zero_morphism(&self, a: &usize, b: &usize) -> Matrix {
        self.0.zero_morphism(a, b)
    }
    fn zero_object(&self) -> usize {
        0
    }
    fn direct_sum(&self, objects: &[usize]) -> usize {
        self.0.direct_sum(objects)
    }
    fn injection(&self, objects: &[usize], i: usize) -> Matrix {
        self.0.injection(objects, i)
    }
    fn projection(&self, objects: &[usize], i: usize) -> Matrix {
        self.0.projection(objects, i)
    }
    fn is_equal(&self, f: &Matrix, g: &Matrix) -> Result<bool> {
        self.0.is_equal(f, g)
    }
}

#[test]
fn corrupted_composition_is_reported() {
    let broken = DoubledComposition(Rows::new(Ring::Integers));
    let report = check_biproduct_axioms(&broken, &[1, 2]);
    assert!(!report.passed());
    assert!(report.failures.iter().any(|f| f.contains("injection 0 then projection 0")));
    // Rank zero hides the corruption.
    assert!(check_biproduct_axioms(&broken, &[0]).passed());
}
