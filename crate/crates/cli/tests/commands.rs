use freyd::arith::{Matrix, Ring};
use freyd::category::Category;
use freyd::monoidal::{kronecker_promonoidal, LiftedMonoidal, MonoidalStructure};
use freyd::presentation::Presentation;
use freyd_cli::commands::*;
use freyd_cli::format::*;
use freyd_cli::CliError;
use proptest::prelude::*;

fn p(text: &str) -> Presentation {
    parse_presentation(text).unwrap()
}

fn cyclic(n: i64) -> Presentation {
    p(&format!("ring Z\nmatrix 1 1\n{n}\n"))
}

fn canonical(a: Answer) -> String {
    a.canonical.to_string()
}

#[test]
fn parses_examples() {
    assert_eq!(canonical(cmd_canonical(&p("ring Z\nmatrix 1 1\n2")).unwrap()), "free 0; torsion 2");
    assert_eq!(canonical(cmd_canonical(&p("ring Z\nmatrix 0 1\n")).unwrap()), "free 1; torsion");
    let q = p("# a comment\nring Q\n\nmatrix 1 2\n1/2 -3\n");
    assert_eq!(q.relations, Matrix::new(Ring::Rationals, 1, 2, vec![Ring::Rationals.parse_elem("1/2").unwrap(), Ring::Rationals.from_i64(-3)]).unwrap());
    let m = p("ring Z/6\nmatrix 1 1\n8\n");
    assert_eq!(m.relations, Matrix::from_i64(&Ring::integers_mod(6).unwrap(), &[&[2]]));
}

#[test]
fn parse_errors_are_positioned() {
    let cases = [
        ("ring Z\nmatrix 2 2\n1 2\n3\n", 4, 2),
        ("ring Z\nmatrix 1 2\n1 2 3\n", 3, 5),
        ("ring Z\nmatrix 1 1\nx\n", 3, 1),
        ("ring R\nmatrix 1 1\n1\n", 1, 6),
        ("ring Z/1\nmatrix 0 0\n", 1, 6),
        ("ring Z\nmatrix 1\n", 2, 1),
        ("ring Z\nmatrix 1 1\n", 3, 1),
        ("ring Z\nmatrix 1 1\n1\n2\n", 4, 1),
        ("ring Z\nmatrix 1 1\n1/2\n", 3, 1),
        ("ring Z\nmatrix 1 2\n1  2\n", 3, 3),
    ];
    for (text, line, column) in cases {
        let e = parse_presentation(text).unwrap_err();
        assert_eq!((e.line, e.column), (line, column), "{text:?}: {e}");
    }
    let e = parse_morphism("ring Z\nmatrix 0 1\nmatrix 0 2\nmap 2 2\n1 0\n0 1\n").unwrap_err();
    assert_eq!(e.line, 4);
}

#[test]
fn tensor_examples() {
    assert!(cmd_tensor(&cyclic(2), &cyclic(3)).unwrap().canonical.is_zero());
    assert_eq!(canonical(cmd_tensor(&cyclic(4), &cyclic(6)).unwrap()), "free 0; torsion 2");
    let free2 = p("ring Z\nmatrix 0 2\n");
    assert_eq!(canonical(cmd_tensor(&free2, &cyclic(3)).unwrap()), "free 0; torsion 3 3");
    let q = p("ring Q\nmatrix 1 2\n1 1\n");
    assert!(matches!(cmd_tensor(&cyclic(2), &q), Err(CliError::Ring(_))));
}

#[test]
fn hom_kernel_cokernel_examples() {
    assert_eq!(canonical(cmd_hom(&cyclic(2), &cyclic(4)).unwrap()), "free 0; torsion 2");
    assert!(cmd_hom(&cyclic(2), &p("ring Z\nmatrix 0 1\n")).unwrap().canonical.is_zero());
    let double = parse_morphism("ring Z\nmatrix 1 1\n4\nmatrix 1 1\n4\nmap 1 1\n2\n").unwrap();
    assert_eq!(canonical(cmd_kernel(&double).unwrap()), "free 0; torsion 2");
    assert_eq!(canonical(cmd_cokernel(&double).unwrap()), "free 0; torsion 2");
    let bad = parse_morphism("ring Z\nmatrix 1 1\n4\nmatrix 0 1\nmap 1 1\n1\n").unwrap();
    assert!(matches!(cmd_kernel(&bad), Err(CliError::NotAMorphism)));
}

#[test]
fn axioms_hold() {
    let r = cmd_check_axioms(&Ring::Integers, 1, 20).unwrap();
    assert!(r.passed() && r.checked() > 0, "{r}");
    assert!(cmd_check_axioms(&Ring::integers_mod(6).unwrap(), 2, 5).unwrap().passed());
    assert!(cmd_check_axioms(&Ring::Rationals, 3, 5).unwrap().passed());
    assert!(cmd_free_abelian_demo(0).unwrap().passed());
}

#[test]
fn agrees_with_library() {
    let (x, y) = (p("ring Z\nmatrix 2 2\n2 4\n0 6\n"), p("ring Z\nmatrix 1 2\n3 3\n"));
    let m = LiftedMonoidal::new(kronecker_promonoidal(Ring::Integers).unwrap()).unwrap();
    let a = m.category();
    let t = m.tensor_objects(&a.object(x.relations.clone()), &a.object(y.relations.clone())).unwrap();
    assert_eq!(cmd_tensor(&x, &y).unwrap().presentation.relations, *t.relation());
    let h = m.internal_hom(&a.object(x.relations.clone()), &a.object(y.relations.clone())).unwrap();
    assert_eq!(cmd_hom(&x, &y).unwrap().presentation.relations, *h.relation());
    assert!(a.is_zero_object(&a.zero_object()).unwrap());
}

proptest! {
    #[test]
    fn canonical_is_idempotent_and_renders_back(entries in proptest::collection::vec(-6i64..=6, 1..=9), cols in 1usize..=3, ring in 0u8..3) {
        let ring = match ring { 0 => Ring::Integers, 1 => Ring::integers_mod(12).unwrap(), _ => Ring::Rationals };
        let rows = entries.len() / cols;
        let m = Matrix::from_fn(&ring, rows, cols, |i, j| ring.from_i64(entries[i * cols + j]));
        let pres = Presentation::new(m);
        prop_assert_eq!(parse_presentation(&render_presentation(&pres)).unwrap(), pres.clone());
        let c = cmd_canonical(&pres).unwrap().canonical;
        let again = cmd_canonical(&parse_presentation(&render_presentation(&c.to_presentation(&ring))).unwrap()).unwrap();
        prop_assert_eq!(again.canonical, c);
    }
}
