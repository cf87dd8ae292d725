//! Multilinear functors `Rows_Z^n → A(Rows_Z)` used as test fixtures.

use freyd::arith::Matrix;
use freyd::category::Category;
use freyd::freyd::Freyd;
use freyd::functor::FnFunctor;
use freyd::rows::Rows;

pub type Fixture = FnFunctor<Rows, Freyd<Rows>>;

fn kron_all(ms: &[Matrix]) -> Matrix {
    ms[1..].iter().fold(ms[0].clone(), |acc, m| acc.kron(m).unwrap())
}

/// `(a_1, ..., a_n) ↦ emb(a_1 ⊗ ... ⊗ a_n)`.
pub fn kronecker(a: &Freyd<Rows>, arity: usize) -> Fixture {
    let (a1, a2) = (a.clone(), a.clone());
    FnFunctor::new(
        arity,
        a.base().clone(),
        a.clone(),
        move |objs| Ok(a1.emb_object(&objs.iter().product())),
        move |mors| Ok(a2.emb_morphism(&kron_all(mors))),
    )
    .unwrap()
}

/// `a ↦ emb(a ⊕ a)`.
pub fn doubling(a: &Freyd<Rows>) -> Fixture {
    let (a1, a2) = (a.clone(), a.clone());
    FnFunctor::new(
        1,
        a.base().clone(),
        a.clone(),
        move |objs| Ok(a1.emb_object(&(2 * objs[0]))),
        move |mors| Ok(a2.emb_morphism(&a2.base().direct_sum_morphism(&[mors[0].clone(), mors[0].clone()])?)),
    )
    .unwrap()
}

/// `a ↦ a/2a`, with the relation `2·id`.
pub fn reduction_mod_two(a: &Freyd<Rows>) -> Fixture {
    let (a1, a2) = (a.clone(), a.clone());
    let two = |a: &Freyd<Rows>, n: usize| {
        let r = a.base();
        let id = r.identity(&n);
        r.add(&id, &id).unwrap()
    };
    FnFunctor::new(
        1,
        a.base().clone(),
        a.clone(),
        move |objs| Ok(a1.object(two(&a1, objs[0]))),
        move |mors| {
            let f = &mors[0];
            let s = a2.object(two(&a2, f.rows()));
            let t = a2.object(two(&a2, f.cols()));
            a2.morphism(&s, &t, f.clone(), Some(f.clone()))
        },
    )
    .unwrap()
}

/// `a ↦ X ⊗ a` for the fixed module `X = Z/3 ⊕ Z`.
pub fn tensor_with_fixed(a: &Freyd<Rows>) -> Fixture {
    let (a1, a2) = (a.clone(), a.clone());
    let rho = a.base().matrix(&[&[3, 0]]);
    let rho2 = rho.clone();
    FnFunctor::new(
        1,
        a.base().clone(),
        a.clone(),
        move |objs| Ok(a1.object(rho.kron(&a1.base().identity(&objs[0]))?)),
        move |mors| {
            let f = &mors[0];
            let r = a2.base();
            let s = a2.object(rho2.kron(&r.identity(&f.rows()))?);
            let t = a2.object(rho2.kron(&r.identity(&f.cols()))?);
            let datum = r.identity(&2).kron(f)?;
            let witness = r.identity(&1).kron(f)?;
            a2.morphism(&s, &t, datum, Some(witness))
        },
    )
    .unwrap()
}

/// The five fixtures of arity one to three, with a label each.
pub fn all(a: &Freyd<Rows>) -> Vec<(&'static str, Fixture)> {
    vec![
        ("embedding", kronecker(a, 1)),
        ("doubling", doubling(a)),
        ("reduction mod 2", reduction_mod_two(a)),
        ("tensor with Z/3 ⊕ Z", tensor_with_fixed(a)),
        ("triple product", kronecker(a, 3)),
    ]
}
