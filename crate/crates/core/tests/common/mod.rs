#![allow(dead_code)]

pub mod criteria;
pub mod fixtures;
pub mod oracle;

use freyd::arith::Ring;
use freyd::freyd::{Freyd, MorphismOf, ObjectOf};
use freyd::monoidal::{kronecker_promonoidal, EmbeddedPromonoidal, Kronecker, LiftedMonoidal};
use freyd::rows::Rows;

pub type ZLifted = LiftedMonoidal<EmbeddedPromonoidal<Kronecker>>;

pub fn integers() -> Freyd<Rows> {
    Freyd::new(Rows::new(Ring::Integers)).unwrap()
}

pub fn lifted_integers() -> ZLifted {
    LiftedMonoidal::new(kronecker_promonoidal(Ring::Integers).unwrap()).unwrap()
}

/// `Z/n`, or `Z` for `n = 0`.
pub fn cyclic(a: &Freyd<Rows>, n: i64) -> ObjectOf<Rows> {
    if n == 0 {
        a.emb_object(&1)
    } else {
        a.object(a.base().matrix(&[&[n]]))
    }
}

/// Multiplication by `k` on `Z/n`.
pub fn scalar(a: &Freyd<Rows>, n: i64, k: i64) -> MorphismOf<Rows> {
    let o = cyclic(a, n);
    a.morphism(&o, &o, a.base().matrix(&[&[k]]), None).unwrap()
}

pub fn cycle<T: Clone>(xs: &[T], i: usize) -> T {
    xs[i % xs.len()].clone()
}
