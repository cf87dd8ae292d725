pub mod arith;
pub mod category;
mod error;
pub mod freyd;
pub mod functor;
pub mod monoidal;
pub mod presentation;
pub mod rows;
pub mod sampling;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rows.md")]
    mod rows {}
    #[doc = include_str!("../../../book/src/freyd.md")]
    mod freyd {}
    #[doc = include_str!("../../../book/src/functors.md")]
    mod functors {}
    #[doc = include_str!("../../../book/src/monoidal.md")]
    mod monoidal {}
    #[doc = include_str!("../../../book/src/free-abelian.md")]
    mod free_abelian {}
}
