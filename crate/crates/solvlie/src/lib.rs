//! Exponential solvable Lie algebras over exact `Q(i)` scalars: coadjoint
//! orbit stratification, orbit cross-sections and admissibility checks.

#![allow(clippy::needless_range_loop)]

pub mod admissibility;
pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod basis;
pub mod error;
pub mod field;
pub mod functional;
pub mod linalg;
pub mod orbits;
pub mod pfaffian;
pub mod poly;
pub mod stratification;
pub mod weights;

pub use arith::{GaussianRational, Rational, GR};
pub use error::{Error, Result};
pub use field::{Cf, Field, FLOAT_TOL};

// The guide's snippets run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/specs.md")]
    mod specs {}
    #[doc = include_str!("../../../book/src/adaptable-bases.md")]
    mod adaptable_bases {}
    #[doc = include_str!("../../../book/src/layers.md")]
    mod layers {}
    #[doc = include_str!("../../../book/src/sections.md")]
    mod sections {}
    #[doc = include_str!("../../../book/src/admissibility.md")]
    mod admissibility {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
}
