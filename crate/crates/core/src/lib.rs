//! Exact verification of braided Coxeter structures: nested sets, realizations of
//! Cartan matrices, Lie bialgebras, quantum doubles and quantum Weyl group operators.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod diagram;
pub mod braid;
pub mod realization;
pub mod report;
pub mod bialgebra;
pub mod associator;
pub mod kacmoody;
pub mod hopf;
pub mod quantum;
pub mod coxeter;
pub mod catalog;
pub mod fixtures;
pub mod suites;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
mod book_exact_arithmetic {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/nested-sets.md")]
mod book_nested_sets {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/braids.md")]
mod book_braids {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/realizations.md")]
mod book_realizations {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/bialgebras.md")]
mod book_bialgebras {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/hopf.md")]
mod book_hopf {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/quantum.md")]
mod book_quantum {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/coxeter.md")]
mod book_coxeter {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
