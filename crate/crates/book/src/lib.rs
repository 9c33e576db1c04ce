//! The guide in `book/`, compiled so that every snippet runs under
//! `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/number-theory.md")]
pub mod number_theory {}

#[doc = include_str!("../../../book/src/root-location.md")]
pub mod root_location {}

#[doc = include_str!("../../../book/src/criteria.md")]
pub mod criteria {}

#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}

#[doc = include_str!("../../../book/src/audit.md")]
pub mod audit {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
