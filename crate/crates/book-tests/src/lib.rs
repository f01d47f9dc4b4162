//! The chapters of the book, compiled as documentation so that every Rust
//! block in them runs under `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}

#[doc = include_str!("../../../book/src/cochains.md")]
pub mod cochains {}

#[doc = include_str!("../../../book/src/suspension.md")]
pub mod suspension {}

#[doc = include_str!("../../../book/src/quadratic-functions.md")]
pub mod quadratic_functions {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
