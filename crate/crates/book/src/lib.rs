//! The guide's chapters, compiled as doc-tests so the snippets stay in sync
//! with the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fan.md")]
pub mod fan {}
#[doc = include_str!("../../../book/src/hilbert-bases.md")]
pub mod hilbert_bases {}
#[doc = include_str!("../../../book/src/diophantine.md")]
pub mod diophantine {}
#[doc = include_str!("../../../book/src/generators.md")]
pub mod generators {}
#[doc = include_str!("../../../book/src/canonical.md")]
pub mod canonical {}
#[doc = include_str!("../../../book/src/hilbert-series.md")]
pub mod hilbert_series {}
#[doc = include_str!("../../../book/src/fan-linear.md")]
pub mod fan_linear {}
#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
