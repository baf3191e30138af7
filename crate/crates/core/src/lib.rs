//! Intersection algebras of two monomial ideals.
//!
//! For exponent vectors `a, b ∈ Nⁿ` with `I = (x^a)` and `J = (x^b)`, this
//! crate computes the algebra `B = ⊕ (I^r ∩ J^s) u^r v^s` through its
//! two-dimensional fan: Hilbert bases of the cones, the associated
//! Diophantine system, minimal algebra generators, a truncated Hilbert
//! series, the canonical module and the Gorenstein test.
//!
//! ```
//! use intersection_algebra::{generators, ExponentPair};
//!
//! let ep = ExponentPair::new(&[5], &[2]).unwrap();
//! let gens: Vec<String> = generators(&ep).iter().map(|g| g.to_string()).collect();
//! assert_eq!(gens.len(), 7);
//! assert!(gens.contains(&"x1^6*u*v^3".to_string()));
//! ```

pub mod algebra;
pub mod cones;
pub mod diophantine;
pub mod error;
pub mod exponents;
pub mod fanalg;
mod linalg;
pub mod oracle;

pub use algebra::{
    canonical_ideal_generators, check_minimality, count_minimal, generators, is_gorenstein,
    krull_dimension, minimal_count_bound, GorensteinReport, GradedMonomial, Minimality,
};
pub use cones::{
    build_fan, hilbert_bases, hilbert_basis, Cone2D, Fan, HilbertBasis, LatticePoint2,
};
pub use diophantine::{
    build_phi, cf_elements, fund_elements, minimal_positive, EPhiElement, FundSet, PhiMatrix,
};
pub use error::{Error, Result};
pub use exponents::{normalize_fan_order, ExponentPair, MAX_EXPONENT};
