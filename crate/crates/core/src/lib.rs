//! Exact integer computations for Morse-Bott polynomials.
//!
//! Everything is integer arithmetic: polynomials and matrix entries are
//! arbitrary-precision, homology comes from Smith normal forms, and local
//! coefficients are rank-one sign characters on a fixed catalog of cellular
//! models.

pub mod bundles;
pub mod error;
pub mod homology;
pub mod matrix;
pub mod morse;
pub mod morsebott;
pub mod poly;

pub use bundles::{thom_iso_check, thom_pair_homology, BundleDescriptor, ThomReport};
pub use error::{Error, NotDivisible, Result};
pub use homology::{
    catalog_complex, euler_char, homology, poincare_poly, ChainComplex, Group, HomologyProfile,
    OrientationCharacter, SpaceDescriptor,
};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
pub use morse::{morse_homology, stabilize, Generator, MorseData, Sign, SignTwist, Trajectory};
pub use morsebott::{
    alternating_quotient, check_inequalities, e2_consistency, e2_consistency_with, e2_page,
    e2_page_with, mb_polynomial, CoefficientMode, CriticalSubmanifold, E2Consistency,
    InequalityVerdict, MorseBottData,
};
pub use poly::IntPoly;
