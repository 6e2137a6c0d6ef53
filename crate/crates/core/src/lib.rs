//! Hilbert functions of graded artinian algebras under hyperplane
//! restriction: Macaulay and Green bounds, Stanley decompositions as
//! interval constraints, Gorenstein obstructions with replayable
//! certificates, and a small exact algebra oracle to check them against.

pub mod binomial;
pub mod decomposition;
pub mod error;
pub mod hvector;
pub mod oracle;
pub mod prover;
mod serde_big;

pub use binomial::{
    binom, expand, green_bound, macaulay_bound, macaulay_preimage, mnz_h2_bound, offset_value,
    BinomialExpansion, BinomialTerm, OffsetPair,
};
pub use decomposition::{
    enumerate_decompositions, init_state, propagate, Decomposition, DecompositionState, Interval,
    PlaneCurveGate, Propagation, RuleApplication, RuleId,
};
pub use error::{Error, Result};
pub use hvector::{CharAssumption, HVector, SocleType};
pub use prover::{
    analyze_gorenstein, h2_lower_bound_check, wlp_analyze, Certificate, Verdict, VerdictTag,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer matrices, ranked by fraction-free elimination.
pub type IntMatrix = oracle::Matrix<BigInt>;
/// Rational matrices, ranked by Gaussian elimination.
pub type RationalMatrix = oracle::Matrix<BigRational>;
/// Matrices over a prime field.
pub type FpMatrix = oracle::Matrix<oracle::Fp>;
