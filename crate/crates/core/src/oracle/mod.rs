//! Ground-truth computations on actual algebras: monomial quotients over
//! `Q` or `F_p`, lex-segment growth, and a characteristic-`p` span
//! construction.

pub mod algebra;
pub mod charp;
pub mod field;
pub mod lex;
pub mod linalg;
pub mod monomial;

pub use algebra::{
    hilbert_function, restriction_dimension, socle_vector, stanley_split, wlp_test,
    HilbertFunction, LinearForm, QuotientAlgebra, SplitForm, StanleySplit, WlpOutcome,
};
pub use charp::{charp_counterexample, CharpReport};
pub use field::{FieldSpec, Fp};
pub use lex::lex_growth;
pub use linalg::{Field, IntegralDomain, Matrix, Ring};
pub use monomial::{Monomial, MonomialIdeal};
