//! Proof checkers, algebraic semantics and finite-model search for Nelson's
//! constructive logic with strong negation (S), its fusion-based
//! reformulation S′, and the logic N4.

pub mod algebra;
pub mod algebraizer;
pub mod calculus_s;
pub mod calculus_s_prime;
pub mod cli;
pub mod demo;
pub mod fixtures;
pub mod formula;
pub mod hilbert;
pub mod laws;
pub mod n4;
pub mod proof;
pub mod schema;
pub mod search;
pub mod term;

use thiserror::Error;

/// Errors from reading inputs. Logical failures (rejected steps, violated
/// laws) are reported in result values, not here.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Formula(#[from] formula::FormulaError),
    #[error(transparent)]
    ProofFile(#[from] proof::ProofFileError),
    #[error(transparent)]
    Proof(#[from] calculus_s::ProofError),
    #[error(transparent)]
    Hilbert(#[from] hilbert::HilbertError),
    #[error(transparent)]
    Dmt(#[from] calculus_s_prime::DmtError),
    #[error(transparent)]
    Schema(#[from] schema::SchemaError),
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    Statement(#[from] term::StatementError),
    #[error(transparent)]
    Eval(#[from] term::EvalError),
    #[error(transparent)]
    CalculusFile(#[from] algebraizer::CalculusFileError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
