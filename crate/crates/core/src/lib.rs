//! Construction and verification of Golay complementary pairs, complete
//! complementary codes (CCCs) and Golay-ZCZ sequence sets.
//!
//! - [`seqcore`]: phase-exponent sequences and the set/code containers.
//! - [`correlation`]: exact (Gaussian integer) and float correlation profiles.
//! - [`golay`]: GCP checks, Golay mates and the `(2, 4N, N)` pair construction.
//! - [`ccc`]: CCC checks, transposition, Kronecker composition and seed codes.
//! - [`zczset`]: the IDFT-weighted CCC construction, ZCZ measurement and
//!   optimality factors.
//! - [`search`]: backtracking search for binary `(4, 4, N)` CCCs.

pub mod ccc;
pub mod correlation;
pub mod error;
pub mod golay;
pub mod search;
pub mod seqcore;
pub mod zczset;

pub use error::{Error, Result};
pub use seqcore::{ComplementarySet, CompleteComplementaryCode, ComplexValue, PhaseSequence};
