//! Symplectic Gram-Schmidt analysis of Pauli generator sets.
//!
//! The crate turns a list of Pauli generators (or a pair of classical binary
//! codes, or one additive GF(4) code) into a standard symplectic basis:
//! anticommuting pairs plus a commuting remainder. Applied to a check matrix
//! this counts the ebits an entanglement-assisted code needs; applied to the
//! normalizer it yields the logical operators. Every count is cross-checked
//! against a closed-form rank formula.

pub mod codes;
pub mod error;
pub mod gf2;
pub mod gf4;
pub mod oracle;
pub mod pauli;
pub mod sgsop;

pub use codes::{CodeKind, CodeReport, CssCodePair, FormulaCheck, Gf4Code};
pub use error::{Error, Result};
pub use gf2::{BinMatrix, BitVec};
pub use gf4::{Gf4, Gf4Matrix};
pub use pauli::{GeneratorSet, PauliVector};
pub use sgsop::{sgsop, SgsopStep, SymplecticDecomposition};
