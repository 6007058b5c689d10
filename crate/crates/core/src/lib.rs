//! Mixed-radix reversible and qudit circuit toolkit.
//!
//! Classical reversible gates are modelled as permutations of basis states
//! of a mixed-radix register; the same gates act on quantum states through
//! their 0/1 permutation matrices. On top of that the crate provides:
//!
//! - a gate library with binary, ternary and mixed binary/ternary gates,
//!   including the reversible ternary AND/OR built from cyclic ternary logic;
//! - conditional (controlled) operator construction from projectors;
//! - the reversible embedding `(a, b) ↦ (a, b ⊞ f(a))` of arbitrary functions;
//! - exhaustive enumeration of reversible extensions of AND/OR;
//! - circuits with classical and state-vector simulation;
//! - a registry of executable checks shared by the CLI and the test suite.
//!
//! ```
//! use trirev::{gate, Circuit, RegisterShape};
//!
//! let and_c = gate("AND_C").unwrap();
//! assert_eq!(and_c.apply_digits(&[2, 1]).unwrap().to_vec(), vec![1, 2]);
//! assert_eq!(and_c.permutation().unwrap().order(), 7);
//!
//! let c = Circuit::new(RegisterShape::new(vec![3, 3]).unwrap())
//!     .append("CX_STAR", &[0, 1])
//!     .and_then(|c| c.append("C2_STAR", &[0, 1]))
//!     .unwrap();
//! assert_eq!(&c.as_permutation().unwrap(), and_c.permutation().unwrap());
//! ```

pub mod circuit;
pub mod claims;
pub mod embedding;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod gates;
pub mod linalg;
pub mod permutation;
pub mod radix;
pub mod table;

pub use circuit::{lift, Circuit, Step};
pub use embedding::{embed, restrict, un_embed_check, EmbeddingReport};
pub use error::{Error, Result};
pub use gates::{gate, Gate, GateKind};
pub use linalg::{apply, conditional, is_unitary, not_path, projector, tensor, ComplexMatrix, StateVector, C64};
pub use permutation::{is_balanced_component, Permutation};
pub use radix::{DigitWord, RegisterShape};
pub use table::TruthTable;
