//! Named gate library.
//!
//! Every library gate is classical reversible: it carries a permutation of
//! basis indices and the matching 0/1 unitary. Names are the canonical
//! upper-case identifiers used by the CLI and circuit files; appending
//! `_INV` to a name yields the inverse gate.

mod logic;

pub use logic::{
    boolean_and, boolean_or, boolean_table, cyclic_and, cyclic_or, cyclic_precedes, lukasiewicz_and, lukasiewicz_or,
    ternary_not, ternary_table, UNKNOWN,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, TOLERANCE};
use crate::permutation::Permutation;
use crate::radix::{DigitWord, RegisterShape};
use crate::table::TruthTable;

/// The library gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Not,
    Cnot,
    Toffoli,
    X3,
    X3Inv,
    And23,
    Or23,
    AndC,
    OrC,
    CxStar,
    C2Star,
    C1,
    SubMod3,
}

impl GateKind {
    pub const ALL: [GateKind; 13] = [
        GateKind::Not,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::X3,
        GateKind::X3Inv,
        GateKind::And23,
        GateKind::Or23,
        GateKind::AndC,
        GateKind::OrC,
        GateKind::CxStar,
        GateKind::C2Star,
        GateKind::C1,
        GateKind::SubMod3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
            GateKind::X3 => "X3",
            GateKind::X3Inv => "X3_INV",
            GateKind::And23 => "AND23",
            GateKind::Or23 => "OR23",
            GateKind::AndC => "AND_C",
            GateKind::OrC => "OR_C",
            GateKind::CxStar => "CX_STAR",
            GateKind::C2Star => "C2_STAR",
            GateKind::C1 => "C1",
            GateKind::SubMod3 => "SUB_MOD3",
        }
    }

    pub fn radices(self) -> &'static [usize] {
        match self {
            GateKind::Not => &[2],
            GateKind::Cnot => &[2, 2],
            GateKind::Toffoli => &[2, 2, 2],
            GateKind::X3 | GateKind::X3Inv => &[3],
            GateKind::And23 | GateKind::Or23 => &[2, 3],
            GateKind::AndC | GateKind::OrC | GateKind::CxStar | GateKind::C2Star | GateKind::C1 | GateKind::SubMod3 => {
                &[3, 3]
            }
        }
    }

    /// Image of one input word.
    fn map(self, w: &[usize]) -> Vec<usize> {
        match self {
            GateKind::Not => vec![1 - w[0]],
            GateKind::Cnot => vec![w[0], w[1] ^ w[0]],
            GateKind::Toffoli => vec![w[0], w[1], w[2] ^ (w[0] & w[1])],
            GateKind::X3 => vec![(w[0] + 1) % 3],
            GateKind::X3Inv => vec![(w[0] + 2) % 3],
            GateKind::And23 => AND23_ROWS[w[0] * 3 + w[1]].to_vec(),
            GateKind::Or23 => OR23_ROWS[w[0] * 3 + w[1]].to_vec(),
            GateKind::AndC => AND_C_ROWS[w[0] * 3 + w[1]].to_vec(),
            GateKind::OrC => OR_C_ROWS[w[0] * 3 + w[1]].to_vec(),
            // b -> b - a
            GateKind::CxStar | GateKind::SubMod3 => vec![w[0], (w[1] + 3 - w[0]) % 3],
            // a -> a - 1 when b = 2
            GateKind::C2Star => vec![if w[1] == 2 { (w[0] + 2) % 3 } else { w[0] }, w[1]],
            // a -> a + 1 when b = 1
            GateKind::C1 => vec![if w[1] == 1 { (w[0] + 1) % 3 } else { w[0] }, w[1]],
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GateKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownGate(s.to_string()))
    }
}

// Outputs (a', b') listed in input order (a, b) = 00, 01, 02, 10, ...
const AND23_ROWS: [[usize; 2]; 6] = [[0, 0], [0, 1], [1, 2], [0, 2], [1, 0], [1, 1]];
const OR23_ROWS: [[usize; 2]; 6] = [[0, 0], [1, 1], [0, 2], [1, 2], [1, 0], [0, 1]];
const AND_C_ROWS: [[usize; 2]; 9] = [[0, 0], [0, 1], [2, 2], [0, 2], [1, 0], [1, 1], [2, 1], [1, 2], [2, 0]];
const OR_C_ROWS: [[usize; 2]; 9] = [[0, 0], [1, 1], [0, 2], [1, 2], [1, 0], [2, 1], [0, 1], [2, 2], [2, 0]];

/// A gate on a fixed tuple of wires.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    name: String,
    shape: RegisterShape,
    permutation: Option<Permutation>,
    matrix: ComplexMatrix,
}

impl Gate {
    /// A classical reversible gate; its matrix is derived from the permutation.
    pub fn classical(name: impl Into<String>, shape: RegisterShape, permutation: Permutation) -> Result<Self> {
        if permutation.len() != shape.dimension() {
            return Err(Error::SizeMismatch { left: shape.dimension(), right: permutation.len() });
        }
        let matrix = permutation.to_matrix();
        Ok(Self { name: name.into(), shape, permutation: Some(permutation), matrix })
    }

    /// A general unitary gate without a classical permutation.
    pub fn unitary(name: impl Into<String>, shape: RegisterShape, matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != shape.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a {}-dimensional gate",
                matrix.rows(),
                matrix.cols(),
                shape.dimension()
            )));
        }
        let deviation = linalg::unitarity_deviation(&matrix).unwrap_or(f64::INFINITY);
        if deviation > TOLERANCE {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { name: name.into(), shape, permutation: None, matrix })
    }

    pub fn library(kind: GateKind) -> Gate {
        let shape = RegisterShape::new(kind.radices().to_vec()).expect("library shapes are valid");
        let images =
            shape.words().map(|w| shape.digits_to_index(&kind.map(&w)).expect("library maps stay in range")).collect();
        let perm = Permutation::from_mapping_unchecked(images);
        Gate::classical(kind.name(), shape, perm).expect("library gate")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> &RegisterShape {
        &self.shape
    }

    pub fn permutation(&self) -> Option<&Permutation> {
        self.permutation.as_ref()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn is_classical(&self) -> bool {
        self.permutation.is_some()
    }

    /// Truth table of a classical gate.
    pub fn table(&self) -> Result<TruthTable> {
        let perm = self.permutation.as_ref().ok_or_else(|| Error::NonClassical(self.name.clone()))?;
        TruthTable::from_permutation(&self.shape, perm)
    }

    /// Classical action on one digit word.
    pub fn apply_digits(&self, input: &[usize]) -> Result<DigitWord> {
        let perm = self.permutation.as_ref().ok_or_else(|| Error::NonClassical(self.name.clone()))?;
        let i = self.shape.digits_to_index(input)?;
        self.shape.index_to_digits(perm.apply(i))
    }

    /// The inverse gate. Self-inverse gates keep their name, `X3` and
    /// `X3_INV` swap, and any other gate toggles an `_INV` suffix.
    pub fn inverse(&self) -> Gate {
        let name = inverse_name(&self.name, self.permutation.as_ref());
        Gate {
            name,
            shape: self.shape.clone(),
            permutation: self.permutation.as_ref().map(Permutation::inverse),
            matrix: self.matrix.adjoint(),
        }
    }
}

fn inverse_name(name: &str, perm: Option<&Permutation>) -> String {
    if perm.is_some_and(|p| p.compose(p).map(|q| q.is_identity()).unwrap_or(false)) {
        return name.to_string();
    }
    match name {
        "X3" => "X3_INV".into(),
        "X3_INV" => "X3".into(),
        _ => match name.strip_suffix("_INV") {
            Some(base) => base.to_string(),
            None => format!("{name}_INV"),
        },
    }
}

/// Looks up a library gate by name, accepting an `_INV` suffix.
pub fn gate(name: &str) -> Result<Gate> {
    if let Ok(kind) = name.parse::<GateKind>() {
        return Ok(Gate::library(kind));
    }
    name.strip_suffix("_INV")
        .and_then(|base| base.parse::<GateKind>().ok())
        .map(|kind| Gate::library(kind).inverse())
        .map(|g| Gate { name: name.to_string(), ..g })
        .ok_or_else(|| Error::UnknownGate(name.to_string()))
}
