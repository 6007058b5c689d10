//! Total functions between mixed-radix registers, and their text format.
//!
//! ```text
//! in: 2 2
//! out: 2
//! 0
//! 0
//! 0
//! 1
//! ```
//!
//! One row per input word, in lexicographic input order, listing the output
//! digits. Blank lines and `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::radix::{DigitWord, RegisterShape};

/// A possibly irreversible total function `input_shape -> output_shape`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    input: RegisterShape,
    output: RegisterShape,
    // flat output index for each flat input index
    outputs: Vec<usize>,
}

impl TruthTable {
    /// Builds a table from one output word per input word, in input order.
    pub fn new(input: RegisterShape, output: RegisterShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != input.dimension() {
            return Err(Error::SizeMismatch { left: input.dimension(), right: rows.len() });
        }
        let outputs = rows.iter().map(|row| output.digits_to_index(row)).collect::<Result<Vec<_>>>()?;
        Ok(Self { input, output, outputs })
    }

    pub fn from_fn<F>(input: RegisterShape, output: RegisterShape, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Vec<usize>,
    {
        let rows = input.words().map(|w| f(&w)).collect();
        Self::new(input, output, rows)
    }

    /// Table of a permutation read as a function from `shape` to itself.
    pub fn from_permutation(shape: &RegisterShape, perm: &Permutation) -> Result<Self> {
        if perm.len() != shape.dimension() {
            return Err(Error::SizeMismatch { left: shape.dimension(), right: perm.len() });
        }
        Ok(Self { input: shape.clone(), output: shape.clone(), outputs: perm.images().to_vec() })
    }

    pub(crate) fn from_indices(input: RegisterShape, output: RegisterShape, outputs: Vec<usize>) -> Self {
        debug_assert_eq!(outputs.len(), input.dimension());
        debug_assert!(outputs.iter().all(|&o| o < output.dimension()));
        Self { input, output, outputs }
    }

    pub fn input_shape(&self) -> &RegisterShape {
        &self.input
    }

    pub fn output_shape(&self) -> &RegisterShape {
        &self.output
    }

    /// Flat output indices, one per flat input index.
    pub fn output_indices(&self) -> &[usize] {
        &self.outputs
    }

    pub fn eval(&self, input: &[usize]) -> Result<DigitWord> {
        let i = self.input.digits_to_index(input)?;
        Ok(self.row(i))
    }

    /// Output word for the `index`-th input.
    pub fn row(&self, index: usize) -> DigitWord {
        let mut digits = vec![0; self.output.wires()];
        self.output.fill_digits(self.outputs[index], &mut digits);
        DigitWord::new(digits)
    }

    /// The single-output table formed by one output wire.
    pub fn component(&self, component: usize) -> Result<TruthTable> {
        if component >= self.output.wires() {
            return Err(Error::InvalidArgument(format!(
                "component {component} out of range for {} output wires",
                self.output.wires()
            )));
        }
        let out = RegisterShape::new(vec![self.output.radices()[component]])?;
        let outputs = (0..self.outputs.len()).map(|i| self.row(i)[component]).collect();
        Ok(Self::from_indices(self.input.clone(), out, outputs))
    }

    /// Interprets the table as a permutation; only possible when input and
    /// output shapes agree and the map is a bijection.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if self.input != self.output {
            return Err(Error::DimensionMismatch(format!(
                "input shape [{}] differs from output shape [{}]",
                self.input, self.output
            )));
        }
        Permutation::from_mapping(self.outputs.clone())
    }

    /// `t(a, b) == t(b, a)` for a two-wire single-output table over equal radices.
    pub fn is_symmetric(&self) -> bool {
        let r = self.input.radices();
        if r.len() != 2 || r[0] != r[1] {
            return false;
        }
        let n = r[0];
        (0..n).all(|a| (a + 1..n).all(|b| self.outputs[a * n + b] == self.outputs[b * n + a]))
    }

    /// Row-major single-line form of a two-wire single-output table, rows
    /// separated by `/` (e.g. `002/011/212`).
    pub fn compact(&self) -> String {
        let radices = self.input.radices();
        let cols = *radices.last().unwrap();
        let mut s = String::new();
        for (i, &o) in self.outputs.iter().enumerate() {
            if i > 0 && i % cols == 0 {
                s.push('/');
            }
            let word = self.row(i);
            if word.len() == 1 {
                s.push_str(&o.to_string());
            } else {
                s.push('(');
                s.push_str(&word.to_string());
                s.push(')');
            }
        }
        s
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "in: {}", self.input)?;
        writeln!(f, "out: {}", self.output)?;
        for i in 0..self.outputs.len() {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let input = parse_header(lines.next(), "in")?;
        let output = parse_header(lines.next(), "out")?;
        let mut rows = Vec::with_capacity(input.dimension());
        for (line, body) in lines {
            let row = parse_digits(body, line)?;
            output.check_digits(&row).map_err(|e| Error::Parse { line, message: e.to_string() })?;
            rows.push(row);
        }
        if rows.len() != input.dimension() {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("expected {} rows, found {}", input.dimension(), rows.len()),
            });
        }
        TruthTable::new(input, output, rows)
    }
}

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub(crate) fn parse_digits(body: &str, line: usize) -> Result<Vec<usize>> {
    body.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse { line, message: format!("expected integer, found `{t}`") })
        })
        .collect()
}

pub(crate) fn parse_header(entry: Option<(usize, &str)>, key: &str) -> Result<RegisterShape> {
    let (line, body) = entry.ok_or(Error::Parse { line: 1, message: format!("missing `{key}:` header") })?;
    let rest = body
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| Error::Parse { line, message: format!("expected `{key}:` header") })?;
    let radices = parse_digits(rest, line)?;
    RegisterShape::new(radices).map_err(|e| Error::Parse { line, message: e.to_string() })
}
