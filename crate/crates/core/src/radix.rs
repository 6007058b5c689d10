//! Mixed-radix registers and the conversion between flat state indices and
//! per-wire digit words.
//!
//! Digit order is big-endian: wire 0 is the most significant digit, so the
//! flat index order of a register coincides with the lexicographic order of
//! its digit words and with the factor order of tensor products.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Largest register dimension accepted by [`RegisterShape::new`].
///
/// Everything in this crate is dense, so this also bounds matrix sizes.
pub const DEFAULT_MAX_DIMENSION: usize = 4096;

/// Ordered list of per-wire radices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegisterShape {
    radices: Vec<usize>,
    dimension: usize,
}

impl RegisterShape {
    /// Builds a shape, rejecting radices below 2 and dimensions above
    /// [`DEFAULT_MAX_DIMENSION`].
    pub fn new(radices: impl Into<Vec<usize>>) -> Result<Self> {
        Self::with_max_dimension(radices, DEFAULT_MAX_DIMENSION)
    }

    pub fn with_max_dimension(radices: impl Into<Vec<usize>>, max_dimension: usize) -> Result<Self> {
        let radices = radices.into();
        if radices.is_empty() {
            return Err(Error::InvalidShape("register needs at least one wire".into()));
        }
        let mut dimension = 1usize;
        for (wire, &r) in radices.iter().enumerate() {
            if r < 2 {
                return Err(Error::InvalidShape(format!("wire {wire} has radix {r} < 2")));
            }
            dimension = dimension
                .checked_mul(r)
                .filter(|&d| d <= max_dimension)
                .ok_or_else(|| Error::InvalidShape(format!("dimension exceeds limit {max_dimension}")))?;
        }
        Ok(Self { radices, dimension })
    }

    /// `n` wires of the same radix.
    pub fn uniform(radix: usize, wires: usize) -> Result<Self> {
        Self::new(vec![radix; wires])
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn wires(&self) -> usize {
        self.radices.len()
    }

    /// Product of all radices.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Shape of `self` followed by the wires of `other`.
    pub fn concat(&self, other: &RegisterShape) -> Result<Self> {
        let mut radices = self.radices.clone();
        radices.extend_from_slice(&other.radices);
        Self::new(radices)
    }

    /// Sub-register formed by the listed wires, in the listed order.
    pub fn select(&self, wires: &[usize]) -> Result<Self> {
        let radices = wires
            .iter()
            .map(|&w| self.radices.get(w).copied().ok_or(Error::WireOutOfRange { wire: w, wires: self.wires() }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(radices)
    }

    pub fn index_to_digits(&self, index: usize) -> Result<DigitWord> {
        if index >= self.dimension {
            return Err(Error::IndexOutOfRange { index, dimension: self.dimension });
        }
        let mut digits = vec![0; self.radices.len()];
        self.fill_digits(index, &mut digits);
        Ok(DigitWord(digits))
    }

    pub fn digits_to_index(&self, digits: &[usize]) -> Result<usize> {
        self.check_digits(digits)?;
        Ok(self.index_unchecked(digits))
    }

    /// Validates a digit word against this shape.
    pub fn check_digits(&self, digits: &[usize]) -> Result<()> {
        if digits.len() != self.radices.len() {
            return Err(Error::WordLength { expected: self.radices.len(), got: digits.len() });
        }
        for (wire, (&digit, &radix)) in digits.iter().zip(&self.radices).enumerate() {
            if digit >= radix {
                return Err(Error::DigitOutOfRange { wire, digit, radix });
            }
        }
        Ok(())
    }

    /// Iterates over all digit words in index order.
    pub fn words(&self) -> impl Iterator<Item = DigitWord> + '_ {
        (0..self.dimension).map(move |i| {
            let mut digits = vec![0; self.radices.len()];
            self.fill_digits(i, &mut digits);
            DigitWord(digits)
        })
    }

    pub(crate) fn fill_digits(&self, mut index: usize, out: &mut [usize]) {
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            *slot = index % r;
            index /= r;
        }
    }

    pub(crate) fn index_unchecked(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.radices).fold(0, |acc, (&d, &r)| acc * r + d)
    }
}

impl fmt::Display for RegisterShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.radices)
    }
}

/// Per-wire digit values of one basis state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitWord(Vec<usize>);

impl DigitWord {
    pub fn new(digits: impl Into<Vec<usize>>) -> Self {
        Self(digits.into())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for DigitWord {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for DigitWord {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
