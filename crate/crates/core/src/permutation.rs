//! Classical reversible gates as permutations of basis-state indices.
//!
//! Composition follows operator order: `p.compose(&q)` applies `q` first and
//! `p` second, so a circuit `q; p` has operator `p·q`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};
use crate::table::TruthTable;

/// A bijection on `{0, .., n-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates an image list: every value in `0..n` must occur exactly once.
    pub fn from_mapping(images: impl Into<Vec<usize>>) -> Result<Self> {
        let images = images.into();
        let n = images.len();
        if n == 0 {
            return Err(Error::NotBijective("empty mapping".into()));
        }
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::NotBijective(format!("image {img} of {i} is out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::NotBijective(format!("duplicate image {img}")));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_mapping_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_mapping(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: `result(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(Self { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Self { images: inv }
    }

    /// `self` composed with itself `k` times; `pow(0)` is the identity.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = base.compose(&result).expect("same size");
            }
            base = base.compose(&base).expect("same size");
            k >>= 1;
        }
        result
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Smallest `k ≥ 1` with `selfᵏ = id`: the LCM of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().map(|c| c.len() as u64).fold(1, lcm)
    }

    /// 0/1 matrix with entry `(S(i), i) = 1`, so that `S·e_i = e_{S(i)}`.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.len();
        let mut m = ComplexMatrix::zeros(n, n);
        for (i, &img) in self.images.iter().enumerate() {
            m[(img, i)] = C64::new(1.0, 0.0);
        }
        m
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Whether output wire `component` takes every value equally often.
///
/// A component of a bijection has to be balanced: with `R` possible values
/// over `D` inputs, each value must be hit exactly `D / R` times.
pub fn is_balanced_component(table: &TruthTable, component: usize) -> Result<bool> {
    let column = table.component(component)?;
    let radix = column.output_shape().dimension();
    let inputs = table.input_shape().dimension();
    if !inputs.is_multiple_of(radix) {
        return Ok(false);
    }
    let mut counts = vec![0usize; radix];
    for &v in column.output_indices() {
        counts[v] += 1;
    }
    Ok(counts.iter().all(|&c| c == inputs / radix))
}
