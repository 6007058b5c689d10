//! Reversible embedding of arbitrary functions.
//!
//! A total function `f: A -> B` becomes the bijection
//! `g(a, b) = (a, b ⊞ f(a))` on the combined register `A ⧺ B`, where `⊞` adds
//! digit-wise modulo each output wire's radix (XOR on binary wires). The
//! output wires are appended after the input wires; feeding zeros into them
//! recovers `f`, at the price of carrying `a` along as garbage.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::radix::RegisterShape;
use crate::table::TruthTable;

/// Wire bookkeeping for one embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Zero-initialized wires consumed (one per output wire of `f`).
    pub ancilla_wires: usize,
    /// Copied input wires left over (one per input wire of `f`).
    pub garbage_wires: usize,
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ancilla={} garbage={}", self.ancilla_wires, self.garbage_wires)
    }
}

/// Combined register `input ⧺ output` used by [`embed`].
pub fn combined_shape(f: &TruthTable) -> Result<RegisterShape> {
    f.input_shape().concat(f.output_shape())
}

/// Builds `g(a, b) = (a, b ⊞ f(a))`.
pub fn embed(f: &TruthTable) -> Result<(Permutation, EmbeddingReport)> {
    let shape = combined_shape(f)?;
    let n_in = f.input_shape().wires();
    let out_radices = f.output_shape().radices();
    let mut images = Vec::with_capacity(shape.dimension());
    let mut word = vec![0; shape.wires()];
    for index in 0..shape.dimension() {
        shape.fill_digits(index, &mut word);
        let a_index = f.input_shape().index_unchecked(&word[..n_in]);
        let fa = f.row(a_index);
        for ((b, &v), &r) in word[n_in..].iter_mut().zip(fa.iter()).zip(out_radices) {
            *b = (*b + v) % r;
        }
        images.push(shape.index_unchecked(&word));
    }
    let report = EmbeddingReport { ancilla_wires: f.output_shape().wires(), garbage_wires: n_in };
    Ok((Permutation::from_mapping(images)?, report))
}

/// Reads `f(a)` off the output wires of `g(a, 0)`.
pub fn restrict(g: &Permutation, input: &RegisterShape, output: &RegisterShape) -> Result<TruthTable> {
    let shape = input.concat(output)?;
    if g.len() != shape.dimension() {
        return Err(Error::SizeMismatch { left: shape.dimension(), right: g.len() });
    }
    let n_in = input.wires();
    let mut word = vec![0; shape.wires()];
    let outputs = input
        .words()
        .map(|a| {
            word[..n_in].copy_from_slice(&a);
            word[n_in..].fill(0);
            shape.fill_digits(g.apply(shape.index_unchecked(&word)), &mut word);
            output.index_unchecked(&word[n_in..])
        })
        .collect();
    Ok(TruthTable::from_indices(input.clone(), output.clone(), outputs))
}

/// Checks that `g⁻¹(a, b) = (a, b ⊟ f(a))` everywhere, with `f` recovered by
/// [`restrict`]. Permutations of the wrong size fail the check.
pub fn un_embed_check(g: &Permutation, input: &RegisterShape, output: &RegisterShape) -> bool {
    let Ok(f) = restrict(g, input, output) else {
        return false;
    };
    let shape = input.concat(output).expect("restrict accepted the shape");
    let inv = g.inverse();
    let n_in = input.wires();
    let radices = output.radices();
    let consistent = shape.words().all(|w| {
        let fa = f.row(input.index_unchecked(&w[..n_in]));
        let mut expected = w.to_vec();
        for ((b, &v), &r) in expected[n_in..].iter_mut().zip(fa.iter()).zip(radices) {
            *b = (*b + r - v) % r;
        }
        inv.apply(shape.index_unchecked(&w)) == shape.index_unchecked(&expected)
    });
    consistent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{boolean_and, gate};

    fn shape(r: &[usize]) -> RegisterShape {
        RegisterShape::new(r.to_vec()).unwrap()
    }

    #[test]
    fn boolean_and_embeds_as_toffoli() {
        let (g, report) = embed(&boolean_and()).unwrap();
        assert_eq!(&g, gate("TOFFOLI").unwrap().permutation().unwrap());
        assert_eq!(report, EmbeddingReport { ancilla_wires: 1, garbage_wires: 2 });
        assert_eq!(report.to_string(), "ancilla=1 garbage=2");
        assert_eq!(restrict(&g, &shape(&[2, 2]), &shape(&[2])).unwrap(), boolean_and());
        assert!(un_embed_check(&g, &shape(&[2, 2]), &shape(&[2])));
    }

    #[test]
    fn identity_embeds_as_cnot() {
        let id = TruthTable::from_fn(shape(&[2]), shape(&[2]), |w| w.to_vec()).unwrap();
        let (g, report) = embed(&id).unwrap();
        assert_eq!(&g, gate("CNOT").unwrap().permutation().unwrap());
        assert_eq!(report, EmbeddingReport { ancilla_wires: 1, garbage_wires: 1 });
        assert_eq!(restrict(&g, &shape(&[2]), &shape(&[2])).unwrap(), id);
        assert!(un_embed_check(&g, &shape(&[2]), &shape(&[2])));
    }

    #[test]
    fn constant_zero_embeds_as_identity() {
        let zero = TruthTable::from_fn(shape(&[3, 2]), shape(&[2]), |_| vec![0]).unwrap();
        let (g, report) = embed(&zero).unwrap();
        assert!(g.is_identity());
        assert_eq!(report, EmbeddingReport { ancilla_wires: 1, garbage_wires: 2 });
    }

    #[test]
    fn every_two_bit_boolean_function_round_trips() {
        for code in 0..16usize {
            let f =
                TruthTable::from_fn(shape(&[2, 2]), shape(&[2]), |w| vec![(code >> (w[0] * 2 + w[1])) & 1]).unwrap();
            let (g, _) = embed(&f).unwrap();
            assert_eq!(restrict(&g, &shape(&[2, 2]), &shape(&[2])).unwrap(), f);
            assert!(un_embed_check(&g, &shape(&[2, 2]), &shape(&[2])));
            assert!(g.inverse().compose(&g).unwrap().is_identity());
        }
    }

    #[test]
    fn ternary_functions_use_mod3_addition() {
        // f(a) = 2a mod 3: g(a, b) = (a, b + 2a mod 3)
        let f = TruthTable::from_fn(shape(&[3]), shape(&[3]), |w| vec![(2 * w[0]) % 3]).unwrap();
        let (g, _) = embed(&f).unwrap();
        let s = shape(&[3, 3]);
        assert_eq!(s.index_to_digits(g.apply(s.digits_to_index(&[2, 2]).unwrap())).unwrap().to_vec(), vec![2, 0]);
        assert!(un_embed_check(&g, &shape(&[3]), &shape(&[3])));
    }

    #[test]
    fn first_wires_are_preserved() {
        let f = TruthTable::from_fn(shape(&[2, 3]), shape(&[3, 2]), |w| vec![(w[0] + w[1]) % 3, w[0]]).unwrap();
        let (g, report) = embed(&f).unwrap();
        assert_eq!(report, EmbeddingReport { ancilla_wires: 2, garbage_wires: 2 });
        let s = combined_shape(&f).unwrap();
        for w in s.words() {
            let out = s.index_to_digits(g.apply(s.digits_to_index(&w).unwrap())).unwrap();
            assert_eq!(&out[..2], &w[..2]);
        }
        assert_eq!(restrict(&g, f.input_shape(), f.output_shape()).unwrap(), f);
    }

    #[test]
    fn restrict_of_cnot_is_identity_and_shape_mismatch_errors() {
        let cnot = gate("CNOT").unwrap().permutation().unwrap().clone();
        let t = restrict(&cnot, &shape(&[2]), &shape(&[2])).unwrap();
        assert_eq!(t.output_indices(), &[0, 1]);
        assert!(restrict(&cnot, &shape(&[3]), &shape(&[2])).is_err());
        assert!(!un_embed_check(&cnot, &shape(&[3]), &shape(&[2])));
    }

    #[test]
    fn non_embedding_permutations_fail_the_check() {
        // OR_C changes the first wire, so it is not of the form (a, b + f(a))
        let or_c = gate("OR_C").unwrap().permutation().unwrap().clone();
        assert!(!un_embed_check(&or_c, &shape(&[3]), &shape(&[3])));
    }
}
