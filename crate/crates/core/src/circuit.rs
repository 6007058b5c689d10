//! Gate sequences on wire subsets of a mixed-radix register.
//!
//! Text format:
//!
//! ```text
//! wires: 3 3
//! gate CX_STAR 0 1
//! gate C2_STAR 0 1   # AND°
//! ```
//!
//! Steps run top to bottom, so the operator of the circuit above is
//! `C2_STAR · CX_STAR`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gates::{gate, Gate};
use crate::linalg::{ComplexMatrix, StateVector, C64};
use crate::permutation::Permutation;
use crate::radix::{DigitWord, RegisterShape};
use crate::table::{content_lines, parse_digits, parse_header};

/// One gate application.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub gate: Gate,
    pub wires: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    shape: RegisterShape,
    steps: Vec<Step>,
}

impl Circuit {
    pub fn new(shape: RegisterShape) -> Self {
        Self { shape, steps: Vec::new() }
    }

    pub fn shape(&self) -> &RegisterShape {
        &self.shape
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_classical(&self) -> bool {
        self.steps.iter().all(|s| s.gate.is_classical())
    }

    /// Appends a library gate by name.
    pub fn append(mut self, name: &str, wires: &[usize]) -> Result<Circuit> {
        self.push(gate(name)?, wires)?;
        Ok(self)
    }

    /// Appends any gate after checking the wire list against the register.
    pub fn push(&mut self, gate: Gate, wires: &[usize]) -> Result<()> {
        check_wires(&gate, wires, &self.shape)?;
        self.steps.push(Step { gate, wires: wires.to_vec() });
        Ok(())
    }

    /// Steps of `self` followed by the steps of `other`.
    pub fn then(&self, other: &Circuit) -> Result<Circuit> {
        if self.shape != other.shape {
            return Err(Error::DimensionMismatch(format!("[{}] vs [{}]", self.shape, other.shape)));
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Ok(Circuit { shape: self.shape.clone(), steps })
    }

    pub fn simulate_classical(&self, input: &[usize]) -> Result<DigitWord> {
        self.shape.check_digits(input)?;
        let mut word = input.to_vec();
        for step in &self.steps {
            let perm = step.gate.permutation().ok_or_else(|| Error::NonClassical(step.gate.name().into()))?;
            let local_shape = step.gate.shape();
            let local: Vec<usize> = step.wires.iter().map(|&w| word[w]).collect();
            let image = perm.apply(local_shape.index_unchecked(&local));
            let mut out = vec![0; local.len()];
            local_shape.fill_digits(image, &mut out);
            for (&w, d) in step.wires.iter().zip(out) {
                word[w] = d;
            }
        }
        Ok(DigitWord::new(word))
    }

    pub fn simulate_quantum(&self, state: &StateVector) -> Result<StateVector> {
        if state.shape() != &self.shape {
            return Err(Error::DimensionMismatch(format!(
                "state on [{}] for circuit on [{}]",
                state.shape(),
                self.shape
            )));
        }
        let amplitudes = self.run_amplitudes(state.amplitudes().to_vec());
        Ok(StateVector::from_parts_unchecked(self.shape.clone(), amplitudes))
    }

    fn run_amplitudes(&self, mut amps: Vec<C64>) -> Vec<C64> {
        for step in &self.steps {
            amps = apply_local(&step.gate, &step.wires, &self.shape, &amps);
        }
        amps
    }

    /// Reversed steps with every gate replaced by its inverse.
    pub fn inverse_circuit(&self) -> Circuit {
        Circuit {
            shape: self.shape.clone(),
            steps: self.steps.iter().rev().map(|s| Step { gate: s.gate.inverse(), wires: s.wires.clone() }).collect(),
        }
    }

    /// Whole-circuit bijection on basis indices.
    pub fn as_permutation(&self) -> Result<Permutation> {
        let images = (0..self.shape.dimension())
            .map(|i| {
                let w = self.shape.index_to_digits(i)?;
                let out = self.simulate_classical(&w)?;
                Ok(self.shape.index_unchecked(&out))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_mapping(images)
    }

    /// Whole-circuit unitary, built column by column from basis states.
    pub fn as_matrix(&self) -> ComplexMatrix {
        let n = self.shape.dimension();
        let mut m = ComplexMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            for (i, v) in self.run_amplitudes(e).into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }
}

fn check_wires(gate: &Gate, wires: &[usize], shape: &RegisterShape) -> Result<()> {
    let expected = gate.shape().radices();
    if wires.len() != expected.len() {
        return Err(Error::InvalidArgument(format!(
            "gate {} acts on {} wires, {} given",
            gate.name(),
            expected.len(),
            wires.len()
        )));
    }
    for (i, (&w, &r)) in wires.iter().zip(expected).enumerate() {
        let found = *shape.radices().get(w).ok_or(Error::WireOutOfRange { wire: w, wires: shape.wires() })?;
        if wires[..i].contains(&w) {
            return Err(Error::DuplicateWire(w));
        }
        if found != r {
            return Err(Error::RadixMismatch { wire: w, expected: r, found });
        }
    }
    Ok(())
}

/// Applies a gate's matrix to the listed wires of a register state.
fn apply_local(gate: &Gate, wires: &[usize], shape: &RegisterShape, amps: &[C64]) -> Vec<C64> {
    let zero = C64::new(0.0, 0.0);
    let local_shape = gate.shape();
    let m = gate.matrix();
    let mut out = vec![zero; amps.len()];
    let mut word = vec![0; shape.wires()];
    let mut local = vec![0; wires.len()];
    for (i, &amp) in amps.iter().enumerate() {
        if amp == zero {
            continue;
        }
        shape.fill_digits(i, &mut word);
        for (slot, &w) in local.iter_mut().zip(wires) {
            *slot = word[w];
        }
        let col = local_shape.index_unchecked(&local);
        for row in 0..local_shape.dimension() {
            let coeff = m[(row, col)];
            if coeff == zero {
                continue;
            }
            local_shape.fill_digits(row, &mut local);
            for (&w, &d) in wires.iter().zip(&local) {
                word[w] = d;
            }
            out[shape.index_unchecked(&word)] += coeff * amp;
        }
    }
    out
}

/// Full-register operator acting as `gate` on `wires` (in that order) and
/// as the identity elsewhere.
pub fn lift(gate: &Gate, wires: &[usize], shape: &RegisterShape) -> Result<ComplexMatrix> {
    check_wires(gate, wires, shape)?;
    let n = shape.dimension();
    let mut m = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[j] = C64::new(1.0, 0.0);
        for (i, v) in apply_local(gate, wires, shape, &e).into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "wires: {}", self.shape)?;
        for step in &self.steps {
            write!(f, "gate {}", step.gate.name())?;
            for w in &step.wires {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let shape = parse_header(lines.next(), "wires")?;
        let mut circuit = Circuit::new(shape);
        for (line, body) in lines {
            let at = |e: Error| Error::Parse { line, message: e.to_string() };
            let mut tokens = body.splitn(3, char::is_whitespace);
            if tokens.next() != Some("gate") {
                return Err(Error::Parse { line, message: "expected `gate NAME wire...`".into() });
            }
            let name = tokens.next().ok_or_else(|| Error::Parse { line, message: "missing gate name".into() })?;
            let wires = parse_digits(tokens.next().unwrap_or(""), line)?;
            circuit.push(gate(name).map_err(at)?, &wires).map_err(at)?;
        }
        Ok(circuit)
    }
}
