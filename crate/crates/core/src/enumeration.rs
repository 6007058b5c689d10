//! Exhaustive search over reversible two-wire gates extending Boolean AND/OR.
//!
//! An extension of a Boolean gate is a permutation of an ambient register
//! (`[3,3]` or `[2,3]`) whose output wire `component`, restricted to inputs
//! in the binary corner `{0,1}×{0,1}`, agrees with the gate.
//!
//! The structured search enumerates balanced candidates for that output
//! wire and then every way of completing the remaining wires class by class.
//! [`enumerate_extensions_full_scan`] walks all `n!` permutations instead and
//! exists to cross-check it.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gates::{cyclic_and, cyclic_or};
use crate::permutation::{is_balanced_component, Permutation};
use crate::radix::RegisterShape;
use crate::table::TruthTable;

/// Which Boolean gate to extend, inside which register, on which output wire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionQuery {
    base: TruthTable,
    ambient: RegisterShape,
    component: usize,
    // required value per ambient input, `None` outside the binary corner
    corner: Vec<Option<usize>>,
}

impl ExtensionQuery {
    /// `base` must be a `[2,2] -> [r]` table; `ambient` a two-wire register
    /// containing the binary corner.
    pub fn new(base: TruthTable, ambient: RegisterShape, component: usize) -> Result<Self> {
        if base.input_shape().radices() != [2, 2] || base.output_shape().wires() != 1 {
            return Err(Error::InvalidArgument("base must be a two-bit, single-output table".into()));
        }
        if ambient.wires() != 2 {
            return Err(Error::InvalidArgument(format!("ambient register [{ambient}] must have two wires")));
        }
        if component >= ambient.wires() {
            return Err(Error::InvalidArgument(format!("component {component} out of range")));
        }
        if base.output_shape().radices()[0] > ambient.radices()[component] {
            return Err(Error::InvalidArgument("base output radix exceeds the ambient wire".into()));
        }
        let corner = ambient.words().map(|w| (w[0] < 2 && w[1] < 2).then(|| base.row(w[0] * 2 + w[1])[0])).collect();
        Ok(Self { base, ambient, component, corner })
    }

    /// Extensions on the first output wire of a qutrit pair.
    pub fn ternary(base: TruthTable) -> Result<Self> {
        Self::new(base, RegisterShape::uniform(3, 2)?, 0)
    }

    /// Extensions on the binary first wire of a bit–trit pair.
    pub fn bit_trit(base: TruthTable) -> Result<Self> {
        Self::new(base, RegisterShape::new(vec![2, 3])?, 0)
    }

    pub fn base(&self) -> &TruthTable {
        &self.base
    }

    pub fn ambient(&self) -> &RegisterShape {
        &self.ambient
    }

    /// Whether `p` satisfies the query.
    pub fn accepts(&self, p: &Permutation) -> bool {
        let mut digits = vec![0; 2];
        p.len() == self.ambient.dimension()
            && self.corner.iter().enumerate().all(|(i, c)| match c {
                Some(v) => {
                    self.ambient.fill_digits(p.apply(i), &mut digits);
                    digits[self.component] == *v
                }
                None => true,
            })
    }
}

/// All balanced tables for the constrained output wire, in lexicographic
/// row-major order.
fn balanced_candidates(q: &ExtensionQuery) -> Vec<TruthTable> {
    let dim = q.ambient.dimension();
    let radix = q.ambient.radices()[q.component];
    if !dim.is_multiple_of(radix) {
        return Vec::new();
    }
    let constraint = &q.corner;
    let mut quota = vec![dim / radix; radix];
    for v in constraint.iter().flatten() {
        if quota[*v] == 0 {
            return Vec::new();
        }
        quota[*v] -= 1;
    }
    let out = RegisterShape::new(vec![radix]).expect("radix >= 2");
    let mut cells = vec![0; dim];
    let mut found = Vec::new();
    fill_cells(0, constraint, &mut quota, &mut cells, &mut |cells| {
        found.push(TruthTable::from_indices(q.ambient.clone(), out.clone(), cells.to_vec()));
    });
    found
}

fn fill_cells(
    pos: usize,
    constraint: &[Option<usize>],
    quota: &mut [usize],
    cells: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if pos == cells.len() {
        emit(cells);
        return;
    }
    if let Some(v) = constraint[pos] {
        cells[pos] = v;
        fill_cells(pos + 1, constraint, quota, cells, emit);
        return;
    }
    for v in 0..quota.len() {
        if quota[v] > 0 {
            quota[v] -= 1;
            cells[pos] = v;
            fill_cells(pos + 1, constraint, quota, cells, emit);
            quota[v] += 1;
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
fn all_arrangements(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// Advances `v` to the next permutation in lexicographic order.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Completes `f1` on output wire `component` to full permutations: inputs in
/// each value class of `f1` are sent bijectively onto the remaining wires.
fn completions(q: &ExtensionQuery, f1: &TruthTable) -> Vec<Permutation> {
    let dim = q.ambient.dimension();
    let radix = q.ambient.radices()[q.component];
    let class_size = dim / radix;
    let classes: Vec<Vec<usize>> =
        (0..radix).map(|v| (0..dim).filter(|&i| f1.output_indices()[i] == v).collect()).collect();
    let other = q.ambient.radices()[1 - q.component];
    debug_assert_eq!(other, class_size);
    let arrangements = all_arrangements(class_size);

    let mut out = Vec::with_capacity(arrangements.len().pow(radix as u32));
    let mut choice = vec![0usize; radix];
    loop {
        let mut images = vec![0; dim];
        for (v, class) in classes.iter().enumerate() {
            for (slot, &input) in class.iter().enumerate() {
                let rest = arrangements[choice[v]][slot];
                let mut digits = [0; 2];
                digits[q.component] = v;
                digits[1 - q.component] = rest;
                images[input] = q.ambient.index_unchecked(&digits);
            }
        }
        out.push(Permutation::from_mapping_unchecked(images));
        // odometer over per-class arrangement choices
        let mut k = radix;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < arrangements.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Every extension of `q`, sorted by image list.
pub fn enumerate_extensions(q: &ExtensionQuery) -> Vec<Permutation> {
    let mut all: Vec<Permutation> = balanced_candidates(q).iter().flat_map(|f1| completions(q, f1)).collect();
    all.sort();
    all
}

/// Oracle for [`enumerate_extensions`]: tests every permutation of the
/// ambient register. Work is split by first image and merged in order, so
/// the result is identical to a sequential scan.
pub fn enumerate_extensions_full_scan(q: &ExtensionQuery) -> Vec<Permutation> {
    let n = q.ambient.dimension();
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut rest: Vec<usize> = (0..n).filter(|&x| x != first).collect();
            let mut found = Vec::new();
            loop {
                let mut images = Vec::with_capacity(n);
                images.push(first);
                images.extend_from_slice(&rest);
                let p = Permutation::from_mapping_unchecked(images);
                if q.accepts(&p) {
                    found.push(p);
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            found
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Balanced `[3,3] -> [3]` tables agreeing with `base` on the binary corner.
pub fn enumerate_balanced_f1(base: &TruthTable) -> Result<Vec<TruthTable>> {
    Ok(balanced_candidates(&ExtensionQuery::ternary(base.clone())?))
}

/// Tables with `t(a, b) = t(b, a)`, in input order.
pub fn filter_symmetric(tables: &[TruthTable]) -> Vec<TruthTable> {
    tables.iter().filter(|t| t.is_symmetric()).cloned().collect()
}

/// Number of second-wire tables `f2` making `(f1, f2)` a bijection, counted
/// by trying all `R^(R²)` candidates for `f2`.
///
/// Unbalanced `f1` has no completion and yields 0.
pub fn count_f2_completions(f1: &TruthTable) -> Result<usize> {
    let r = f1.input_shape().radices();
    if r.len() != 2 || r[0] != r[1] || f1.output_shape().dimension() != r[0] {
        return Err(Error::InvalidArgument("f1 must be an [R,R] -> [R] table".into()));
    }
    let radix = r[0];
    let cells = radix * radix;
    let f1v = f1.output_indices();
    let mut f2 = vec![0usize; cells];
    let mut seen = vec![false; cells];
    let mut count = 0;
    loop {
        seen.fill(false);
        let bijective = (0..cells).all(|i| !std::mem::replace(&mut seen[f1v[i] * radix + f2[i]], true));
        if bijective {
            count += 1;
        }
        let mut k = cells;
        loop {
            if k == 0 {
                return Ok(count);
            }
            k -= 1;
            f2[k] += 1;
            if f2[k] < radix {
                break;
            }
            f2[k] = 0;
        }
    }
}

/// Result of the bit–trit extension search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitTritExtensions {
    /// All extensions, sorted by image list.
    pub permutations: Vec<Permutation>,
    /// How many have trit output `σ((b − a) mod 3)` for a relabeling `σ`
    /// of the trit values.
    pub relabel_count: usize,
}

/// Extensions of `base` on a `[2,3]` register, with the relabeling sub-count.
pub fn enumerate_extensions_23(base: &TruthTable) -> Result<BitTritExtensions> {
    let q = ExtensionQuery::bit_trit(base.clone())?;
    let permutations = enumerate_extensions(&q);
    let shape = q.ambient.clone();
    let relabel_count = permutations
        .iter()
        .filter(|p| {
            let mut sigma = [None; 3];
            shape.words().all(|w| {
                let d = (w[1] + 3 - w[0]) % 3;
                let out = shape.index_to_digits(p.apply(shape.index_unchecked(&w))).expect("in range")[1];
                *sigma[d].get_or_insert(out) == out
            }) && {
                let mut s: Vec<_> = sigma.iter().flatten().copied().collect();
                s.sort();
                s == [0, 1, 2]
            }
        })
        .count();
    Ok(BitTritExtensions { permutations, relabel_count })
}

/// One of the cyclic ternary operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicOp {
    And,
    Or,
}

impl CyclicOp {
    pub fn eval(self, a: usize, b: usize) -> usize {
        match self {
            CyclicOp::And => cyclic_and(a, b),
            CyclicOp::Or => cyclic_or(a, b),
        }
    }

    pub fn dual(self) -> CyclicOp {
        match self {
            CyclicOp::And => CyclicOp::Or,
            CyclicOp::Or => CyclicOp::And,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// `(a·b)·c = a·(b·c)`
    Associativity,
    /// `a·(b+c) = (a·b)+(a·c)`, with `+` the dual operator.
    Distributivity,
}

/// Whether `law` holds for `op` on one triple.
pub fn law_holds(op: CyclicOp, law: Law, [a, b, c]: [usize; 3]) -> bool {
    let f = |x, y| op.eval(x, y);
    let g = |x, y| op.dual().eval(x, y);
    match law {
        Law::Associativity => f(f(a, b), c) == f(a, f(b, c)),
        Law::Distributivity => f(a, g(b, c)) == g(f(a, b), f(a, c)),
    }
}

/// All triples in `{0,1,2}³` violating `law`, in lexicographic order.
pub fn find_law_counterexamples(op: CyclicOp, law: Law) -> Vec<[usize; 3]> {
    ternary_triples().filter(|&t| !law_holds(op, law, t)).collect()
}

pub fn ternary_triples() -> impl Iterator<Item = [usize; 3]> {
    (0..27).map(|i| [i / 9, i / 3 % 3, i % 3])
}

/// Number of distinct values in a triple.
pub fn distinct_values(t: [usize; 3]) -> usize {
    1 + usize::from(t[1] != t[0]) + usize::from(t[2] != t[0] && t[2] != t[1])
}

/// Both output wires of every listed permutation are balanced.
pub fn all_components_balanced(shape: &RegisterShape, perms: &[Permutation]) -> bool {
    perms.iter().all(|p| {
        let t = TruthTable::from_permutation(shape, p).expect("size matches");
        (0..shape.wires()).all(|c| is_balanced_component(&t, c).unwrap_or(false))
    })
}
