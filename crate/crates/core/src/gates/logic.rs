//! Ternary logic operators on digits `{0, 1, 2}`.
//!
//! The cyclic operators select between two values under the nontransitive
//! relation `0 ≺ 1 ≺ 2 ≺ 0`. The Łukasiewicz operators are MIN/MAX under the
//! linear order `0 < x < 1`, with the unknown value `x` encoded as digit 2.

use crate::error::{Error, Result};
use crate::radix::RegisterShape;
use crate::table::TruthTable;

/// Encoding of the Łukasiewicz unknown value.
pub const UNKNOWN: usize = 2;

fn check_trit(v: usize) {
    assert!(v < 3, "ternary value out of range: {v}");
}

/// `a ≺ b` in the cyclic relation; only defined for distinct values.
pub fn cyclic_precedes(a: usize, b: usize) -> Result<bool> {
    if a >= 3 || b >= 3 {
        return Err(Error::InvalidArgument(format!("({a}, {b}) is not a pair of ternary values")));
    }
    if a == b {
        return Err(Error::InvalidArgument(format!("cyclic relation is undefined on equal values ({a})")));
    }
    Ok((a + 1) % 3 == b)
}

/// "The previous or the same": `a` if `a ≺ b`, else `b`.
///
/// # Panics
/// If either argument is not a ternary digit.
pub fn cyclic_and(a: usize, b: usize) -> usize {
    check_trit(a);
    check_trit(b);
    if a == b || (a + 1) % 3 == b {
        a
    } else {
        b
    }
}

/// "The next or the same": `a` if `b ≺ a`, else `b`.
pub fn cyclic_or(a: usize, b: usize) -> usize {
    check_trit(a);
    check_trit(b);
    if a == b || (b + 1) % 3 == a {
        a
    } else {
        b
    }
}

// position of a digit in the order 0 < x < 1
fn lukasiewicz_rank(v: usize) -> usize {
    check_trit(v);
    [0, 2, 1][v]
}

pub fn lukasiewicz_and(a: usize, b: usize) -> usize {
    if lukasiewicz_rank(a) <= lukasiewicz_rank(b) {
        a
    } else {
        b
    }
}

pub fn lukasiewicz_or(a: usize, b: usize) -> usize {
    if lukasiewicz_rank(a) >= lukasiewicz_rank(b) {
        a
    } else {
        b
    }
}

/// `(1 − a) mod 3`.
pub fn ternary_not(a: usize) -> usize {
    check_trit(a);
    (4 - a) % 3
}

/// The 3×3 table of a binary ternary operator, as a `[3,3] -> [3]` function.
pub fn ternary_table(op: fn(usize, usize) -> usize) -> TruthTable {
    let input = RegisterShape::uniform(3, 2).expect("valid shape");
    let output = RegisterShape::uniform(3, 1).expect("valid shape");
    TruthTable::from_fn(input, output, |w| vec![op(w[0], w[1])]).expect("total table")
}

/// Boolean AND as a `[2,2] -> [2]` table.
pub fn boolean_and() -> TruthTable {
    boolean_table(|a, b| a & b)
}

/// Boolean OR as a `[2,2] -> [2]` table.
pub fn boolean_or() -> TruthTable {
    boolean_table(|a, b| a | b)
}

pub fn boolean_table(op: fn(usize, usize) -> usize) -> TruthTable {
    let input = RegisterShape::uniform(2, 2).expect("valid shape");
    let output = RegisterShape::uniform(2, 1).expect("valid shape");
    TruthTable::from_fn(input, output, |w| vec![op(w[0], w[1])]).expect("total table")
}
