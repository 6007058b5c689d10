//! Registry of executable checks.
//!
//! Each entry recomputes one fact about the gate library, the logic tables or
//! the enumeration counts and reports `PASS`/`FAIL` with the measured values.
//! The CLI's `verify` command and the test suites run the same registry.

use std::fmt;

use crate::circuit::Circuit;
use crate::embedding::{embed, restrict, un_embed_check};
use crate::enumeration::{
    count_f2_completions, distinct_values, enumerate_balanced_f1, enumerate_extensions, enumerate_extensions_23,
    enumerate_extensions_full_scan, filter_symmetric, find_law_counterexamples, law_holds, ternary_triples, CyclicOp,
    ExtensionQuery, Law,
};
use crate::gates::{
    boolean_and, boolean_or, cyclic_and, cyclic_or, gate, lukasiewicz_and, lukasiewicz_or, ternary_not, ternary_table,
    Gate, GateKind,
};
use crate::linalg::{conditional, is_unitary, not_path, projector, tensor, ComplexMatrix, StateVector, C64, TOLERANCE};
use crate::permutation::{is_balanced_component, Permutation};
use crate::radix::RegisterShape;
use crate::table::TruthTable;

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.id, self.detail)
    }
}

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    check: fn() -> (bool, String),
}

impl Claim {
    pub fn run(&self) -> ClaimResult {
        let (passed, detail) = (self.check)();
        ClaimResult { id: self.id, passed, detail }
    }
}

pub static CLAIMS: &[Claim] = &[
    Claim { id: "twotri-tables", summary: "AND23/OR23 reproduce the bit-trit tables", check: twotri_tables },
    Claim {
        id: "twotri-construction",
        summary: "AND23/OR23 = controlled NOT after b -> b-a",
        check: twotri_construction,
    },
    Claim { id: "cyclog-tables", summary: "cyclic AND/OR reproduce their 3x3 tables", check: cyclog_tables },
    Claim { id: "luklog-tables", summary: "Lukasiewicz AND/OR reproduce their 3x3 tables", check: luklog_tables },
    Claim { id: "tritri-tables", summary: "AND_C/OR_C reproduce the two-trit tables", check: tritri_tables },
    Claim {
        id: "and-decomposition",
        summary: "AND_C = C2_STAR.CX_STAR and OR_C = C1.CX_STAR",
        check: and_decomposition,
    },
    Claim { id: "cnot-conditional", summary: "CNOT = P0 (x) I + P1 (x) NOT", check: cnot_conditional },
    Claim {
        id: "toffoli-projector",
        summary: "Toffoli = nested conditional = projector expansion",
        check: toffoli_projector,
    },
    Claim { id: "order-7", summary: "AND_C and OR_C have period 7", check: order_7 },
    Claim { id: "toffoli-self-inverse", summary: "Toffoli is its own inverse", check: toffoli_self_inverse },
    Claim { id: "x3-laws", summary: "X3^3 = I, X3^-1 = X3^2, matrices as printed", check: x3_laws },
    Claim { id: "demorgan", summary: "NOT(a AND b) = NOT a OR NOT b for cyclic logic", check: demorgan },
    Claim {
        id: "law-counterexamples",
        summary: "cyclic AND/OR are neither associative nor distributive",
        check: law_counterexamples,
    },
    Claim {
        id: "luklog-unbalanced",
        summary: "Lukasiewicz tables are unbalanced; library gates are balanced",
        check: luklog_unbalanced,
    },
    Claim { id: "balanced-10", summary: "ten balanced first components extend AND (and OR)", check: balanced_10 },
    Claim { id: "symmetric-2", summary: "two of them are symmetric, including the cyclic tables", check: symmetric_2 },
    Claim {
        id: "completions-216",
        summary: "each balanced first component has 216 completions",
        check: completions_216,
    },
    Claim { id: "count-2160", summary: "2160 reversible two-trit extensions of AND and of OR", check: count_2160 },
    Claim { id: "full-scan-crosscheck", summary: "structured search equals the 9! scan", check: full_scan_crosscheck },
    Claim {
        id: "extensions-23",
        summary: "bit-trit extensions of AND/OR and relabeling sub-count",
        check: extensions_23,
    },
    Claim { id: "fanout", summary: "OR_C(0,b) = (b,b); inverse gates copy a trit", check: fanout },
    Claim { id: "embed-roundtrip", summary: "(a,b) -> (a, b+f(a)) round-trips every small f", check: embed_roundtrip },
    Claim {
        id: "quantum-classical-agreement",
        summary: "state-vector and classical simulation agree",
        check: quantum_classical_agreement,
    },
    Claim { id: "not-path", summary: "continuous NOT is unitary with exact endpoints", check: not_path_claim },
];

pub fn find(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

pub fn run_all() -> Vec<ClaimResult> {
    CLAIMS.iter().map(Claim::run).collect()
}

fn shape(r: &[usize]) -> RegisterShape {
    RegisterShape::new(r.to_vec()).expect("valid shape")
}

fn perm(name: &str) -> Permutation {
    gate(name).expect("library gate").permutation().expect("classical").clone()
}

fn ok_flag(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "mismatch"
    }
}

/// Counts rows `(a, b, a', b')` where the gate disagrees.
fn row_mismatches(g: &Gate, rows: &[[usize; 4]]) -> usize {
    rows.iter().filter(|r| g.apply_digits(&r[..2]).map(|o| o.to_vec()) != Ok(r[2..].to_vec())).count()
}

fn cell_mismatches(op: fn(usize, usize) -> usize, cells: &[[usize; 3]; 3]) -> usize {
    (0..9).filter(|&i| op(i / 3, i % 3) != cells[i / 3][i % 3]).count()
}

const AND23_ROWS: [[usize; 4]; 6] =
    [[0, 0, 0, 0], [0, 1, 0, 1], [0, 2, 1, 2], [1, 0, 0, 2], [1, 1, 1, 0], [1, 2, 1, 1]];
const OR23_ROWS: [[usize; 4]; 6] = [[0, 0, 0, 0], [0, 1, 1, 1], [0, 2, 0, 2], [1, 0, 1, 2], [1, 1, 1, 0], [1, 2, 0, 1]];
const AND_C_ROWS: [[usize; 4]; 9] = [
    [0, 0, 0, 0],
    [0, 1, 0, 1],
    [0, 2, 2, 2],
    [1, 0, 0, 2],
    [1, 1, 1, 0],
    [1, 2, 1, 1],
    [2, 0, 2, 1],
    [2, 1, 1, 2],
    [2, 2, 2, 0],
];
const OR_C_ROWS: [[usize; 4]; 9] = [
    [0, 0, 0, 0],
    [0, 1, 1, 1],
    [0, 2, 0, 2],
    [1, 0, 1, 2],
    [1, 1, 1, 0],
    [1, 2, 2, 1],
    [2, 0, 0, 1],
    [2, 1, 2, 2],
    [2, 2, 2, 0],
];
const CYCLIC_AND: [[usize; 3]; 3] = [[0, 0, 2], [0, 1, 1], [2, 1, 2]];
const CYCLIC_OR: [[usize; 3]; 3] = [[0, 1, 0], [1, 1, 2], [0, 2, 2]];
// columns 0, 1, x with x encoded as 2
const LUK_AND: [[usize; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 2]];
const LUK_OR: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 1], [2, 1, 2]];

fn twotri_tables() -> (bool, String) {
    let m = row_mismatches(&gate("AND23").unwrap(), &AND23_ROWS) + row_mismatches(&gate("OR23").unwrap(), &OR23_ROWS);
    (m == 0, format!("rows=12 mismatches={m}"))
}

fn twotri_construction() -> (bool, String) {
    let s = shape(&[2, 3]);
    let step = |f: &dyn Fn(usize, usize) -> [usize; 2]| {
        Permutation::from_mapping(s.words().map(|w| s.digits_to_index(&f(w[0], w[1])).unwrap()).collect::<Vec<_>>())
            .unwrap()
    };
    let sub = step(&|a, b| [a, (b + 3 - a) % 3]);
    let and = step(&|a, b| [if b == 2 { 1 - a } else { a }, b]).compose(&sub).unwrap() == perm("AND23");
    let or = step(&|a, b| [if b == 1 { 1 - a } else { a }, b]).compose(&sub).unwrap() == perm("OR23");
    (and && or, format!("AND23={} OR23={}", ok_flag(and), ok_flag(or)))
}

fn cyclog_tables() -> (bool, String) {
    let m = cell_mismatches(cyclic_and, &CYCLIC_AND) + cell_mismatches(cyclic_or, &CYCLIC_OR);
    (m == 0, format!("cells=18 mismatches={m}"))
}

fn luklog_tables() -> (bool, String) {
    let m = cell_mismatches(lukasiewicz_and, &LUK_AND) + cell_mismatches(lukasiewicz_or, &LUK_OR);
    (m == 0, format!("cells=18 mismatches={m}"))
}

fn tritri_tables() -> (bool, String) {
    let m = row_mismatches(&gate("AND_C").unwrap(), &AND_C_ROWS) + row_mismatches(&gate("OR_C").unwrap(), &OR_C_ROWS);
    (m == 0, format!("rows=18 mismatches={m}"))
}

fn two_step(second: &str) -> Circuit {
    Circuit::new(shape(&[3, 3]))
        .append("CX_STAR", &[0, 1])
        .and_then(|c| c.append(second, &[0, 1]))
        .expect("valid circuit")
}

fn and_decomposition() -> (bool, String) {
    let check = |second: &str, target: &str| {
        let c = two_step(second);
        let g = gate(target).unwrap();
        c.as_permutation().ok().as_ref() == g.permutation() && c.as_matrix().approx_eq(g.matrix(), TOLERANCE)
    };
    let and = check("C2_STAR", "AND_C");
    let or = check("C1", "OR_C");
    (and && or, format!("AND_C={} OR_C={}", ok_flag(and), ok_flag(or)))
}

fn cnot_conditional() -> (bool, String) {
    let built = conditional(2, &[ComplexMatrix::identity(2), gate("NOT").unwrap().matrix().clone()]).unwrap();
    let ok = built == perm("CNOT").to_matrix() && built.is_zero_one();
    (ok, format!("conditional={}", ok_flag(ok)))
}

fn toffoli_projector() -> (bool, String) {
    let i2 = ComplexMatrix::identity(2);
    let not = gate("NOT").unwrap().matrix().clone();
    let p0 = projector(2, 0).unwrap();
    let p1 = projector(2, 1).unwrap();
    let nested =
        conditional(2, &[ComplexMatrix::identity(4), conditional(2, &[i2.clone(), not.clone()]).unwrap()]).unwrap();
    let rest = tensor(&p0, &p0).add(&tensor(&p0, &p1)).unwrap().add(&tensor(&p1, &p0)).unwrap();
    let expansion = tensor(&tensor(&p1, &p1), &not).add(&tensor(&rest, &i2)).unwrap();
    let t = perm("TOFFOLI").to_matrix();
    let nested_ok = nested == t && nested.is_zero_one();
    let expansion_ok = expansion == t && expansion.is_zero_one();
    (nested_ok && expansion_ok, format!("nested={} expansion={}", ok_flag(nested_ok), ok_flag(expansion_ok)))
}

fn order_7() -> (bool, String) {
    let and = perm("AND_C");
    let or = perm("OR_C");
    let powers_ok = [&and, &or].iter().all(|p| p.pow(7).is_identity() && p.pow(6) == p.inverse());
    let ok = and.order() == 7 && or.order() == 7 && powers_ok;
    (ok, format!("AND_C={} OR_C={}", and.order(), or.order()))
}

fn toffoli_self_inverse() -> (bool, String) {
    let t = perm("TOFFOLI");
    (t.order() == 2 && t.inverse() == t, format!("TOFFOLI={}", t.order()))
}

fn x3_laws() -> (bool, String) {
    let x3 = perm("X3");
    let printed = ComplexMatrix::from_real(3, 3, &[0., 0., 1., 1., 0., 0., 0., 1., 0.]);
    let printed_inv = ComplexMatrix::from_real(3, 3, &[0., 1., 0., 0., 0., 1., 1., 0., 0.]);
    let ok = x3.pow(3).is_identity()
        && x3.pow(2) == perm("X3_INV")
        && x3.to_matrix() == printed
        && perm("X3_INV").to_matrix() == printed_inv
        && printed.adjoint() == printed_inv;
    (ok, format!("X3={} X3^2=X3_INV:{}", x3.order(), ok_flag(ok)))
}

fn demorgan() -> (bool, String) {
    let holds = (0..9)
        .filter(|&i| {
            let (a, b) = (i / 3, i % 3);
            ternary_not(cyclic_and(a, b)) == cyclic_or(ternary_not(a), ternary_not(b))
        })
        .count();
    (holds == 9, format!("pairs={holds}/9"))
}

fn law_counterexamples() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (op, op_name) in [(CyclicOp::And, "and"), (CyclicOp::Or, "or")] {
        for (law, law_name) in [(Law::Associativity, "assoc"), (Law::Distributivity, "dist")] {
            let found = find_law_counterexamples(op, law);
            let two_valued = found.iter().filter(|&&t| distinct_values(t) < 3).count();
            let corner_ok = ternary_triples().filter(|t| t.iter().all(|&v| v < 2)).all(|t| law_holds(op, law, t));
            ok &= !found.is_empty() && corner_ok;
            parts.push(format!("{op_name}_{law_name}={}", found.len()));
            if two_valued > 0 {
                parts.push(format!("{op_name}_{law_name}_two_valued={two_valued}"));
            }
        }
    }
    (ok, parts.join(" "))
}

fn library_components_balanced() -> bool {
    GateKind::ALL.iter().all(|&k| {
        let t = Gate::library(k).table().unwrap();
        (0..t.output_shape().wires()).all(|c| is_balanced_component(&t, c).unwrap())
    })
}

fn luklog_unbalanced() -> (bool, String) {
    let and = ternary_table(lukasiewicz_and);
    let or = ternary_table(lukasiewicz_or);
    let unbalanced = !is_balanced_component(&and, 0).unwrap() && !is_balanced_component(&or, 0).unwrap();
    let completions = count_f2_completions(&and).unwrap() + count_f2_completions(&or).unwrap();
    let library = library_components_balanced();
    (
        unbalanced && completions == 0 && library,
        format!("lukasiewicz_balanced={} completions={completions} library_balanced={library}", !unbalanced),
    )
}

fn balanced_10() -> (bool, String) {
    let and = enumerate_balanced_f1(&boolean_and()).unwrap();
    let or = enumerate_balanced_f1(&boolean_or()).unwrap();
    let members = and.contains(&ternary_table(cyclic_and)) && or.contains(&ternary_table(cyclic_or));
    (and.len() == 10 && or.len() == 10 && members, format!("AND={} OR={}", and.len(), or.len()))
}

fn symmetric_2() -> (bool, String) {
    let and = filter_symmetric(&enumerate_balanced_f1(&boolean_and()).unwrap());
    let or = filter_symmetric(&enumerate_balanced_f1(&boolean_or()).unwrap());
    let members = and.contains(&ternary_table(cyclic_and)) && or.contains(&ternary_table(cyclic_or));
    (and.len() == 2 && or.len() == 2 && members, format!("AND={} OR={}", and.len(), or.len()))
}

fn completions_216() -> (bool, String) {
    let counts: Vec<usize> = [boolean_and(), boolean_or()]
        .iter()
        .flat_map(|b| enumerate_balanced_f1(b).unwrap())
        .map(|f1| count_f2_completions(&f1).unwrap())
        .collect();
    let ok = counts.iter().all(|&c| c == 216);
    let min = counts.iter().min().copied().unwrap_or(0);
    let max = counts.iter().max().copied().unwrap_or(0);
    (ok, format!("candidates={} min={min} max={max}", counts.len()))
}

fn count_2160() -> (bool, String) {
    let count = |base: TruthTable| enumerate_extensions(&ExtensionQuery::ternary(base).unwrap()).len();
    let and = count(boolean_and());
    let or = count(boolean_or());
    let f2_sum: usize =
        enumerate_balanced_f1(&boolean_and()).unwrap().iter().map(|f1| count_f2_completions(f1).unwrap()).sum();
    let ok = and == 2160 && or == 2160 && f2_sum == 2160;
    if ok {
        (ok, format!("expected=2160 got={and}"))
    } else {
        (ok, format!("expected=2160 got={and} OR={or} f2_sum={f2_sum}"))
    }
}

fn full_scan_crosscheck() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, base) in [("AND", boolean_and()), ("OR", boolean_or())] {
        let q = ExtensionQuery::ternary(base).unwrap();
        let scan = enumerate_extensions_full_scan(&q);
        let same = scan == enumerate_extensions(&q);
        ok &= same;
        parts.push(format!("{name}={}:{}", scan.len(), ok_flag(same)));
    }
    (ok, parts.join(" "))
}

fn extensions_23() -> (bool, String) {
    let and = enumerate_extensions_23(&boolean_and()).unwrap();
    let or = enumerate_extensions_23(&boolean_or()).unwrap();
    let members = and.permutations.contains(&perm("AND23")) && or.permutations.contains(&perm("OR23"));
    let scan_ok = and.permutations == enumerate_extensions_full_scan(&ExtensionQuery::bit_trit(boolean_and()).unwrap());
    (
        members && scan_ok && and.relabel_count == 6 && or.relabel_count == 6,
        format!(
            "AND={} AND_relabel={} OR={} OR_relabel={}",
            and.permutations.len(),
            and.relabel_count,
            or.permutations.len(),
            or.relabel_count
        ),
    )
}

fn fanout() -> (bool, String) {
    let or_c = gate("OR_C").unwrap();
    let binary = (0..2).all(|b| or_c.apply_digits(&[0, b]).map(|o| o.to_vec()) == Ok(vec![b, b]));
    let ternary = ["AND_C", "OR_C"].iter().all(|n| {
        let inv = gate(n).unwrap().inverse();
        (0..3).all(|a| inv.apply_digits(&[a, 0]).map(|o| o.to_vec()) == Ok(vec![a, a]))
    });
    (binary && ternary, format!("binary={} ternary={}", ok_flag(binary), ok_flag(ternary)))
}

fn embed_roundtrip() -> (bool, String) {
    let check = |f: &TruthTable| {
        let Ok((g, _)) = embed(f) else { return false };
        restrict(&g, f.input_shape(), f.output_shape()).as_ref() == Ok(f)
            && un_embed_check(&g, f.input_shape(), f.output_shape())
            && g.inverse().compose(&g).unwrap().is_identity()
    };
    let boolean = (0..16usize)
        .filter(|&code| {
            check(&TruthTable::from_fn(shape(&[2, 2]), shape(&[2]), |w| vec![(code >> (w[0] * 2 + w[1])) & 1]).unwrap())
        })
        .count();
    let ternary = (0..27usize)
        .filter(|&code| {
            check(&TruthTable::from_fn(shape(&[3]), shape(&[3]), |w| vec![code / 3usize.pow(w[0] as u32) % 3]).unwrap())
        })
        .count();
    let toffoli = embed(&boolean_and()).map(|(g, _)| g == perm("TOFFOLI")).unwrap_or(false);
    (
        boolean == 16 && ternary == 27 && toffoli,
        format!("boolean={boolean}/16 ternary={ternary}/27 and=toffoli:{}", ok_flag(toffoli)),
    )
}

/// Largest amplitude error between state-vector simulation of each library
/// gate on each basis state and the classical image's basis vector.
pub fn quantum_classical_error() -> f64 {
    let mut worst = 0.0f64;
    for kind in GateKind::ALL {
        let g = Gate::library(kind);
        let c =
            Circuit::new(g.shape().clone()).append(kind.name(), &(0..g.shape().wires()).collect::<Vec<_>>()).unwrap();
        for w in g.shape().words() {
            let classical = c.simulate_classical(&w).unwrap();
            let q = c.simulate_quantum(&StateVector::basis(g.shape().clone(), &w).unwrap()).unwrap();
            let target = g.shape().digits_to_index(&classical).unwrap();
            for (i, a) in q.amplitudes().iter().enumerate() {
                let expected = if i == target { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                worst = worst.max((a - expected).norm());
            }
        }
    }
    worst
}

fn quantum_classical_agreement() -> (bool, String) {
    let err = quantum_classical_error();
    let unitary = GateKind::ALL.iter().all(|&k| is_unitary(Gate::library(k).matrix(), TOLERANCE));
    (err <= TOLERANCE && unitary, format!("max_error={} unitary={unitary}", crate::format::real(err)))
}

fn not_path_claim() -> (bool, String) {
    let start = not_path(0.0).unwrap().max_abs_diff(&ComplexMatrix::identity(2)).unwrap();
    let end = not_path(1.0).unwrap().max_abs_diff(gate("NOT").unwrap().matrix()).unwrap();
    let mut norm_err = 0.0f64;
    for k in 0..20 {
        let t = (k as f64 + 0.5) / 20.0;
        let u = not_path(t).unwrap();
        let v = u.mul_vec(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
        let n: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        norm_err = norm_err.max((n - 1.0).abs()).max((u.determinant().unwrap().norm() - 1.0).abs());
    }
    let ok = start <= TOLERANCE && end <= TOLERANCE && norm_err <= TOLERANCE;
    (
        ok,
        format!(
            "endpoints={} samples=20 norm={}",
            ok_flag(start <= TOLERANCE && end <= TOLERANCE),
            ok_flag(norm_err <= TOLERANCE)
        ),
    )
}
