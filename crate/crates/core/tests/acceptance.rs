//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use trirev::enumeration::{
    count_f2_completions, enumerate_balanced_f1, enumerate_extensions, enumerate_extensions_full_scan,
    filter_symmetric, find_law_counterexamples, law_holds, CyclicOp, ExtensionQuery, Law,
};
use trirev::gates::{
    boolean_and, boolean_or, cyclic_and, cyclic_or, lukasiewicz_and, lukasiewicz_or, ternary_not, ternary_table,
};
use trirev::linalg::TOLERANCE;
use trirev::{
    apply, conditional, embed, gate, is_balanced_component, is_unitary, not_path, projector, restrict, tensor, Circuit,
    ComplexMatrix, GateKind, Permutation, RegisterShape, StateVector, TruthTable, C64,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

// (a, b) -> (a', b') rows, transcribed from the published tables.
const AND23: [[usize; 4]; 6] = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 2, 1, 2], [1, 0, 0, 2], [1, 1, 1, 0], [1, 2, 1, 1]];
const OR23: [[usize; 4]; 6] = [[0, 0, 0, 0], [0, 1, 1, 1], [0, 2, 0, 2], [1, 0, 1, 2], [1, 1, 1, 0], [1, 2, 0, 1]];
const AND_C: [[usize; 4]; 9] = [
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
const OR_C: [[usize; 4]; 9] = [
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
const CYC_AND: [[usize; 3]; 3] = [[0, 0, 2], [0, 1, 1], [2, 1, 2]];
const CYC_OR: [[usize; 3]; 3] = [[0, 1, 0], [1, 1, 2], [0, 2, 2]];
// third value "unknown" encoded as 2
const LUK_AND: [[usize; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 2]];
const LUK_OR: [[usize; 3]; 3] = [[0, 1, 2], [1, 1, 1], [2, 1, 2]];

fn shape(r: &[usize]) -> RegisterShape {
    RegisterShape::new(r.to_vec()).unwrap()
}

fn perm(name: &str) -> Permutation {
    gate(name).unwrap().permutation().unwrap().clone()
}

fn real(rows: usize, values: &[f64]) -> ComplexMatrix {
    ComplexMatrix::from_real(rows, values.len() / rows, values)
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn gate_rows_match(name: &str, rows: &[[usize; 4]]) -> Result<(), String> {
    let g = gate(name).map_err(|e| e.to_string())?;
    for r in rows {
        let out = g.apply_digits(&r[..2]).map_err(|e| e.to_string())?;
        ensure(out.to_vec() == r[2..], format!("{name} {} {} -> {out}, expected {} {}", r[0], r[1], r[2], r[3]))?;
    }
    Ok(())
}

fn op_cells_match(label: &str, op: fn(usize, usize) -> usize, cells: &[[usize; 3]; 3]) -> Result<(), String> {
    for (a, row) in cells.iter().enumerate() {
        for (b, &want) in row.iter().enumerate() {
            ensure(op(a, b) == want, format!("{label}({a},{b}) = {}, expected {want}", op(a, b)))?;
        }
    }
    Ok(())
}

fn table_fidelity() -> Outcome {
    gate_rows_match("AND23", &AND23)?;
    gate_rows_match("OR23", &OR23)?;
    op_cells_match("cyclic_and", cyclic_and, &CYC_AND)?;
    op_cells_match("cyclic_or", cyclic_or, &CYC_OR)?;
    op_cells_match("lukasiewicz_and", lukasiewicz_and, &LUK_AND)?;
    op_cells_match("lukasiewicz_or", lukasiewicz_or, &LUK_OR)?;
    gate_rows_match("AND_C", &AND_C)?;
    gate_rows_match("OR_C", &OR_C)?;
    ensure(gate("AND23").unwrap().table().unwrap().output_indices().len() == 6, "AND23 has 6 rows")?;
    Ok("twotri=12 rows, cyclog=18 cells, luklog=18 cells, tritri=18 rows".into())
}

fn decomposition() -> Outcome {
    let two_trits = shape(&[3, 3]);
    for (name, second, rows) in [("AND_C", "C2_STAR", &AND_C), ("OR_C", "C1", &OR_C)] {
        let c = Circuit::new(two_trits.clone())
            .append("CX_STAR", &[0, 1])
            .and_then(|c| c.append(second, &[0, 1]))
            .map_err(|e| e.to_string())?;
        let p = c.as_permutation().map_err(|e| e.to_string())?;
        for r in rows.iter() {
            let i = two_trits.digits_to_index(&r[..2]).unwrap();
            let o = two_trits.digits_to_index(&r[2..]).unwrap();
            ensure(p.apply(i) == o, format!("CX_STAR;{second} disagrees with {name} at {} {}", r[0], r[1]))?;
        }
        ensure(p == perm(name), format!("CX_STAR;{second} != {name}"))?;
        ensure(c.as_matrix().approx_eq(gate(name).unwrap().matrix(), TOLERANCE), format!("{name} matrix"))?;
    }

    // projector forms built from scratch
    let id = ComplexMatrix::identity(3);
    let x3 = real(3, &[0., 0., 1., 1., 0., 0., 0., 1., 0.]);
    let x3_star = real(3, &[0., 1., 0., 0., 0., 1., 1., 0., 0.]);
    let p = |k| projector(3, k).unwrap();
    let sum = |a: ComplexMatrix, b: ComplexMatrix| a.add(&b).unwrap();
    let cx_star = sum(sum(tensor(&p(0), &id), tensor(&p(1), &x3_star)), tensor(&p(2), &x3));
    let c2_star = sum(tensor(&id, &id.sub(&p(2)).unwrap()), tensor(&x3_star, &p(2)));
    let c1 = sum(tensor(&id, &id.sub(&p(1)).unwrap()), tensor(&x3, &p(1)));
    let and_m = c2_star.mul(&cx_star).unwrap();
    let or_m = c1.mul(&cx_star).unwrap();
    ensure(and_m.approx_eq(gate("AND_C").unwrap().matrix(), TOLERANCE), "C2*·CX* != AND_C")?;
    ensure(or_m.approx_eq(gate("OR_C").unwrap().matrix(), TOLERANCE), "C1·CX* != OR_C")?;
    ensure(cx_star.approx_eq(gate("CX_STAR").unwrap().matrix(), TOLERANCE), "CX_STAR projector form")?;
    Ok("AND_C = C2_STAR·CX_STAR, OR_C = C1·CX_STAR (permutations and matrices)".into())
}

fn conditional_dynamics() -> Outcome {
    let not = real(2, &[0., 1., 1., 0.]);
    let i2 = ComplexMatrix::identity(2);
    let cnot = conditional(2, &[i2.clone(), not.clone()]).map_err(|e| e.to_string())?;
    let cnot_perm = real(4, &[1., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0.]);
    ensure(cnot == cnot_perm, "conditional(2,[I,NOT]) != CNOT")?;
    ensure(cnot == *gate("CNOT").unwrap().matrix(), "library CNOT")?;

    let nested = conditional(2, &[ComplexMatrix::identity(4), cnot.clone()]).map_err(|e| e.to_string())?;
    let p = |k| projector(2, k).unwrap();
    let off = tensor(&p(0), &p(0)).add(&tensor(&p(0), &p(1))).unwrap().add(&tensor(&p(1), &p(0))).unwrap();
    let expansion = tensor(&tensor(&p(1), &p(1)), &not).add(&tensor(&off, &i2)).unwrap();
    let toffoli = gate("TOFFOLI").unwrap().matrix().clone();
    ensure(nested == toffoli, "nested conditional != TOFFOLI")?;
    ensure(expansion == toffoli, "projector expansion != TOFFOLI")?;
    ensure(toffoli.is_zero_one(), "TOFFOLI entries not 0/1")?;
    for i in 0..8 {
        let j = if i >= 6 { i ^ 1 } else { i };
        ensure(toffoli[(j, i)] == C64::new(1.0, 0.0), format!("TOFFOLI column {i}"))?;
    }
    Ok("CNOT = P0⊗I + P1⊗NOT; Toffoli nested = expansion".into())
}

/// Independent check that `p` is a reversible extension of `base` on `[3,3]`.
fn is_extension(p: &Permutation, base: &TruthTable) -> bool {
    let mut seen = [false; 9];
    for i in 0..9 {
        let j = p.apply(i);
        if j >= 9 || std::mem::replace(&mut seen[j], true) {
            return false;
        }
    }
    (0..2).all(|a| (0..2).all(|b| p.apply(3 * a + b) / 3 == base.eval(&[a, b]).unwrap()[0]))
}

fn combinatorial_counts() -> Outcome {
    let mut details = Vec::new();
    for (name, base, cyc) in
        [("AND", boolean_and(), ternary_table(cyclic_and)), ("OR", boolean_or(), ternary_table(cyclic_or))]
    {
        let q = ExtensionQuery::ternary(base.clone()).map_err(|e| e.to_string())?;
        let ext = enumerate_extensions(&q);
        ensure(ext.len() == 2160, format!("{name}: {} extensions", ext.len()))?;
        ensure(ext.iter().all(|p| is_extension(p, &base)), format!("{name}: non-extension listed"))?;
        ensure(ext.windows(2).all(|w| w[0].images() < w[1].images()), format!("{name}: listing not strictly sorted"))?;

        let f1s = enumerate_balanced_f1(&base).map_err(|e| e.to_string())?;
        ensure(f1s.len() == 10, format!("{name}: {} balanced candidates", f1s.len()))?;
        let sym = filter_symmetric(&f1s);
        ensure(sym.len() == 2, format!("{name}: {} symmetric", sym.len()))?;
        ensure(sym.contains(&cyc), format!("{name}: cyclic table missing from symmetric set"))?;
        let f2_sum: usize = f1s.iter().map(|f| count_f2_completions(f).unwrap()).sum();
        ensure(f2_sum == 2160, format!("{name}: f2 completions sum {f2_sum}"))?;

        let scan = enumerate_extensions_full_scan(&q);
        ensure(scan == ext, format!("{name}: full scan disagrees ({} found)", scan.len()))?;
        details.push(format!("{name}: ext=2160 f1=10 sym=2 f2_sum=2160 scan=ok"));
    }
    Ok(details.join("; "))
}

fn periods() -> Outcome {
    for name in ["AND_C", "OR_C"] {
        let p = perm(name);
        ensure(p.order() == 7, format!("order({name}) = {}", p.order()))?;
        ensure(p.pow(7).is_identity(), format!("{name}^7 != id"))?;
        ensure(p.pow(6) == p.inverse(), format!("{name}^6 != {name}^-1"))?;
        ensure((1..7).all(|k| !p.pow(k).is_identity()), format!("{name}^k = id for k < 7"))?;
    }
    ensure(perm("TOFFOLI").order() == 2, "order(TOFFOLI)")?;
    let x3 = gate("X3").unwrap();
    ensure(x3.permutation().unwrap().order() == 3, "order(X3)")?;
    let x3_m = real(3, &[0., 0., 1., 1., 0., 0., 0., 1., 0.]);
    let x3_inv_m = real(3, &[0., 1., 0., 0., 0., 1., 1., 0., 0.]);
    ensure(*x3.matrix() == x3_m, "X3 matrix")?;
    ensure(*gate("X3_INV").unwrap().matrix() == x3_inv_m, "X3_INV matrix")?;
    ensure(x3.matrix().mul(x3.matrix()).unwrap() == x3_inv_m, "X3^2 != X3^-1")?;
    ensure(x3.matrix().adjoint() == x3_inv_m, "X3* != X3^-1")?;
    Ok("AND_C=7 OR_C=7 TOFFOLI=2 X3=3".into())
}

fn logic_laws() -> Outcome {
    for a in 0..3 {
        for b in 0..3 {
            let lhs = ternary_not(cyclic_and(a, b));
            let rhs = cyclic_or(ternary_not(a), ternary_not(b));
            ensure(lhs == rhs, format!("De Morgan fails at ({a},{b})"))?;
            ensure(ternary_not(a) == (4 - a) % 3, "ternary_not")?;
        }
    }
    let mut counts = Vec::new();
    for op in [CyclicOp::And, CyclicOp::Or] {
        for law in [Law::Associativity, Law::Distributivity] {
            let found = find_law_counterexamples(op, law);
            ensure(!found.is_empty(), format!("{op:?} {law:?}: no counterexample"))?;
            counts.push(found.len());
        }
        let corner = (0..8).map(|i| [i >> 2 & 1, i >> 1 & 1, i & 1]);
        ensure(
            corner.clone().all(|t| law_holds(op, Law::Associativity, t)),
            format!("{op:?}: Boolean corner violation"),
        )?;
    }
    for (label, op) in [("AND_L", lukasiewicz_and as fn(usize, usize) -> usize), ("OR_L", lukasiewicz_or)] {
        ensure(!is_balanced_component(&ternary_table(op), 0).unwrap(), format!("{label} is balanced"))?;
    }
    for kind in GateKind::ALL {
        let t = gate(kind.name()).unwrap().table().unwrap();
        for c in 0..t.output_shape().wires() {
            ensure(is_balanced_component(&t, c).unwrap(), format!("{} component {c} unbalanced", kind.name()))?;
        }
    }
    Ok(format!("demorgan=9/9 counterexamples={counts:?} corner=ok lukasiewicz=unbalanced library=balanced"))
}

fn round_trip(f: &TruthTable) -> Result<(), String> {
    let (g, _) = embed(f).map_err(|e| e.to_string())?;
    Permutation::from_mapping(g.images().to_vec()).map_err(|e| e.to_string())?;
    let back = restrict(&g, f.input_shape(), f.output_shape()).map_err(|e| e.to_string())?;
    ensure(&back == f, format!("restrict did not recover {}", f.compact()))?;
    ensure(g.compose(&g.inverse()).unwrap().is_identity(), "inverse-then-forward")?;
    ensure(g.inverse().compose(&g).unwrap().is_identity(), "forward-then-inverse")
}

fn embedding() -> Outcome {
    for code in 0..16usize {
        let f = TruthTable::from_fn(shape(&[2, 2]), shape(&[2]), |w| vec![code >> (2 * w[0] + w[1]) & 1]).unwrap();
        round_trip(&f)?;
    }
    for code in 0..27usize {
        let f = TruthTable::from_fn(shape(&[3]), shape(&[3]), |w| vec![code / 3usize.pow(w[0] as u32) % 3]).unwrap();
        round_trip(&f)?;
    }
    let (g, report) = embed(&boolean_and()).unwrap();
    ensure(g == perm("TOFFOLI"), "embed(AND) != TOFFOLI")?;
    Ok(format!("boolean=16/16 ternary=27/27 AND->TOFFOLI {report}"))
}

fn fanout() -> Outcome {
    let or_c = gate("OR_C").unwrap();
    for b in 0..2 {
        ensure(or_c.apply_digits(&[0, b]).unwrap().to_vec() == [b, b], format!("OR_C(0,{b})"))?;
    }
    for name in ["AND_C", "OR_C"] {
        let inv = gate(name).unwrap().inverse();
        for a in 0..3 {
            ensure(inv.apply_digits(&[a, 0]).unwrap().to_vec() == [a, a], format!("{name}^-1({a},0)"))?;
        }
    }
    Ok("OR_C(0,b)=(b,b); AND_C^-1(a,0)=OR_C^-1(a,0)=(a,a)".into())
}

fn quantum_classical() -> Outcome {
    let mut worst = 0.0f64;
    for kind in GateKind::ALL {
        let g = gate(kind.name()).unwrap();
        ensure(is_unitary(g.matrix(), TOLERANCE), format!("{} not unitary", kind.name()))?;
        let s = g.shape().clone();
        let wires: Vec<usize> = (0..s.wires()).collect();
        let circuit = Circuit::new(s.clone()).append(kind.name(), &wires).unwrap();
        for w in s.words() {
            let classical = g.apply_digits(&w).unwrap();
            let expected = StateVector::basis(s.clone(), &classical).unwrap();
            let input = StateVector::basis(s.clone(), &w).unwrap();
            for out in [apply(g.matrix(), &input).unwrap(), circuit.simulate_quantum(&input).unwrap()] {
                for (x, y) in out.amplitudes().iter().zip(expected.amplitudes()) {
                    worst = worst.max((x - y).norm());
                }
            }
        }
    }
    ensure(worst <= TOLERANCE, format!("max amplitude error {worst:e}"))?;

    let not = real(2, &[0., 1., 1., 0.]);
    ensure(not_path(0.0).unwrap().approx_eq(&ComplexMatrix::identity(2), TOLERANCE), "not_path(0) != I")?;
    ensure(not_path(1.0).unwrap().approx_eq(&not, TOLERANCE), "not_path(1) != NOT")?;
    let psi = StateVector::normalized(shape(&[2]), vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
    for k in 0..20 {
        let t = (k as f64 + 0.5) / 20.0;
        let u = not_path(t).unwrap();
        ensure(is_unitary(&u, TOLERANCE), format!("not_path({t}) not unitary"))?;
        let out = apply(&u, &psi).unwrap();
        ensure((out.norm_sqr() - 1.0).abs() <= TOLERANCE, format!("norm drift at t={t}"))?;
    }
    Ok(format!("max_error={worst:e} unitary=all not_path=exact endpoints, 20 samples"))
}

fn cli_regression() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_trirev");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let mut bytes = 0;
    for args in [&["table", "AND_C"][..], &["enumerate", "balanced", "AND"], &["verify", "all"]] {
        let first = run(args)?;
        let second = run(args)?;
        ensure(first.stdout == second.stdout, format!("`{}` output differs between runs", args.join(" ")))?;
        ensure(first.status.code() == Some(0), format!("`{}` exited {:?}", args.join(" "), first.status.code()))?;
        bytes += first.stdout.len();
    }
    Ok(format!("3 commands byte-identical ({bytes} bytes), verify all exit 0"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table fidelity", table_fidelity),
        ("decomposition", decomposition),
        ("conditional dynamics", conditional_dynamics),
        ("combinatorial counts", combinatorial_counts),
        ("periods", periods),
        ("logic laws", logic_laws),
        ("embedding round-trip", embedding),
        ("fanout", fanout),
        ("quantum/classical agreement", quantum_classical),
        ("cli regression", cli_regression),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
