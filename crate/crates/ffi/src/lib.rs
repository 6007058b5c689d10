//! C ABI for `trirev`.
//!
//! Objects are handed out as opaque pointers and must be released with the
//! matching `*_free` function. Every fallible call returns a [`TrirevStatus`];
//! on failure a description is available from [`trirev_last_error_message`]
//! on the same thread until the next call.
//!
//! Matrices and state vectors cross the boundary as interleaved `re, im`
//! doubles in row-major / basis order.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use trirev::claims;
use trirev::{embed, gate, Circuit, Error, Gate, Permutation, RegisterShape, StateVector, TruthTable, C64};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrirevStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownGate = 3,
    UnknownClaim = 4,
    Parse = 5,
    InvalidArgument = 6,
    ShapeMismatch = 7,
    NotBijective = 8,
    NotNormalized = 9,
    NotUnitary = 10,
    NonClassical = 11,
    BufferTooSmall = 12,
    Panic = 13,
}

/// A library gate.
pub struct TrirevGate(Gate);

/// A circuit on a fixed register.
pub struct TrirevCircuit(Circuit);

/// A permutation of basis indices.
pub struct TrirevPermutation(Permutation);

struct Failure {
    status: TrirevStatus,
    message: String,
}

impl Failure {
    fn new(status: TrirevStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownGate(_) => TrirevStatus::UnknownGate,
            Error::Parse { .. } => TrirevStatus::Parse,
            Error::NotBijective(_) => TrirevStatus::NotBijective,
            Error::NotNormalized { .. } => TrirevStatus::NotNormalized,
            Error::NotUnitary { .. } => TrirevStatus::NotUnitary,
            Error::NonClassical(_) => TrirevStatus::NonClassical,
            Error::SizeMismatch { .. }
            | Error::DimensionMismatch(_)
            | Error::WordLength { .. }
            | Error::RadixMismatch { .. }
            | Error::WireOutOfRange { .. } => TrirevStatus::ShapeMismatch,
            _ => TrirevStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TrirevStatus {
    set_last_error(None);
    let failure = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => return TrirevStatus::Ok,
        Ok(Err(failure)) => failure,
        Err(payload) => {
            let text = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Failure::new(TrirevStatus::Panic, format!("internal panic: {text}"))
        }
    };
    set_last_error(Some(failure.message));
    failure.status
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(TrirevStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(TrirevStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(TrirevStatus::NullPointer, format!("{what} is null")))
}

unsafe fn borrow_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure::new(TrirevStatus::NullPointer, format!("{what} is null")))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::new(TrirevStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_mut<'a, T>(p: *mut T, len: usize, need: usize, what: &str) -> Result<&'a mut [T], Failure> {
    if len < need {
        return Err(Failure::new(TrirevStatus::BufferTooSmall, format!("{what} holds {len}, need {need}")));
    }
    if need == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(Failure::new(TrirevStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts_mut(p, need))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    *borrow_mut(out, what)? = value;
    Ok(())
}

fn interleave(values: &[C64], out: &mut [f64]) {
    for (z, pair) in values.iter().zip(out.chunks_exact_mut(2)) {
        pair[0] = z.re;
        pair[1] = z.im;
    }
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next `trirev_*` call on the same thread.
#[no_mangle]
pub extern "C" fn trirev_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Looks up a library gate by name (`AND_C`, `TOFFOLI`, `X3_INV`, ...).
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_new(name: *const c_char, out: *mut *mut TrirevGate) -> TrirevStatus {
    guard(|| {
        let name = text(name, "name")?;
        borrow_mut(out, "out")?;
        let g = gate(name)?;
        write(out, Box::into_raw(Box::new(TrirevGate(g))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn trirev_gate_free(gate: *mut TrirevGate) {
    free(gate)
}

/// Number of wires the gate acts on.
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_wires(gate: *const TrirevGate, out: *mut usize) -> TrirevStatus {
    guard(|| write(out, borrow(gate, "gate")?.0.shape().wires(), "out"))
}

/// Copies the gate's per-wire radices into `radices` (capacity `len`).
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_radices(gate: *const TrirevGate, radices: *mut usize, len: usize) -> TrirevStatus {
    guard(|| {
        let r = borrow(gate, "gate")?.0.shape().radices();
        slice_mut(radices, len, r.len(), "radices")?.copy_from_slice(r);
        Ok(())
    })
}

/// Size of the gate's state space.
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_dimension(gate: *const TrirevGate, out: *mut usize) -> TrirevStatus {
    guard(|| write(out, borrow(gate, "gate")?.0.shape().dimension(), "out"))
}

/// The gate's basis permutation as a new handle.
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_permutation(
    gate: *const TrirevGate,
    out: *mut *mut TrirevPermutation,
) -> TrirevStatus {
    guard(|| {
        let g = &borrow(gate, "gate")?.0;
        borrow_mut(out, "out")?;
        let p = g.permutation().ok_or_else(|| Error::NonClassical(g.name().to_string()))?;
        write(out, Box::into_raw(Box::new(TrirevPermutation(p.clone()))), "out")
    })
}

/// Writes the `d x d` matrix as `2*d*d` interleaved doubles, row-major.
#[no_mangle]
pub unsafe extern "C" fn trirev_gate_matrix(gate: *const TrirevGate, entries: *mut f64, len: usize) -> TrirevStatus {
    guard(|| {
        let m = borrow(gate, "gate")?.0.matrix();
        let buf = slice_mut(entries, len, 2 * m.entries().len(), "entries")?;
        interleave(m.entries(), buf);
        Ok(())
    })
}

/// Parses a circuit from its text form (`wires: r r`, `gate NAME w w`).
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_parse(source: *const c_char, out: *mut *mut TrirevCircuit) -> TrirevStatus {
    guard(|| {
        let source = text(source, "source")?;
        borrow_mut(out, "out")?;
        let c: Circuit = source.parse()?;
        write(out, Box::into_raw(Box::new(TrirevCircuit(c))), "out")
    })
}

/// Creates an empty circuit on a register with `wires` radices.
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_new(
    radices: *const usize,
    wires: usize,
    out: *mut *mut TrirevCircuit,
) -> TrirevStatus {
    guard(|| {
        let r = slice(radices, wires, "radices")?;
        borrow_mut(out, "out")?;
        let shape = RegisterShape::new(r.to_vec())?;
        write(out, Box::into_raw(Box::new(TrirevCircuit(Circuit::new(shape)))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_free(circuit: *mut TrirevCircuit) {
    free(circuit)
}

/// Appends the named gate on the given wires. On failure the circuit is unchanged.
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_append(
    circuit: *mut TrirevCircuit,
    name: *const c_char,
    wires: *const usize,
    count: usize,
) -> TrirevStatus {
    guard(|| {
        let c = borrow_mut(circuit, "circuit")?;
        let name = text(name, "name")?;
        let wires = slice(wires, count, "wires")?;
        c.0.push(gate(name)?, wires)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_wires(circuit: *const TrirevCircuit, out: *mut usize) -> TrirevStatus {
    guard(|| write(out, borrow(circuit, "circuit")?.0.shape().wires(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_dimension(circuit: *const TrirevCircuit, out: *mut usize) -> TrirevStatus {
    guard(|| write(out, borrow(circuit, "circuit")?.0.shape().dimension(), "out"))
}

/// Runs a digit word (one digit per wire) through the circuit.
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_simulate_classical(
    circuit: *const TrirevCircuit,
    input: *const usize,
    output: *mut usize,
    wires: usize,
) -> TrirevStatus {
    guard(|| {
        let c = &borrow(circuit, "circuit")?.0;
        let word = c.simulate_classical(slice(input, wires, "input")?)?;
        slice_mut(output, wires, word.len(), "output")?.copy_from_slice(&word);
        Ok(())
    })
}

/// Applies the circuit to a normalized state of `dimension` amplitudes given
/// as `2*dimension` interleaved doubles; `output` has the same layout.
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_simulate_quantum(
    circuit: *const TrirevCircuit,
    input: *const f64,
    output: *mut f64,
    len: usize,
) -> TrirevStatus {
    guard(|| {
        let c = &borrow(circuit, "circuit")?.0;
        let d = c.shape().dimension();
        if len != 2 * d {
            return Err(Error::SizeMismatch { left: 2 * d, right: len }.into());
        }
        let raw = slice(input, len, "input")?;
        let amplitudes = raw.chunks_exact(2).map(|p| C64::new(p[0], p[1])).collect();
        let state = StateVector::new(c.shape().clone(), amplitudes)?;
        let out = c.simulate_quantum(&state)?;
        interleave(out.amplitudes(), slice_mut(output, len, len, "output")?);
        Ok(())
    })
}

/// The circuit's overall basis permutation as a new handle.
#[no_mangle]
pub unsafe extern "C" fn trirev_circuit_permutation(
    circuit: *const TrirevCircuit,
    out: *mut *mut TrirevPermutation,
) -> TrirevStatus {
    guard(|| {
        let c = &borrow(circuit, "circuit")?.0;
        borrow_mut(out, "out")?;
        let p = c.as_permutation()?;
        write(out, Box::into_raw(Box::new(TrirevPermutation(p))), "out")
    })
}

/// Embeds a truth table (`in: ...`, `out: ...`, one row per input) as the
/// reversible map `(a, b) -> (a, b + f(a))` on `input ++ output` wires.
#[no_mangle]
pub unsafe extern "C" fn trirev_embed_table(
    table: *const c_char,
    out: *mut *mut TrirevPermutation,
    ancilla_wires: *mut usize,
    garbage_wires: *mut usize,
) -> TrirevStatus {
    guard(|| {
        let table: TruthTable = text(table, "table")?.parse()?;
        borrow_mut(out, "out")?;
        borrow_mut(ancilla_wires, "ancilla_wires")?;
        borrow_mut(garbage_wires, "garbage_wires")?;
        let (p, report) = embed(&table)?;
        write(ancilla_wires, report.ancilla_wires, "ancilla_wires")?;
        write(garbage_wires, report.garbage_wires, "garbage_wires")?;
        write(out, Box::into_raw(Box::new(TrirevPermutation(p))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn trirev_permutation_free(permutation: *mut TrirevPermutation) {
    free(permutation)
}

#[no_mangle]
pub unsafe extern "C" fn trirev_permutation_len(
    permutation: *const TrirevPermutation,
    out: *mut usize,
) -> TrirevStatus {
    guard(|| write(out, borrow(permutation, "permutation")?.0.len(), "out"))
}

/// Copies the image list (`images[i]` is where basis index `i` goes).
#[no_mangle]
pub unsafe extern "C" fn trirev_permutation_images(
    permutation: *const TrirevPermutation,
    images: *mut usize,
    len: usize,
) -> TrirevStatus {
    guard(|| {
        let p = &borrow(permutation, "permutation")?.0;
        slice_mut(images, len, p.len(), "images")?.copy_from_slice(p.images());
        Ok(())
    })
}

/// Smallest `k >= 1` with `p^k` the identity.
#[no_mangle]
pub unsafe extern "C" fn trirev_permutation_order(
    permutation: *const TrirevPermutation,
    out: *mut u64,
) -> TrirevStatus {
    guard(|| write(out, borrow(permutation, "permutation")?.0.order(), "out"))
}

/// Runs one named check; `*passed` is set to 1 or 0.
#[no_mangle]
pub unsafe extern "C" fn trirev_verify_claim(id: *const c_char, passed: *mut c_int) -> TrirevStatus {
    guard(|| {
        let id = text(id, "id")?;
        borrow_mut(passed, "passed")?;
        let claim = claims::find(id)
            .ok_or_else(|| Failure::new(TrirevStatus::UnknownClaim, format!("unknown claim `{id}`")))?;
        let result = claim.run();
        write(passed, c_int::from(result.passed), "passed")
    })
}

/// Number of registered checks.
#[no_mangle]
pub extern "C" fn trirev_claim_count() -> usize {
    claims::CLAIMS.len()
}

/// Id of check `index` as a static string, or null when out of range.
#[no_mangle]
pub extern "C" fn trirev_claim_id(index: usize) -> *const c_char {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    let ids = IDS.get_or_init(|| claims::CLAIMS.iter().map(|c| CString::new(c.id).expect("plain id")).collect());
    ids.get(index).map_or(ptr::null(), |c| c.as_ptr())
}
