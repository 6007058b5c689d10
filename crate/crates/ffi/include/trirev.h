/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TRIREV_H
#define TRIREV_H

#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum TrirevStatus {
  TRIREV_STATUS_OK = 0,
  TRIREV_STATUS_NULL_POINTER = 1,
  TRIREV_STATUS_INVALID_UTF8 = 2,
  TRIREV_STATUS_UNKNOWN_GATE = 3,
  TRIREV_STATUS_UNKNOWN_CLAIM = 4,
  TRIREV_STATUS_PARSE = 5,
  TRIREV_STATUS_INVALID_ARGUMENT = 6,
  TRIREV_STATUS_SHAPE_MISMATCH = 7,
  TRIREV_STATUS_NOT_BIJECTIVE = 8,
  TRIREV_STATUS_NOT_NORMALIZED = 9,
  TRIREV_STATUS_NOT_UNITARY = 10,
  TRIREV_STATUS_NON_CLASSICAL = 11,
  TRIREV_STATUS_BUFFER_TOO_SMALL = 12,
  TRIREV_STATUS_PANIC = 13,
} TrirevStatus;

// A circuit on a fixed register.
typedef struct TrirevCircuit TrirevCircuit;

// A library gate.
typedef struct TrirevGate TrirevGate;

// A permutation of basis indices.
typedef struct TrirevPermutation TrirevPermutation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next `trirev_*` call on the same thread.
const char *trirev_last_error_message(void);

// Looks up a library gate by name (`AND_C`, `TOFFOLI`, `X3_INV`, ...).
enum TrirevStatus trirev_gate_new(const char *name, struct TrirevGate **out);

void trirev_gate_free(struct TrirevGate *gate);

// Number of wires the gate acts on.
enum TrirevStatus trirev_gate_wires(const struct TrirevGate *gate, uintptr_t *out);

// Copies the gate's per-wire radices into `radices` (capacity `len`).
enum TrirevStatus trirev_gate_radices(const struct TrirevGate *gate,
                                      uintptr_t *radices,
                                      uintptr_t len);

// Size of the gate's state space.
enum TrirevStatus trirev_gate_dimension(const struct TrirevGate *gate, uintptr_t *out);

// The gate's basis permutation as a new handle.
enum TrirevStatus trirev_gate_permutation(const struct TrirevGate *gate,
                                          struct TrirevPermutation **out);

// Writes the `d x d` matrix as `2*d*d` interleaved doubles, row-major.
enum TrirevStatus trirev_gate_matrix(const struct TrirevGate *gate, double *entries, uintptr_t len);

// Parses a circuit from its text form (`wires: r r`, `gate NAME w w`).
enum TrirevStatus trirev_circuit_parse(const char *source, struct TrirevCircuit **out);

// Creates an empty circuit on a register with `wires` radices.
enum TrirevStatus trirev_circuit_new(const uintptr_t *radices,
                                     uintptr_t wires,
                                     struct TrirevCircuit **out);

void trirev_circuit_free(struct TrirevCircuit *circuit);

// Appends the named gate on the given wires. On failure the circuit is unchanged.
enum TrirevStatus trirev_circuit_append(struct TrirevCircuit *circuit,
                                        const char *name,
                                        const uintptr_t *wires,
                                        uintptr_t count);

enum TrirevStatus trirev_circuit_wires(const struct TrirevCircuit *circuit, uintptr_t *out);

enum TrirevStatus trirev_circuit_dimension(const struct TrirevCircuit *circuit, uintptr_t *out);

// Runs a digit word (one digit per wire) through the circuit.
enum TrirevStatus trirev_circuit_simulate_classical(const struct TrirevCircuit *circuit,
                                                    const uintptr_t *input,
                                                    uintptr_t *output,
                                                    uintptr_t wires);

// Applies the circuit to a normalized state of `dimension` amplitudes given
// as `2*dimension` interleaved doubles; `output` has the same layout.
enum TrirevStatus trirev_circuit_simulate_quantum(const struct TrirevCircuit *circuit,
                                                  const double *input,
                                                  double *output,
                                                  uintptr_t len);

// The circuit's overall basis permutation as a new handle.
enum TrirevStatus trirev_circuit_permutation(const struct TrirevCircuit *circuit,
                                             struct TrirevPermutation **out);

// Embeds a truth table (`in: ...`, `out: ...`, one row per input) as the
// reversible map `(a, b) -> (a, b + f(a))` on `input ++ output` wires.
enum TrirevStatus trirev_embed_table(const char *table,
                                     struct TrirevPermutation **out,
                                     uintptr_t *ancilla_wires,
                                     uintptr_t *garbage_wires);

void trirev_permutation_free(struct TrirevPermutation *permutation);

enum TrirevStatus trirev_permutation_len(const struct TrirevPermutation *permutation,
                                         uintptr_t *out);

// Copies the image list (`images[i]` is where basis index `i` goes).
enum TrirevStatus trirev_permutation_images(const struct TrirevPermutation *permutation,
                                            uintptr_t *images,
                                            uintptr_t len);

// Smallest `k >= 1` with `p^k` the identity.
enum TrirevStatus trirev_permutation_order(const struct TrirevPermutation *permutation,
                                           uint64_t *out);

// Runs one named check; `*passed` is set to 1 or 0.
enum TrirevStatus trirev_verify_claim(const char *id, int *passed);

// Number of registered checks.
uintptr_t trirev_claim_count(void);

// Id of check `index` as a static string, or null when out of range.
const char *trirev_claim_id(uintptr_t index);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIREV_H */
