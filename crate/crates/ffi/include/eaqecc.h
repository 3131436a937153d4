#ifndef EAQECC_H
#define EAQECC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status returned by every fallible function.
 */
typedef enum EaqeccStatus {
  EaqeccStatus_Ok = 0,
  EaqeccStatus_NullArgument = 1,
  EaqeccStatus_ParseError = 2,
  EaqeccStatus_InvalidArgument = 3,
  EaqeccStatus_EnumerationCap = 4,
  EaqeccStatus_NotSelfOrthogonal = 5,
  EaqeccStatus_InternalError = 6,
} EaqeccStatus;

/**
 * Opaque handle to an additive GF(4) code.
 */
typedef struct EaqeccCode EaqeccCode;

/**
 * EA parameters [[n, k, d; c]] with l auxiliary qubits. `d` is -1 when the
 * distance enumeration was skipped.
 */
typedef struct EaqeccEaParams {
  uintptr_t n;
  uintptr_t k;
  uintptr_t c;
  uintptr_t l;
  int64_t d;
  bool degenerate;
} EaqeccEaParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message on this thread into `buf` (NUL-terminated,
 * truncated to `cap` bytes). Returns the full message length in bytes.
 *
 * # Safety
 * `buf` must be valid for `cap` bytes, or null (then only the length is
 * returned).
 */
uintptr_t eaqecc_last_error_message(char *buf, uintptr_t cap);

/**
 * Builds a code from `count` generator strings over the alphabet 0, 1, w, W
 * (one string per generator, all the same length).
 *
 * # Safety
 * `generators` must point to `count` valid NUL-terminated strings and `out`
 * must be a valid pointer. On success `*out` owns the handle; release it
 * with `eaqecc_code_free`.
 */
enum EaqeccStatus eaqecc_code_parse(const char *const *generators,
                                    uintptr_t count,
                                    struct EaqeccCode **out);

/**
 * Releases a handle returned by this library. Null is a no-op.
 *
 * # Safety
 * `code` must be a handle from this library, not yet freed.
 */
void eaqecc_code_free(struct EaqeccCode *code);

/**
 * Code length n (symbols per codeword). Zero for a null handle.
 *
 * # Safety
 * `code` must be a live handle or null.
 */
uintptr_t eaqecc_code_length(const struct EaqeccCode *code);

/**
 * log2 of the code size (number of independent generators).
 *
 * # Safety
 * `code` must be a live handle or null.
 */
uintptr_t eaqecc_code_size_log2(const struct EaqeccCode *code);

/**
 * Entanglement degree c: the number of hyperbolic pairs in a symplectic
 * Gram-Schmidt decomposition.
 *
 * # Safety
 * `code` must be a live handle or null.
 */
uintptr_t eaqecc_code_entanglement_degree(const struct EaqeccCode *code);

/**
 * Trace dual as a fresh handle.
 *
 * # Safety
 * `code` must be a live handle; `out` must be valid. `*out` must be freed
 * with `eaqecc_code_free`.
 */
enum EaqeccStatus eaqecc_code_trace_dual(const struct EaqeccCode *code, struct EaqeccCode **out);

/**
 * True when the two codes are equal as sets.
 *
 * # Safety
 * Both arguments must be live handles or null.
 */
bool eaqecc_code_equals(const struct EaqeccCode *a, const struct EaqeccCode *b);

/**
 * Exact minimum symbol weight by enumeration, refusing above `cap`
 * codewords. `out_enumerated` (optional) receives the number of nonzero
 * codewords visited.
 *
 * # Safety
 * `code` must be a live handle; `out_weight` must be valid;
 * `out_enumerated` must be valid or null.
 */
enum EaqeccStatus eaqecc_code_min_weight(const struct EaqeccCode *code,
                                         uint64_t cap,
                                         uintptr_t *out_weight,
                                         uint64_t *out_enumerated);

/**
 * Derives [[n, k, d; c]] treating the code as an EA-stabilizer. With
 * `compute_distance` false the enumeration is skipped and `d` is -1.
 *
 * # Safety
 * `code` must be a live handle; `out` must be valid.
 */
enum EaqeccStatus eaqecc_ea_params(const struct EaqeccCode *code,
                                   bool compute_distance,
                                   uint64_t cap,
                                   struct EaqeccEaParams *out);

/**
 * Guaranteed protector length: the smallest m with a distance-3 protector
 * for c ebits, written as `*out_m` with its Hamming parameter `*out_s`.
 *
 * # Safety
 * `out_s` and `out_m` must be valid pointers.
 */
enum EaqeccStatus eaqecc_protector_bound(uintptr_t c, uintptr_t *out_s, uintptr_t *out_m);

/**
 * P(C): probability that a length-n distance-d block corrects a
 * depolarizing channel with symbol error rate p.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EaqeccStatus eaqecc_p_correct(uintptr_t block_len, uintptr_t dist, double p, double *out);

/**
 * P(D): success probability of the combination scheme, the EA block at
 * transmit rate `p_a` times the protector block at storage rate `p_b`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EaqeccStatus eaqecc_p_combination(uintptr_t ea_len,
                                       uintptr_t ea_dist,
                                       uintptr_t b_len,
                                       uintptr_t b_dist,
                                       double p_a,
                                       double p_b,
                                       double *out);

/**
 * Largest storage rate p_b in [0, min(p_a, 1/2)] at which the combination
 * still beats the reference block, by bisection to `tol`. `*out_found` is
 * false (and `*out_pb` untouched) when the combination loses even at
 * p_b = 0.
 *
 * # Safety
 * `out_pb` and `out_found` must be valid pointers.
 */
enum EaqeccStatus eaqecc_max_pb(uintptr_t ea_len,
                                uintptr_t ea_dist,
                                uintptr_t b_len,
                                uintptr_t b_dist,
                                uintptr_t ref_len,
                                uintptr_t ref_dist,
                                double p_a,
                                double tol,
                                double *out_pb,
                                bool *out_found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EAQECC_H */
