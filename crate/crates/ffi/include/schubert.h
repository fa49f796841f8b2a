#ifndef SCHUBERT_H
#define SCHUBERT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/*
 Result code of every fallible call.
 */
typedef enum SchubertStatus {
  SCHUBERT_STATUS_OK = 0,
  SCHUBERT_STATUS_NULL_POINTER = 1,
  SCHUBERT_STATUS_INVALID_UTF8 = 2,
  SCHUBERT_STATUS_INVALID_INPUT = 3,
  SCHUBERT_STATUS_COMPUTATION = 4,
  SCHUBERT_STATUS_PANIC = 5,
} SchubertStatus;

/*
 A module `M(p)` over its coefficient ring.
 */
typedef struct SchubertModule SchubertModule;

/*
 Message of the last failed call on this thread, or null. The pointer stays
 valid until the next call into this library from the same thread and must
 not be freed.
 */
const char *schubert_last_error(void);

/*
 Library version as a static string.
 */
const char *schubert_version(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a pointer obtained from this library that has not
 been freed yet.
 */
void schubert_string_free(char *s);

/*
 Creates `M(p)`. `p` is `classical`, `quantum` or a monic polynomial of
 degree `n` in `X`; `ring` declares coefficient generators as
 `name:degree,...` and may be null or empty.

 # Safety
 String arguments must be null or NUL-terminated; `out` must be writable.
 */
enum SchubertStatus schubert_module_new(const char *p,
                                        uint32_t n,
                                        const char *ring,
                                        struct SchubertModule **out);

/*
 Destroys a module handle. Null is ignored.

 # Safety
 `m` must be null or a handle from [`schubert_module_new`] not yet freed.
 */
void schubert_module_free(struct SchubertModule *m);

/*
 The rank `n` of the module.

 # Safety
 `m` must be a live handle.
 */
uint32_t schubert_module_rank(const struct SchubertModule *m);

/*
 The defining polynomial, e.g. `X^4 + q`.

 # Safety
 `m` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_module_polynomial(const struct SchubertModule *m, char **out);

/*
 Presentation of the cohomology of `G(k, n)` as a JSON object with keys
 `k`, `n`, `ring`, `p`, `generators`, `relations`.

 # Safety
 `m` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_presentation_json(const struct SchubertModule *m,
                                               size_t k,
                                               char **out);

/*
 Product `σ_lhs · σ_rhs`. Partitions are written `2,1`; `""` or `0` is the
 unit class.

 # Safety
 `m` must be a live handle, strings NUL-terminated and `out` writable.
 */
enum SchubertStatus schubert_multiply_json(const struct SchubertModule *m,
                                           size_t k,
                                           const char *lhs,
                                           const char *rhs,
                                           char **out);

/*
 `D_order σ_class`.

 # Safety
 `m` must be a live handle, `class` NUL-terminated and `out` writable.
 */
enum SchubertStatus schubert_pieri_json(const struct SchubertModule *m,
                                        size_t k,
                                        uint32_t order,
                                        const char *class_,
                                        char **out);

/*
 Schur determinant of a partition and its value on `ε¹∧…∧εᵏ`.

 # Safety
 `m` must be a live handle, `partition` NUL-terminated and `out` writable.
 */
enum SchubertStatus schubert_giambelli_json(const struct SchubertModule *m,
                                            size_t k,
                                            const char *partition,
                                            char **out);

/*
 Products `σ_λ · σ_μ` for every ordered pair of box partitions with
 `|λ| + |μ| ≤ max_weight`.

 # Safety
 `m` must be a live handle and `out` writable.
 */
enum SchubertStatus schubert_structure_constants_json(const struct SchubertModule *m,
                                                      size_t k,
                                                      uint32_t max_weight,
                                                      char **out);

/*
 Class of `P(D₁,…,D_k)`, written in `D1..Dk` and the ring generators, in
 the Schubert basis.

 # Safety
 `m` must be a live handle, `operator` NUL-terminated and `out` writable.
 */
enum SchubertStatus schubert_normal_form_json(const struct SchubertModule *m,
                                              size_t k,
                                              const char *operator_,
                                              char **out);

/*
 `D_h` applied to a vector of ⋀ᵏM(p) given as a JSON array of
 `{"indices": [...], "coeff": "..."}` terms.

 # Safety
 `m` must be a live handle, `vector` NUL-terminated and `out` writable.
 */
enum SchubertStatus schubert_apply_d_json(const struct SchubertModule *m,
                                          size_t k,
                                          uint32_t h,
                                          const char *vector,
                                          char **out);

#endif  /* SCHUBERT_H */
