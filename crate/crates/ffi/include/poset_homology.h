#ifndef POSET_HOMOLOGY_H
#define POSET_HOMOLOGY_H

/* Generated by cbindgen from the poset-homology-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call through the C interface.
typedef enum PhomStatus {
  // The call succeeded; for verification runs, the property holds.
  PHOM_STATUS_OK = 0,
  // The computation ran to completion but the checked property fails.
  PHOM_STATUS_CHECK_FAILED = 1,
  // A required pointer argument was null.
  PHOM_STATUS_NULL_ARGUMENT = 2,
  // A string argument was not valid UTF-8.
  PHOM_STATUS_INVALID_UTF8 = 3,
  // The input failed to parse or validate.
  PHOM_STATUS_INVALID_INPUT = 4,
  // The computation itself failed.
  PHOM_STATUS_COMPUTE_FAILED = 5,
} PhomStatus;

// A parsed coloured-poset file: the integer matrix template, the ring
// named in its header, and the Boolean rank when the carrier is a lattice.
typedef struct PhomColouring PhomColouring;

// A computed homology table, one group per degree starting at 0.
typedef struct PhomHomology PhomHomology;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. Valid until
// the next library call on the same thread; never free it.
const char *phom_last_error(void);

// The library version as a static string; never free it.
const char *phom_version(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
//
// `s` must have been returned by a function of this library and not freed
// before.
void phom_string_free(char *s);

// Parse the text of a coloured-poset file into a handle.
//
// # Safety
//
// `text` must be NUL-terminated; `out` must be a valid pointer. On `OK`
// the handle must be released with [`phom_colouring_free`].
enum PhomStatus phom_colouring_parse(const char *text, struct PhomColouring **out);

// A seeded random colouring of the Boolean lattice of the given rank
// (at most 6), with fiber ranks at most `max_fiber` (at least 1). The
// instance is deterministic in the arguments.
//
// # Safety
//
// `out` must be a valid pointer; release the handle with
// [`phom_colouring_free`].
enum PhomStatus phom_colouring_random(uint64_t seed,
                                      uint32_t rank,
                                      size_t max_fiber,
                                      struct PhomColouring **out);

// Render a colouring back to its text format.
//
// # Safety
//
// `c` must be a live colouring handle and `out` a valid pointer; release
// the string with [`phom_string_free`].
enum PhomStatus phom_colouring_write(const struct PhomColouring *c, char **out);

// Number of elements of the underlying poset; 0 for a null handle.
//
// # Safety
//
// `c` must be null or a live colouring handle.
size_t phom_colouring_elements(const struct PhomColouring *c);

// Whether the carrier was declared as a Boolean lattice.
//
// # Safety
//
// `c` must be null or a live colouring handle.
bool phom_colouring_is_boolean(const struct PhomColouring *c);

// Release a colouring handle. Null is ignored.
//
// # Safety
//
// `c` must be null or an unreleased handle from this library.
void phom_colouring_free(struct PhomColouring *c);

// Homology of the chain complex of strictly increasing chains, over the
// given ring (`"Z"`, `"Q"`, `"Fp:<prime>"`), or over the ring declared in
// the file when `ring` is null.
//
// # Safety
//
// `c` must be a live colouring handle, `ring` null or NUL-terminated,
// `out` valid; release the result with [`phom_homology_free`].
enum PhomStatus phom_chain_homology(const struct PhomColouring *c,
                                    const char *ring,
                                    struct PhomHomology **out);

// Homology of the cube complex. The colouring must carry a Boolean
// lattice; the comparison map is a quasi-isomorphism, so the table equals
// the one from [`phom_chain_homology`].
//
// # Safety
//
// Same contract as [`phom_chain_homology`].
enum PhomStatus phom_cube_homology(const struct PhomColouring *c,
                                   const char *ring,
                                   struct PhomHomology **out);

// Number of degrees carried by the table (degrees 0 up to this minus one);
// groups above are trivial.
//
// # Safety
//
// `h` must be null or a live homology handle.
size_t phom_homology_degrees(const struct PhomHomology *h);

// Betti number (free rank) in one degree; 0 out of range.
//
// # Safety
//
// `h` must be null or a live homology handle.
size_t phom_homology_betti(const struct PhomHomology *h, size_t degree);

// Number of torsion invariant factors in one degree; 0 out of range.
//
// # Safety
//
// `h` must be null or a live homology handle.
size_t phom_homology_torsion_count(const struct PhomHomology *h, size_t degree);

// One torsion invariant factor as a decimal string (factors are ordered
// and each divides the next).
//
// # Safety
//
// `h` must be a live homology handle and `out` valid; release the string
// with [`phom_string_free`].
enum PhomStatus phom_homology_torsion_factor(const struct PhomHomology *h,
                                             size_t degree,
                                             size_t index,
                                             char **out);

// The group in one degree in additive notation, e.g. `Z^2 + Z/2` or `0`.
//
// # Safety
//
// `h` must be a live homology handle and `out` valid; release the string
// with [`phom_string_free`].
enum PhomStatus phom_homology_group(const struct PhomHomology *h, size_t degree, char **out);

// Release a homology handle. Null is ignored.
//
// # Safety
//
// `h` must be null or an unreleased handle from this library.
void phom_homology_free(struct PhomHomology *h);

// Check that the cube and chain complexes of a Boolean colouring have the
// same homology: over Z the tables are compared group by group, over Q,
// F_2 and F_3 the comparison map is checked to induce isomorphisms.
// Returns `OK`, `CHECK_FAILED`, or an error status.
//
// # Safety
//
// `c` must be a live colouring handle.
enum PhomStatus phom_verify_main(const struct PhomColouring *c);

// Check exactness of the long sequences attached to splitting a Boolean
// colouring at one atom: the chain-side gluing sequence (through the
// degree-dropping retraction) and the cube-side subcomplex sequence.
// Runs over Q when the file declares Z, otherwise over the declared field.
//
// # Safety
//
// `c` must be a live colouring handle.
enum PhomStatus phom_verify_les(const struct PhomColouring *c, size_t atom);

// Check the decomposition of the multi-sequence complex truncated at
// `truncate`: the basis splits into strict chains and sequences with an
// adjacent repeat, and the repeat part is contracted by the insertion
// homotopy (so `id = h d + d h` below the truncation edge).
//
// # Safety
//
// `c` must be a live colouring handle.
enum PhomStatus phom_verify_homotopy(const struct PhomColouring *c, size_t truncate);

// Link homology of a PD-code text (`pd n+ <k> n- <m>` header, `X a b c d`
// lines) over the given ring (null for Z). Writes a TSV table
// `i	j	betti	torsion` and cross-checks the graded Euler characteristic
// of the cube against the Kauffman state sum: `OK` when they agree,
// `CHECK_FAILED` when not.
//
// # Safety
//
// `text` must be NUL-terminated, `ring` null or NUL-terminated, `out`
// valid; release the string with [`phom_string_free`].
enum PhomStatus phom_khovanov_table(const char *text, const char *ring, char **out);

// Graph homology of a graph text (`graph <vertices>` header, `e u v`
// lines) with coefficients in the rank-`module_rank` truncated polynomial
// algebra, over the given ring (null for Z). Writes the homology TSV and
// cross-checks the signed Euler characteristic against the chromatic
// polynomial at `module_rank`: `OK` on agreement, `CHECK_FAILED` when not.
//
// # Safety
//
// Same string contract as [`phom_khovanov_table`].
enum PhomStatus phom_chromatic_homology(const char *text,
                                        size_t module_rank,
                                        const char *ring,
                                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSET_HOMOLOGY_H */
