#ifndef NTDICE_H
#define NTDICE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum NtdStatus {
  NTD_STATUS_OK = 0,
  NTD_STATUS_NULL_POINTER = 1,
  NTD_STATUS_INVALID_INPUT = 2,
  NTD_STATUS_PRECONDITION = 3,
  NTD_STATUS_COST_GUARD = 4,
  NTD_STATUS_UNSUPPORTED_BASE = 5,
  NTD_STATUS_CONSTRUCTION_INVARIANT = 6,
  NTD_STATUS_PARSE = 7,
  NTD_STATUS_INTERNAL = 8,
  NTD_STATUS_INVALID_UTF8 = 9,
  NTD_STATUS_OUT_OF_RANGE = 10,
} NtdStatus;

// Opaque dice set handle.
typedef struct NtdDiceSet NtdDiceSet;

// Opaque digraph handle.
typedef struct NtdDigraph NtdDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL if none.
//
// The pointer stays valid until the next failing call on the same thread.
const char *ntd_last_error_message(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void ntd_string_free(char *s);

// Parses a `# dice-set v1` document.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum NtdStatus ntd_dice_set_parse(const char *text, struct NtdDiceSet **out);

// # Safety
// `set` must be NULL or a handle from this library that was not yet freed.
void ntd_dice_set_free(struct NtdDiceSet *set);

// Serializes a dice set in the `dice-set v1` format.
//
// # Safety
// `set` must be a live handle; `out` must be writable. Free the result
// with [`ntd_string_free`].
enum NtdStatus ntd_dice_set_format(const struct NtdDiceSet *set, char **out);

// Number of dice, or 0 for a NULL handle.
//
// # Safety
// `set` must be NULL or a live handle.
size_t ntd_dice_set_len(const struct NtdDiceSet *set);

// Sides per die, or 0 for a NULL handle.
//
// # Safety
// `set` must be NULL or a live handle.
size_t ntd_dice_set_sides(const struct NtdDiceSet *set);

// Copies the faces of die `die`, largest first, into `buf`.
//
// # Safety
// `set` must be a live handle; `buf` must hold `capacity` values.
enum NtdStatus ntd_dice_set_faces(const struct NtdDiceSet *set,
                                  size_t die,
                                  uint64_t *buf,
                                  size_t capacity);

// Name of die `die`. Free the result with [`ntd_string_free`].
//
// # Safety
// `set` must be a live handle; `out` must be writable.
enum NtdStatus ntd_dice_set_die_name(const struct NtdDiceSet *set, size_t die, char **out);

// Builds a balanced non-transitive set of `dice` dice with `sides` sides.
//
// # Safety
// `out` must be writable.
enum NtdStatus ntd_build_cycle_set(size_t dice, size_t sides, struct NtdDiceSet **out);

// Number of face pairs on which die `i` beats die `j`.
//
// # Safety
// `set` must be a live handle; `out` must be writable.
enum NtdStatus ntd_victories(const struct NtdDiceSet *set, size_t i, size_t j, uint64_t *out);

// # Safety
// `set` must be a live handle; `out` must be writable.
enum NtdStatus ntd_is_non_transitive(const struct NtdDiceSet *set, bool *out);

// Writes whether the cycle probabilities agree and, if so, their common
// value as `numerator / denominator`.
//
// # Safety
// `set` must be a live handle; all out pointers must be writable.
enum NtdStatus ntd_is_balanced(const struct NtdDiceSet *set,
                               bool *balanced,
                               uint64_t *numerator,
                               uint64_t *denominator);

// Parses a `# digraph v1` document.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum NtdStatus ntd_digraph_parse(const char *text, struct NtdDigraph **out);

// # Safety
// `g` must be NULL or a handle from this library that was not yet freed.
void ntd_digraph_free(struct NtdDigraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum NtdStatus ntd_is_strongly_connectable(const struct NtdDigraph *g, bool *out);

// Builds dice realizing a tournament; die names equal vertex names.
//
// `chord_order` may be NULL; otherwise it is a comma-separated list of
// `winner>loser` chords and the tournament must be strong.
//
// # Safety
// `g` must be a live handle, `chord_order` NULL or NUL-terminated, and
// `out` writable.
enum NtdStatus ntd_build_tournament_dice(const struct NtdDigraph *g,
                                         const char *chord_order,
                                         struct NtdDiceSet **out);

// Whether every strictly winning pair of dice is an arc between the
// vertices of the same names.
//
// # Safety
// `set` and `g` must be live handles; `out` must be writable.
enum NtdStatus ntd_realizes(const struct NtdDiceSet *set, const struct NtdDigraph *g, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NTDICE_H */
