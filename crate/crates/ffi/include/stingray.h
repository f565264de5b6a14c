#ifndef STINGRAY_H
#define STINGRAY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StingrayStatus {
  STINGRAY_STATUS_OK = 0,
  STINGRAY_STATUS_NULL_POINTER = 1,
  STINGRAY_STATUS_INVALID_ARGUMENT = 2,
  STINGRAY_STATUS_PARSE = 3,
  STINGRAY_STATUS_SINGULAR = 4,
  STINGRAY_STATUS_FIELD_MISMATCH = 5,
  STINGRAY_STATUS_TOO_LARGE = 6,
  STINGRAY_STATUS_IO = 7,
  STINGRAY_STATUS_INTERNAL = 99,
} StingrayStatus;

typedef enum StingrayTag {
  STINGRAY_TAG_STINGRAY = 0,
  STINGRAY_TAG_PPD_GENERAL = 1,
  STINGRAY_TAG_TYPE2_I = 2,
  STINGRAY_TAG_TYPE2_II = 3,
  STINGRAY_TAG_NOT_PPD = 4,
} StingrayTag;

/**
 * A finite field.
 */
typedef struct StingrayField StingrayField;

/**
 * A matrix group given by generators.
 */
typedef struct StingrayGroup StingrayGroup;

/**
 * A square matrix over a finite field.
 */
typedef struct StingrayMatrix StingrayMatrix;

/**
 * Classification summary. `e` and `t` are meaningful for `STINGRAY` and
 * `PPD_GENERAL` only.
 */
typedef struct StingrayClassification {
  enum StingrayTag tag;
  size_t e;
  uint32_t t;
  size_t fixed_dim;
  bool semisimple;
  bool ppd_order;
} StingrayClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *stingray_last_error(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void stingray_string_free(char *s);

/**
 * GF(p^a) with the default modulus.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StingrayStatus stingray_field_new(uint64_t p, uint32_t a, struct StingrayField **out);

/**
 * # Safety
 * `f` must be a valid field handle.
 */
uint64_t stingray_field_order(const struct StingrayField *f);

/**
 * # Safety
 * `f` must come from [`stingray_field_new`], or be null.
 */
void stingray_field_free(struct StingrayField *f);

/**
 * A `d x d` matrix from row-major element encodings.
 *
 * # Safety
 * `data` must point to `d * d` values and `out` must be valid.
 */
enum StingrayStatus stingray_matrix_from_rows(const struct StingrayField *field,
                                              size_t d,
                                              const uint64_t *data,
                                              struct StingrayMatrix **out);

/**
 * # Safety
 * `m` must come from this library, or be null.
 */
void stingray_matrix_free(struct StingrayMatrix *m);

/**
 * Multiplicative order as a decimal string.
 *
 * # Safety
 * `m` must be a valid matrix handle and `out` a valid pointer.
 */
enum StingrayStatus stingray_matrix_order(const struct StingrayMatrix *m, char **out);

/**
 * # Safety
 * `m` must be a valid matrix handle and `out` a valid pointer.
 */
enum StingrayStatus stingray_classify(const struct StingrayMatrix *m,
                                      size_t e,
                                      struct StingrayClassification *out);

/**
 * Primitive prime divisors of `q^e - 1`, space separated; empty when none.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StingrayStatus stingray_ppd(uint64_t q, uint32_t e, char **out);

/**
 * Parse a group from MGRP text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum StingrayStatus stingray_group_parse_mgrp(const char *text, struct StingrayGroup **out);

/**
 * # Safety
 * `g` must be a valid group handle and `out` a valid pointer.
 */
enum StingrayStatus stingray_group_to_mgrp(const struct StingrayGroup *g, char **out);

/**
 * # Safety
 * `g` must be a valid group handle, or null (returns 0).
 */
size_t stingray_group_dim(const struct StingrayGroup *g);

/**
 * # Safety
 * `g` must be a valid group handle, or null (returns 0).
 */
size_t stingray_group_ngens(const struct StingrayGroup *g);

/**
 * Copy of generator `i` as a new matrix handle.
 *
 * # Safety
 * `g` must be a valid group handle and `out` a valid pointer.
 */
enum StingrayStatus stingray_group_generator(const struct StingrayGroup *g,
                                             size_t i,
                                             struct StingrayMatrix **out);

/**
 * Group order as a decimal string, from the action on vectors.
 *
 * # Safety
 * `g` must be a valid group handle and `out` a valid pointer.
 */
enum StingrayStatus stingray_group_order(const struct StingrayGroup *g, uint64_t seed, char **out);

/**
 * # Safety
 * `g` must come from this library, or be null.
 */
void stingray_group_free(struct StingrayGroup *g);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STINGRAY_H */
