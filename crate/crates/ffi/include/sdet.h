#ifndef SDET_H
#define SDET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum SdetStatus {
  SdetStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  SdetStatus_NullArgument = 1,
  /**
   * Malformed element text, integer, or group name.
   */
  SdetStatus_Parse = 2,
  /**
   * The operation does not apply to the named group.
   */
  SdetStatus_BadGroup = 3,
  /**
   * Witness requested for a value proven unachievable.
   */
  SdetStatus_NotAchievable = 4,
  /**
   * Achievability could not be decided (incomplete factorization).
   */
  SdetStatus_Unknown = 5,
  /**
   * Invariant violation inside the library; should not happen.
   */
  SdetStatus_Internal = 6,
} SdetStatus;

/**
 * Opaque group-ring element.
 */
typedef struct SdetElement SdetElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse "a0,...,a_{h-1};b0,...,b_{h-1}" into an element of the 2^tower
 * tower (tower 4 gives the order-16 groups, tower 5 the order-32 ones).
 */
enum SdetStatus sdet_element_parse(uint32_t tower, const char *text, struct SdetElement **out);

void sdet_element_free(struct SdetElement *element);

void sdet_string_free(char *s);

/**
 * Canonical "a;b" text of an element.
 */
enum SdetStatus sdet_element_to_string(const struct SdetElement *element, char **out);

/**
 * Group determinant of `element` in the named group ("sd16", "sd32",
 * "m16", "m32") via the regular representation. The element's tower must
 * match the group order.
 */
enum SdetStatus sdet_determinant(const struct SdetElement *element, const char *group, char **out);

/**
 * SD16 determinant in factored form D = M * A2^2 * A3^2. The product is
 * re-checked against the regular-representation determinant before
 * anything is written; a mismatch reports `Internal`.
 */
enum SdetStatus sdet_sd16_factored(const struct SdetElement *element,
                                   char **out_d,
                                   char **out_m,
                                   char **out_a2,
                                   char **out_a3);

/**
 * Decide achievability of the decimal integer `n` as an SD16 determinant.
 * `out_achievable` receives 1 (achievable), 0 (not), or -1 (undecided);
 * `out_reason` a human-readable explanation.
 */
enum SdetStatus sdet_classify(const char *n, int *out_achievable, char **out_reason);

/**
 * Construct an SD16 element whose determinant equals the decimal integer
 * `n`. The element is oracle-verified before it is returned. Unachievable
 * targets report `NotAchievable`; undecided ones `Unknown`.
 */
enum SdetStatus sdet_witness(const char *n, struct SdetElement **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SDET_H */
