#ifndef SIMPLICIAL_H
#define SIMPLICIAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SSET_OK 0

/*
 A required pointer argument was null.
 */
#define SSET_ERR_NULL 1

/*
 Input text was not UTF-8.
 */
#define SSET_ERR_UTF8 2

/*
 The document could not be parsed.
 */
#define SSET_ERR_PARSE 3

/*
 The document describes a different kind of object.
 */
#define SSET_ERR_KIND 4

/*
 The object fails its identities or laws.
 */
#define SSET_ERR_INVALID 5

/*
 A construction was rejected, e.g. by a truncation mismatch.
 */
#define SSET_ERR_CONSTRUCTION 6

/*
 A dimension or bound is out of range.
 */
#define SSET_ERR_RANGE 7

/*
 An internal panic was caught at the boundary.
 */
#define SSET_ERR_PANIC 8

#define SSET_CHECK_KAN 0

#define SSET_CHECK_QUASICATEGORY 1

#define SSET_CHECK_NERVE 2

#define SSET_CHECK_GROUPOID_NERVE 3

/*
 A finite category.
 */
typedef struct CategoryHandle CategoryHandle;

/*
 A finitely presented simplicial set.
 */
typedef struct SsetHandle SsetHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failure on this thread, or null. Valid until the next
 failing call on the same thread.
 */
const char *sset_last_error(void);

/*
 Parses an sset JSON document.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
int32_t sset_parse(const char *json, struct SsetHandle **out);

/*
 Serializes to the canonical JSON document.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
int32_t sset_to_json(const struct SsetHandle *h, char **out);

/*
 `Δ[n]` truncated at `truncation`.

 # Safety
 `out` must be writable.
 */
int32_t sset_simplex(size_t n, size_t truncation, struct SsetHandle **out);

/*
 `∂Δ[n]`.

 # Safety
 `out` must be writable.
 */
int32_t sset_boundary(size_t n, size_t truncation, struct SsetHandle **out);

/*
 `Λ^k[n]`.

 # Safety
 `out` must be writable.
 */
int32_t sset_horn(size_t n, size_t k, size_t truncation, struct SsetHandle **out);

/*
 `a × b`.

 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
int32_t sset_product(const struct SsetHandle *a,
                     const struct SsetHandle *b,
                     struct SsetHandle **out);

/*
 `a ⊔ b`.

 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
int32_t sset_coproduct(const struct SsetHandle *a,
                       const struct SsetHandle *b,
                       struct SsetHandle **out);

/*
 Releases a handle; null is ignored.

 # Safety
 `h` must be null or a handle not yet freed.
 */
void sset_free(struct SsetHandle *h);

/*
 Number of nondegenerate simplices in dimension `dim`.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
int32_t sset_count(const struct SsetHandle *h, size_t dim, size_t *out);

/*
 Writes `1` if the simplicial identities hold, `0` otherwise.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
int32_t sset_validate(const struct SsetHandle *h, int32_t *out);

/*
 # Safety
 `h` must be a live handle; `out` must be writable.
 */
int32_t sset_euler(const struct SsetHandle *h, int64_t *out);

/*
 `H_degree` as text, e.g. `Z^2 ⊕ Z/2`, or `0`.

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
int32_t sset_homology(const struct SsetHandle *h, size_t degree, char **out);

/*
 Bounded recognition; `kind` is one of the `SSET_CHECK_*` values. Writes
 `1` on pass and `0` on fail; a failure's witness is left in
 `sset_last_error`.

 # Safety
 `h` must be a live handle; `passed` must be writable.
 */
int32_t sset_check(const struct SsetHandle *h, int32_t kind, size_t bound, int32_t *passed);

/*
 Number of simplicial maps `a -> b`.

 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
int32_t sset_hom_count(const struct SsetHandle *a, const struct SsetHandle *b, size_t *out);

/*
 Parses a category JSON document.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
int32_t category_parse(const char *json, struct CategoryHandle **out);

/*
 Releases a category handle; null is ignored.

 # Safety
 `h` must be null or a handle not yet freed.
 */
void category_free(struct CategoryHandle *h);

/*
 The nerve truncated at `truncation`; fails with `SSET_ERR_INVALID` when
 the composition table breaks a category law.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
int32_t sset_nerve(const struct CategoryHandle *c, size_t truncation, struct SsetHandle **out);

/*
 Releases a string returned by this library; null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void sset_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMPLICIAL_H */
