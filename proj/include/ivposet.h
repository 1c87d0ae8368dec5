/* C interface to the interval-poset library.
 *
 * Objects are opaque handles created and destroyed by the library. Functions
 * that can fail return an ivp_status; on failure ivp_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * allocated by the library and must be released with ivp_string_free().
 */

#ifndef IVPOSET_H
#define IVPOSET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ivp_status {
  IVP_OK = 0,
  IVP_ERR_PARSE = 1,
  IVP_ERR_NOT_BIJECTION = 2,
  IVP_ERR_EMPTY_INPUT = 3,
  IVP_ERR_ARITY_MISMATCH = 4,
  IVP_ERR_NOT_AN_ELEMENT = 5,
  IVP_ERR_ALREADY_CLOSED = 6,
  IVP_ERR_NOT_CLOSED = 7,
  IVP_ERR_NOT_A_LATTICE = 8,
  IVP_ERR_DEPTH_CONFLICT = 9,
  IVP_ERR_NOT_INTERVAL_POSET = 10,
  IVP_ERR_NOT_BINARY_TREE = 11,
  IVP_ERR_JSON = 12,
  IVP_ERR_IO = 13,
  IVP_ERR_VERIFICATION = 14,
  IVP_ERR_BAD_ARGUMENT = 15,
  IVP_ERR_UNSUPPORTED = 16,
  IVP_ERR_INTERNAL = 17
} ivp_status;

typedef struct ivp_perm ivp_perm;
typedef struct ivp_poset ivp_poset;
typedef struct ivp_block_tree ivp_block_tree;
typedef struct ivp_perm_list ivp_perm_list;
typedef struct ivp_census ivp_census;

const char* ivp_version(void);
const char* ivp_status_name(ivp_status status);
/* Message for the most recent failure on this thread; empty if none. */
const char* ivp_last_error(void);
void ivp_string_free(char* text);

/* ---- permutations -------------------------------------------------- */

/* Accepts a digit string (n <= 9) or comma/space-separated values. */
ivp_status ivp_perm_parse(const char* text, ivp_perm** out);
void ivp_perm_free(ivp_perm* perm);
int ivp_perm_length(const ivp_perm* perm);
/* compact != 0: digit string when n <= 9; otherwise comma-separated. */
ivp_status ivp_perm_format(const ivp_perm* perm, int compact, char** out);
ivp_status ivp_perm_reverse(const ivp_perm* perm, ivp_perm** out);
int ivp_perm_is_simple(const ivp_perm* perm);
int ivp_perm_contains(const ivp_perm* perm, const ivp_perm* pattern);
int ivp_perm_is_separable(const ivp_perm* perm);
int ivp_perm_has_monotone_triple_interval(const ivp_perm* perm);
/* One-level substitution decomposition, e.g. "3142[21,1,4312,1]". */
ivp_status ivp_perm_decomposition(const ivp_perm* perm, char** out);

/* ---- posets --------------------------------------------------------- */

ivp_status ivp_poset_of_perm(const ivp_perm* perm, ivp_poset** out);
/* Parse the JSON poset format and verify it is an interval poset. */
ivp_status ivp_poset_parse_json(const char* json_text, ivp_poset** out);
ivp_status ivp_poset_read_file(const char* path, ivp_poset** out);
void ivp_poset_free(ivp_poset* poset);
int ivp_poset_min_count(const ivp_poset* poset);
int ivp_poset_size(const ivp_poset* poset);
int ivp_poset_rank(const ivp_poset* poset);
ivp_status ivp_poset_to_json(const ivp_poset* poset, char** out);
ivp_status ivp_poset_to_dot(const ivp_poset* poset, char** out);
/* {"lattice":..,"modular":..,"distributive":..,"planar":..,"rank":..,
 *  "levels":..,"fruitful":[..],"tree":..,"binary":..,"binary_tree":..} */
ivp_status ivp_poset_properties_json(const ivp_poset* poset, char** out);
/* The two alternating depth-first-search words of a binary tree poset. */
ivp_status ivp_poset_adfs_words(const ivp_poset* poset, ivp_perm** first, ivp_perm** second);

/* ---- recognition and generators ------------------------------------ */

ivp_status ivp_poset_recognize(const ivp_poset* poset, ivp_block_tree** out);
void ivp_block_tree_free(ivp_block_tree* tree);
ivp_status ivp_block_tree_format(const ivp_block_tree* tree, char** out);
ivp_status ivp_block_tree_count(const ivp_block_tree* tree, uint64_t* out);
ivp_status ivp_block_tree_generators(const ivp_block_tree* tree, ivp_perm_list** out);

void ivp_perm_list_free(ivp_perm_list* list);
int ivp_perm_list_size(const ivp_perm_list* list);
const ivp_perm* ivp_perm_list_get(const ivp_perm_list* list, int index);

/* ---- classification and analysis ----------------------------------- */

/* Both the poset and the pattern criteria, plus their agreement. */
ivp_status ivp_classify_json(const ivp_perm* perm, char** out);
/* Full analysis of one permutation: intervals, decomposition, poset
 * statistics, property flags, classification, generators. */
ivp_status ivp_analyze_json(const ivp_perm* perm, char** out);

/* ---- census --------------------------------------------------------- */

/* Exhaustive walk of S_n (2 <= n <= 10). structural_laws/class_checks/
 * ideal_law toggle the per-permutation laws, the per-class recognition
 * round trip, and the principal-ideal restriction law. */
ivp_status ivp_census_run(int n, int threads, int structural_laws, int class_checks,
                          int ideal_law, ivp_census** out);
void ivp_census_free(ivp_census* census);
ivp_status ivp_census_report_json(const ivp_census* census, char** out);
ivp_status ivp_census_report_text(const ivp_census* census, char** out);
int ivp_census_violation_count(const ivp_census* census);
int ivp_census_identities_pass(const ivp_census* census);

#ifdef __cplusplus
}
#endif

#endif /* IVPOSET_H */
