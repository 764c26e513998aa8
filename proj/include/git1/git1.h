#ifndef GIT1_H
#define GIT1_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32) && defined(GIT1_BUILDING_LIBRARY)
#define GIT1_API __declspec(dllexport)
#elif defined(_WIN32)
#define GIT1_API __declspec(dllimport)
#else
#define GIT1_API __attribute__((visibility("default")))
#endif

typedef enum git1_status {
  GIT1_OK = 0,
  GIT1_ERR_PARSE = 1,       /* malformed JSON or rational */
  GIT1_ERR_VALIDATION = 2,  /* input violates a structural rule or a precondition */
  GIT1_ERR_MATH = 3,        /* an internal mathematical consistency check failed */
  GIT1_ERR_BUDGET = 4,      /* enumeration exceeded GIT1_BUDGET */
  GIT1_ERR_INTERNAL = 5,
  GIT1_ERR_ARGUMENT = 6     /* null pointer or out-of-range argument */
} git1_status;

typedef struct git1_curve git1_curve;

/* Message and error-kind name of the last failure on the calling thread. */
GIT1_API const char* git1_last_error(void);
GIT1_API const char* git1_last_error_kind(void);

GIT1_API const char* git1_version(void);

/* Every char** output is allocated by the library; release with git1_free_string. */
GIT1_API void git1_free_string(char* s);

GIT1_API git1_status git1_curve_from_json(const char* json, int allow_unmarked, git1_curve** out);
GIT1_API void git1_curve_free(git1_curve* c);
GIT1_API git1_status git1_curve_to_json(const git1_curve* c, char** out);
GIT1_API git1_status git1_curve_canonical_form(const git1_curve* c, char** out);

/* chi: "1/2,1/2", a JSON array of rational strings, or {"a": [...]}. */
GIT1_API git1_status git1_stability(const git1_curve* c, const char* chi, char** out_json);
GIT1_API git1_status git1_polytope(const git1_curve* c, char** out_json);
GIT1_API git1_status git1_is_m_stable(const git1_curve* c, int m, int* out);
GIT1_API git1_status git1_is_zu_stable(const git1_curve* c, int* out);
GIT1_API git1_status git1_contract(const git1_curve* c, char** out_json);

/* JSON array of canonical curve objects. max_unmarked is ignored unless allow_unmarked. */
GIT1_API git1_status git1_enumerate(int n, int allow_unmarked, int max_unmarked, char** out_json);

/* Chamber list (tsv != 0: TSV with a "# walls:" header line). */
GIT1_API git1_status git1_chambers(int n, int tsv, char** out);

/* Chamber atlas: one row per (chamber, class) in TSV, or a JSON document. */
GIT1_API git1_status git1_classify(int n, uint64_t seed, int tsv, char** out);

/* mode: "n-1", "n-2" or "n-3". *violations receives the violation count. */
GIT1_API git1_status git1_smyth(const char* mode, const char* chi, int n, int max_unmarked, char** out_json,
                                int* violations);

/* Uniform character window over contractions of the curves in a JSON array. */
GIT1_API git1_status git1_window(const char* curves_json, int m, char** out_json, int* empty);

/* Same over every enumerated m-stable class with at most max_unmarked unmarked components. */
GIT1_API git1_status git1_window_exhaustive(int n, int m, int max_unmarked, char** out_json, int* empty);

/* core: "fold" or "ngon". *all_hold receives 1 when every identity holds. */
GIT1_API git1_status git1_verify_identities(const char* core, int m, int n, int tail_marks, uint64_t seed,
                                            int draws, int symbolic, char** out_json, int* all_hold);

/* Identity report for one coordinatized curve given as JSON. */
GIT1_API git1_status git1_verify_coordinatized(const char* json, char** out_json, int* all_hold);

#ifdef __cplusplus
}
#endif

#endif
