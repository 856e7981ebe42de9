/* finalg: a workbench for finite algebras, congruence lattices, term
 * conditions, free algebras and clones.
 *
 * C API: opaque handles plus status codes. Every function that can fail takes
 * a char** err slot; on failure it is filled with a heap-allocated message
 * (release with finalg_string_free). Strings returned through out-parameters
 * are heap-allocated as well. Handles are immutable after creation, so
 * concurrent reads from multiple threads are safe.
 */
#ifndef FINALG_H
#define FINALG_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FINALG_API
#define FINALG_API __attribute__((visibility("default")))
#endif

typedef struct finalg_algebra finalg_algebra;

/* Status values double as CLI exit codes. */
typedef enum finalg_status {
    FINALG_OK = 0,                /* verdict computed (possibly "false") */
    FINALG_ERR_USAGE = 1,         /* bad arguments or parse errors */
    FINALG_ERR_RESOURCE = 2,      /* a size guard refused the computation */
    FINALG_ERR_PRECONDITION = 3   /* a stated precondition failed */
} finalg_status;

FINALG_API void finalg_string_free(char* s);

/* --- algebra handles ---------------------------------------------------- */

/* Parse the algebra file format (see finalg_algebra_print for the grammar). */
FINALG_API finalg_status finalg_algebra_parse(const char* text, finalg_algebra** out, char** err);

/* Build a catalog algebra from a whitespace-separated spec, e.g.
 * "set 2", "pointed_set 2", "vector_space 3", "affine_space 2",
 * "semilattice 3", "matrix_power 2 set 2",
 * "semiprojection 2 shifted set 3". */
FINALG_API finalg_status finalg_algebra_build(const char* spec, finalg_algebra** out, char** err);

/* Canonical file-format text:
 *   algebra <name>
 *   size <k>
 *   op <name> <arity>
 *   <k^arity entries, row-major, first argument most significant>
 * '#' starts a comment. */
FINALG_API char* finalg_algebra_print(const finalg_algebra* a);
FINALG_API int finalg_algebra_size(const finalg_algebra* a);
FINALG_API void finalg_algebra_free(finalg_algebra* a);

/* --- commands (JSON report out) ----------------------------------------- */
/* Partitions on this interface use block syntax over element indices,
 * e.g. "0,1|2". */

FINALG_API finalg_status finalg_cmd_info(const finalg_algebra* a, char** json_out, char** err);
/* mode: "", "coatoms", "atoms" or "sdmeet" */
FINALG_API finalg_status finalg_cmd_con(const finalg_algebra* a, const char* mode, char** json_out,
                                        char** err);
FINALG_API finalg_status finalg_cmd_abelian(const finalg_algebra* a, char** json_out, char** err);
FINALG_API finalg_status finalg_cmd_strongly_abelian(const finalg_algebra* a, const char* theta,
                                                     char** json_out, char** err);
FINALG_API finalg_status finalg_cmd_obstruction(const finalg_algebra* a, const char* theta,
                                                int arity_bound, char** json_out, char** err);
FINALG_API finalg_status finalg_cmd_free(const finalg_algebra* generator, int n, char** json_out,
                                         char** err);
FINALG_API finalg_status finalg_cmd_member(const finalg_algebra* candidate,
                                           const finalg_algebra* generator, char** json_out,
                                           char** err);
FINALG_API finalg_status finalg_cmd_is_free(const finalg_algebra* candidate,
                                            const finalg_algebra* generator, char** json_out,
                                            char** err);
FINALG_API finalg_status finalg_cmd_spectrum(const finalg_algebra* generator, int n,
                                             char** json_out, char** err);
FINALG_API finalg_status finalg_cmd_clone(const finalg_algebra* generator, int n, int count_only,
                                          char** json_out, char** err);
FINALG_API finalg_status finalg_cmd_classify(const finalg_algebra* a, int arity_bound,
                                             char** json_out, char** err);

/* --- lemma drivers ------------------------------------------------------ */

FINALG_API finalg_status finalg_verify_nonaffine(const finalg_algebra* a, const char* theta,
                                                 int arity_bound, char** json_out, char** err);
FINALG_API finalg_status finalg_verify_3coatoms(const finalg_algebra* generator, int m,
                                                char** json_out, char** err);
FINALG_API finalg_status finalg_verify_freely(const finalg_algebra* generator,
                                              const finalg_algebra* member, char** json_out,
                                              char** err);
FINALG_API finalg_status finalg_verify_abelian_scaffold(const finalg_algebra* generator,
                                                        char** json_out, char** err);
FINALG_API finalg_status finalg_verify_injective(const finalg_algebra* a, char** json_out,
                                                 char** err);
FINALG_API finalg_status finalg_verify_smallfree(int n, char** json_out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* FINALG_H */
