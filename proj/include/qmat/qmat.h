/* Copyright 2026 The qmat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libqmat.
 *
 * Every function returns a qmat_status. On failure the message of the last
 * error on the calling thread is available from qmat_last_error(). Strings
 * returned through char** are owned by the caller and released with
 * qmat_string_free(); handles are released with qmat_matroid_free().
 * Subspaces are written as comma-separated basis rows ("100,011"), "0" for
 * the zero space. */

#ifndef QMAT_QMAT_H_
#define QMAT_QMAT_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmat_status {
  QMAT_OK = 0,
  QMAT_E_NON_PRIME_CHARACTERISTIC,
  QMAT_E_REDUCIBLE_MODULUS,
  QMAT_E_SIZE_CAP_EXCEEDED,
  QMAT_E_DIVISION_BY_ZERO,
  QMAT_E_MIXED_FIELDS,
  QMAT_E_LATTICE_TOO_LARGE,
  QMAT_E_COLUMN_COUNT_MISMATCH,
  QMAT_E_MIXED_LATTICES,
  QMAT_E_OUT_OF_RANGE,
  QMAT_E_SINGULAR_MATRIX,
  QMAT_E_NOT_NESTED,
  QMAT_E_TABLE_SIZE_MISMATCH,
  QMAT_E_AXIOMS_FAILED,
  QMAT_E_SUBSPACE_NOT_IN_LATTICE,
  QMAT_E_SEARCH_CAP_EXCEEDED,
  QMAT_E_FLAGS_MISSING,
  QMAT_E_DIMENSION_MISMATCH,
  QMAT_E_ELEMENT_IN_BASE_FIELD,
  QMAT_E_WRONG_AMBIENT,
  QMAT_E_TOO_LARGE_FOR_DIAGRAM,
  QMAT_E_PARSE,
  QMAT_E_IO,
  QMAT_E_INVALID_ARGUMENT,
  QMAT_E_INTERNAL
} qmat_status;

typedef struct qmat_matroid qmat_matroid;

const char* qmat_last_error(void);
const char* qmat_status_name(qmat_status status);
void qmat_string_free(char* s);
void qmat_matroid_free(qmat_matroid* m);

/* Enumeration cap on the number of subspaces; 0 restores the default. */
void qmat_set_lattice_cap(uint64_t cap);

/* Parsing checks the file format and the rank axioms. */
qmat_status qmat_read(const char* text, qmat_matroid** out);
qmat_status qmat_read_file(const char* path, qmat_matroid** out);
qmat_status qmat_write(const qmat_matroid* m, char** out);
qmat_status qmat_write_file(const qmat_matroid* m, const char* path);

qmat_status qmat_field_order(const qmat_matroid* m, uint32_t* q);
qmat_status qmat_dimension(const qmat_matroid* m, int* n);
qmat_status qmat_rank(const qmat_matroid* m, int* rank);
qmat_status qmat_rank_of(const qmat_matroid* m, const char* subspace, int* rank);
qmat_status qmat_equal(const qmat_matroid* a, const qmat_matroid* b, int* equal);
qmat_status qmat_is_isomorphic(const qmat_matroid* a, const qmat_matroid* b, int* iso);

/* Axiom report for a table file; *ok is 1 when all axioms hold. Format
 * errors are returned as QMAT_E_PARSE. */
qmat_status qmat_check(const char* text, int* ok, char** report);
qmat_status qmat_families(const qmat_matroid* m, char** out);

qmat_status qmat_uniform(uint32_t q, int k, int n, qmat_matroid** out);
qmat_status qmat_dual(const qmat_matroid* m, qmat_matroid** out);
qmat_status qmat_restrict(const qmat_matroid* m, const char* subspace, qmat_matroid** out);
qmat_status qmat_contract(const qmat_matroid* m, const char* subspace, qmat_matroid** out);
qmat_status qmat_union(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out);
qmat_status qmat_intersect(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out);
qmat_status qmat_sum(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out);
qmat_status qmat_add_loop(const qmat_matroid* m, qmat_matroid** out);
/* Text in the repmatrix format. */
qmat_status qmat_from_matrix(const char* text, qmat_matroid** out);

/* Bicoloured Hasse diagram; cap 0 means the default cap. */
qmat_status qmat_dot(const qmat_matroid* m, size_t cap, char** out);

/* Generates the isomorphism classes over GF(q)^n. When out_dir is not NULL
 * one file per class is written there; over F_2 classes are named and put in
 * catalogue coordinates. When golden_dir is not NULL each named class is
 * compared with <golden_dir>/<name>.qm. *ok is 1 when every class matches a
 * catalogue entry and every check passes. */
qmat_status qmat_catalogue(uint32_t q, int n, const char* out_dir, const char* golden_dir,
                           int* ok, char** report);

qmat_status qmat_nonrep(int m_max, int shape_m_max, int* ok, char** report);
/* Circuit and hyperplane relations and the conjecture checks for m. */
qmat_status qmat_connect(const qmat_matroid* m, char** report);
/* Conjecture checks on `count` random q-matroids on F_2^n. */
qmat_status qmat_connect_random(int n, int count, uint64_t seed, char** report);
qmat_status qmat_demo_nonunique(int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif  /* QMAT_QMAT_H_ */
