// Copyright 2026 The qmat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Representable q-matroids and the two-block rank-2 family on F_2^4.
//
// Throughout the F_2^4 part, E1 = ⟨1000,0100⟩ and E2 = ⟨0010,0001⟩. Six
// more 2-spaces meeting both trivially are labelled
//
//   A = ⟨1010,0101⟩  B = ⟨1011,0110⟩  C = ⟨1001,0111⟩
//   D = ⟨1011,0101⟩  F = ⟨1001,0110⟩  G = ⟨1010,0111⟩
//
// so that {E1,E2,A,B,C} and {E1,E2,D,F,G} are spreads, and for
// G = [1 α 0 0; 0 0 1 β] the determinant of G applied to each space is the
// polynomial listed in DeterminantProfile.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmat/core.hpp"

namespace qmat {

// A k x n matrix over GF(p^m), acting on subspaces of GF(p)^n.
struct RepMatrix {
  FieldPtr base;  // GF(p)
  FieldPtr ext;   // GF(p^m)
  Matrix g;
};

// Throws DimensionMismatch when k > n or when `ext` is not an extension of the
// prime field `base`.
RepMatrix MakeRepMatrix(FieldPtr base, FieldPtr ext, Matrix g);

// rank(A) = rank of G Y over the extension, Y a column basis of A.
QMatroid FromMatrix(const RepMatrix& rep);
// Same rank, computed with a caller-chosen basis of A (rows of `basis`).
int RepRank(const RepMatrix& rep, const Matrix& basis);

// repmatrix q=<p> m=<m> k=<k> n=<n>, then k rows of extension-field digit
// strings separated by spaces.
std::string WriteRepMatrix(const RepMatrix& rep);
RepMatrix ReadRepMatrix(std::string_view text);

// [1 α 0 0; 0 0 1 β] over `ext`.
RepMatrix TwoBlockMatrix(const FieldPtr& ext, Elem alpha, Elem beta);

struct DeterminantProfile {
  Elem alpha = 0, beta = 0;
  Elem a = 0, b = 0, c = 0, d = 0, f = 0, g = 0;

  // Labels of the vanishing determinants, in the order A B C D F G.
  std::string vanishing() const;
  // E1, E2 and one circuit per vanishing determinant.
  int circuit_count() const { return 2 + static_cast<int>(vanishing().size()); }
};

// A = α+β, B = αβ+α+1, C = αβ+β+1, D = αβ+α+β, F = αβ+1, G = α+β+1.
// Needs characteristic 2 (OutOfRange) and α, β outside GF(2)
// (ElementInBaseField).
DeterminantProfile Profile(const Field& ext, Elem alpha, Elem beta);

// Number of 2-dimensional circuits.
int TwoDimCircuitCount(const QMatroid& m);

// Index of a named 2-space of F_2^4: "E1", "E2", or one of A B C D F G.
int SpreadSpace(const Lattice& f2_4, std::string_view label);

// Rank-2 q-matroid on F_2^4 whose 2-dimensional circuits are E1, E2 and the
// listed spread labels, with every 3-space containing none of them as a
// 3-dimensional circuit.
QMatroid SpreadVariant(const std::vector<std::string>& extra);

// The variant with circuits E1, E2, A, B: four 2-dimensional circuits.
QMatroid FourCircuitMatroid();

struct NonrepDegree {
  int m = 0;
  int pairs = 0;
  std::map<int, int> counts;  // circuit count -> number of (α, β)
  int disagreements = 0;      // profile count != full construction count
  int identity_failures = 0;  // (A=B=0 and C≠0) or (D=F=0 and G≠0)
  int exclusivity_failures = 0;  // two 2-dim circuits meeting in dimension 1
  bool shape_checked = false;
  long long shape_matrices = 0;  // RREF 2x4 matrices with circuits E1, E2
  int shape_failures = 0;
};

struct NonrepReport {
  int m_max = 0;
  int shape_m_max = 0;
  std::vector<NonrepDegree> degrees;

  bool four_found() const;
  // Counts within {2,3,5}, no disagreement, no identity or shape failure.
  bool ok() const;
  std::string Render() const;
};

// For every m ≤ m_max and every α, β in GF(2^m) \ GF(2), compares the
// profile count with the count from FromMatrix + Derive. For m ≤ shape_m_max
// it also checks that every rank-2 RREF representation with no loops and with
// E1, E2 dependent has the shape [1 α 0 0; 0 0 1 β]. The search corroborates,
// it does not prove, degree-independent statements.
NonrepReport NonrepSearch(int m_max, int shape_m_max = 4);

// True when some two-block representation over GF(2^m), m ≤ m_max, is
// isomorphic to `target` with E1, E2 kept fixed (same rank table).
bool HasTwoBlockRepresentation(const QMatroid& target, int m_max);

}  // namespace qmat
