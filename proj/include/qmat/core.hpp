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

// q-matroids as dense rank tables over an enumerated subspace lattice.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmat/lattice.hpp"

namespace qmat {

// Violations found by an axiom scan. Each witness is a list of lattice
// indices: (A) for R1, (A, B) with A ⊆ B for R2, (A, B) for R3; (C) for C1,
// (C1, C2) for C2 and (C1, C2, X) for C3.
struct AxiomReport {
  std::vector<std::vector<int>> r1, r2, r3;
  std::vector<std::vector<int>> c1, c2, c3;

  bool ok() const {
    return r1.empty() && r2.empty() && r3.empty() && c1.empty() && c2.empty() && c3.empty();
  }
  // Human-readable summary, listing at most `limit` witnesses per axiom.
  std::string Render(const Lattice& lat, int limit = 10) const;
};

class QMatroid {
 public:
  // Throws TableSizeMismatch; does not check the axioms.
  QMatroid(LatticePtr lattice, std::vector<int> rank);
  // As above, then throws AxiomsFailed with the rendered report.
  static QMatroid Checked(LatticePtr lattice, std::vector<int> rank);

  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Lattice& lattice() const { return *lattice_; }
  const Field& field() const { return lattice_->field(); }
  int n() const { return lattice_->n(); }
  int size() const { return lattice_->size(); }

  int rank(int i) const { return rank_[i]; }
  int rank(const Subspace& s) const { return rank_[lattice_->index_of(s)]; }
  int rank() const { return rank_.back(); }
  const std::vector<int>& ranks() const { return rank_; }

  // Same field, same ambient dimension, same table.
  bool operator==(const QMatroid& o) const;

 private:
  LatticePtr lattice_;
  std::vector<int> rank_;
};

AxiomReport CheckRankAxioms(const Lattice& lat, const std::vector<int>& rank);
inline AxiomReport CheckRankAxioms(const QMatroid& m) {
  return CheckRankAxioms(m.lattice(), m.ranks());
}
AxiomReport CheckCircuitAxioms(const Lattice& lat, const std::vector<int>& circuits);

struct DerivedFamilies {
  std::vector<int> independent, bases, circuits, flats, hyperplanes, spanning;
  std::vector<int> loops;  // rank-0 one-spaces
  int loopspace = 0;       // join of the loops
};

// Throws AxiomsFailed.
DerivedFamilies Derive(const QMatroid& m);
// Circuits of the dual, as indices into m's lattice.
std::vector<int> Cocircuits(const QMatroid& m);

// Independent spaces are those containing no circuit; rank(A) is the largest
// dimension of an independent subspace of A.
QMatroid FromCircuits(LatticePtr lattice, const std::vector<int>& circuits);

// r*(A) = dim A - r(E) + r(A^⊥).
QMatroid Dual(const QMatroid& m);

// M|X on GF(q)^dim X. Coordinate vector e_i maps to row i of X's RREF basis.
QMatroid Restrict(const QMatroid& m, int x);
// M/X on GF(q)^(n - dim X). Coordinate e_i maps to the i-th non-pivot
// coordinate vector of X's RREF, which spans a complement of X.
QMatroid Contract(const QMatroid& m, int x);

// Image of m under T: rank'(T(A)) = rank(A).
QMatroid Transform(const QMatroid& m, const LatticeIso& t);

// Default cap on |GL(n,q)| for the isomorphism search.
inline constexpr std::uint64_t kIsoSearchCap = 10'000'000;

// Exhaustive backtracking search over GL(n,q) for T with
// rank1(A) = rank2(T(A)). Linear maps only; field automorphisms are not
// tried. Throws SearchCapExceeded when |GL(n,q)| exceeds `cap`.
std::optional<LatticeIso> FindIsomorphism(const QMatroid& a, const QMatroid& b,
                                          std::uint64_t cap = kIsoSearchCap);
inline bool IsIsomorphic(const QMatroid& a, const QMatroid& b) {
  return FindIsomorphism(a, b).has_value();
}

struct ColouredCover {
  int lower;
  int upper;
  bool red;  // rank goes up
};

// Every cover of the lattice, ordered by (lower, upper).
std::vector<ColouredCover> Bicolour(const QMatroid& m);

}  // namespace qmat
