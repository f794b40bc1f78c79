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

// Constructions: uniform q-matroids, q-matroids from submodular functions,
// union, intersection, loop extension and direct sum.

#pragma once

#include <vector>

#include "qmat/core.hpp"

namespace qmat {

// U_{k,n}: rank(A) = min(k, dim A). Throws OutOfRange.
QMatroid Uniform(const FieldPtr& field, int k, int n);

// Integer function on a lattice. The property flags are checked exhaustively
// when the object is built.
class SubmodularFn {
 public:
  SubmodularFn(LatticePtr lattice, std::vector<int> values);

  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Lattice& lattice() const { return *lattice_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  bool nonneg() const { return nonneg_; }
  bool increasing() const { return increasing_; }
  bool submodular() const { return submodular_; }
  bool zero_at_zero() const { return zero_at_zero_; }

 private:
  LatticePtr lattice_;
  std::vector<int> values_;
  bool nonneg_ = true, increasing_ = true, submodular_ = true, zero_at_zero_ = true;
};

// Minimal nonzero C with f(C) < dim C. Needs increasing + submodular;
// throws FlagsMissing otherwise.
std::vector<int> CircuitsFromSubmodular(const SubmodularFn& f);

// rank(A) = min {f(X) + dim A - dim(A ∩ X)} over X ⊆ A, or over every X in the
// lattice when `whole_lattice` is set. Needs f nonneg, increasing,
// submodular and f(0) = 0; throws FlagsMissing otherwise.
QMatroid MatroidFromSubmodular(const SubmodularFn& f, bool whole_lattice = false);

// rank(A) = min over X ⊆ A of r1(X) + r2(X) + dim A - dim X.
// Operands must share field and coordinates; throws MixedLattices.
QMatroid Union(const QMatroid& m1, const QMatroid& m2);

// Brute force: I such that every J ⊆ I is I1 ⊕ I2 with I1 independent in m1
// and I2 independent in m2.
std::vector<int> UnionIndependentsOracle(const QMatroid& m1, const QMatroid& m2);

// (m1* ∨ m2*)*. Throws MixedLattices.
QMatroid Intersection(const QMatroid& m1, const QMatroid& m2);

// Appends the coordinate axis e_{n+1} as a loop: r'(A') = r(π(A')) with π the
// projection onto the first n coordinates.
QMatroid AddLoop(const QMatroid& m);

struct DirectSumContext {
  int n1 = 0, n2 = 0;
  QMatroid m1_ext;  // m1 with n2 trailing loops
  QMatroid m2_ext;  // m2 on the last n2 coordinates, loops on the first n1
  int e1 = 0;       // ⟨e_1..e_n1⟩
  int e2 = 0;       // ⟨e_n1+1..e_n1+n2⟩
};

DirectSumContext MakeDirectSumContext(const QMatroid& m1, const QMatroid& m2);

// m1_ext ∨ m2_ext. Throws MixedFields or LatticeTooLarge.
QMatroid DirectSum(const QMatroid& m1, const QMatroid& m2);

// The subspace A1 ⊕ A2 of the sum's ambient space, A1 ⊆ GF(q)^n1 placed on
// the first coordinates and A2 on the last ones.
Subspace SplitSubspace(const Field& f, const Subspace& a1, const Subspace& a2);

}  // namespace qmat
