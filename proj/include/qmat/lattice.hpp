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

// The subspace lattice of GF(q)^n.
//
// Subspaces are held as canonical RREF basis matrices, so equal subspaces are
// bit-identical. A Lattice enumerates every subspace once, ordered by
// dimension and then lexicographically by basis entries; that index order is
// the contract for rank tables and for the text file formats.
//
// Duality uses the standard dot product x.y = sum x_i y_i.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmat/gf.hpp"

namespace qmat {

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Elem at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::span<const Elem> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }

  static Matrix Identity(int n);
  bool operator==(const Matrix&) const = default;
};

namespace linalg {

// In-place reduced row echelon form. Returns the rank; `pivots` (optional)
// receives the pivot column of each nonzero row. Zero rows end up at the
// bottom.
int RowReduce(const Field& f, Matrix& m, std::vector<int>* pivots = nullptr);
int Rank(const Field& f, Matrix m);
Matrix Multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix Transpose(const Matrix& a);
std::optional<Matrix> Inverse(const Field& f, const Matrix& a);

}  // namespace linalg

class Subspace {
 public:
  // The zero subspace of GF(q)^n.
  explicit Subspace(int n = 0) : n_(n), dim_(0) {}

  // Row space of `rows`, canonicalised. Throws ColumnCountMismatch when the
  // matrix width differs from n.
  static Subspace Span(const Field& f, int n, Matrix rows);
  // Whole space GF(q)^n.
  static Subspace Full(int n);

  int n() const { return n_; }
  int dim() const { return dim_; }
  Elem at(int r, int c) const { return rows_[static_cast<std::size_t>(r) * n_ + c]; }
  std::span<const Elem> row(int r) const {
    return {rows_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }
  Matrix basis() const;
  const std::vector<Elem>& entries() const { return rows_; }

  // Canonical order: dimension first, then lexicographic on the basis rows.
  std::strong_ordering operator<=>(const Subspace& o) const;
  bool operator==(const Subspace& o) const = default;

 private:
  int n_;
  int dim_;
  std::vector<Elem> rows_;  // dim_ x n_, row-major, RREF
};

Subspace Join(const Field& f, const Subspace& a, const Subspace& b);
// A ∩ B as (A^⊥ + B^⊥)^⊥.
Subspace Meet(const Field& f, const Subspace& a, const Subspace& b);
// A ∩ B by Zassenhaus elimination on [A A; B 0]; independent of Perp.
Subspace MeetByElimination(const Field& f, const Subspace& a, const Subspace& b);
Subspace Perp(const Field& f, const Subspace& a);
// True when `inner` ⊆ `outer`.
bool IsSubspaceOf(const Field& f, const Subspace& inner, const Subspace& outer);

// "100,010" <-> rows of base-q digits. The zero space formats as "0".
std::string FormatSubspace(const Field& f, const Subspace& s);
Subspace ParseSubspace(const Field& f, int n, std::string_view text);

// Number of k-dimensional subspaces of GF(q)^n; throws OutOfRange on bad k or
// on 64-bit overflow.
std::uint64_t GaussianBinomial(int n, int k, std::uint64_t q);

// Enumeration size cap. Defaults to 10^7 subspaces; the QMAT_LATTICE_CAP
// environment variable overrides the default, SetLatticeCap overrides both.
std::uint64_t LatticeCap();
void SetLatticeCap(std::uint64_t cap);

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

class Lattice {
 public:
  // Shared, cached enumeration of L(GF(q)^n).
  static LatticePtr Get(const FieldPtr& field, int n);
  // Fresh enumeration without touching the cache.
  static LatticePtr Enumerate(const FieldPtr& field, int n);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(spaces_.size()); }
  int zero() const { return 0; }
  int top() const { return size() - 1; }

  const Subspace& space(int i) const { return spaces_[i]; }
  int dim(int i) const { return spaces_[i].dim(); }
  std::optional<int> find(const Subspace& s) const;
  // Throws SubspaceNotInLattice.
  int index_of(const Subspace& s) const;
  int parse(std::string_view text) const { return index_of(ParseSubspace(*field_, n_, text)); }
  std::string format(int i) const { return FormatSubspace(*field_, spaces_[i]); }

  // Empty when k is outside [0, n].
  const std::vector<int>& bucket(int k) const;
  const std::vector<int>& covers_up(int i) const { return covers_up_[i]; }
  const std::vector<int>& covers_down(int i) const { return covers_down_[i]; }
  int perp(int i) const { return perp_[i]; }

  // Table-backed lattice operations (built on first use).
  int join(int a, int b) const;
  int meet(int a, int b) const;
  // True when space a ⊆ space b.
  bool leq(int a, int b) const;
  // All subspaces of a, canonical order.
  const std::vector<int>& down_set(int a) const;
  // {X : a ⊆ X ⊆ b} in canonical order; throws NotNested.
  std::vector<int> interval(int a, int b) const;

  bool same_as(const Lattice& o) const { return n_ == o.n_ && *field_ == *o.field_; }

 private:
  Lattice(FieldPtr field, int n);
  void build_tables() const;

  FieldPtr field_;
  int n_;
  std::vector<Subspace> spaces_;
  std::vector<std::vector<int>> buckets_;
  std::vector<std::vector<int>> covers_up_;
  std::vector<std::vector<int>> covers_down_;
  std::vector<int> perp_;

  mutable std::once_flag tables_once_;
  mutable std::vector<std::int32_t> join_;
  mutable std::vector<std::int32_t> meet_;
  mutable std::vector<std::vector<std::uint64_t>> below_;  // below_[b] bit a: a ⊆ b
  mutable std::vector<std::vector<int>> down_sets_;
};

// A lattice isomorphism induced by an invertible n x n matrix T. A subspace
// with basis rows B maps to the row space of B * T.
class LatticeIso {
 public:
  // Throws SingularMatrix.
  LatticeIso(FieldPtr field, Matrix t);

  static LatticeIso Identity(FieldPtr field, int n);
  // Coordinate i moves to coordinate perm[i].
  static LatticeIso FromPermutation(FieldPtr field, const std::vector<int>& perm);
  static LatticeIso Random(FieldPtr field, int n, std::mt19937_64& rng);

  int n() const { return t_.rows; }
  const Matrix& matrix() const { return t_; }
  Subspace apply(const Subspace& s) const;
  LatticeIso inverse() const;
  LatticeIso then(const LatticeIso& next) const;  // x -> next(this(x))
  // Index permutation on `lat`: result[i] = index of apply(space i).
  std::vector<int> permutation(const Lattice& lat) const;

 private:
  FieldPtr field_;
  Matrix t_;
};

// |GL(n, q)|, saturating at UINT64_MAX.
std::uint64_t GeneralLinearOrder(int n, std::uint64_t q);

}  // namespace qmat
