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

#include "qmat/construct.hpp"

#include <algorithm>
#include <climits>

#include "qmat/error.hpp"

namespace qmat {

namespace {

void RequireSameLattice(const QMatroid& a, const QMatroid& b) {
  if (!a.lattice().same_as(b.lattice())) {
    throw Error(Errc::kMixedLattices, "operands live on different lattices");
  }
}

}  // namespace

QMatroid Uniform(const FieldPtr& field, int k, int n) {
  if (n < 0 || k < 0 || k > n) throw Error(Errc::kOutOfRange, "uniform needs 0 <= k <= n");
  LatticePtr lat = Lattice::Get(field, n);
  std::vector<int> rank(lat->size());
  for (int i = 0; i < lat->size(); ++i) rank[i] = std::min(k, lat->dim(i));
  return QMatroid(std::move(lat), std::move(rank));
}

SubmodularFn::SubmodularFn(LatticePtr lattice, std::vector<int> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  const Lattice& lat = *lattice_;
  if (static_cast<int>(values_.size()) != lat.size()) {
    throw Error(Errc::kTableSizeMismatch, "function table does not match lattice size");
  }
  zero_at_zero_ = values_[0] == 0;
  for (int a = 0; a < lat.size(); ++a) {
    nonneg_ &= values_[a] >= 0;
    for (int l : lat.covers_down(a)) increasing_ &= values_[l] <= values_[a];
  }
  for (int a = 0; a < lat.size() && submodular_; ++a) {
    for (int b = a + 1; b < lat.size(); ++b) {
      if (values_[lat.join(a, b)] + values_[lat.meet(a, b)] > values_[a] + values_[b]) {
        submodular_ = false;
        break;
      }
    }
  }
}

std::vector<int> CircuitsFromSubmodular(const SubmodularFn& f) {
  if (!f.increasing() || !f.submodular()) {
    throw Error(Errc::kFlagsMissing, "circuits need an increasing submodular function");
  }
  const Lattice& lat = f.lattice();
  std::vector<char> candidate(lat.size(), 0);
  for (int a = 1; a < lat.size(); ++a) candidate[a] = f(a) < lat.dim(a);
  std::vector<int> out;
  for (int a = 1; a < lat.size(); ++a) {
    if (!candidate[a]) continue;
    bool minimal = true;
    for (int b : lat.down_set(a)) {
      if (b != a && candidate[b]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

QMatroid MatroidFromSubmodular(const SubmodularFn& f, bool whole_lattice) {
  if (!f.nonneg() || !f.increasing() || !f.submodular() || !f.zero_at_zero()) {
    throw Error(Errc::kFlagsMissing,
                "rank construction needs a nonnegative increasing submodular f with f(0) = 0");
  }
  const Lattice& lat = f.lattice();
  std::vector<int> rank(lat.size());
  for (int a = 0; a < lat.size(); ++a) {
    int best = INT_MAX;
    if (whole_lattice) {
      for (int x = 0; x < lat.size(); ++x)
        best = std::min(best, f(x) + lat.dim(a) - lat.dim(lat.meet(a, x)));
    } else {
      for (int x : lat.down_set(a)) best = std::min(best, f(x) + lat.dim(a) - lat.dim(x));
    }
    rank[a] = best;
  }
  return QMatroid(f.lattice_ptr(), std::move(rank));
}

QMatroid Union(const QMatroid& m1, const QMatroid& m2) {
  RequireSameLattice(m1, m2);
  const Lattice& lat = m1.lattice();
  std::vector<int> rank(lat.size());
  for (int a = 0; a < lat.size(); ++a) {
    int best = INT_MAX;
    for (int x : lat.down_set(a))
      best = std::min(best, m1.rank(x) + m2.rank(x) + lat.dim(a) - lat.dim(x));
    rank[a] = best;
  }
  return QMatroid(m1.lattice_ptr(), std::move(rank));
}

std::vector<int> UnionIndependentsOracle(const QMatroid& m1, const QMatroid& m2) {
  RequireSameLattice(m1, m2);
  const Lattice& lat = m1.lattice();
  std::vector<char> splits(lat.size(), 0);
  for (int j = 0; j < lat.size(); ++j) {
    const std::vector<int>& sub = lat.down_set(j);
    for (int i1 : sub) {
      if (m1.rank(i1) != lat.dim(i1)) continue;
      for (int i2 : sub) {
        if (m2.rank(i2) != lat.dim(i2)) continue;
        if (lat.dim(i1) + lat.dim(i2) != lat.dim(j)) continue;
        if (lat.join(i1, i2) == j) {
          splits[j] = 1;
          break;
        }
      }
      if (splits[j]) break;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < lat.size(); ++i) {
    bool all = true;
    for (int j : lat.down_set(i)) all &= static_cast<bool>(splits[j]);
    if (all) out.push_back(i);
  }
  return out;
}

QMatroid Intersection(const QMatroid& m1, const QMatroid& m2) {
  RequireSameLattice(m1, m2);
  return Dual(Union(Dual(m1), Dual(m2)));
}

QMatroid AddLoop(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  const int n = lat.n();
  LatticePtr big = Lattice::Get(lat.field_ptr(), n + 1);
  Matrix proj(n + 1, n);
  for (int i = 0; i < n; ++i) proj.at(i, i) = 1;
  std::vector<int> rank(big->size());
  for (int a = 0; a < big->size(); ++a) {
    const Subspace image =
        Subspace::Span(lat.field(), n, linalg::Multiply(lat.field(), big->space(a).basis(), proj));
    rank[a] = m.rank(lat.index_of(image));
  }
  return QMatroid(std::move(big), std::move(rank));
}

DirectSumContext MakeDirectSumContext(const QMatroid& m1, const QMatroid& m2) {
  if (!(m1.field() == m2.field())) throw Error(Errc::kMixedFields, "summands over different fields");
  const int n1 = m1.n(), n2 = m2.n();
  QMatroid a = m1;
  for (int i = 0; i < n2; ++i) a = AddLoop(a);
  QMatroid b = m2;
  for (int i = 0; i < n1; ++i) b = AddLoop(b);
  std::vector<int> perm(n1 + n2);
  for (int i = 0; i < n2; ++i) perm[i] = n1 + i;
  for (int j = 0; j < n1; ++j) perm[n2 + j] = j;
  b = Transform(b, LatticeIso::FromPermutation(m1.lattice().field_ptr(), perm));
  const Lattice& lat = a.lattice();
  Matrix e1(n1, n1 + n2), e2(n2, n1 + n2);
  for (int i = 0; i < n1; ++i) e1.at(i, i) = 1;
  for (int i = 0; i < n2; ++i) e2.at(i, n1 + i) = 1;
  DirectSumContext ctx{n1, n2, a, b, 0, 0};
  ctx.e1 = lat.index_of(Subspace::Span(lat.field(), n1 + n2, e1));
  ctx.e2 = lat.index_of(Subspace::Span(lat.field(), n1 + n2, e2));
  return ctx;
}

QMatroid DirectSum(const QMatroid& m1, const QMatroid& m2) {
  DirectSumContext ctx = MakeDirectSumContext(m1, m2);
  return Union(ctx.m1_ext, ctx.m2_ext);
}

Subspace SplitSubspace(const Field& f, const Subspace& a1, const Subspace& a2) {
  const int n1 = a1.n(), n2 = a2.n();
  Matrix m(a1.dim() + a2.dim(), n1 + n2);
  for (int r = 0; r < a1.dim(); ++r)
    for (int c = 0; c < n1; ++c) m.at(r, c) = a1.at(r, c);
  for (int r = 0; r < a2.dim(); ++r)
    for (int c = 0; c < n2; ++c) m.at(a1.dim() + r, n1 + c) = a2.at(r, c);
  return Subspace::Span(f, n1 + n2, std::move(m));
}

}  // namespace qmat
