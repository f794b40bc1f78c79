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

#include "qmat/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qmat/error.hpp"

namespace qmat {

namespace {

void RenderList(std::ostringstream& os, const Lattice& lat, const char* name,
                const std::vector<std::vector<int>>& items, int limit) {
  if (items.empty()) return;
  os << name << ": " << items.size() << " violation(s)\n";
  int shown = 0;
  for (const auto& w : items) {
    if (shown++ == limit) {
      os << "  ...\n";
      break;
    }
    os << " ";
    for (int i : w) os << " <" << lat.format(i) << ">";
    os << "\n";
  }
}

}  // namespace

std::string AxiomReport::Render(const Lattice& lat, int limit) const {
  std::ostringstream os;
  RenderList(os, lat, "R1", r1, limit);
  RenderList(os, lat, "R2", r2, limit);
  RenderList(os, lat, "R3", r3, limit);
  RenderList(os, lat, "C1", c1, limit);
  RenderList(os, lat, "C2", c2, limit);
  RenderList(os, lat, "C3", c3, limit);
  if (ok()) os << "ok\n";
  return os.str();
}

QMatroid::QMatroid(LatticePtr lattice, std::vector<int> rank)
    : lattice_(std::move(lattice)), rank_(std::move(rank)) {
  if (static_cast<int>(rank_.size()) != lattice_->size()) {
    throw Error(Errc::kTableSizeMismatch,
                "rank table has " + std::to_string(rank_.size()) + " entries, lattice has " +
                    std::to_string(lattice_->size()));
  }
}

QMatroid QMatroid::Checked(LatticePtr lattice, std::vector<int> rank) {
  QMatroid m(std::move(lattice), std::move(rank));
  AxiomReport rep = CheckRankAxioms(m);
  if (!rep.ok()) throw Error(Errc::kAxiomsFailed, "\n" + rep.Render(m.lattice()));
  return m;
}

bool QMatroid::operator==(const QMatroid& o) const {
  return lattice_->same_as(*o.lattice_) && rank_ == o.rank_;
}

AxiomReport CheckRankAxioms(const Lattice& lat, const std::vector<int>& rank) {
  if (static_cast<int>(rank.size()) != lat.size()) {
    throw Error(Errc::kTableSizeMismatch, "rank table does not match lattice size");
  }
  AxiomReport rep;
  const int size = lat.size();
  for (int a = 0; a < size; ++a) {
    if (rank[a] < 0 || rank[a] > lat.dim(a)) rep.r1.push_back({a});
  }
  for (int b = 0; b < size; ++b) {
    for (int a : lat.down_set(b)) {
      if (rank[a] > rank[b]) rep.r2.push_back({a, b});
    }
  }
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (rank[lat.join(a, b)] + rank[lat.meet(a, b)] > rank[a] + rank[b]) {
        rep.r3.push_back({a, b});
      }
    }
  }
  return rep;
}

AxiomReport CheckCircuitAxioms(const Lattice& lat, const std::vector<int>& circuits) {
  AxiomReport rep;
  for (int c : circuits) {
    if (c == lat.zero()) rep.c1.push_back({c});
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && lat.leq(circuits[i], circuits[j])) rep.c2.push_back({circuits[i], circuits[j]});
    }
  }
  const int n = lat.n();
  if (n == 0) return rep;
  const std::vector<int>& hyper = lat.bucket(n - 1);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const int sum = lat.join(circuits[i], circuits[j]);
      for (int x : hyper) {
        const int target = lat.meet(sum, x);
        bool found = false;
        for (int c : circuits) {
          if (lat.leq(c, target)) {
            found = true;
            break;
          }
        }
        if (!found) rep.c3.push_back({circuits[i], circuits[j], x});
      }
    }
  }
  return rep;
}

DerivedFamilies Derive(const QMatroid& m) {
  AxiomReport rep = CheckRankAxioms(m);
  if (!rep.ok()) throw Error(Errc::kAxiomsFailed, "\n" + rep.Render(m.lattice()));
  const Lattice& lat = m.lattice();
  const int size = lat.size();
  DerivedFamilies d;
  std::vector<char> indep(size), flat(size);
  for (int a = 0; a < size; ++a) {
    indep[a] = m.rank(a) == lat.dim(a);
    if (indep[a]) d.independent.push_back(a);
    if (m.rank(a) == m.rank()) d.spanning.push_back(a);
  }
  for (int a = 0; a < size; ++a) {
    if (indep[a]) {
      bool maximal = true;
      for (int u : lat.covers_up(a)) maximal &= !indep[u];
      if (maximal) d.bases.push_back(a);
    } else {
      bool minimal = true;
      for (int l : lat.covers_down(a)) minimal &= static_cast<bool>(indep[l]);
      if (minimal) d.circuits.push_back(a);
    }
    bool is_flat = true;
    for (int u : lat.covers_up(a)) is_flat &= m.rank(u) > m.rank(a);
    flat[a] = is_flat;
    if (is_flat) d.flats.push_back(a);
  }
  for (int a : d.flats) {
    if (a == lat.top()) continue;
    bool maximal = true;
    for (int b : d.flats) {
      if (b != a && b != lat.top() && lat.leq(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) d.hyperplanes.push_back(a);
  }
  d.loopspace = lat.zero();
  if (lat.n() > 0) {
    for (int x : lat.bucket(1)) {
      if (m.rank(x) == 0) {
        d.loops.push_back(x);
        d.loopspace = lat.join(d.loopspace, x);
      }
    }
  }
  return d;
}

std::vector<int> Cocircuits(const QMatroid& m) { return Derive(Dual(m)).circuits; }

QMatroid FromCircuits(LatticePtr lattice, const std::vector<int>& circuits) {
  const Lattice& lat = *lattice;
  std::vector<char> is_circuit(lat.size(), 0), indep(lat.size(), 0);
  for (int c : circuits) is_circuit[c] = 1;
  std::vector<int> rank(lat.size(), 0);
  for (int a = 0; a < lat.size(); ++a) {
    bool ok = !is_circuit[a];
    int best = 0;
    for (int l : lat.covers_down(a)) {
      ok &= static_cast<bool>(indep[l]);
      best = std::max(best, rank[l]);
    }
    indep[a] = ok;
    rank[a] = ok ? lat.dim(a) : best;
  }
  return QMatroid(std::move(lattice), std::move(rank));
}

QMatroid Dual(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  std::vector<int> rank(lat.size());
  for (int a = 0; a < lat.size(); ++a) {
    rank[a] = lat.dim(a) - m.rank() + m.rank(lat.perp(a));
  }
  return QMatroid(m.lattice_ptr(), std::move(rank));
}

QMatroid Restrict(const QMatroid& m, int x) {
  const Lattice& lat = m.lattice();
  const Subspace& X = lat.space(x);
  LatticePtr sub = Lattice::Get(lat.field_ptr(), X.dim());
  const Matrix basis = X.basis();
  std::vector<int> rank(sub->size());
  for (int i = 0; i < sub->size(); ++i) {
    const Subspace image = Subspace::Span(
        lat.field(), lat.n(), linalg::Multiply(lat.field(), sub->space(i).basis(), basis));
    rank[i] = m.rank(lat.index_of(image));
  }
  return QMatroid(std::move(sub), std::move(rank));
}

QMatroid Contract(const QMatroid& m, int x) {
  const Lattice& lat = m.lattice();
  const Subspace& X = lat.space(x);
  const int n = lat.n();
  std::vector<bool> pivot(n, false);
  for (int r = 0; r < X.dim(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (X.at(r, c) != 0) {
        pivot[c] = true;
        break;
      }
    }
  }
  std::vector<int> free;
  for (int c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  const int k = static_cast<int>(free.size());
  Matrix lift(k, n);
  for (int i = 0; i < k; ++i) lift.at(i, free[i]) = 1;
  LatticePtr quo = Lattice::Get(lat.field_ptr(), k);
  std::vector<int> rank(quo->size());
  for (int i = 0; i < quo->size(); ++i) {
    const Subspace a = Subspace::Span(lat.field(), n,
                                      linalg::Multiply(lat.field(), quo->space(i).basis(), lift));
    rank[i] = m.rank(lat.index_of(Join(lat.field(), a, X))) - m.rank(x);
  }
  return QMatroid(std::move(quo), std::move(rank));
}

QMatroid Transform(const QMatroid& m, const LatticeIso& t) {
  const std::vector<int> perm = t.permutation(m.lattice());
  std::vector<int> rank(m.size());
  for (int i = 0; i < m.size(); ++i) rank[perm[i]] = m.rank(i);
  return QMatroid(m.lattice_ptr(), std::move(rank));
}

namespace {

// (dim, rank) histogram; equal for isomorphic q-matroids.
std::map<std::pair<int, int>, int> Signature(const QMatroid& m) {
  std::map<std::pair<int, int>, int> h;
  for (int i = 0; i < m.size(); ++i) ++h[{m.lattice().dim(i), m.rank(i)}];
  return h;
}

class IsoSearch {
 public:
  IsoSearch(const QMatroid& a, const QMatroid& b) : a_(a), b_(b), lat_(a.lattice()) {
    const int n = lat_.n();
    const Field& f = lat_.field();
    levels_.assign(n + 1, {});
    for (int i = 1; i < lat_.size(); ++i) {
      const Subspace& s = lat_.space(i);
      int last = -1;
      for (int r = 0; r < s.dim(); ++r)
        for (int c = 0; c < n; ++c)
          if (s.at(r, c) != 0) last = std::max(last, c);
      levels_[last + 1].push_back(i);
    }
    // All nonzero vectors as candidate images.
    std::vector<Elem> v(n, 0);
    while (true) {
      int t = 0;
      while (t < n && ++v[t] == f.size()) v[t++] = 0;
      if (t == n) break;
      vectors_.push_back(v);
    }
    rows_ = Matrix(n, n);
  }

  std::optional<LatticeIso> Run() {
    if (Step(0)) return LatticeIso(lat_.field_ptr(), rows_);
    return std::nullopt;
  }

 private:
  bool Step(int i) {
    const int n = lat_.n();
    if (i == n) return true;
    const Field& f = lat_.field();
    for (const auto& v : vectors_) {
      for (int c = 0; c < n; ++c) rows_.at(i, c) = v[c];
      Matrix chosen(i + 1, n);
      std::copy(rows_.data.begin(), rows_.data.begin() + static_cast<std::ptrdiff_t>(i + 1) * n,
                chosen.data.begin());
      if (linalg::Rank(f, chosen) != i + 1) continue;
      bool ok = true;
      for (int s : levels_[i + 1]) {
        const Subspace& S = lat_.space(s);
        Matrix img(S.dim(), n);
        for (int r = 0; r < S.dim(); ++r)
          for (int k = 0; k <= i; ++k) {
            const Elem coef = S.at(r, k);
            if (coef == 0) continue;
            for (int c = 0; c < n; ++c)
              img.at(r, c) = f.add(img.at(r, c), f.mul(coef, rows_.at(k, c)));
          }
        const int t = lat_.index_of(Subspace::Span(f, n, std::move(img)));
        if (a_.rank(s) != b_.rank(t)) {
          ok = false;
          break;
        }
      }
      if (ok && Step(i + 1)) return true;
    }
    for (int c = 0; c < n; ++c) rows_.at(i, c) = 0;
    return false;
  }

  const QMatroid& a_;
  const QMatroid& b_;
  const Lattice& lat_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<Elem>> vectors_;
  Matrix rows_;
};

}  // namespace

std::optional<LatticeIso> FindIsomorphism(const QMatroid& a, const QMatroid& b,
                                          std::uint64_t cap) {
  if (!a.lattice().same_as(b.lattice())) return std::nullopt;
  const std::uint64_t gl = GeneralLinearOrder(a.n(), a.field().size());
  if (gl > cap) {
    throw Error(Errc::kSearchCapExceeded,
                "|GL(" + std::to_string(a.n()) + "," + std::to_string(a.field().size()) +
                    ")| exceeds the search cap " + std::to_string(cap));
  }
  if (a.rank() != b.rank() || Signature(a) != Signature(b)) return std::nullopt;
  return IsoSearch(a, b).Run();
}

std::vector<ColouredCover> Bicolour(const QMatroid& m) {
  std::vector<ColouredCover> out;
  const Lattice& lat = m.lattice();
  for (int a = 0; a < lat.size(); ++a)
    for (int u : lat.covers_up(a)) out.push_back({a, u, m.rank(u) > m.rank(a)});
  return out;
}

}  // namespace qmat
