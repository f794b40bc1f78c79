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

#include "qmat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "qmat/error.hpp"

namespace qmat {

namespace {

// Lattices up to this size get dense join/containment tables.
constexpr int kTableLimit = 3000;

char DigitChar(std::uint32_t d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

int DigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

std::atomic<std::uint64_t> g_cap_override{0};

}  // namespace

Matrix Matrix::Identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace linalg {

int RowReduce(const Field& f, Matrix& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(rank, k));
    }
    const Elem s = f.inv(m.at(rank, c));
    for (int k = c; k < m.cols; ++k) m.at(rank, k) = f.mul(m.at(rank, k), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const Elem factor = m.at(r, c);
      if (factor == 0) continue;
      for (int k = c; k < m.cols; ++k) {
        m.at(r, k) = f.sub(m.at(r, k), f.mul(factor, m.at(rank, k)));
      }
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

int Rank(const Field& f, Matrix m) { return RowReduce(f, m); }

Matrix Multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw Error(Errc::kDimensionMismatch, "matrix product shapes do not agree");
  }
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix Transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

std::optional<Matrix> Inverse(const Field& f, const Matrix& a) {
  if (a.rows != a.cols) return std::nullopt;
  const int n = a.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  RowReduce(f, aug, &piv);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) {
    return std::nullopt;
  }
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace linalg

Subspace Subspace::Span(const Field& f, int n, Matrix rows) {
  if (rows.rows > 0 && rows.cols != n) {
    throw Error(Errc::kColumnCountMismatch,
                "expected " + std::to_string(n) + " columns, got " +
                    std::to_string(rows.cols));
  }
  Subspace s(n);
  if (rows.rows == 0) return s;
  const int rank = linalg::RowReduce(f, rows);
  s.dim_ = rank;
  s.rows_.assign(rows.data.begin(),
                 rows.data.begin() + static_cast<std::ptrdiff_t>(rank) * n);
  return s;
}

Subspace Subspace::Full(int n) {
  Subspace s(n);
  s.dim_ = n;
  s.rows_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) s.rows_[static_cast<std::size_t>(i) * n + i] = 1;
  return s;
}

Matrix Subspace::basis() const {
  Matrix m(dim_, n_);
  m.data = rows_;
  return m;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  return rows_ <=> o.rows_;
}

Subspace Join(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.n() != b.n()) throw Error(Errc::kDimensionMismatch, "join of different ambients");
  const int n = a.n();
  Matrix m(a.dim() + b.dim(), n);
  std::copy(a.entries().begin(), a.entries().end(), m.data.begin());
  std::copy(b.entries().begin(), b.entries().end(),
            m.data.begin() + static_cast<std::ptrdiff_t>(a.dim()) * n);
  return Subspace::Span(f, n, std::move(m));
}

Subspace Perp(const Field& f, const Subspace& a) {
  const int n = a.n();
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivot_of_row(a.dim());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (a.at(r, c) != 0) {
        pivot_of_row[r] = c;
        is_pivot[c] = true;
        break;
      }
    }
  }
  Matrix m(n - a.dim(), n);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    m.at(row, j) = 1;
    for (int r = 0; r < a.dim(); ++r) m.at(row, pivot_of_row[r]) = f.neg(a.at(r, j));
    ++row;
  }
  return Subspace::Span(f, n, std::move(m));
}

Subspace Meet(const Field& f, const Subspace& a, const Subspace& b) {
  return Perp(f, Join(f, Perp(f, a), Perp(f, b)));
}

Subspace MeetByElimination(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.n() != b.n()) throw Error(Errc::kDimensionMismatch, "meet of different ambients");
  const int n = a.n();
  Matrix m(a.dim() + b.dim(), 2 * n);
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = a.at(r, c);
      m.at(r, n + c) = a.at(r, c);
    }
  }
  for (int r = 0; r < b.dim(); ++r)
    for (int c = 0; c < n; ++c) m.at(a.dim() + r, c) = b.at(r, c);
  std::vector<int> piv;
  const int rank = linalg::RowReduce(f, m, &piv);
  std::vector<int> keep;
  for (int r = 0; r < rank; ++r)
    if (piv[r] >= n) keep.push_back(r);
  Matrix out(static_cast<int>(keep.size()), n);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int c = 0; c < n; ++c) out.at(static_cast<int>(i), c) = m.at(keep[i], n + c);
  return Subspace::Span(f, n, std::move(out));
}

bool IsSubspaceOf(const Field& f, const Subspace& inner, const Subspace& outer) {
  if (inner.n() != outer.n()) return false;
  if (inner.dim() > outer.dim()) return false;
  return Join(f, inner, outer).dim() == outer.dim();
}

std::string FormatSubspace(const Field& f, const Subspace& s) {
  if (f.size() > 36) throw Error(Errc::kOutOfRange, "text form needs q <= 36");
  if (s.dim() == 0) return "0";
  std::string out;
  for (int r = 0; r < s.dim(); ++r) {
    if (r) out += ',';
    for (int c = 0; c < s.n(); ++c) out += DigitChar(s.at(r, c));
  }
  return out;
}

Subspace ParseSubspace(const Field& f, int n, std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '<')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '>')) text.remove_suffix(1);
  if (text.empty() || text == "0") return Subspace(n);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Matrix m(static_cast<int>(parts.size()), n);
  for (std::size_t r = 0; r < parts.size(); ++r) {
    std::string_view row = parts[r];
    while (!row.empty() && row.front() == ' ') row.remove_prefix(1);
    while (!row.empty() && row.back() == ' ') row.remove_suffix(1);
    if (static_cast<int>(row.size()) != n) {
      throw Error(Errc::kParseError, "row '" + std::string(row) + "' does not have " +
                                         std::to_string(n) + " digits");
    }
    for (int c = 0; c < n; ++c) {
      const int d = DigitValue(row[c]);
      if (d < 0 || static_cast<std::uint32_t>(d) >= f.size()) {
        throw Error(Errc::kParseError, "bad digit in '" + std::string(row) + "'");
      }
      m.at(static_cast<int>(r), c) = static_cast<Elem>(d);
    }
  }
  return Subspace::Span(f, n, std::move(m));
}

std::uint64_t GaussianBinomial(int n, int k, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(Errc::kOutOfRange, "gaussian binomial needs 0 <= k <= n");
  }
  // row[j] = [i choose j]_q, built up with [i,j] = [i-1,j-1] + q^j [i-1,j].
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (int t = 0; t < j; ++t) {
        if (__builtin_mul_overflow(qj, q, &qj)) throw Error(Errc::kOutOfRange, "gaussian binomial overflow");
      }
      std::uint64_t term;
      if (__builtin_mul_overflow(qj, row[j], &term) ||
          __builtin_add_overflow(term, row[j - 1], &row[j])) {
        throw Error(Errc::kOutOfRange, "gaussian binomial overflow");
      }
    }
  }
  return row[k];
}

std::uint64_t GeneralLinearOrder(int n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(qn, q, &qn)) return UINT64_MAX;
  }
  std::uint64_t out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(out, qn - qi, &out)) return UINT64_MAX;
    qi *= q;
  }
  return out;
}

std::uint64_t LatticeCap() {
  if (const std::uint64_t o = g_cap_override.load(); o != 0) return o;
  if (const char* env = std::getenv("QMAT_LATTICE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10'000'000;
}

void SetLatticeCap(std::uint64_t cap) { g_cap_override.store(cap); }

// ---------------------------------------------------------------------------
// Lattice

namespace {

void EnumerateDim(const Field& f, int n, int k, std::vector<Subspace>& out) {
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  const std::uint32_t q = f.size();
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    Matrix m(k, n);
    for (int r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
    std::vector<Elem> digits(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = digits[t];
      out.push_back(Subspace::Span(f, n, m));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace

Lattice::Lattice(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  const Field& f = *field_;
  std::uint64_t total = 0;
  try {
    for (int k = 0; k <= n; ++k) {
      if (__builtin_add_overflow(total, GaussianBinomial(n, k, f.size()), &total)) {
        total = UINT64_MAX;
        break;
      }
    }
  } catch (const Error&) {
    total = UINT64_MAX;
  }
  if (total > LatticeCap()) {
    throw Error(Errc::kLatticeTooLarge,
                "L(" + f.header() + "^" + std::to_string(n) + ") exceeds the cap of " +
                    std::to_string(LatticeCap()) + " subspaces");
  }
  spaces_.reserve(total);
  for (int k = 0; k <= n; ++k) EnumerateDim(f, n, k, spaces_);
  std::sort(spaces_.begin(), spaces_.end());

  const int size = static_cast<int>(spaces_.size());
  buckets_.assign(n + 1, {});
  for (int i = 0; i < size; ++i) buckets_[spaces_[i].dim()].push_back(i);

  perp_.resize(size);
  for (int i = 0; i < size; ++i) perp_[i] = index_of(Perp(f, spaces_[i]));

  covers_up_.assign(size, {});
  covers_down_.assign(size, {});
  if (n == 0) return;
  const std::vector<int>& points = buckets_[1];
  for (int i = 0; i < size; ++i) {
    if (spaces_[i].dim() == n) continue;
    std::vector<int>& up = covers_up_[i];
    for (int p : points) {
      const Subspace j = Join(f, spaces_[i], spaces_[p]);
      if (j.dim() == spaces_[i].dim() + 1) up.push_back(index_of(j));
    }
    std::sort(up.begin(), up.end());
    up.erase(std::unique(up.begin(), up.end()), up.end());
    for (int u : up) covers_down_[u].push_back(i);
  }
}

LatticePtr Lattice::Enumerate(const FieldPtr& field, int n) {
  if (n < 0) throw Error(Errc::kOutOfRange, "negative ambient dimension");
  return LatticePtr(new Lattice(field, n));
}

LatticePtr Lattice::Get(const FieldPtr& field, int n) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, std::vector<std::uint32_t>, int>, LatticePtr> cache;
  auto key = std::make_tuple(field->p(), field->m(), field->modulus(), n);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LatticePtr lat = Enumerate(field, n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(lat)).first->second;
}

std::optional<int> Lattice::find(const Subspace& s) const {
  if (s.n() != n_) return std::nullopt;
  auto it = std::lower_bound(spaces_.begin(), spaces_.end(), s);
  if (it == spaces_.end() || !(*it == s)) return std::nullopt;
  return static_cast<int>(it - spaces_.begin());
}

int Lattice::index_of(const Subspace& s) const {
  if (auto i = find(s)) return *i;
  throw Error(Errc::kSubspaceNotInLattice, "subspace is not in L(" + field_->header() +
                                               "^" + std::to_string(n_) + ")");
}

void Lattice::build_tables() const {
  std::call_once(tables_once_, [this] {
    const int size = this->size();
    down_sets_.assign(size, {});
    if (size > kTableLimit) return;
    const Field& f = *field_;
    const std::size_t words = (static_cast<std::size_t>(size) + 63) / 64;
    below_.assign(size, std::vector<std::uint64_t>(words, 0));
    join_.assign(static_cast<std::size_t>(size) * size, -1);
    meet_.assign(static_cast<std::size_t>(size) * size, -1);
    // a ⊆ b by propagating along covers in increasing dimension.
    for (int b = 0; b < size; ++b) {
      below_[b][b / 64] |= 1ull << (b % 64);
      for (int c : covers_down_[b])
        for (std::size_t w = 0; w < words; ++w) below_[b][w] |= below_[c][w];
    }
    for (int a = 0; a < size; ++a) {
      for (int b = a; b < size; ++b) {
        int j;
        if (below_[b][a / 64] >> (a % 64) & 1) {
          j = b;
        } else {
          j = index_of(Join(f, spaces_[a], spaces_[b]));
        }
        join_[static_cast<std::size_t>(a) * size + b] = j;
        join_[static_cast<std::size_t>(b) * size + a] = j;
      }
    }
    for (int a = 0; a < size; ++a) {
      for (int b = a; b < size; ++b) {
        const int m = perp_[join_[static_cast<std::size_t>(perp_[a]) * size + perp_[b]]];
        meet_[static_cast<std::size_t>(a) * size + b] = m;
        meet_[static_cast<std::size_t>(b) * size + a] = m;
      }
    }
    for (int b = 0; b < size; ++b) {
      for (int a = 0; a <= b; ++a)
        if (below_[b][a / 64] >> (a % 64) & 1) down_sets_[b].push_back(a);
    }
  });
}

int Lattice::join(int a, int b) const {
  build_tables();
  if (!join_.empty()) return join_[static_cast<std::size_t>(a) * size() + b];
  return index_of(Join(*field_, spaces_[a], spaces_[b]));
}

int Lattice::meet(int a, int b) const {
  build_tables();
  if (!meet_.empty()) return meet_[static_cast<std::size_t>(a) * size() + b];
  return index_of(Meet(*field_, spaces_[a], spaces_[b]));
}

bool Lattice::leq(int a, int b) const {
  build_tables();
  if (!below_.empty()) return below_[b][a / 64] >> (a % 64) & 1;
  return IsSubspaceOf(*field_, spaces_[a], spaces_[b]);
}

const std::vector<int>& Lattice::down_set(int a) const {
  build_tables();
  if (!below_.empty()) return down_sets_[a];
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<int>& out = down_sets_[a];
  if (out.empty()) {
    // Subspaces of A are the row spaces of C * B_A for C ranging over L(q^dim A).
    const Subspace& s = spaces_[a];
    LatticePtr sub = Lattice::Get(field_, s.dim());
    const Matrix basis = s.basis();
    for (int i = 0; i < sub->size(); ++i) {
      out.push_back(index_of(Subspace::Span(
          *field_, n_, linalg::Multiply(*field_, sub->space(i).basis(), basis))));
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<int> Lattice::interval(int a, int b) const {
  if (!leq(a, b)) throw Error(Errc::kNotNested, format(a) + " is not contained in " + format(b));
  std::vector<int> out;
  for (int x : down_set(b))
    if (leq(a, x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// LatticeIso

LatticeIso::LatticeIso(FieldPtr field, Matrix t) : field_(std::move(field)), t_(std::move(t)) {
  if (t_.rows != t_.cols || !linalg::Inverse(*field_, t_)) {
    throw Error(Errc::kSingularMatrix, "lattice isomorphism needs an invertible square matrix");
  }
}

LatticeIso LatticeIso::Identity(FieldPtr field, int n) {
  return LatticeIso(std::move(field), Matrix::Identity(n));
}

LatticeIso LatticeIso::FromPermutation(FieldPtr field, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Matrix t(n, n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || seen[perm[i]]) {
      throw Error(Errc::kOutOfRange, "not a permutation");
    }
    seen[perm[i]] = true;
    t.at(i, perm[i]) = 1;
  }
  return LatticeIso(std::move(field), std::move(t));
}

LatticeIso LatticeIso::Random(FieldPtr field, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, field->size() - 1);
  while (true) {
    Matrix t(n, n);
    for (Elem& e : t.data) e = dist(rng);
    if (linalg::Rank(*field, t) == n) return LatticeIso(std::move(field), std::move(t));
  }
}

Subspace LatticeIso::apply(const Subspace& s) const {
  if (s.n() != n()) throw Error(Errc::kDimensionMismatch, "isomorphism and subspace ambient differ");
  if (s.dim() == 0) return s;
  return Subspace::Span(*field_, n(), linalg::Multiply(*field_, s.basis(), t_));
}

LatticeIso LatticeIso::inverse() const {
  return LatticeIso(field_, *linalg::Inverse(*field_, t_));
}

LatticeIso LatticeIso::then(const LatticeIso& next) const {
  return LatticeIso(field_, linalg::Multiply(*field_, t_, next.t_));
}

std::vector<int> LatticeIso::permutation(const Lattice& lat) const {
  if (lat.n() != n()) throw Error(Errc::kDimensionMismatch, "isomorphism and lattice ambient differ");
  std::vector<int> out(lat.size());
  for (int i = 0; i < lat.size(); ++i) out[i] = lat.index_of(apply(lat.space(i)));
  return out;
}

const std::vector<int>& Lattice::bucket(int k) const {
  static const std::vector<int> kEmpty;
  if (k < 0 || k > n_) return kEmpty;
  return buckets_[k];
}

}  // namespace qmat
