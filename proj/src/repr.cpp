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

#include "qmat/repr.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qmat/error.hpp"

namespace qmat {

namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(sep, i);
    if (j == std::string_view::npos) j = s.size();
    std::string_view t = s.substr(i, j - i);
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.remove_suffix(1);
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    if (!t.empty()) out.push_back(t);
    i = j + 1;
  }
  return out;
}

int ParseKey(std::string_view tok, std::string_view key) {
  if (!tok.starts_with(key) || tok.size() <= key.size() + 1 || tok[key.size()] != '=') {
    throw Error(Errc::kParseError, "repmatrix header: expected " + std::string(key) + "=");
  }
  std::string_view v = tok.substr(key.size() + 1);
  int out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(Errc::kParseError, "repmatrix header: bad value for " + std::string(key));
  }
  return out;
}

struct Labelled {
  const char* label;
  const char* rows;
};

constexpr Labelled kSpread[] = {
    {"E1", "1000,0100"}, {"E2", "0010,0001"}, {"A", "1010,0101"}, {"B", "1011,0110"},
    {"C", "1001,0111"},  {"D", "1011,0101"},  {"F", "1001,0110"}, {"G", "1010,0111"},
};

}  // namespace

RepMatrix MakeRepMatrix(FieldPtr base, FieldPtr ext, Matrix g) {
  if (!base->is_prime()) {
    throw Error(Errc::kDimensionMismatch, "base field must be a prime field");
  }
  if (ext->p() != base->p()) {
    throw Error(Errc::kDimensionMismatch, ext->header() + " does not extend " + base->header());
  }
  if (g.rows > g.cols) throw Error(Errc::kDimensionMismatch, "representation needs k <= n");
  for (Elem e : g.data) {
    if (e >= ext->size()) throw Error(Errc::kOutOfRange, "matrix entry outside the field");
  }
  return RepMatrix{std::move(base), std::move(ext), std::move(g)};
}

int RepRank(const RepMatrix& rep, const Matrix& basis) {
  if (basis.rows > 0 && basis.cols != rep.g.cols) {
    throw Error(Errc::kDimensionMismatch, "basis width does not match the matrix");
  }
  const Field& f = *rep.ext;
  // Base-field elements of a prime field are the constants 0..p-1 of ext.
  Matrix prod(rep.g.rows, basis.rows);
  for (int i = 0; i < rep.g.rows; ++i)
    for (int r = 0; r < basis.rows; ++r) {
      Elem acc = 0;
      for (int j = 0; j < rep.g.cols; ++j) acc = f.add(acc, f.mul(rep.g.at(i, j), basis.at(r, j)));
      prod.at(i, r) = acc;
    }
  return linalg::Rank(f, std::move(prod));
}

QMatroid FromMatrix(const RepMatrix& rep) {
  LatticePtr lat = Lattice::Get(rep.base, rep.g.cols);
  std::vector<int> rank(lat->size());
  for (int a = 0; a < lat->size(); ++a) rank[a] = RepRank(rep, lat->space(a).basis());
  return QMatroid(std::move(lat), std::move(rank));
}

std::string WriteRepMatrix(const RepMatrix& rep) {
  std::ostringstream os;
  os << "repmatrix q=" << rep.base->size() << " m=" << rep.ext->m() << " k=" << rep.g.rows
     << " n=" << rep.g.cols << "\n";
  for (int i = 0; i < rep.g.rows; ++i) {
    for (int j = 0; j < rep.g.cols; ++j) os << (j ? " " : "") << rep.ext->format(rep.g.at(i, j));
    os << "\n";
  }
  return os.str();
}

RepMatrix ReadRepMatrix(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view l : Split(text, '\n'))
    if (!l.starts_with("#")) lines.push_back(l);
  if (lines.empty()) throw Error(Errc::kParseError, "empty repmatrix file");
  auto head = Split(lines[0], ' ');
  if (head.size() != 5 || head[0] != "repmatrix") {
    throw Error(Errc::kParseError, "line 1: expected 'repmatrix q=<q> m=<m> k=<k> n=<n>'");
  }
  const int q = ParseKey(head[1], "q"), m = ParseKey(head[2], "m");
  const int k = ParseKey(head[3], "k"), n = ParseKey(head[4], "n");
  if (q < 2 || !IsPrime(static_cast<std::uint64_t>(q))) {
    throw Error(Errc::kParseError, "repmatrix base field must be a prime field");
  }
  if (k < 0 || n < 0) throw Error(Errc::kParseError, "negative matrix size");
  FieldPtr base = Field::FromOrder(static_cast<std::uint32_t>(q));
  FieldPtr ext = Field::Make(static_cast<std::uint32_t>(q), m);
  if (static_cast<int>(lines.size()) != k + 1) {
    throw Error(Errc::kParseError, "expected " + std::to_string(k) + " matrix rows");
  }
  Matrix g(k, n);
  for (int i = 0; i < k; ++i) {
    auto cells = Split(lines[i + 1], ' ');
    if (static_cast<int>(cells.size()) != n) {
      throw Error(Errc::kParseError, "row " + std::to_string(i + 1) + " needs " +
                                         std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) g.at(i, j) = ext->parse(cells[j]);
  }
  return MakeRepMatrix(base, ext, std::move(g));
}

RepMatrix TwoBlockMatrix(const FieldPtr& ext, Elem alpha, Elem beta) {
  Matrix g(2, 4);
  g.data = {1, alpha, 0, 0, 0, 0, 1, beta};
  return MakeRepMatrix(Field::FromOrder(ext->p()), ext, std::move(g));
}

std::string DeterminantProfile::vanishing() const {
  std::string out;
  const std::pair<char, Elem> vals[] = {{'A', a}, {'B', b}, {'C', c}, {'D', d}, {'F', f}, {'G', g}};
  for (auto [label, v] : vals)
    if (v == 0) out += label;
  return out;
}

DeterminantProfile Profile(const Field& ext, Elem alpha, Elem beta) {
  if (ext.p() != 2) throw Error(Errc::kOutOfRange, "determinant profile needs characteristic 2");
  if (ext.in_prime_field(alpha) || ext.in_prime_field(beta)) {
    throw Error(Errc::kElementInBaseField, "alpha and beta must lie outside GF(2)");
  }
  DeterminantProfile p;
  p.alpha = alpha;
  p.beta = beta;
  const Elem ab = ext.mul(alpha, beta);
  p.a = ext.add(alpha, beta);
  p.b = ext.add(ext.add(ab, alpha), 1);
  p.c = ext.add(ext.add(ab, beta), 1);
  p.d = ext.add(ext.add(ab, alpha), beta);
  p.f = ext.add(ab, 1);
  p.g = ext.add(ext.add(alpha, beta), 1);
  return p;
}

int TwoDimCircuitCount(const QMatroid& m) {
  int count = 0;
  for (int c : Derive(m).circuits) count += m.lattice().dim(c) == 2;
  return count;
}

int SpreadSpace(const Lattice& lat, std::string_view label) {
  if (lat.n() != 4 || lat.field().size() != 2) {
    throw Error(Errc::kWrongAmbient, "spread labels live in F_2^4");
  }
  for (const Labelled& l : kSpread)
    if (label == l.label) return lat.parse(l.rows);
  throw Error(Errc::kOutOfRange, "unknown spread label '" + std::string(label) + "'");
}

QMatroid SpreadVariant(const std::vector<std::string>& extra) {
  LatticePtr lat = Lattice::Get(Field::FromOrder(2), 4);
  std::vector<int> two = {SpreadSpace(*lat, "E1"), SpreadSpace(*lat, "E2")};
  for (const std::string& l : extra) two.push_back(SpreadSpace(*lat, l));
  std::vector<int> circuits = two;
  for (int x : lat->bucket(3)) {
    bool contains = false;
    for (int c : two) contains |= lat->leq(c, x);
    if (!contains) circuits.push_back(x);
  }
  std::sort(circuits.begin(), circuits.end());
  return FromCircuits(lat, circuits);
}

QMatroid FourCircuitMatroid() { return SpreadVariant({"A", "B"}); }

bool NonrepReport::four_found() const {
  for (const auto& d : degrees)
    if (d.counts.count(4)) return true;
  return false;
}

bool NonrepReport::ok() const {
  for (const auto& d : degrees) {
    for (const auto& [count, n] : d.counts)
      if (count != 2 && count != 3 && count != 5) return false;
    if (d.disagreements || d.identity_failures || d.exclusivity_failures || d.shape_failures) {
      return false;
    }
  }
  return true;
}

std::string NonrepReport::Render() const {
  std::ostringstream os;
  os << "two-block representations [1 a 0 0; 0 0 1 b] over GF(2^m), m <= " << m_max << "\n";
  for (const auto& d : degrees) {
    os << "m=" << d.m << " pairs=" << d.pairs << " counts={";
    bool first = true;
    for (const auto& [count, n] : d.counts) {
      os << (first ? "" : ", ") << count << ": " << n;
      first = false;
    }
    os << "} disagreements=" << d.disagreements << " identity_failures=" << d.identity_failures
       << " exclusivity_failures=" << d.exclusivity_failures;
    if (d.shape_checked) {
      os << " shape_matrices=" << d.shape_matrices << " shape_failures=" << d.shape_failures;
    } else {
      os << " shape=skipped";
    }
    os << "\n";
  }
  os << "four circuits observed: " << (four_found() ? "yes" : "no") << "\n";
  os << "bounded search; corroborates, does not prove, the degree-free statement\n";
  os << (ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

namespace {

void ShapeCheck(const FieldPtr& ext, const Lattice& f2_4, NonrepDegree& deg) {
  const Field& f = *ext;
  const Elem q = f.size();
  const Matrix e1 = f2_4.space(SpreadSpace(f2_4, "E1")).basis();
  const Matrix e2 = f2_4.space(SpreadSpace(f2_4, "E2")).basis();
  const std::vector<int>& points = f2_4.bucket(1);
  // Pivot pattern (c0, c1) with free entries right of each pivot.
  for (int c0 = 0; c0 < 4; ++c0) {
    for (int c1 = c0 + 1; c1 < 4; ++c1) {
      std::vector<std::pair<int, int>> free;
      for (int c = c0 + 1; c < 4; ++c)
        if (c != c1) free.emplace_back(0, c);
      for (int c = c1 + 1; c < 4; ++c) free.emplace_back(1, c);
      std::vector<Elem> digits(free.size(), 0);
      RepMatrix rep = MakeRepMatrix(Field::FromOrder(2), ext, Matrix(2, 4));
      while (true) {
        rep.g = Matrix(2, 4);
        rep.g.at(0, c0) = 1;
        rep.g.at(1, c1) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) rep.g.at(free[t].first, free[t].second) = digits[t];
        bool admissible = RepRank(rep, e1) < 2 && RepRank(rep, e2) < 2;
        for (std::size_t i = 0; admissible && i < points.size(); ++i)
          admissible = RepRank(rep, f2_4.space(points[i]).basis()) == 1;
        if (admissible) {
          ++deg.shape_matrices;
          const Matrix& g = rep.g;
          const bool shape = c0 == 0 && c1 == 2 && g.at(0, 2) == 0 && g.at(0, 3) == 0 &&
                             !f.in_prime_field(g.at(0, 1)) && !f.in_prime_field(g.at(1, 3));
          if (!shape) ++deg.shape_failures;
        }
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
        if (t == digits.size()) break;
      }
    }
  }
}

bool CircuitsExclusive(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  std::vector<int> two;
  for (int c : Derive(m).circuits)
    if (lat.dim(c) == 2) two.push_back(c);
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j)
      if (lat.dim(lat.meet(two[i], two[j])) == 1) return false;
  return true;
}

}  // namespace

NonrepReport NonrepSearch(int m_max, int shape_m_max) {
  NonrepReport rep;
  rep.m_max = m_max;
  rep.shape_m_max = shape_m_max;
  LatticePtr f2_4 = Lattice::Get(Field::FromOrder(2), 4);
  for (int m = 1; m <= m_max; ++m) {
    NonrepDegree deg;
    deg.m = m;
    FieldPtr ext = Field::Make(2, m);
    for (Elem alpha = 2; alpha < ext->size(); ++alpha) {
      for (Elem beta = 2; beta < ext->size(); ++beta) {
        ++deg.pairs;
        const DeterminantProfile p = Profile(*ext, alpha, beta);
        if ((p.a == 0 && p.b == 0 && p.c != 0) || (p.d == 0 && p.f == 0 && p.g != 0)) {
          ++deg.identity_failures;
        }
        const QMatroid mat = FromMatrix(TwoBlockMatrix(ext, alpha, beta));
        const int full = TwoDimCircuitCount(mat);
        ++deg.counts[full];
        if (full != p.circuit_count()) ++deg.disagreements;
        if (!CircuitsExclusive(mat)) ++deg.exclusivity_failures;
      }
    }
    if (m <= shape_m_max) {
      deg.shape_checked = true;
      ShapeCheck(ext, *f2_4, deg);
    }
    rep.degrees.push_back(std::move(deg));
  }
  return rep;
}

bool HasTwoBlockRepresentation(const QMatroid& target, int m_max) {
  for (int m = 2; m <= m_max; ++m) {
    FieldPtr ext = Field::Make(2, m);
    for (Elem alpha = 2; alpha < ext->size(); ++alpha)
      for (Elem beta = 2; beta < ext->size(); ++beta)
        if (IsIsomorphic(FromMatrix(TwoBlockMatrix(ext, alpha, beta)), target)) return true;
  }
  return false;
}

}  // namespace qmat
