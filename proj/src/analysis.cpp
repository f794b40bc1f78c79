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

#include "qmat/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qmat/construct.hpp"
#include "qmat/error.hpp"
#include "qmat/repr.hpp"

namespace qmat {

namespace {

FieldPtr F2() { return Field::FromOrder(2); }

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(Trim(cur));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Fills pairs, transitivity, witness and classes from a symmetric matrix on
// the points.
RelationClasses Finish(RelationKind kind, const Lattice& lat,
                       const std::vector<std::vector<char>>& rel) {
  RelationClasses out;
  out.kind = kind;
  out.points = lat.bucket(1);
  const int k = static_cast<int>(out.points.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rel[i][j]) out.pairs.emplace_back(out.points[i], out.points[j]);
  for (int x = 0; x < k && !out.witness; ++x)
    for (int y = 0; y < k && !out.witness; ++y) {
      if (!rel[x][y]) continue;
      for (int z = 0; z < k; ++z)
        if (rel[y][z] && !rel[x][z]) {
          out.witness = std::array<int, 3>{out.points[x], out.points[y], out.points[z]};
          break;
        }
    }
  out.is_equivalence = !out.witness;
  if (out.is_equivalence) {
    UnionFind uf(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (rel[i][j]) uf.unite(i, j);
    std::vector<int> slot(k, -1);
    for (int i = 0; i < k; ++i) {
      const int r = uf.find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.classes.size());
        out.classes.emplace_back();
      }
      out.classes[slot[r]].push_back(out.points[i]);
    }
  }
  return out;
}

std::vector<std::vector<char>> Diagonal(int k) {
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) rel[i][i] = 1;
  return rel;
}

}  // namespace

bool RelationClasses::related(int x, int y) const {
  if (x == y) return true;
  if (x > y) std::swap(x, y);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
}

RelationClasses CircuitRelation(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  const std::vector<int>& points = lat.bucket(1);
  const int k = static_cast<int>(points.size());
  auto rel = Diagonal(k);
  for (int c : Derive(m).circuits) {
    std::vector<int> inside;
    for (int i = 0; i < k; ++i)
      if (lat.leq(points[i], c)) inside.push_back(i);
    for (int a : inside)
      for (int b : inside) rel[a][b] = 1;
  }
  return Finish(RelationKind::kCircuit, lat, rel);
}

RelationClasses HyperplaneRelation(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  const std::vector<int>& points = lat.bucket(1);
  const int k = static_cast<int>(points.size());
  auto rel = Diagonal(k);
  for (int h : Derive(m).hyperplanes) {
    std::vector<int> outside;
    for (int i = 0; i < k; ++i)
      if (!lat.leq(points[i], h)) outside.push_back(i);
    for (int a : outside)
      for (int b : outside) rel[a][b] = 1;
  }
  return Finish(RelationKind::kHyperplane, lat, rel);
}

ConjectureReport CheckConjectures(const std::vector<std::pair<std::string, QMatroid>>& matroids) {
  ConjectureReport report;
  for (const auto& [name, m] : matroids) {
    ConjectureRow row;
    row.name = name;
    row.circuit_transitive = CircuitRelation(m).is_equivalence;
    row.dual_circuit_transitive = CircuitRelation(Dual(m)).is_equivalence;
    const Lattice& lat = m.lattice();
    const std::vector<int> circuits = Derive(m).circuits;
    const std::vector<int> cocircuits = Cocircuits(m);
    for (int c : circuits) {
      for (int d : cocircuits)
        if (lat.dim(lat.meet(c, d)) == 1) {
          row.has_dim_one_meet = true;
          row.dim_one_witness = std::make_pair(c, d);
          break;
        }
      if (row.has_dim_one_meet) break;
    }
    if (!row.either_transitive()) report.either_counterexamples.push_back(name);
    if (!row.meet_condition_holds()) report.meet_counterexamples.push_back(name);
    report.rows.push_back(row);
  }
  return report;
}

std::string ConjectureReport::Render() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << r.name << ": circuit relation transitive in M " << (r.circuit_transitive ? "yes" : "no")
       << ", in M* " << (r.dual_circuit_transitive ? "yes" : "no")
       << ", circuit/cocircuit meet of dim 1 " << (r.has_dim_one_meet ? "yes" : "no") << "\n";
  }
  os << "transitive in M or M*: "
     << (either_counterexamples.empty() ? "no counterexample"
                                        : "counterexamples " + Join(either_counterexamples, ", "))
     << "\n";
  os << "no dim-1 meet implies transitive: "
     << (meet_counterexamples.empty() ? "no counterexample"
                                      : "counterexamples " + Join(meet_counterexamples, ", "))
     << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

bool NonuniquenessReport::ok() const {
  if (variants.size() != 4 || !pairwise_non_isomorphic || !two_circuit_is_direct_sum) return false;
  for (const auto& v : variants)
    if (!v.rank_axioms || !v.circuit_axioms || !v.four_minors) return false;
  return true;
}

std::string NonuniquenessReport::Render() const {
  std::ostringstream os;
  for (const auto& v : variants) {
    os << "circuits E1 E2";
    for (const auto& l : v.extra) os << ' ' << l;
    os << ": " << v.two_dim_circuits << " two-dim circuits, rank axioms "
       << (v.rank_axioms ? "ok" : "FAIL") << ", circuit axioms " << (v.circuit_axioms ? "ok" : "FAIL")
       << ", minors " << (v.four_minors ? "ok" : "FAIL") << "\n";
  }
  os << "pairwise non-isomorphic: " << (pairwise_non_isomorphic ? "yes" : "no") << "\n";
  os << "two-circuit variant equals U12+U12: " << (two_circuit_is_direct_sum ? "yes" : "no") << "\n";
  return os.str();
}

NonuniquenessReport NonuniquenessDemo() {
  NonuniquenessReport report;
  const QMatroid u12 = Uniform(F2(), 1, 2);
  const std::vector<std::vector<std::string>> extras = {{}, {"A"}, {"A", "B"}, {"A", "B", "C"}};
  std::vector<QMatroid> built;
  for (const auto& extra : extras) {
    const QMatroid m = SpreadVariant(extra);
    const Lattice& lat = m.lattice();
    VariantRow row;
    row.extra = extra;
    row.two_dim_circuits = TwoDimCircuitCount(m);
    row.rank_axioms = CheckRankAxioms(m).ok();
    row.circuit_axioms = row.rank_axioms && CheckCircuitAxioms(lat, Derive(m).circuits).ok();
    const int e1 = SpreadSpace(lat, "E1");
    const int e2 = SpreadSpace(lat, "E2");
    row.four_minors = IsIsomorphic(Restrict(m, e1), u12) && IsIsomorphic(Contract(m, e2), u12) &&
                      IsIsomorphic(Restrict(m, e2), u12) && IsIsomorphic(Contract(m, e1), u12);
    report.variants.push_back(row);
    built.push_back(m);
  }
  report.pairwise_non_isomorphic = true;
  for (std::size_t i = 0; i < built.size(); ++i)
    for (std::size_t j = i + 1; j < built.size(); ++j)
      if (IsIsomorphic(built[i], built[j])) report.pairwise_non_isomorphic = false;
  report.two_circuit_is_direct_sum = built[0] == DirectSum(u12, u12);
  return report;
}

// ---------------------------------------------------------------------------

std::vector<int> Spread(const Lattice& lat, bool second) {
  const std::vector<std::string> labels =
      second ? std::vector<std::string>{"E1", "E2", "D", "F", "G"}
             : std::vector<std::string>{"E1", "E2", "A", "B", "C"};
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(SpreadSpace(lat, l));
  return out;
}

bool IsSpread(const Lattice& lat, const std::vector<int>& members) {
  if (members.empty()) return false;
  const int d = lat.dim(members[0]);
  for (int x : members)
    if (lat.dim(x) != d || d == 0) return false;
  for (int p : lat.bucket(1)) {
    int hits = 0;
    for (int x : members) hits += lat.leq(p, x);
    if (hits != 1) return false;
  }
  return true;
}

bool EveryHyperplaneMeetsSpread(const Lattice& lat, const std::vector<int>& spread) {
  for (int h : lat.bucket(lat.n() - 1)) {
    bool found = false;
    for (int x : spread) found |= lat.leq(x, h);
    if (!found) return false;
  }
  return true;
}

std::optional<LatticeIso> SpreadIsomorphism(const Lattice& lat) {
  if (lat.n() != 4 || lat.field().size() != 2) {
    throw Error(Errc::kWrongAmbient, "spreads live in F_2^4");
  }
  std::vector<int> from = Spread(lat, false);
  std::vector<int> to = Spread(lat, true);
  std::sort(to.begin(), to.end());
  const Field& f = lat.field();
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    Matrix t(4, 4);
    for (int i = 0; i < 16; ++i) t.at(i / 4, i % 4) = (bits >> i) & 1;
    if (linalg::Rank(f, t) < 4) continue;
    const LatticeIso iso(lat.field_ptr(), t);
    std::vector<int> image;
    for (int x : from) image.push_back(lat.index_of(iso.apply(lat.space(x))));
    std::sort(image.begin(), image.end());
    if (image == to) return iso;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<QMatroid> EnumerateQMatroids(const FieldPtr& field, int n) {
  LatticePtr lat = Lattice::Get(field, n);
  const int size = lat->size();
  // Incomparable pairs a < b whose join is i.
  std::vector<std::vector<std::pair<int, int>>> joins(size);
  for (int i = 0; i < size; ++i) {
    const std::vector<int>& below = lat->down_set(i);
    for (int a : below)
      for (int b : below)
        if (a < b && b != i && lat->join(a, b) == i && !lat->leq(a, b)) joins[i].emplace_back(a, b);
  }
  std::vector<QMatroid> out;
  std::vector<int> rank(size, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == size) {
      out.emplace_back(lat, rank);
      return;
    }
    int lo = 0, hi = 0;
    if (i > 0) {
      lo = 0;
      hi = lat->dim(i);
      int min_below = hi;
      for (int c : lat->covers_down(i)) {
        lo = std::max(lo, rank[c]);
        min_below = std::min(min_below, rank[c]);
      }
      hi = std::min(hi, min_below + 1);
    }
    for (int r = lo; r <= hi; ++r) {
      rank[i] = r;
      bool ok = true;
      for (const auto& [a, b] : joins[i])
        if (rank[a] + rank[b] < r + rank[lat->meet(a, b)]) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<QMatroid> GenerateCatalogue(const FieldPtr& field, int n, std::uint64_t cap) {
  std::vector<QMatroid> classes;
  for (const QMatroid& m : EnumerateQMatroids(field, n)) {
    bool seen = false;
    for (const QMatroid& c : classes)
      if (c.rank() == m.rank() && FindIsomorphism(c, m, cap)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(m);
  }
  return classes;
}

// ---------------------------------------------------------------------------

namespace {

// Rank min(k, dim A - dim(A ∩ L)).
QMatroid LoopSpaceMatroid(int n, const std::string& loopspace, int k) {
  LatticePtr lat = Lattice::Get(F2(), n);
  const int l = lat->parse(loopspace);
  std::vector<int> rank(lat->size());
  for (int a = 0; a < lat->size(); ++a)
    rank[a] = std::min(k, lat->dim(a) - lat->dim(lat->meet(a, l)));
  return QMatroid::Checked(lat, rank);
}

GoldenRepresentation Rep(std::uint32_t q, int k, std::vector<int> exponents) {
  return GoldenRepresentation{q, k, std::move(exponents)};
}

std::vector<GoldenEntry> BuildGolden() {
  std::vector<GoldenEntry> g;
  auto add = [&](GoldenEntry e) { g.push_back(std::move(e)); };
  auto uniform = [](int k, int n) { return [k, n] { return Uniform(F2(), k, n); }; };

  add({.name = "U00", .stem = "u00", .n = 0, .build = uniform(0, 0), .dual = "U00"});
  add({.name = "U01", .stem = "u01", .n = 1, .build = uniform(0, 1), .dual = "U11",
       .representation = Rep(2, 1, {-1})});
  add({.name = "U11", .stem = "u11", .n = 1, .build = uniform(1, 1), .dual = "U01",
       .representation = Rep(2, 1, {0})});
  add({.name = "U02", .stem = "u02", .n = 2, .build = uniform(0, 2), .dual = "U22"});
  add({.name = "MIXED", .stem = "mixed", .n = 2,
       .build = [] { return LoopSpaceMatroid(2, "01", 1); }, .dual = "MIXED",
       .representation = Rep(2, 1, {0, -1})});
  add({.name = "U12", .stem = "u12", .n = 2, .build = uniform(1, 2), .dual = "U12",
       .indecomposable = true, .representation = Rep(4, 1, {0, 1})});
  add({.name = "U22", .stem = "u22", .n = 2, .build = uniform(2, 2), .dual = "U02",
       .sums = {{"U11", "U11"}}, .representation = Rep(2, 2, {0, -1, -1, 0})});

  add({.name = "U03", .stem = "u03", .n = 3, .build = uniform(0, 3),
       .independent = "0", .bases = "0", .circuits = "all 1-spaces", .hyperplanes = "none",
       .cocircuits = "none", .dual = "U33", .sums = {{"U01", "U01", "U01"}},
       .representation = Rep(2, 1, {-1, -1, -1})});
  add({.name = "U13", .stem = "u13", .n = 3, .build = uniform(1, 3),
       .independent = "0 + all 1-spaces", .bases = "all 1-spaces", .circuits = "all 2-spaces",
       .hyperplanes = "0", .cocircuits = "E", .dual = "U23", .indecomposable = true,
       .representation = Rep(8, 1, {0, 1, 2})});
  add({.name = "P1", .stem = "p1", .n = 3, .build = [] { return LoopSpaceMatroid(3, "100", 1); },
       .independent = "0 + all 1-spaces except 100", .bases = "all 1-spaces except 100",
       .circuits = "100; 010,001; 101,010; 101,011; 110,001", .hyperplanes = "100",
       .cocircuits = "010,001", .dual = "P1*", .sums = {{"U01", "U12"}},
       .representation = Rep(4, 1, {-1, 0, 1})});
  add({.name = "P2", .stem = "p2", .n = 3,
       .build = [] { return LoopSpaceMatroid(3, "100,010", 1); },
       .independent = "0 + all 1-spaces except 100; 010; 110",
       .bases = "all 1-spaces except 100; 010; 110", .circuits = "100; 010; 110",
       .hyperplanes = "100,010", .cocircuits = "001", .dual = "P2*",
       .sums = {{"U01", "U01", "U11"}}, .representation = Rep(2, 1, {-1, -1, 0})});
  add({.name = "P2*", .stem = "p2star", .n = 3,
       .build = [] { return Dual(LoopSpaceMatroid(3, "100,010", 1)); },
       .independent = "0 + all 1-spaces except 001 + 100,010; 100,011; 101,010; 101,011",
       .bases = "100,010; 100,011; 101,010; 101,011", .circuits = "001",
       .hyperplanes = "100,001; 010,001; 110,001", .cocircuits = "010; 100; 110", .dual = "P2",
       .sums = {{"U11", "U11", "U01"}}, .representation = Rep(2, 2, {0, -1, -1, -1, 0, -1})});
  add({.name = "P1*", .stem = "p1star", .n = 3,
       .build = [] { return Dual(LoopSpaceMatroid(3, "100", 1)); },
       .independent = "0 + all 1-spaces + all 2-spaces except 010,001",
       .bases = "all 2-spaces except 010,001", .circuits = "010,001",
       .hyperplanes = "100; 110; 111; 101; 010,001",
       .cocircuits = "010,001; 110,001; 101,011; 101,010; 100", .dual = "P1",
       .sums = {{"U11", "U12"}}, .representation = Rep(4, 2, {0, -1, -1, -1, 1, 0})});
  add({.name = "U23", .stem = "u23", .n = 3, .build = uniform(2, 3),
       .independent = "all except E", .bases = "all 2-spaces", .circuits = "E",
       .hyperplanes = "all 1-spaces", .cocircuits = "all 2-spaces", .dual = "U13",
       .indecomposable = true, .representation = Rep(8, 2, {0, -1, 1, -1, 0, 2})});
  add({.name = "U33", .stem = "u33", .n = 3, .build = uniform(3, 3), .independent = "all",
       .bases = "E", .circuits = "none", .hyperplanes = "all 2-spaces",
       .cocircuits = "all 1-spaces", .dual = "U03", .sums = {{"U11", "U11", "U11"}},
       .representation = Rep(2, 3, {0, -1, -1, -1, 0, -1, -1, -1, 0})});
  return g;
}

QMatroid FromGoldenRep(const GoldenRepresentation& r, int n) {
  FieldPtr ext = Field::FromOrder(r.q);
  Matrix g(r.k, n);
  for (int i = 0; i < r.k; ++i)
    for (int j = 0; j < n; ++j) {
      const int e = r.exponents[static_cast<std::size_t>(i) * n + j];
      g.at(i, j) = e < 0 ? 0 : ext->pow(ext->primitive_element(), e);
    }
  return FromMatrix(MakeRepMatrix(F2(), ext, g));
}

QMatroid SumOf(const std::vector<std::string>& names) {
  QMatroid m = GoldenByName(names.at(0)).build();
  for (std::size_t i = 1; i < names.size(); ++i) m = DirectSum(m, GoldenByName(names[i]).build());
  return m;
}

}  // namespace

const std::vector<GoldenEntry>& GoldenCatalogue() {
  static const std::vector<GoldenEntry> entries = BuildGolden();
  return entries;
}

const GoldenEntry& GoldenByName(const std::string& name) {
  for (const auto& e : GoldenCatalogue())
    if (e.name == name) return e;
  throw Error(Errc::kOutOfRange, "no catalogue entry named '" + name + "'");
}

std::vector<int> ParseFamily(const Lattice& lat, const std::string& text) {
  std::set<int> out;
  for (const std::string& term : Split(text, '+')) {
    if (term == "none") continue;
    if (term == "all") {
      for (int i = 0; i < lat.size(); ++i) out.insert(i);
      continue;
    }
    if (term == "all except E") {
      for (int i = 0; i < lat.top(); ++i) out.insert(i);
      continue;
    }
    if (term.rfind("all ", 0) == 0) {
      const int k = term[4] - '0';
      if (k < 0 || k > lat.n() || term.compare(5, 7, "-spaces") != 0) {
        throw Error(Errc::kParseError, "bad family term '" + term + "'");
      }
      std::set<int> drop;
      const auto pos = term.find(" except ");
      if (pos != std::string::npos)
        for (const std::string& s : Split(term.substr(pos + 8), ';')) drop.insert(lat.parse(s));
      for (int i : lat.bucket(k))
        if (!drop.count(i)) out.insert(i);
      continue;
    }
    for (const std::string& s : Split(term, ';')) {
      if (s == "E") {
        out.insert(lat.top());
      } else {
        out.insert(lat.parse(s));
      }
    }
  }
  return {out.begin(), out.end()};
}

EntryCheck VerifyGoldenEntry(const GoldenEntry& e) {
  EntryCheck c;
  c.name = e.name;
  const QMatroid m = e.build();
  const Lattice& lat = m.lattice();
  const DerivedFamilies d = Derive(m);
  auto compare = [&](const std::string& what, const std::string& stated,
                     const std::vector<int>& got, bool& flag) {
    if (stated.empty()) return;
    std::vector<int> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    if (ParseFamily(lat, stated) != sorted) {
      flag = false;
      std::vector<std::string> names;
      for (int i : sorted) names.push_back(lat.format(i));
      c.notes.push_back(what + ": computed " + Join(names, "; ") + ", stated " + stated);
    }
  };
  compare("independent", e.independent, d.independent, c.independent);
  compare("bases", e.bases, d.bases, c.bases);
  compare("circuits", e.circuits, d.circuits, c.circuits);
  compare("hyperplanes", e.hyperplanes, d.hyperplanes, c.hyperplanes);
  compare("cocircuits", e.cocircuits, Cocircuits(m), c.cocircuits);

  if (!e.dual.empty()) {
    const QMatroid partner = GoldenByName(e.dual).build();
    if (!(Dual(m) == partner) && !IsIsomorphic(Dual(m), partner)) {
      c.dual = false;
      c.notes.push_back("dual is not " + e.dual);
    }
  }
  for (const auto& parts : e.sums) {
    if (!IsIsomorphic(SumOf(parts), m)) {
      c.sums = false;
      c.notes.push_back("not isomorphic to " + Join(parts, " + "));
    }
  }
  if (e.indecomposable) {
    const auto found = DirectSumDecompositions(m);
    if (!found.empty()) {
      c.sums = false;
      c.notes.push_back("decomposes as " + found[0].first + " + " + found[0].second);
    }
  }
  if (e.representation && !(FromGoldenRep(*e.representation, e.n) == m)) {
    c.representation = false;
    c.notes.push_back("representation gives a different rank table");
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> DirectSumDecompositions(const QMatroid& m) {
  std::vector<std::pair<std::string, std::string>> out;
  if (m.field().size() != 2) return out;
  for (const auto& a : GoldenCatalogue()) {
    if (a.n < 1 || a.n >= m.n()) continue;
    for (const auto& b : GoldenCatalogue()) {
      if (b.n != m.n() - a.n) continue;
      const QMatroid s = DirectSum(a.build(), b.build());
      if (s.rank() == m.rank() && IsIsomorphic(s, m)) out.emplace_back(a.name, b.name);
    }
  }
  return out;
}

bool CatalogueReport::all_matched() const {
  for (const auto& s : matched)
    if (s.empty()) return false;
  return true;
}

std::string CatalogueReport::Render() const {
  std::ostringstream os;
  os << "n=" << n << ": " << classes.size() << " isomorphism classes\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    os << "  " << (matched[i].empty() ? "(unmatched)" : matched[i]) << " rank "
       << classes[i].rank() << "\n";
  }
  return os.str();
}

CatalogueReport BuildCatalogueReport(int n) {
  CatalogueReport report;
  report.n = n;
  report.classes = GenerateCatalogue(F2(), n);
  for (const QMatroid& c : report.classes) {
    std::string name;
    for (const auto& e : GoldenCatalogue())
      if (e.n == n && IsIsomorphic(e.build(), c)) {
        name = e.name;
        break;
      }
    report.matched.push_back(name);
  }
  return report;
}

QMatroid RandomQMatroid(int n, std::mt19937_64& rng) {
  LatticePtr lat = Lattice::Get(F2(), n);
  auto base = [&]() {
    std::uniform_int_distribution<int> k(0, n);
    std::uniform_int_distribution<int> pick(0, lat->size() - 1);
    const QMatroid m = LoopSpaceMatroid(n, lat->format(pick(rng)), k(rng));
    return Transform(m, LatticeIso::Random(F2(), n, rng));
  };
  QMatroid m = base();
  std::uniform_int_distribution<int> op(0, 3);
  for (int step = 0; step < 2; ++step) {
    switch (op(rng)) {
      case 0: m = Union(m, base()); break;
      case 1: m = Intersection(m, base()); break;
      case 2: m = Dual(m); break;
      default: break;
    }
  }
  return m;
}

}  // namespace qmat
