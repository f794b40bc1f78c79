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

#include "qmat/qmat.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <random>
#include <sstream>
#include <string>

#include "qmat/analysis.hpp"
#include "qmat/construct.hpp"
#include "qmat/core.hpp"
#include "qmat/error.hpp"
#include "qmat/io.hpp"
#include "qmat/repr.hpp"

struct qmat_matroid {
  qmat::QMatroid m;
};

namespace {

thread_local std::string g_last_error;

qmat_status Fail(qmat_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
qmat_status Guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QMAT_OK;
  } catch (const qmat::Error& e) {
    return Fail(static_cast<qmat_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(QMAT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(QMAT_E_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qmat_matroid* Wrap(qmat::QMatroid m) { return new qmat_matroid{std::move(m)}; }

#define QMAT_REQUIRE(cond)                                                  \
  do {                                                                      \
    if (!(cond)) return Fail(QMAT_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

int Locate(const qmat::QMatroid& m, const char* subspace) {
  return m.lattice().parse(subspace);
}

std::string Angle(const qmat::Lattice& lat, int i) { return "<" + lat.format(i) + ">"; }

void RenderRelation(std::ostringstream& os, const qmat::Lattice& lat,
                    const qmat::RelationClasses& r) {
  os << "  related pairs: " << r.pairs.size() << "\n";
  os << "  transitive: " << (r.is_equivalence ? "yes" : "no") << "\n";
  if (r.witness) {
    const auto [x, y, z] = *r.witness;
    os << "  witness: " << Angle(lat, x) << " ~ " << Angle(lat, y) << ", " << Angle(lat, y)
       << " ~ " << Angle(lat, z) << ", " << Angle(lat, x) << " !~ " << Angle(lat, z) << "\n";
  }
  if (r.is_equivalence) {
    os << "  classes: " << r.classes.size() << "\n";
    for (const auto& c : r.classes) {
      os << "   ";
      for (int p : c) os << " " << Angle(lat, p);
      os << "\n";
    }
  }
}

}  // namespace

extern "C" {

const char* qmat_last_error(void) { return g_last_error.c_str(); }

const char* qmat_status_name(qmat_status status) {
  switch (status) {
    case QMAT_OK: return "ok";
    case QMAT_E_INVALID_ARGUMENT: return "InvalidArgument";
    case QMAT_E_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(qmat::Errc::kIoError)) {
    return qmat::ErrcName(static_cast<qmat::Errc>(code)).data();
  }
  return "Unknown";
}

void qmat_string_free(char* s) { std::free(s); }
void qmat_matroid_free(qmat_matroid* m) { delete m; }

void qmat_set_lattice_cap(uint64_t cap) { qmat::SetLatticeCap(cap); }

qmat_status qmat_read(const char* text, qmat_matroid** out) {
  QMAT_REQUIRE(text && out);
  return Guard([&] { *out = Wrap(qmat::ReadQMatroid(text)); });
}

qmat_status qmat_read_file(const char* path, qmat_matroid** out) {
  QMAT_REQUIRE(path && out);
  return Guard([&] { *out = Wrap(qmat::ReadQMatroid(qmat::ReadFile(path))); });
}

qmat_status qmat_write(const qmat_matroid* m, char** out) {
  QMAT_REQUIRE(m && out);
  return Guard([&] { *out = Dup(qmat::WriteQMatroid(m->m)); });
}

qmat_status qmat_write_file(const qmat_matroid* m, const char* path) {
  QMAT_REQUIRE(m && path);
  return Guard([&] { qmat::WriteFile(path, qmat::WriteQMatroid(m->m)); });
}

qmat_status qmat_field_order(const qmat_matroid* m, uint32_t* q) {
  QMAT_REQUIRE(m && q);
  *q = m->m.field().size();
  return QMAT_OK;
}

qmat_status qmat_dimension(const qmat_matroid* m, int* n) {
  QMAT_REQUIRE(m && n);
  *n = m->m.n();
  return QMAT_OK;
}

qmat_status qmat_rank(const qmat_matroid* m, int* rank) {
  QMAT_REQUIRE(m && rank);
  *rank = m->m.rank();
  return QMAT_OK;
}

qmat_status qmat_rank_of(const qmat_matroid* m, const char* subspace, int* rank) {
  QMAT_REQUIRE(m && subspace && rank);
  return Guard([&] { *rank = m->m.rank(Locate(m->m, subspace)); });
}

qmat_status qmat_equal(const qmat_matroid* a, const qmat_matroid* b, int* equal) {
  QMAT_REQUIRE(a && b && equal);
  *equal = a->m == b->m;
  return QMAT_OK;
}

qmat_status qmat_is_isomorphic(const qmat_matroid* a, const qmat_matroid* b, int* iso) {
  QMAT_REQUIRE(a && b && iso);
  return Guard([&] {
    *iso = a->m.n() == b->m.n() && a->m.field() == b->m.field() &&
           qmat::IsIsomorphic(a->m, b->m);
  });
}

qmat_status qmat_check(const char* text, int* ok, char** report) {
  QMAT_REQUIRE(text && ok && report);
  return Guard([&] {
    const qmat::QMatroid m = qmat::ReadQMatroidUnchecked(text);
    const qmat::AxiomReport r = qmat::CheckRankAxioms(m);
    *ok = r.ok();
    std::ostringstream os;
    os << "q=" << m.field().size() << " n=" << m.n() << "\n";
    if (r.ok()) {
      os << "ok, rank(E)=" << m.rank() << "\n";
    } else {
      os << r.Render(m.lattice());
    }
    *report = Dup(os.str());
  });
}

qmat_status qmat_families(const qmat_matroid* m, char** out) {
  QMAT_REQUIRE(m && out);
  return Guard([&] { *out = Dup(qmat::RenderFamilies(m->m)); });
}

qmat_status qmat_uniform(uint32_t q, int k, int n, qmat_matroid** out) {
  QMAT_REQUIRE(out);
  return Guard([&] { *out = Wrap(qmat::Uniform(qmat::Field::FromOrder(q), k, n)); });
}

qmat_status qmat_dual(const qmat_matroid* m, qmat_matroid** out) {
  QMAT_REQUIRE(m && out);
  return Guard([&] { *out = Wrap(qmat::Dual(m->m)); });
}

qmat_status qmat_restrict(const qmat_matroid* m, const char* subspace, qmat_matroid** out) {
  QMAT_REQUIRE(m && subspace && out);
  return Guard([&] { *out = Wrap(qmat::Restrict(m->m, Locate(m->m, subspace))); });
}

qmat_status qmat_contract(const qmat_matroid* m, const char* subspace, qmat_matroid** out) {
  QMAT_REQUIRE(m && subspace && out);
  return Guard([&] { *out = Wrap(qmat::Contract(m->m, Locate(m->m, subspace))); });
}

qmat_status qmat_union(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out) {
  QMAT_REQUIRE(a && b && out);
  return Guard([&] { *out = Wrap(qmat::Union(a->m, b->m)); });
}

qmat_status qmat_intersect(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out) {
  QMAT_REQUIRE(a && b && out);
  return Guard([&] { *out = Wrap(qmat::Intersection(a->m, b->m)); });
}

qmat_status qmat_sum(const qmat_matroid* a, const qmat_matroid* b, qmat_matroid** out) {
  QMAT_REQUIRE(a && b && out);
  return Guard([&] { *out = Wrap(qmat::DirectSum(a->m, b->m)); });
}

qmat_status qmat_add_loop(const qmat_matroid* m, qmat_matroid** out) {
  QMAT_REQUIRE(m && out);
  return Guard([&] { *out = Wrap(qmat::AddLoop(m->m)); });
}

qmat_status qmat_from_matrix(const char* text, qmat_matroid** out) {
  QMAT_REQUIRE(text && out);
  return Guard([&] { *out = Wrap(qmat::FromMatrix(qmat::ReadRepMatrix(text))); });
}

qmat_status qmat_dot(const qmat_matroid* m, size_t cap, char** out) {
  QMAT_REQUIRE(m && out);
  return Guard([&] { *out = Dup(qmat::EmitDot(m->m, cap ? cap : qmat::kDiagramCap)); });
}

qmat_status qmat_catalogue(uint32_t q, int n, const char* out_dir, const char* golden_dir,
                           int* ok, char** report) {
  QMAT_REQUIRE(ok && report);
  return Guard([&] {
    namespace fs = std::filesystem;
    const qmat::FieldPtr field = qmat::Field::FromOrder(q);
    const std::vector<qmat::QMatroid> classes = qmat::GenerateCatalogue(field, n);
    if (out_dir) fs::create_directories(out_dir);
    bool all_ok = true;
    std::ostringstream os;
    os << "q=" << q << " n=" << n << ": " << classes.size() << " isomorphism classes\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      qmat::QMatroid table = classes[i];
      std::string stem = "class" + std::to_string(i);
      std::string name;
      if (q == 2) {
        for (const auto& e : qmat::GoldenCatalogue()) {
          if (e.n != n) continue;
          const qmat::QMatroid golden = e.build();
          if (auto t = qmat::FindIsomorphism(table, golden)) {
            table = qmat::Transform(table, *t);
            stem = e.stem;
            name = e.name;
            break;
          }
        }
        if (name.empty()) all_ok = false;
      }
      os << (name.empty() ? stem : name) << ": rank " << table.rank();
      if (out_dir) {
        const std::string path = (fs::path(out_dir) / (stem + ".qm")).string();
        qmat::WriteFile(path, qmat::WriteQMatroid(table));
        os << ", wrote " << path;
      }
      os << "\n";
      if (name.empty()) continue;
      const qmat::EntryCheck check = qmat::VerifyGoldenEntry(qmat::GoldenByName(name));
      os << "  catalogue entry: " << (check.ok() ? "verified" : "MISMATCH") << "\n";
      for (const auto& note : check.notes) os << "    " << note << "\n";
      all_ok = all_ok && check.ok();
      if (golden_dir) {
        const std::string path = (fs::path(golden_dir) / (stem + ".qm")).string();
        const bool same = qmat::ReadFile(path) == qmat::WriteQMatroid(table);
        os << "  golden file " << path << ": " << (same ? "identical" : "DIFFERS") << "\n";
        all_ok = all_ok && same;
      }
    }
    *ok = all_ok;
    *report = Dup(os.str());
  });
}

qmat_status qmat_nonrep(int m_max, int shape_m_max, int* ok, char** report) {
  QMAT_REQUIRE(ok && report);
  return Guard([&] {
    const qmat::NonrepReport r = qmat::NonrepSearch(m_max, shape_m_max);
    *ok = r.ok();
    *report = Dup(r.Render());
  });
}

qmat_status qmat_connect(const qmat_matroid* m, char** report) {
  QMAT_REQUIRE(m && report);
  return Guard([&] {
    const qmat::Lattice& lat = m->m.lattice();
    std::ostringstream os;
    os << "circuit relation\n";
    RenderRelation(os, lat, qmat::CircuitRelation(m->m));
    os << "hyperplane relation\n";
    const qmat::RelationClasses h = qmat::HyperplaneRelation(m->m);
    RenderRelation(os, lat, h);
    if (!h.is_equivalence) os << "  INCONSISTENT: hyperplane relation is not transitive\n";
    if (qmat::Derive(m->m).hyperplanes.empty() && lat.n() > 0) {
      os << "  no hyperplanes: the relation is the diagonal\n";
    }
    const qmat::ConjectureReport c = qmat::CheckConjectures({{"M", m->m}});
    const qmat::ConjectureRow& row = c.rows[0];
    if (row.dim_one_witness) {
      os << "circuit " << Angle(lat, row.dim_one_witness->first) << " meets cocircuit "
         << Angle(lat, row.dim_one_witness->second) << " in dimension 1\n";
    }
    os << "conjectures\n" << c.Render();
    *report = Dup(os.str());
  });
}

qmat_status qmat_connect_random(int n, int count, uint64_t seed, char** report) {
  QMAT_REQUIRE(report);
  return Guard([&] {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, qmat::QMatroid>> ms;
    for (int i = 0; i < count; ++i) {
      ms.emplace_back("random" + std::to_string(i), qmat::RandomQMatroid(n, rng));
    }
    *report = Dup(qmat::CheckConjectures(ms).Render());
  });
}

qmat_status qmat_demo_nonunique(int* ok, char** report) {
  QMAT_REQUIRE(ok && report);
  return Guard([&] {
    const qmat::NonuniquenessReport r = qmat::NonuniquenessDemo();
    *ok = r.ok();
    *report = Dup(r.Render());
  });
}

}  // extern "C"
