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

// qmat command-line tool. Exit status: 0 success, 1 domain error, 2 usage
// error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qmat/qmat.h"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;

class Handle {
 public:
  Handle() = default;
  ~Handle() { qmat_matroid_free(m_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  qmat_matroid** out() { return &m_; }
  const qmat_matroid* get() const { return m_; }

 private:
  qmat_matroid* m_ = nullptr;
};

class Text {
 public:
  ~Text() { qmat_string_free(s_); }
  char** out() { return &s_; }
  const char* get() const { return s_ ? s_ : ""; }

 private:
  char* s_ = nullptr;
};

// Throws on failure so the dispatcher can map it to exit status 1.
struct DomainError {
  std::string message;
};

void Must(qmat_status s) {
  if (s != QMAT_OK) throw DomainError{qmat_last_error()};
}

void Load(const std::string& path, Handle& h) {
  const qmat_status s = qmat_read_file(path.c_str(), h.out());
  if (s != QMAT_OK) throw DomainError{path + ": " + qmat_last_error()};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError{"cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Writes to `out` or stdout; a written file is loaded back and checked.
void Emit(const Handle& h, const std::string& out) {
  if (out.empty()) {
    Text t;
    Must(qmat_write(h.get(), t.out()));
    std::cout << t.get();
    return;
  }
  Must(qmat_write_file(h.get(), out.c_str()));
  Handle again;
  Load(out, again);
  int rank = 0;
  Must(qmat_rank(again.get(), &rank));
  std::cerr << "wrote " << out << " (ok, rank(E)=" << rank << ")\n";
}

void WriteText(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) throw DomainError{"cannot write " + out};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmat: exact computations with q-matroids over small finite fields"};
  app.require_subcommand(1);
  std::uint64_t lattice_cap = 0;
  app.add_option("--lattice-cap", lattice_cap, "Cap on enumerated subspaces (overrides QMAT_LATTICE_CAP)");

  std::string in1, in2, out, subspace, golden;
  int q = 2, n = 3, m_max = 6, shape_m_max = 4, random_count = 0;
  std::uint64_t seed = 1;
  std::size_t cap = 0;
  int result = kOk;
  std::function<void()> run;

  auto unary = [&](const char* verb, const char* help, auto op) {
    CLI::App* c = app.add_subcommand(verb, help);
    c->add_option("input", in1, "q-matroid file")->required();
    c->add_option("-o,--output", out, "Output file (default stdout)");
    c->callback([&, op] {
      run = [&, op] {
        Handle m, r;
        Load(in1, m);
        Must(op(m.get(), r.out()));
        Emit(r, out);
      };
    });
  };
  auto binary = [&](const char* verb, const char* help, auto op) {
    CLI::App* c = app.add_subcommand(verb, help);
    c->add_option("first", in1, "q-matroid file")->required();
    c->add_option("second", in2, "q-matroid file")->required();
    c->add_option("-o,--output", out, "Output file (default stdout)");
    c->callback([&, op] {
      run = [&, op] {
        Handle a, b, r;
        Load(in1, a);
        Load(in2, b);
        Must(op(a.get(), b.get(), r.out()));
        Emit(r, out);
      };
    });
  };
  auto minor = [&](const char* verb, const char* help, auto op) {
    CLI::App* c = app.add_subcommand(verb, help);
    c->add_option("input", in1, "q-matroid file")->required();
    c->add_option("subspace", subspace, "Basis rows, e.g. 100,011")->required();
    c->add_option("-o,--output", out, "Output file (default stdout)");
    c->callback([&, op] {
      run = [&, op] {
        Handle m, r;
        Load(in1, m);
        Must(op(m.get(), subspace.c_str(), r.out()));
        Emit(r, out);
      };
    });
  };

  CLI::App* check = app.add_subcommand("check", "Verify the rank axioms of a table");
  check->add_option("input", in1, "q-matroid file")->required();
  check->callback([&] {
    run = [&] {
      const std::string text = Slurp(in1);
      int ok = 0;
      Text report;
      Must(qmat_check(text.c_str(), &ok, report.out()));
      std::cout << report.get();
      if (!ok) result = kDomain;
    };
  });

  CLI::App* families = app.add_subcommand("families", "List the derived families");
  families->add_option("input", in1, "q-matroid file")->required();
  families->callback([&] {
    run = [&] {
      Handle m;
      Load(in1, m);
      Text t;
      Must(qmat_families(m.get(), t.out()));
      std::cout << t.get();
    };
  });

  unary("dual", "Dual q-matroid", qmat_dual);
  unary("add-loop", "Append a loop coordinate", qmat_add_loop);
  minor("restrict", "Restriction to a subspace", qmat_restrict);
  minor("contract", "Contraction of a subspace", qmat_contract);
  binary("union", "Matroid union", qmat_union);
  binary("intersect", "Matroid intersection", qmat_intersect);
  binary("sum", "Direct sum", qmat_sum);

  CLI::App* from = app.add_subcommand("from-matrix", "q-matroid of a representation matrix");
  from->add_option("input", in1, "repmatrix file")->required();
  from->add_option("-o,--output", out, "Output file (default stdout)");
  from->callback([&] {
    run = [&] {
      const std::string text = Slurp(in1);
      Handle r;
      Must(qmat_from_matrix(text.c_str(), r.out()));
      Emit(r, out);
    };
  });

  CLI::App* catalogue = app.add_subcommand("catalogue", "All q-matroids of a dimension up to isomorphism");
  catalogue->add_option("--q", q, "Field order")->capture_default_str();
  catalogue->add_option("--n", n, "Dimension")->capture_default_str();
  catalogue->add_option("-o,--output", out, "Directory for one file per class");
  catalogue->add_option("--golden", golden, "Directory of golden files to compare against");
  catalogue->callback([&] {
    run = [&] {
      int ok = 0;
      Text report;
      Must(qmat_catalogue(static_cast<std::uint32_t>(q), n, out.empty() ? nullptr : out.c_str(),
                          golden.empty() ? nullptr : golden.c_str(), &ok, report.out()));
      std::cout << report.get();
      if (!ok) result = kDomain;
    };
  });

  CLI::App* nonrep = app.add_subcommand("nonrep", "Two-block representations over GF(2^m)");
  nonrep->add_option("--m-max", m_max, "Largest extension degree")->capture_default_str();
  nonrep->add_option("--shape-m-max", shape_m_max, "Largest degree for the shape check")
      ->capture_default_str();
  nonrep->callback([&] {
    run = [&] {
      int ok = 0;
      Text report;
      Must(qmat_nonrep(m_max, shape_m_max, &ok, report.out()));
      std::cout << report.get();
      if (!ok) result = kDomain;
    };
  });

  CLI::App* connect = app.add_subcommand("connect", "Circuit and hyperplane relations, conjecture checks");
  connect->add_option("input", in1, "q-matroid file");
  connect->add_option("--random", random_count, "Check this many random q-matroids instead");
  connect->add_option("--n", n, "Dimension of the random q-matroids")->capture_default_str();
  connect->add_option("--seed", seed, "Random seed")->capture_default_str();
  connect->callback([&] {
    if (in1.empty() == (random_count == 0)) {
      throw CLI::ValidationError("connect", "give either an input file or --random");
    }
    run = [&] {
      Text report;
      if (random_count > 0) {
        Must(qmat_connect_random(n, random_count, seed, report.out()));
      } else {
        Handle m;
        Load(in1, m);
        Must(qmat_connect(m.get(), report.out()));
      }
      std::cout << report.get();
    };
  });

  CLI::App* demo = app.add_subcommand("demo-nonunique", "Rank-2 variants on F_2^4");
  demo->callback([&] {
    run = [&] {
      int ok = 0;
      Text report;
      Must(qmat_demo_nonunique(&ok, report.out()));
      std::cout << report.get();
      if (!ok) result = kDomain;
    };
  });

  CLI::App* dot = app.add_subcommand("dot", "Bicoloured Hasse diagram in DOT");
  dot->add_option("input", in1, "q-matroid file")->required();
  dot->add_option("-o,--output", out, "Output file (default stdout)");
  dot->add_option("--cap", cap, "Largest lattice to draw");
  dot->callback([&] {
    run = [&] {
      Handle m;
      Load(in1, m);
      Text t;
      Must(qmat_dot(m.get(), cap, t.out()));
      WriteText(t.get(), out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (lattice_cap) qmat_set_lattice_cap(lattice_cap);
  try {
    if (run) run();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kDomain;
  }
  return result;
}
