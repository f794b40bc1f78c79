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

#include "qmat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int ParseInt(std::string_view s, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::kParseError,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string_view KeyValue(std::string_view tok, std::string_view key, int line_no) {
  if (!tok.starts_with(key) || tok.size() <= key.size() || tok[key.size()] != '=') {
    throw Error(Errc::kParseError,
                "line " + std::to_string(line_no) + ": expected " + std::string(key) + "=");
  }
  return tok.substr(key.size() + 1);
}

FieldPtr FieldFromToken(std::string_view v) {
  if (v.find('^') != std::string_view::npos) return Field::FromHeader("GF(" + std::string(v) + ")");
  return Field::FromHeader(v);
}

}  // namespace

std::string WriteQMatroid(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  std::ostringstream os;
  os << "qmatroid q=" << lat.field().size() << " n=" << lat.n() << "\n";
  for (int i = 0; i < lat.size(); ++i) {
    os << m.rank(i) << " " << lat.dim(i);
    if (lat.dim(i) > 0) os << " " << lat.format(i);
    os << "\n";
  }
  return os.str();
}

QMatroid ReadQMatroidUnchecked(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!Tokens(line).empty() && !line.starts_with("#")) lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) throw Error(Errc::kParseError, "empty q-matroid file");
  auto head = Tokens(lines[0]);
  if (head.size() != 3 || head[0] != "qmatroid") {
    throw Error(Errc::kParseError, "line 1: expected 'qmatroid q=<q> n=<n>'");
  }
  FieldPtr field = FieldFromToken(KeyValue(head[1], "q", 1));
  const int n = ParseInt(KeyValue(head[2], "n", 1), 1);
  if (n < 0) throw Error(Errc::kParseError, "line 1: negative n");
  LatticePtr lat = Lattice::Get(field, n);
  if (static_cast<int>(lines.size()) - 1 != lat->size()) {
    throw Error(Errc::kParseError, "expected " + std::to_string(lat->size()) +
                                       " subspace lines, found " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<int> rank(lat->size());
  for (int i = 0; i < lat->size(); ++i) {
    const int line_no = i + 2;
    auto tok = Tokens(lines[i + 1]);
    if (tok.size() < 2 || tok.size() > 3) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) + ": expected '<rank> <dim> <rows>'");
    }
    rank[i] = ParseInt(tok[0], line_no);
    const int dim = ParseInt(tok[1], line_no);
    const Subspace s = tok.size() == 3 ? ParseSubspace(*field, n, tok[2]) : Subspace(n);
    if (s.dim() != dim) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) + ": dimension mismatch");
    }
    if (!(s == lat->space(i))) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                         ": subspace out of canonical order, expected " +
                                         lat->format(i));
    }
  }
  return QMatroid(std::move(lat), std::move(rank));
}

QMatroid ReadQMatroid(std::string_view text) {
  const QMatroid m = ReadQMatroidUnchecked(text);
  return QMatroid::Checked(m.lattice_ptr(), m.ranks());
}

std::string RenderFamilies(const QMatroid& m) {
  const Lattice& lat = m.lattice();
  const DerivedFamilies d = Derive(m);
  auto line = [&](std::ostringstream& os, const char* name, const std::vector<int>& family) {
    os << name << ":";
    if (family.empty()) os << " none";
    for (std::size_t i = 0; i < family.size(); ++i) os << (i ? "; " : " ") << lat.format(family[i]);
    os << "\n";
  };
  std::ostringstream os;
  os << "rank: " << m.rank() << "\n";
  line(os, "independent", d.independent);
  line(os, "bases", d.bases);
  line(os, "circuits", d.circuits);
  line(os, "flats", d.flats);
  line(os, "hyperplanes", d.hyperplanes);
  line(os, "spanning", d.spanning);
  line(os, "cocircuits", Cocircuits(m));
  os << "loopspace: " << lat.format(d.loopspace) << "\n";
  return os.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kIoError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(Errc::kIoError, "write failed for " + path);
}

std::string EmitDot(const QMatroid& m, std::size_t cap) {
  const Lattice& lat = m.lattice();
  if (static_cast<std::size_t>(lat.size()) > cap) {
    throw Error(Errc::kTooLargeForDiagram,
                std::to_string(lat.size()) + " subspaces exceed the diagram cap " +
                    std::to_string(cap));
  }
  std::ostringstream os;
  os << "graph qmatroid {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int i = 0; i < lat.size(); ++i) {
    os << "  n" << i << " [label=\"<" << lat.format(i) << "> r=" << m.rank(i) << "\"];\n";
  }
  for (const ColouredCover& c : Bicolour(m)) {
    os << "  n" << c.lower << " -- n" << c.upper << " [color=" << (c.red ? "red" : "green")
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qmat
