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

// Runs the qmat executable and inspects exit codes, stdout and files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qmat/io.hpp"
#include "qmat/lattice.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kCli = QMAT_CLI_PATH;
const std::string kData = QMAT_DATA_DIR;

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome Exec(const std::string& args) {
  Outcome r;
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Golden(const std::string& stem) { return kData + "/catalogue/v1/" + stem + ".qm"; }

std::string Read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qmat_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SumThenCheck) {
  const std::string out = Path("out.qm");
  ASSERT_EQ(Exec("sum " + Golden("u12") + " " + Golden("u11") + " -o " + out).status, 0);
  const Outcome check = Exec("check " + out);
  EXPECT_EQ(check.status, 0);
  EXPECT_NE(check.out.find("rank(E)=2"), std::string::npos);
  const std::string iso = Path("iso.qm");
  EXPECT_EQ(Exec("dual " + out + " -o " + iso).status, 0);
}

TEST_F(CliTest, DualOfU13) {
  const std::string out = Path("dual.qm");
  ASSERT_EQ(Exec("dual " + Golden("u13") + " -o " + out).status, 0);
  EXPECT_EQ(Read(out), Read(Golden("u23")));
  const Outcome stdout_run = Exec("dual " + Golden("u13"));
  EXPECT_EQ(stdout_run.out, Read(Golden("u23")));
}

TEST_F(CliTest, CatalogueWritesEightFiles) {
  const Outcome r = Exec("catalogue --q 2 --n 3 -o " + Path("cat") + " --golden " + kData + "/catalogue/v1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("8 isomorphism classes"), std::string::npos);
  int files = 0;
  for (const auto& e : fs::directory_iterator(Path("cat"))) {
    ++files;
    EXPECT_EQ(Read(e.path().string()), Read(Golden(e.path().stem().string())));
    EXPECT_EQ(Exec("check " + e.path().string()).status, 0);
  }
  EXPECT_EQ(files, 8);
}

TEST_F(CliTest, EveryVerbOutputRepassesCheck) {
  const std::vector<std::string> cmds = {
      "dual " + Golden("p1"),
      "add-loop " + Golden("p2"),
      "restrict " + Golden("p1") + " 100,011",
      "contract " + Golden("p1star") + " 010",
      "union " + Golden("p1") + " " + Golden("p2"),
      "intersect " + Golden("p1") + " " + Golden("p2star"),
      "sum " + Golden("mixed") + " " + Golden("u12"),
      "from-matrix " + kData + "/matrices/two_block_gf8.rep",
  };
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    const std::string out = Path("v" + std::to_string(i) + ".qm");
    ASSERT_EQ(Exec(cmds[i] + " -o " + out).status, 0) << cmds[i];
    EXPECT_EQ(Exec("check " + out).status, 0) << cmds[i];
    // Canonical files are reproduced byte for byte.
    EXPECT_EQ(qmat::WriteQMatroid(qmat::ReadQMatroid(Read(out))), Read(out));
  }
}

TEST_F(CliTest, FromMatrixGivesCatalogueEntries) {
  EXPECT_EQ(Exec("from-matrix " + kData + "/matrices/p1star_gf4.rep").out, Read(Golden("p1star")));
  EXPECT_EQ(Exec("from-matrix " + kData + "/matrices/u13_gf8.rep").out, Read(Golden("u13")));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Exec("").status, 2);
  EXPECT_EQ(Exec("frobnicate").status, 2);
  EXPECT_EQ(Exec("dual").status, 2);
  EXPECT_EQ(Exec("dual " + Golden("u13") + " --bogus").status, 2);
  EXPECT_EQ(Exec("connect").status, 2);
  EXPECT_EQ(Exec("dual /does/not/exist").status, 1);
  EXPECT_EQ(Exec("restrict " + Golden("u13") + " 11").status, 1);

  const std::string bad = Path("bad.qm");
  std::ofstream(bad) << "qmatroid q=2 n=1\n0 0\n2 1 1\n";
  const Outcome check = Exec("check " + bad);
  EXPECT_EQ(check.status, 1);
  EXPECT_NE(check.out.find("R1"), std::string::npos);
  EXPECT_EQ(Exec("dual " + bad).status, 1);

  const std::string garbled = Path("garbled.qm");
  std::ofstream(garbled) << "qmatroid q=2 n=1\n0 0\n";
  EXPECT_EQ(Exec("check " + garbled).status, 1);
}

TEST_F(CliTest, LatticeCapFromEnvironment) {
  const std::string cmd = "QMAT_LATTICE_CAP=10 " + kCli + " dual " + Golden("u13") + " >/dev/null 2>&1";
  EXPECT_NE(std::system(cmd.c_str()), 0);
  EXPECT_EQ(Exec("--lattice-cap 10 dual " + Golden("u13")).status, 1);
  EXPECT_EQ(Exec("--lattice-cap 100 dual " + Golden("u13")).status, 0);
}

TEST_F(CliTest, DotIsDeterministicAndBicoloured) {
  const Outcome a = Exec("dot " + Golden("p2star"));
  const Outcome b = Exec("dot " + Golden("p2star"));
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("graph qmatroid {", 0), 0u);
  // Node 0 is the zero space; <001> is the loop, <100> is not.
  const auto lat = qmat::Lattice::Get(qmat::Field::FromOrder(2), 3);
  const int loop = lat->parse("001"), other = lat->parse("100");
  EXPECT_NE(a.out.find("n0 -- n" + std::to_string(loop) + " [color=green]"), std::string::npos);
  EXPECT_NE(a.out.find("n0 -- n" + std::to_string(other) + " [color=red]"), std::string::npos);

  const Outcome u03 = Exec("dot " + Golden("u03"));
  EXPECT_EQ(u03.out.find("color=red"), std::string::npos);

  const std::string out = Path("g.dot");
  EXPECT_EQ(Exec("dot " + Golden("p1") + " -o " + out).status, 0);
  EXPECT_EQ(Read(out), Exec("dot " + Golden("p1")).out);
  EXPECT_EQ(Exec("dot " + Golden("p1") + " --cap 4").status, 1);
}

TEST_F(CliTest, Reports) {
  const Outcome demo = Exec("demo-nonunique");
  EXPECT_EQ(demo.status, 0);
  EXPECT_NE(demo.out.find("pairwise non-isomorphic: yes"), std::string::npos);
  const Outcome nonrep = Exec("nonrep --m-max 3 --shape-m-max 2");
  EXPECT_EQ(nonrep.status, 0);
  const Outcome connect = Exec("connect " + Golden("p1star"));
  EXPECT_EQ(connect.status, 0);
  EXPECT_NE(connect.out.find("classes: 1\n"), std::string::npos);
  const Outcome r1 = Exec("connect --random 4 --n 3 --seed 9");
  const Outcome r2 = Exec("connect --random 4 --n 3 --seed 9");
  EXPECT_EQ(r1.status, 0);
  EXPECT_EQ(r1.out, r2.out);
  const Outcome fam = Exec("families " + Golden("p1"));
  EXPECT_NE(fam.out.find("circuits: 100; 010,001; 101,010; 101,011; 110,001"), std::string::npos);
}

}  // namespace
