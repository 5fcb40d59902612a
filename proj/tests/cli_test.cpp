#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "layout_table.hpp"
#include "monadlab/cli.hpp"
#include "monadlab/gens.hpp"
#include "monadlab/monad_io.hpp"

namespace monadlab {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("monadlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path(name), std::ios::binary) << body;
    return path(name);
  }
  std::string gen(const std::string& kind, int n, int k, const std::string& field = "", int seed = 0) const {
    const std::string f = path(kind + std::to_string(n) + std::to_string(k) + "_" + std::to_string(seed) + ".monad");
    std::vector<std::string> args{"gen", kind, "--n", std::to_string(n), "--k", std::to_string(k), "--out", f,
                                  "--seed", std::to_string(seed)};
    if (!field.empty()) args.insert(args.end(), {"--field", field});
    EXPECT_EQ(run(args).code, 0);
    return f;
  }

  fs::path dir_;
};

TEST_F(Cli, LayoutMatchesGolden) {
  const auto r = run({"layout", "--n", "2", "--k", "4", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fs::path(MONADLAB_GOLDEN_DIR) / "layout_n2_k4.txt"));
  EXPECT_EQ(run({"layout", "--n", "2", "--k", "4"}).out, r.out);
}

TEST_F(Cli, LayoutCsvMatchesTranscription) {
  const auto r = run({"layout", "--n", "2", "--k", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::string expected = "i,j,alpha\n";
  for (std::size_t i = 0; i < 20; ++i) {
    auto cells = table::kCells[i];
    std::sort(cells.begin(), cells.end());
    for (auto [col, alpha] : cells)
      expected += std::to_string(i + 1) + "," + std::to_string(col) + "," + std::to_string(alpha) + "\n";
  }
  EXPECT_EQ(r.out, expected);
  EXPECT_EQ(r.out, slurp(fs::path(MONADLAB_GOLDEN_DIR) / "layout_n2_k4.csv"));
}

TEST_F(Cli, GoldenTableCells) {
  // parse the golden table back into cells and compare with the transcription
  std::istringstream in(slurp(fs::path(MONADLAB_GOLDEN_DIR) / "layout_n2_k4.txt"));
  std::string line;
  for (std::size_t i = 0; i < 20; ++i) {
    ASSERT_TRUE(std::getline(in, line));
    const auto bar = line.find("||");
    ASSERT_NE(bar, std::string::npos);
    std::string label = line.substr(bar + 2);
    label.erase(0, label.find_first_not_of(' '));
    EXPECT_EQ(label, table::kRowLabels[i]);
    std::vector<std::pair<int, int>> cells;
    std::istringstream row(line.substr(0, bar));
    std::string cell;
    std::getline(row, cell, '|');
    for (int col = 1; std::getline(row, cell, '|'); ++col) {
      const auto m = cell.find('M');
      if (m != std::string::npos) cells.emplace_back(col, std::stoi(cell.substr(m + 1)));
    }
    auto expected = table::kCells[i];
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(cells, expected) << table::kRowLabels[i];
  }
  ASSERT_TRUE(std::getline(in, line));
  for (const char* lbl : table::kColumnLabels) EXPECT_NE(line.find(std::string(" ") + lbl + " "), std::string::npos) << lbl;
}

TEST_F(Cli, DimsAndChern) {
  const auto d = run({"dims", "--n", "2", "--k", "4"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "120 = 120\n");
  const auto c = run({"chern", "--k", "3", "--terms", "4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "1 3 6 10\n");
}

TEST_F(Cli, IsotropicPipeline) {
  const std::string f = gen("isotropic", 2, 4);
  const auto det = run({"det-q", "--in", f});
  EXPECT_EQ(det.code, 1);
  EXPECT_EQ(det.out, "0\n");
  const auto s = run({"syzygy", "--in", f, "--verify"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("S shape: 120x6"), std::string::npos);
  EXPECT_NE(s.out.find("residual: zero"), std::string::npos);
  const auto c = run({"check", "--in", f, "--form", "orthogonal"});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("verdict: not an instanton: det Q = 0 by syzygy"), std::string::npos);
}

TEST_F(Cli, SyzygyExitCodesOverGeneratedFiles) {
  for (int n = 1; n <= 2; ++n)
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(run({"syzygy", "--in", gen("isotropic", n, k, "gf:101", n + k), "--verify"}).code, 0);
      const auto sp = run({"syzygy", "--in", gen("special", n, k), "--verify"});
      EXPECT_EQ(sp.code, 1);
      EXPECT_NE(sp.out.find("residual: nonzero in block rows"), std::string::npos);
    }
}

TEST_F(Cli, SpecialPipeline) {
  const std::string f = gen("special", 2, 2);
  const auto det = run({"det-q", "--in", f});
  EXPECT_EQ(det.code, 0);
  EXPECT_EQ(det.out, "1\n");
  const auto c = run({"check", "--in", f, "--form", "symplectic", "--trials", "20", "--seed", "3"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("defects: zero"), std::string::npos);
  EXPECT_NE(c.out.find("rank probe: ok (20 points)"), std::string::npos);
  const auto o = run({"check", "--in", f, "--form", "orthogonal"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("orthogonal conditions violated at (alpha,beta)=(1,1)"), std::string::npos);

  const auto q = run({"build-q", "--in", f});
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(q.out.rfind("matrix rows=24 cols=24 field=rational\n", 0), 0u);
  const auto b = run({"build-q", "--in", f, "--blocks-only"});
  EXPECT_EQ(b.out, run({"layout", "--n", "2", "--k", "2"}).out);
  const auto s = run({"syzygy", "--in", f, "--out", path("s.txt")});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(slurp(path("s.txt")).rfind("matrix rows=24 cols=6 field=rational\n", 0), 0u);
}

TEST_F(Cli, CustomPairing) {
  const std::string f = gen("special", 1, 1);
  std::ostringstream j;
  j << "matrix rows=4 cols=4 field=rational\n0 0 1 0\n0 0 0 1\n-1 0 0 0\n0 -1 0 0\n";
  const std::string jf = write("j.txt", j.str());
  EXPECT_EQ(run({"check", "--in", f, "--form", "symplectic", "--pairing", jf}).code, 0);
  const std::string sym = write("sym.txt", "matrix rows=4 cols=4 field=rational\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  EXPECT_EQ(run({"check", "--in", f, "--form", "symplectic", "--pairing", sym}).code, 2);
  const std::string deg = write("deg.txt", "matrix rows=4 cols=4 field=rational\n0 1 0 0\n-1 0 0 0\n0 0 0 0\n0 0 0 0\n");
  EXPECT_EQ(run({"check", "--in", f, "--form", "symplectic", "--pairing", deg}).code, 2);
}

TEST_F(Cli, GenRoundTrip) {
  for (const auto& [kind, field] : {std::pair{"special", "rational"}, {"special", "gf:32003"}, {"isotropic", "gf:7"},
                                    {"skew", "gf:13"}}) {
    const std::string f = gen(kind, 1, 2, field, 5);
    const std::string body = slurp(f);
    const AnyMonad m = parse_monad(body);
    EXPECT_EQ(std::visit([](const auto& d) { return format_monad(d); }, m), body);
    EXPECT_EQ(slurp(gen(kind, 1, 2, field, 5)), body);
  }
  const auto direct = gen_isotropic_orthogonal(1, 2, 7, 5);
  EXPECT_EQ(std::get<MonadData<Zp>>(parse_monad(slurp(path("isotropic12_5.monad")))), direct.data);
}

TEST_F(Cli, GenReport) {
  const auto r = run({"gen", "special", "--n", "1", "--k", "1", "--out", path("g.monad")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "wrote " + path("g.monad") + "\ndefects_ok=true rank_probe=ok detQ=-1\n");
}

TEST_F(Cli, SearchOrthogonal) {
  const auto r = run({"search-orthogonal", "--n", "2", "--k", "4", "--field", "gf:101", "--trials", "25", "--seed",
                      "7", "--out-dir", path("cands")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("trials=25 defects_ok=25 detQ_zero=25"), std::string::npos);
  EXPECT_NE(r.out.find("instanton_candidates=0"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("cands/candidate_25.monad")));
  EXPECT_EQ(run({"det-q", "--in", path("cands/candidate_3.monad")}).code, 1);
  EXPECT_EQ(run({"search-orthogonal", "--n", "2", "--k", "4", "--field", "gf:101", "--trials", "25", "--seed", "7"}).out,
            r.out);
}

TEST_F(Cli, PointBoxOverride) {
  const std::string zero = write("zero.monad",
                                 "monad n=1 k=1 field=rational\nblock 1\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
  ::setenv("MONADLAB_POINT_BOX", "1", 1);
  const auto r = run({"check", "--in", zero, "--form", "symplectic", "--seed", "4"});
  ::setenv("MONADLAB_POINT_BOX", "abc", 1);
  const auto bad = run({"check", "--in", zero, "--form", "symplectic"});
  ::unsetenv("MONADLAB_POINT_BOX");
  EXPECT_EQ(r.code, 1);
  const auto at = r.out.find("point=");
  ASSERT_NE(at, std::string::npos);
  std::istringstream coords(r.out.substr(at + 6));
  for (int i = 0; i < 4; ++i) {
    int c = 99;
    coords >> c;
    EXPECT_LE(std::abs(c), 1);
  }
  EXPECT_EQ(bad.code, 2);
}

TEST_F(Cli, BadInputExitsTwo) {
  const std::string malformed = write("bad.monad", "monad n=1 k=1 field=rational\nblock 1\n1 2 3\n");
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"frobnicate"},
      {"layout", "--n", "2"},
      {"layout", "--n", "2", "--k", "4", "--bogus"},
      {"layout", "--n", "0", "--k", "4"},
      {"layout", "--n", "2", "--k", "4", "--format", "xml"},
      {"det-q", "--in", path("missing.monad")},
      {"det-q", "--in", malformed},
      {"gen", "isotropic", "--n", "1", "--k", "1", "--field", "rational", "--out", path("x.monad")},
      {"gen", "special", "--n", "1", "--k", "1", "--field", "gf:4", "--out", path("x.monad")},
      {"search-orthogonal", "--n", "1", "--k", "1", "--field", "gf:7", "--trials", "0"},
      {"chern", "--k", "0", "--terms", "3"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_EQ(r.err.rfind("monadlab: ", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
  const auto bad = run({"det-q", "--in", malformed});
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
}  // namespace monadlab
