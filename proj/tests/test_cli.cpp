#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"
#include "z4rds/io.hpp"

using namespace z4rds;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return Result{code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("z4rds_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("generate knuth then verify planar") {
  TempDir dir;
  for (const char* n : {"3", "5"}) {
    REQUIRE(run({"--n", n, "generate", "knuth", "--out", dir / "k.f"}).code == 0);
    const Result r = run({"verify", "planar", "--in", dir / "k.f"});
    CHECK(r.code == 0);
    CHECK(r.out.find("holds: true") != std::string::npos);
  }
  REQUIRE(run({"--n", "3", "generate", "knuth", "--repr", "h", "--out", dir / "k.h"}).code == 0);
  CHECK(run({"verify", "planar", "--repr", "h", "--in", dir / "k.h"}).code == 0);
  // The zero table read as h is not planar for n >= 2.
  REQUIRE(run({"--n", "2", "generate", "zero", "--out", dir / "z.f"}).code == 0);
  CHECK(run({"verify", "planar", "--in", dir / "z.f"}).code == 0);
  CHECK(run({"verify", "planar", "--repr", "h", "--in", dir / "z.f"}).code == 1);
}

TEST_CASE("verify rds rejects the forbidden subgroup") {
  TempDir dir;
  const FieldCtx ctx(2);
  std::string text = ctx.header() + "\n";
  for (int b = 0; b < 4; ++b) text += "0:" + std::to_string(b) + "\n";
  write_file(dir / "n.rds", text);
  const Result r = run({"verify", "rds", "--in", dir / "n.rds"});
  CHECK(r.code == 1);
  CHECK(r.out.find("holds: false") != std::string::npos);
}

TEST_CASE("verify semifield on the zero-function RDS reports all criteria") {
  TempDir dir;
  REQUIRE(run({"--n", "3", "generate", "zero", "--repr", "rds", "--out", dir / "z.rds"}).code == 0);
  const Result r = run({"verify", "semifield", "--in", dir / "z.rds", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["field"]["n"] == 3);
  CHECK(j["field"]["modulus"] == "b");
  for (const char* c : {"star_semifield", "star_presemifield", "three_term", "quadratic", "dembowski_ostrom"}) {
    CHECK(j["criteria"][c]["holds"] == true);
  }
  CHECK(j["holds"] == true);
}

TEST_CASE("verify plane on an RDS and on an incidence file") {
  TempDir dir;
  REQUIRE(run({"--n", "2", "generate", "zero", "--repr", "rds", "--out", dir / "z.rds"}).code == 0);
  const Result r = run({"verify", "plane", "--in", dir / "z.rds"});
  CHECK(r.code == 0);
  CHECK(r.out.find("points: 21") != std::string::npos);
  REQUIRE(run({"build-plane", "--in", dir / "z.rds", "--layout", "matrix", "--out", dir / "p.txt"}).code == 0);
  CHECK(run({"verify", "plane", "--in", dir / "p.txt"}).code == 0);
  // Dropping one point from a line breaks the axioms.
  std::string text = read_file(dir / "p.txt");
  text[text.find('1', text.find('\n'))] = '0';
  write_file(dir / "q.txt", text);
  CHECK(run({"verify", "plane", "--in", dir / "q.txt"}).code == 1);
}

TEST_CASE("conversions") {
  TempDir dir;
  REQUIRE(run({"--n", "3", "generate", "knuth", "--repr", "h", "--out", dir / "h"}).code == 0);
  REQUIRE(run({"convert", "h2f", "--in", dir / "h", "--out", dir / "f"}).code == 0);
  REQUIRE(run({"convert", "f2h", "--in", dir / "f", "--out", dir / "h2"}).code == 0);
  CHECK(read_file(dir / "h") == read_file(dir / "h2"));

  REQUIRE(run({"convert", "tt2poly", "--in", dir / "f", "--out", dir / "p"}).code == 0);
  REQUIRE(run({"convert", "poly2tt", "--in", dir / "p", "--out", dir / "f2"}).code == 0);
  CHECK(read_file(dir / "f") == read_file(dir / "f2"));

  REQUIRE(run({"convert", "h2rds", "--in", dir / "h", "--out", dir / "d"}).code == 0);
  REQUIRE(run({"convert", "rds2h", "--in", dir / "d", "--out", dir / "h3"}).code == 0);
  CHECK(read_file(dir / "h") == read_file(dir / "h3"));

  // f + x^2 + 1 normalizes to the same table as f.
  const FieldCtx ctx(3);
  TableFile t = read_table(read_file(dir / "f"));
  for (std::uint32_t x = 0; x < 8; ++x) t.table[x] ^= fe_sqr(ctx, Fe{x}).word ^ 1u;
  write_file(dir / "g", write_table(ctx, t.table));
  REQUIRE(run({"convert", "normalize", "--in", dir / "f", "--out", dir / "nf"}).code == 0);
  REQUIRE(run({"convert", "normalize", "--in", dir / "g", "--out", dir / "ng"}).code == 0);
  CHECK(read_file(dir / "nf") == read_file(dir / "ng"));
  CHECK(read_file(dir / "nf") != read_file(dir / "f"));
}

TEST_CASE("every generator output re-parses and re-verifies") {
  TempDir dir;
  const std::vector<std::vector<std::string>> gens = {{"--n", "1", "generate", "zero"},
                                                      {"--n", "4", "generate", "zero"},
                                                      {"--n", "5", "generate", "knuth"},
                                                      {"--n", "3", "generate", "kantor", "--chain", "3,1", "--zeta", "1"}};
  for (const auto& g : gens) {
    for (const char* repr : {"f", "h", "poly", "rds"}) {
      auto args = g;
      args.insert(args.end(), {"--repr", repr, "--out", dir / "x"});
      REQUIRE(run(args).code == 0);
      const std::string text = read_file(dir / "x");
      if (std::string(repr) == "rds") {
        CHECK(run({"verify", "rds", "--in", dir / "x"}).code == 0);
      } else if (std::string(repr) == "poly") {
        const PolyFile p = read_poly(text);
        CHECK(is_planar(p.ctx, evaluate(p.ctx, p.poly)));
      } else {
        CHECK(run({"verify", "planar", "--repr", repr, "--in", dir / "x"}).code == 0);
      }
    }
  }
  // The chain 3,1 with zeta 1 is Knuth's function.
  REQUIRE(run({"--n", "3", "generate", "kantor", "--chain", "3,1", "--zeta", "1", "--out", dir / "a"}).code == 0);
  REQUIRE(run({"--n", "3", "generate", "knuth", "--out", dir / "b"}).code == 0);
  CHECK(read_file(dir / "a") == read_file(dir / "b"));
}

TEST_CASE("input errors exit with 2") {
  TempDir dir;
  CHECK(run({"--n", "6", "generate", "kantor", "--chain", "6,4", "--zeta", "1"}).code == 2);
  CHECK(run({"--n", "4", "generate", "knuth"}).code == 2);
  CHECK(run({"--n", "3", "--modulus", "f", "generate", "zero"}).code == 2);
  CHECK(run({"generate", "zero"}).code == 2);
  CHECK(run({"verify", "planar", "--in", dir / "missing"}).code == 2);
  CHECK(run({"verify", "sideways", "--in", "x"}).code == 2);
  CHECK(run({}).code == 2);
  const FieldCtx ctx(2);
  write_file(dir / "bad", ctx.header() + "\n0\n1\nq\n3\n");
  const Result r = run({"verify", "planar", "--in", dir / "bad"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("resource caps exit with 3") {
  CHECK(run({"--n", "5", "thm41"}).code == 3);
  TempDir dir;
  REQUIRE(run({"--n", "3", "generate", "knuth", "--repr", "rds", "--out", dir / "k"}).code == 0);
  CHECK(run({"--budget", "1", "equivalence", "--in", dir / "k", "--other", dir / "k"}).code == 3);
}

TEST_CASE("equivalence writes a witness that re-verifies") {
  TempDir dir;
  REQUIRE(run({"--n", "3", "generate", "knuth", "--repr", "rds", "--out", dir / "k"}).code == 0);
  const Rds d = read_rds(read_file(dir / "k")).rds;
  std::mt19937_64 rng(1);
  const Rds e = apply_aut(testing::random_aut(3, rng), d);
  write_file(dir / "e", write_rds(FieldCtx(3), e));
  const Result r = run({"equivalence", "--in", dir / "k", "--other", dir / "e", "--witness", dir / "w"});
  CHECK(r.code == 0);
  CHECK(r.out.find("equivalent: true") != std::string::npos);
  CHECK(verify_witness(d, e, read_equivalence(read_file(dir / "w"))));
  CHECK(run({"equivalence", "--semifield", "--in", dir / "k", "--other", dir / "k"}).code == 0);
}

TEST_CASE("thm41, pn-span, seq-sa and nuclei reports") {
  const Result t = run({"--n", "3", "--format", "json", "thm41", "--xi", "5"});
  CHECK(t.code == 0);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["candidates"] == 128);
  CHECK(j["counterexamples"].empty());
  CHECK(j["planar"] == j["additive"]);

  CHECK(run({"--n", "7", "pn-span"}).code == 0);
  const Result s = run({"--n", "3", "seq-sa", "--a", "2", "--xi", "1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("consistent: true") != std::string::npos);
  CHECK(run({"--n", "3", "seq-sa", "--a", "0", "--xi", "1"}).code == 2);

  TempDir dir;
  REQUIRE(run({"--n", "2", "generate", "zero", "--repr", "rds", "--out", dir / "z"}).code == 0);
  const Result nu = run({"nuclei", "--in", dir / "z"});
  CHECK(nu.code == 0);
  CHECK(nu.out.find("left_size: 4") != std::string::npos);
}

TEST_CASE("bent4-check") {
  TempDir dir;
  write_file(dir / "and", "m=2\n8\n");
  CHECK(run({"bent4-check", "--fn", dir / "and"}).code == 0);
  write_file(dir / "zero", "m=3\n00\n");
  CHECK(run({"bent4-check", "--fn", dir / "zero", "--lambda", "0,1,2"}).code == 0);
  CHECK(run({"bent4-check", "--fn", dir / "zero", "--lambda", "0,1"}).code == 1);
  CHECK(run({"bent4-check", "--fn", dir / "zero"}).code == 1);
  CHECK(run({"bent4-check", "--fn", dir / "zero", "--lambda", "3"}).code == 2);
  CHECK(run({"bent4-check", "--fn", dir / "zero", "--lambda", "x"}).code == 2);
}

TEST_CASE("search reports") {
  const Result r = run({"--n", "2", "--format", "json", "search", "nonDO-planar"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["complete"] == true);
  CHECK(j["exhaustive"] == true);
  CHECK(j["findings"].empty());

  const Result partial = run({"--n", "4", "--budget", "7", "--format", "json", "search", "shifted-bent-system"});
  CHECK(partial.code == 0);
  CHECK(nlohmann::json::parse(partial.out)["complete"] == false);

  const std::vector<std::string> random = {"--n", "5", "--seed", "42", "--budget", "200", "search", "shifted-bent-system", "--m", "1"};
  CHECK(run(random).out == run(random).out);
  CHECK(run({"--n", "4", "search", "shifted-bent-system", "--m", "5"}).code == 2);
}

TEST_CASE("reports do not depend on the thread count") {
  TempDir dir;
  REQUIRE(run({"--n", "4", "generate", "zero", "--repr", "rds", "--out", dir / "z"}).code == 0);
  for (const char* kind : {"semifield", "plane", "rds"}) {
    CHECK(run({"--threads", "1", "verify", kind, "--in", dir / "z"}).out ==
          run({"--threads", "4", "verify", kind, "--in", dir / "z"}).out);
  }
  CHECK(run({"--n", "3", "--threads", "1", "thm41"}).out == run({"--n", "3", "--threads", "3", "thm41"}).out);
}

TEST_CASE("help and version") {
  CHECK(run({"--help"}).code == 0);
  const Result v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == "0.1.0\n");
}
