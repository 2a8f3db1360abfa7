#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gljunction/cli.hpp"
#include "io.hpp"

namespace fs = std::filesystem;
using gljunction::cli::Json;

namespace {

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("GLJ_TEST_TMP");
  const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "gljunction_cli";
  const fs::path dir = root / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = gljunction::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json load(const fs::path& p) { return Json::parse(slurp(p)); }

}  // namespace

TEST_CASE("profile writes constants and samples") {
  const fs::path dir = scratch("profile");
  const Outcome r = run({"profile", "--a", "1", "--m", "1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const Json c = load(dir / "constants.json");
  CHECK(c["gamma"].get<double>() == 1.0);
  CHECK(c.contains("generated_at"));
  CHECK(std::abs(c["de_gennes_gap"].get<double>()) < 1e-12);
  CHECK(c["c2_quad"].get<double>() < 0.0);
  CHECK_FALSE(c.contains("limit_sup"));
  const auto table = gljunction::cli::read_csv(dir / "profile.csv");
  CHECK(gljunction::cli::column(table, "U").values.size() == 400);
}

TEST_CASE("profile validates parameters") {
  const Outcome r = run({"profile", "--a", "1", "--m", "-1", "--out", scratch("bad").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("m must be > 0") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"profile", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("profile limit check") {
  const fs::path dir = scratch("limit");
  REQUIRE(run({"profile", "--a", "1", "--m", "1e6", "--limit", "neumann", "--out", dir.string()})
              .code == 0);
  const Json c = load(dir / "constants.json");
  CHECK(c["limit"] == "neumann");
  CHECK(c["limit_sup"].get<double>() < 2e-3);
}

TEST_CASE("radial solve report") {
  const fs::path dir = scratch("solve");
  const Outcome r = run({"solve", "--mode", "radial", "--eps", "0.2", "--n", "400", "--out",
                         dir.string(), "--no-timestamp"});
  REQUIRE(r.code == 0);
  const Json j = load(dir / "report.json");
  CHECK(j["converged"] == true);
  CHECK(j["strictly_between"] == true);
  CHECK(j["regime"] == "nontrivial");
  CHECK(j["below_normal_state"] == true);
  CHECK_FALSE(j.contains("generated_at"));
  CHECK(fs::exists(dir / "solution.csv"));
  CHECK(fs::exists(dir / "trace.csv"));
  CHECK(fs::exists(dir / "layer.dat"));
  for (const auto& [key, value] : j.items()) CHECK_FALSE(value.is_object());
}

TEST_CASE("non-convergence exits 3 and still writes the report") {
  const fs::path dir = scratch("nonconv");
  const Outcome r = run({"solve", "--eps", "0.1", "--n", "400", "--init", "random", "--max-iter",
                         "1", "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(load(dir / "report.json")["status"] == "non_convergence");
}

TEST_CASE("Cartesian solve with a fractional spacing") {
  const fs::path dir = scratch("cart");
  const Outcome r = run({"solve", "--mode", "cart", "--eps", "0.3", "--r2", "1.8", "--h", "1/16",
                         "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto table = gljunction::cli::read_csv(dir / "solution.csv");
  CHECK(gljunction::cli::column(table, "x").values.size() ==
        load(dir / "report.json")["nodes"].get<std::size_t>());
  CHECK(run({"solve", "--mode", "cart", "--h", "1/0", "--out", dir.string()}).code == 2);
  CHECK(run({"solve", "--mode", "cart", "--h", "abc", "--out", dir.string()}).code == 2);
}

TEST_CASE("eigen bound") {
  const fs::path dir = scratch("eigen");
  REQUIRE(run({"eigen", "--a", "1", "--m", "1", "--eps", "0.3", "--r1", "1", "--r2", "2", "--out",
               dir.string()})
              .code == 0);
  const Json j = load(dir / "eigen.json");
  CHECK(j["bound_satisfied"] == true);
  CHECK(j["lambda1"].get<double>() < 0.0);
  CHECK(fs::exists(dir / "eigenfunction.csv"));
}

TEST_CASE("sweep feeds the asymptotic fit") {
  const fs::path dir = scratch("sweep");
  REQUIRE(run({"sweep", "--eps", "0.04,0.02,0.01", "--nodes-per-eps", "20", "--jobs", "2", "--out",
               dir.string()})
              .code == 0);
  const auto table = gljunction::cli::read_csv(dir / "sweep.csv");
  const auto& eps = gljunction::cli::column(table, "eps").values;
  REQUIRE(eps.size() == 3);
  CHECK(eps[0] == 0.04);
  CHECK(eps[2] == 0.01);
  REQUIRE(run({"asymptotics", "--table", (dir / "sweep.csv").string(), "--out", dir.string()})
              .code == 0);
  const Json f = load(dir / "fit.json");
  CHECK(f["runs"] == 3);
  CHECK(f["p_rel_dev"].get<double>() < 0.02);
  CHECK(fs::exists(dir / "fit_table.csv"));
}

TEST_CASE("sweep order does not depend on jobs") {
  const fs::path one = scratch("jobs1");
  const fs::path four = scratch("jobs4");
  REQUIRE(run({"sweep", "--eps", "0.3,0.1,0.2,0.15", "--jobs", "1", "--out", one.string()}).code == 0);
  REQUIRE(run({"sweep", "--eps", "0.15,0.2,0.1,0.3", "--jobs", "4", "--out", four.string()}).code ==
          0);
  CHECK(slurp(one / "sweep.csv") == slurp(four / "sweep.csv"));
}

TEST_CASE("asymptotics needs three runs") {
  const fs::path dir = scratch("two_rows");
  std::ofstream(dir / "two_rows.csv") << "eps,G0\n0.1,30\n0.05,60\n";
  const Outcome r = run({"asymptotics", "--table", (dir / "two_rows.csv").string(), "--out",
                         dir.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("at least 3") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  const fs::path a = scratch("rerun_a");
  const fs::path b = scratch("rerun_b");
  for (const fs::path& dir : {a, b}) {
    REQUIRE(run({"solve", "--eps", "0.3", "--n", "200", "--init", "random", "--seed", "9",
                 "--no-timestamp", "--out", dir.string()})
                .code == 0);
  }
  CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
  CHECK(slurp(a / "solution.csv") == slurp(b / "solution.csv"));
}

TEST_CASE("config file with command-line override") {
  const fs::path dir = scratch("config");
  std::ofstream(dir / "run.cfg") << "# eigen run\neps = 0.3\nm=2\nno-timestamp=true\nout="
                                 << dir.string() << "\n";
  REQUIRE(run({"eigen", "--config", (dir / "run.cfg").string(), "--m", "1"}).code == 0);
  const Json j = load(dir / "eigen.json");
  CHECK(j["eps"].get<double>() == 0.3);
  CHECK(j["m"].get<double>() == 1.0);
  CHECK_FALSE(j.contains("generated_at"));

  std::ofstream(dir / "bad.cfg") << "nonsense=1\n";
  CHECK(run({"eigen", "--config", (dir / "bad.cfg").string()}).code == 2);
  CHECK(run({"eigen", "--config", (dir / "missing.cfg").string()}).code == 2);
}
