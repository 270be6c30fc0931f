#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "qbound/errors.hpp"
#include "qbound/io.hpp"
#include "qbound/states.hpp"

using namespace qbound;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qbound_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("format_double: shortest round-trip representation") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 2.0 / 3.0, 0.0, -42.25,
                   4.8682169171055566e-04}) {
    const std::string text = format_double(x);
    double parsed = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), parsed);
    REQUIRE(res.ec == std::errc());
    CHECK(parsed == x);
  }
}

TEST_CASE("state file: save -> load -> save is byte-identical") {
  TempDir tmp;
  const BipartiteDensity s = random_density(2, 3, 4, 31);
  const std::string first = tmp.file("state1.json");
  const std::string second = tmp.file("state2.json");

  save_state_file(first, s);
  const BipartiteDensity loaded = load_state_file(first);
  CHECK((loaded.rho() - s.rho()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(loaded.dims().m == 2);
  CHECK(loaded.dims().n == 3);

  save_state_file(second, loaded);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("state file: diagnostics name the violated invariant") {
  TempDir tmp;
  const std::string path = tmp.file("bad.json");

  {
    nlohmann::json j = state_to_json(random_density(2, 2, 4, 1));
    j["matrix"][1]["im"] = 0.5;  // break Hermiticity
    std::ofstream(path) << j.dump();
  }
  CHECK_THROWS_WITH_AS(load_state_file(path), doctest::Contains("not Hermitian"),
                       PreconditionError);

  {
    nlohmann::json j = state_to_json(random_density(2, 2, 4, 1));
    j["matrix"][0]["re"] = j["matrix"][0]["re"].get<double>() + 0.25;
    std::ofstream(path) << j.dump();
  }
  CHECK_THROWS_WITH_AS(load_state_file(path), doctest::Contains("trace"),
                       PreconditionError);

  std::ofstream(path) << "{ not json";
  CHECK_THROWS_WITH_AS(load_state_file(path), doctest::Contains("parse error"),
                       PreconditionError);

  CHECK_THROWS_WITH_AS(load_state_file(tmp.file("missing.json")),
                       doctest::Contains("cannot open"), PreconditionError);
}

TEST_CASE("witness file: round trip preserves the recorded expectation") {
  TempDir tmp;
  const BipartiteDensity s = horodecki_noisy(0.236, 0.9955);
  const WitnessOperator w = build_witness(s);
  const std::string path = tmp.file("witness.json");
  save_witness_file(path, w);

  const WitnessOperator loaded = load_witness_file(path);
  CHECK(loaded.source_state_hash == w.source_state_hash);
  CHECK(loaded.degenerate == w.degenerate);
  CHECK((loaded.w_raw - w.w_raw).cwiseAbs().maxCoeff() == 0.0);
  CHECK((loaded.w_hermitian - w.w_hermitian).cwiseAbs().maxCoeff() == 0.0);

  const double recomputed = witness_expectation(loaded, s);
  CHECK(std::abs(recomputed - loaded.achieved_expectation) < 1e-10);
}

TEST_CASE("report json: carries values, verdicts, and the tau assumption") {
  const BipartiteDensity s = horodecki_noisy(0.236, 0.9955);
  const CriteriaReport criteria = evaluate_criteria(s);
  const ConcurrenceBound bound = lower_bound(s);
  const nlohmann::json j = report_to_json(criteria, bound);

  CHECK(j.at("criteria").at("ccnr").at("verdict") == "entangled");
  CHECK(j.at("criteria").at("ppt").at("verdict") == "undecided");
  CHECK(j.at("criteria").at("nonlinear_witness").contains("assumption"));
  CHECK(j.at("bound").at("lower_bound").get<double>() ==
        doctest::Approx(4.8682169171e-04).epsilon(1e-7));
  CHECK_FALSE(j.contains("roof"));

  RoofEstimate fake;
  fake.upper_value = 0.5;
  fake.ensemble_size = 2;
  const nlohmann::json with_roof = report_to_json(criteria, bound, &fake);
  CHECK(with_roof.at("roof").at("upper_value").get<double>() == 0.5);
}
