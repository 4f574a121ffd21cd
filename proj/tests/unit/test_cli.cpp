#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zdg/cli.hpp"
#include "zdg/error.hpp"

using zdg::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::set<std::string>> class_sets(const Json& doc) {
  std::set<std::set<std::string>> out;
  for (const auto& c : doc["classes"]) out.insert(c["members"].get<std::set<std::string>>());
  return out;
}

}  // namespace

TEST_CASE("classes on Z_16 and Z_18") {
  const auto a16 = invoke({"classes", "--ring", "Zn(16)"});
  REQUIRE(a16.code == 0);
  CHECK(class_sets(Json::parse(a16.out)) ==
        std::set<std::set<std::string>>{{"2", "6", "10", "14"}, {"8"}, {"4", "12"}});

  const auto n16 = invoke({"classes", "--ring", "Zn(16)", "--relation", "neighborhood"});
  CHECK(class_sets(Json::parse(n16.out)) ==
        std::set<std::set<std::string>>{{"2", "6", "10", "14"}, {"8"}, {"4"}, {"12"}});

  const auto m18 = invoke({"classes", "--ring", "Zn(18)", "--relation", "annihilator"});
  CHECK(class_sets(Json::parse(m18.out)) ==
        std::set<std::set<std::string>>{{"2", "4", "8", "10", "14", "16"}, {"3", "15"}, {"6", "12"}, {"9"}});

  const auto csv = invoke({"classes", "--ring", "Zn(9)", "--format", "csv"});
  CHECK(csv.out == "representative,size,kind,members\n3,2,complete,3 6\n");
}

TEST_CASE("spectrum of Z_8 with both methods") {
  const auto r = invoke({"spectrum", "--ring", "Zn(8)", "--flavor", "both", "--method", "both"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  REQUIRE(doc["reports"].size() == 4);
  for (const auto& rep : doc["reports"]) {
    CHECK(rep["verification"]["matched"].get<bool>());
    const auto values = rep["values"].get<std::vector<double>>();
    REQUIRE(values.size() == 3);
    if (rep["flavor"] == "adjacency") {
      CHECK(values[0] == doctest::Approx(-std::sqrt(2.0)));
      CHECK(std::abs(values[1]) < 1e-12);
    } else {
      CHECK(values[2] == doctest::Approx(3.0));
    }
  }
  const auto csv = invoke({"spectrum", "--ring", "Zn(9)", "--method", "join", "--flavor", "laplacian", "--format", "csv"});
  CHECK(csv.out == "ring,relation,method,flavor,index,value\nZn(9),associate,join,laplacian,0,0\n"
                   "Zn(9),associate,join,laplacian,1,2\n");
  const auto single = Json::parse(invoke({"spectrum", "--ring", "Zn(9)", "--method", "brute"}).out);
  CHECK(single["reports"][0]["verification"].is_null());
}

TEST_CASE("join method falls back to closed forms beyond the caps") {
  const auto r = invoke({"--max-elements", "100", "spectrum", "--ring", "Zn(1024)", "--method", "join", "--flavor",
                         "adjacency"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["reports"][0]["values"].size() == 1024 - 512 - 1);
  const auto nb = invoke({"--max-elements", "100", "spectrum", "--ring", "Zn(1024)", "--method", "join",
                          "--relation", "neighborhood"});
  CHECK(nb.code == 1);
  CHECK(nb.err.rfind("error: cap_exceeded: ", 0) == 0);
}

TEST_CASE("counts") {
  CHECK(invoke({"counts", "--what", "qbinom", "--n", "2", "--r", "1", "--q", "2", "--format", "text"}).out == "3\n");
  const auto doc = Json::parse(invoke({"counts", "--what", "class-count", "--n", "3", "--q", "2"}).out);
  CHECK(doc["value"] == "98");
  CHECK(doc["inputs"]["n"] == 3);
  CHECK(invoke({"counts", "--what", "idempotents", "--n", "2", "--q", "2", "--format", "text"}).out == "6\n");
  CHECK(invoke({"counts", "--what", "nilpotent2", "--n", "2", "--q", "3", "--format", "text"}).out == "4\n");
  CHECK(invoke({"counts", "--what", "rank-count", "--n", "2", "--r", "1", "--q", "2", "--format", "text"}).out == "9\n");
  CHECK(invoke({"counts", "--what", "zn-degree", "--n", "18", "--d", "6", "--format", "text"}).out == "4\n");
  const auto ss = invoke({"counts", "--what", "semisimple-class-size", "--ring", "Zn(2)xZn(3)", "--ranks", "0,1",
                          "--format", "text"});
  CHECK(ss.out == "2\n");
  const auto missing = invoke({"counts", "--what", "qbinom", "--n", "2"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: invalid_argument: ", 0) == 0);
}

TEST_CASE("verify sweeps and exit codes") {
  const auto r = invoke({"verify", "--range", "Zn:6..9;Zn:13..13;M:2,GF(2)", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ring,|Z|,flavor,method_agreement,max_dev,seconds\nZn(6),3,adjacency,match,", 0) == 0);
  CHECK(r.out.find("Zn(7),0,both,skipped,,\n") != std::string::npos);
  CHECK(r.out.find("Zn(13),0,both,skipped,,\n") != std::string::npos);
  CHECK(r.out.find("\"M(2,GF(2))\",9,laplacian,match,") != std::string::npos);
  CHECK(r.out.find("mismatch") == std::string::npos);
  CHECK(r.err.find("note: Zn(7): no zero-divisors") != std::string::npos);

  const auto capped = invoke({"--max-elements", "50", "verify", "--range", "Zn:60..60", "--no-timing"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("Zn(60),,both,skipped") != std::string::npos);

  const auto single = Json::parse(invoke({"verify", "--ring", "Zn(30)", "--format", "json", "--no-timing"}).out);
  CHECK(single["all_matched"].get<bool>());
  CHECK(single["agreements"]["all_passed"].get<bool>());
  CHECK(invoke({"verify"}).code == 1);
}

TEST_CASE("output is byte-stable") {
  for (std::vector<std::string> args : {std::vector<std::string>{"spectrum", "--ring", "M(2,GF(3))"},
                                        std::vector<std::string>{"graph", "--ring", "Zn(2)xZn(2)xZn(2)"},
                                        std::vector<std::string>{"verify", "--range", "Zn:4..40", "--no-timing"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("parse errors and usage errors") {
  const auto bad_ring = invoke({"graph", "--ring", "Zn(1)"});
  CHECK(bad_ring.code == 1);
  CHECK(bad_ring.err.rfind("error: ", 0) == 0);
  CHECK(bad_ring.err.find('\n') == bad_ring.err.size() - 1);
  CHECK(invoke({"spectrum", "--ring", "Zn(8)", "--flavor", "signless"}).code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("range expansion and number parsing") {
  using zdg::cli::expand_range;
  CHECK(expand_range("Zn:6..8") == std::vector<std::string>{"Zn(6)", "Zn(7)", "Zn(8)"});
  CHECK(expand_range(" M:2..3,GF(2) ; Zn(4)xZn(3) ") ==
        std::vector<std::string>{"M(2,GF(2))", "M(3,GF(2))", "Zn(4)xZn(3)"});
  CHECK_THROWS_AS(expand_range("Zn:9..6"), zdg::InvalidArgument);
  CHECK_THROWS_AS(expand_range(";"), zdg::InvalidArgument);
  CHECK_THROWS_AS(expand_range("Zn:a..b"), zdg::ParseError);

  CHECK(zdg::cli::parse_rational("2/3") == doctest::Approx(2.0 / 3.0));
  CHECK(zdg::cli::parse_rational(" -1.5 ") == -1.5);
  CHECK_THROWS_AS(zdg::cli::parse_rational("1/0"), zdg::InvalidArgument);
  CHECK_THROWS_AS(zdg::cli::parse_rational("x"), zdg::ParseError);
  const auto m = zdg::cli::parse_matrix_text("# header\n1 1/2\n\n-3 4 # trailing\n");
  CHECK(m == std::vector<std::vector<double>>{{1.0, 0.5}, {-3.0, 4.0}});
}

TEST_CASE("lift reads a matrix file and reports the lifted pair") {
  const auto path = std::filesystem::temp_directory_path() / "zdg_test_lift_matrix.txt";
  std::ofstream(path) << "-1 0 1\n0 2 0\n0 0 1\n";
  const auto ok = invoke({"lift", "--matrix", path.string(), "--row", "2", "--m", "2", "--lambda", "2", "--vector", "0,1,0"});
  REQUIRE(ok.code == 0);
  const auto doc = Json::parse(ok.out);
  CHECK(doc["mu"] == 4.0);
  CHECK(doc["w"].get<std::vector<double>>() == std::vector<double>{0, 1, 1, 0});
  CHECK(doc["status"] == "ok");

  std::ofstream(path) << "0 1\n1 0\n";
  const auto fail = invoke({"lift", "--matrix", path.string(), "--row", "1", "--m", "2", "--lambda", "1", "--vector", "1 1"});
  CHECK(fail.code == 2);
  CHECK(Json::parse(fail.out)["status"] == "verification_failed");
  const auto inapplicable =
      invoke({"lift", "--matrix", path.string(), "--row", "1", "--m", "2", "--lambda", "-1", "--vector", "1,-1"});
  CHECK(inapplicable.code == 1);
  CHECK(inapplicable.err.find("formula inapplicable") != std::string::npos);
  CHECK(invoke({"lift", "--matrix", path.string(), "--row", "0", "--lambda", "1", "--vector", "1,1"}).code == 1);
  CHECK(invoke({"lift", "--matrix", path.string(), "--row", "1", "--lambda", "5", "--vector", "1,1"}).code == 1);
  std::filesystem::remove(path);
}
