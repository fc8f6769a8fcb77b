#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ckf/cli.hpp"
#include "ckf/json_io.hpp"

using ckf::json_io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ckf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ckf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("embedded schemas match the shipped files") {
  const auto ids = ckf::json_io::schema_ids();
  CHECK(ids.size() == 8);
  for (const char* file : {"verdict", "rootsys", "epsilon-table", "mu-sample", "mu-summary", "so-sequence", "decay",
                           "verify"}) {
    std::ifstream in(std::string(CKF_SCHEMA_DIR) + "/" + file + ".schema.json");
    REQUIRE(in.good());
    const json disk = json::parse(in);
    CHECK(ckf::json_io::schema(disk["$id"].get<std::string>()) == disk);
  }
}

TEST_CASE("validator reports violations") {
  json doc = {{"schema", "ckf.mu-summary/1"}, {"subgroup", "x"}, {"samples", 3}, {"failures", 0},
              {"max_distance", 0.0}, {"seed", 1}};
  CHECK(ckf::json_io::validate(doc, "ckf.mu-summary/1").empty());
  doc.erase("seed");
  CHECK(ckf::json_io::validate(doc, "ckf.mu-summary/1").size() == 1);
  doc["seed"] = 1;
  doc["samples"] = -1;
  CHECK_FALSE(ckf::json_io::validate(doc, "ckf.mu-summary/1").empty());
  doc["samples"] = "3";
  CHECK_FALSE(ckf::json_io::validate(doc, "ckf.mu-summary/1").empty());
  CHECK_THROWS(ckf::json_io::validate(doc, "ckf.unknown/1"));
}

TEST_CASE("verdict sl emits a conforming no_compact_form certificate") {
  const auto r = cli({"verdict", "sl", "--n", "5", "--m", "3", "--field", "C", "--json", "--samples", "200"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.verdict/1").empty());
  CHECK(doc["conclusion"] == "no_compact_form");
  CHECK(doc["conventions"]["seed"] == 20240101);
  CHECK(doc["conventions"]["samples"] == 200);
  CHECK(doc["witness"]["d_H"] == 8);
}

TEST_CASE("identical flags give byte-identical JSON") {
  const std::vector<std::string> args{"verdict", "slso", "--p", "2", "--q", "3", "--json", "--samples", "100", "--seed", "5"};
  CHECK(cli(args).out == cli(args).out);
  const std::vector<std::string> mu{"mu-sample", "--family", "Hprime_sl", "--n", "5", "--m", "3", "--field", "H",
                                    "--samples", "20", "--json"};
  CHECK(cli(mu).out == cli(mu).out);
}

TEST_CASE("flag errors exit with 2 and usage text") {
  auto r = cli({"verdict", "sl", "--n", "5", "--m", "3", "--field", "Q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(cli({"verdict", "sl", "--n", "3", "--m", "4", "--field", "R"}).code == 2);
  CHECK(cli({"verdict", "levi", "--type", "A", "--rank", "3", "--remove", "4"}).code == 2);
  CHECK(cli({"epsilon-table", "--max-m", "1"}).code == 2);
  CHECK(cli({"mu-sample", "--family", "Nope"}).code == 2);
  CHECK(cli({"mu-sample", "--family", "Hpp_sl", "--n", "5", "--m", "4"}).code == 2);
  CHECK(cli({"so-sequence", "--p", "3", "--q", "2"}).code == 2);
  CHECK(cli({"--json", "--text", "epsilon-table"}).code == 2);
  CHECK(cli({"epsilon-table", "--json", "--text"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify-paper", "--inject-fault", "bogus"}).code == 2);
}

TEST_CASE("epsilon-table has 21 rows for max m 8") {
  const auto r = cli({"epsilon-table", "--max-m", "8", "--json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.epsilon-table/1").empty());
  CHECK(doc["rows"].size() == 21);
  CHECK(doc["all_match"] == true);
  const auto text = cli({"epsilon-table", "--max-m", "8"});
  CHECK(lines(text.out).size() == 22);
}

TEST_CASE("verdict levi from flags and from a root system file") {
  auto r = cli({"verdict", "levi", "--type", "B", "--rank", "3", "--remove", "1", "--json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.verdict/1").empty());
  CHECK(doc["conclusion"] == "no_compact_form");
  CHECK(doc["space"]["pi_prime"] == json::array({2, 3}));

  const std::string path = "ckf_test_rootsys.json";
  {
    std::ofstream f(path);
    f << doc["space"]["rootsys"].dump();
  }
  r = cli({"verdict", "levi", "--rootsys", path, "--remove", "2", "--json"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["conclusion"] == "inconclusive");
}

TEST_CASE("mu-sample streams one line per sample and a summary") {
  const auto r = cli({"mu-sample", "--family", "Hprime_so", "--p", "2", "--q", "3", "--samples", "7", "--seed", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  for (std::size_t i = 0; i < 7; ++i) {
    const json line = json::parse(ls[i]);
    CHECK(ckf::json_io::validate(line, "ckf.mu-sample/1").empty());
    CHECK(line["parameters"]["index"] == i);
    CHECK(line["parameters"]["seed"] == 3);
  }
  CHECK(ckf::json_io::validate(json::parse(ls[7]), "ckf.mu-summary/1").empty());
}

TEST_CASE("sample count override from the environment") {
  setenv("CKF_SAMPLES", "4", 1);
  auto r = cli({"mu-sample", "--family", "SO_compact", "--n", "3", "--json"});
  CHECK(lines(r.out).size() == 5);
  setenv("CKF_SAMPLES", "zero", 1);
  r = cli({"mu-sample", "--family", "SO_compact", "--n", "3"});
  CHECK(r.code == 2);
  unsetenv("CKF_SAMPLES");
}

TEST_CASE("so-sequence and decay documents") {
  auto r = cli({"so-sequence", "--p", "2", "--q", "2", "--samples", "50", "--json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.so-sequence/1").empty());
  CHECK(doc["r"] == 2);

  r = cli({"decay", "--p", "1", "--q", "2", "--tmax", "10", "--json"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.decay/1").empty());
  CHECK(doc["points"].size() == 21);

  r = cli({"decay", "--p", "1", "--q", "2", "--tmax", "2"});
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0].rfind("# ", 0) == 0);
  CHECK(ls[1] == "t,distance");
  CHECK(ls[2].rfind("0,", 0) == 0);
}

TEST_CASE("verify-paper --fast passes and a seeded fault names the failing row") {
  auto r = cli({"verify-paper", "--fast", "--json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(ckf::json_io::validate(doc, "ckf.verify/1").empty());
  CHECK(doc["criteria"].size() == 8);

  r = cli({"verify-paper", "--fast", "--inject-fault", "epsilon"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL 1 epsilon table") != std::string::npos);
  CHECK(r.out.find("row m=") != std::string::npos);
}
