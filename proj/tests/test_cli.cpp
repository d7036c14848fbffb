#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = unipmn::cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json js(const std::string& text) { return nlohmann::json::parse(text); }

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "unipmn_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("value verb") {
  const auto r = run({"value", "--family", "D-", "--symbol", "1,3|", "--class", "|2,1,1"});
  CHECK(r.code == 0);
  const auto j = js(r.out);
  CHECK(j["value"] == -2);
  CHECK(j["degenerate_character"] == false);
  const auto zero = run({"value", "--family", "C", "--symbol", "0,1|4", "--class", "3|1"});
  CHECK(zero.code == 0);
}

TEST_CASE("contract and parse errors exit 2 with a JSON object") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"value", "--family", "C", "--symbol", "0,1|4", "--class", "3|"},
           {"value", "--family", "E", "--symbol", "0,1|4", "--class", "4|"},
           {"frobnicate"},
           {"value", "--bogus", "1"},
           {},
           {"degree", "--symbol", "1,1|"},
           {"babbage", "--d", "4", "--h", "2"},
           {"scan", "--family", "C", "--n", "3", "--q", "3", "--ell", "3"}}) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const auto j = js(r.err.substr(0, r.err.find('\n')));
    CHECK(j.contains("error"));
    CHECK(j["error"].contains("kind"));
  }
}

TEST_CASE("degree, babbage, congruence") {
  CHECK(js(run({"degree", "--symbol", "0,1|4", "--q", "2"}).out)["degree"] == 51);
  const auto b = run({"babbage", "--d", "3", "--h", "2"});
  CHECK(b.code == 0);
  CHECK(js(b.out)["zero"] == true);
  const auto c = run({"congruence", "--symbol", "3,6|0", "--q", "2", "--ell", "7"});
  CHECK(c.code == 0);
  CHECK(js(c.out)["congruent_pm1_mod_square"] == false);
}

TEST_CASE("output is byte stable with sorted keys") {
  const std::vector<std::string> args = {"tori", "--family", "C", "--n", "3", "--q", "2", "--ell", "7"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out == js(a.out).dump() + "\n");  // nlohmann objects are key-sorted
}

TEST_CASE("warm cache output equals cold output") {
  const auto cache = scratch() / "memo.tsv";
  std::filesystem::remove(cache);
  const std::vector<std::string> base = {"scan", "--family", "D+", "--n", "5", "--q", "2", "--ell", "7"};
  auto with_cache = base;
  with_cache.insert(with_cache.end(), {"--cache", cache.string()});
  const auto plain = run(base);
  const auto cold = run(with_cache);
  const auto size_after_cold = std::filesystem::file_size(cache);
  const auto warm = run(with_cache);
  CHECK(cold.code == plain.code);
  CHECK(cold.out == plain.out);
  CHECK(warm.out == cold.out);
  CHECK(std::filesystem::file_size(cache) == size_after_cold);  // nothing new to append
}

TEST_CASE("thread count does not change the scan") {
  const std::vector<std::string> base = {"scan", "--family", "C", "--n", "4", "--q", "2", "--ell", "5"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto three = base;
  three.insert(three.end(), {"--threads", "3"});
  CHECK(run(one).out == run(three).out);
}

TEST_CASE("csv scan output") {
  const auto r = run({"scan", "--family", "C", "--n", "4", "--q", "2", "--ell", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("symbol,degree,min,max,zero_witness\n", 0) == 0);
  CHECK(r.out.find("\"0,1|4\",51,") != std::string::npos);
  CHECK(run({"value", "--family", "C", "--symbol", "0,1|4", "--class", "4|", "--format", "csv"}).code == 2);
}

TEST_CASE("batch mode") {
  const auto file = scratch() / "batch.txt";
  {
    std::ofstream out(file);
    out << "# comment\n";
    out << "value --family D- --symbol '1,3|' --class \"|2,1,1\"\n";
    out << "\n";
    out << "degree --symbol 0,1|4 --q 2\n";
  }
  const auto r = run({"--input", file.string()});
  CHECK(r.code == 0);
  const auto j = js(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[1]["degree"] == 51);
  {
    std::ofstream out(file);
    out << "degree --symbol 0,1|4 --q 2\n";
    out << "degree --symbol 0,1|4 --q 1\n";
  }
  const auto bad = run({"--input", file.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find(":2:") != std::string::npos);
  CHECK(run({"degree", "--input", file.string()}).code == 2);
}

TEST_CASE("check verbs") {
  CHECK(run({"cartan-pairs", "--case", "2", "--d", "4", "--r", "1"}).code == 0);
  CHECK(run({"corrigendum", "--family", "Sp", "--n", "3", "--q", "2"}).code == 0);
  CHECK(run({"corrigendum", "--family", "G2"}).code == 0);
  const auto scan = run({"scan", "--family", "C", "--n", "4", "--q", "2", "--ell", "5"});
  CHECK(scan.code == 0);
  CHECK(js(scan.out)["predicted_missing"].empty());
}

TEST_CASE("word splitting") {
  using unipmn::cli::split_words;
  CHECK(split_words("a 'b c' \"|\"") == std::vector<std::string>{"a", "b c", "|"});
  CHECK(split_words("  ").empty());
  CHECK_THROWS(split_words("a 'b"));
}

TEST_CASE("installed binary exit codes") {
  const std::string tool = UNIPMN_TOOL_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("degree --symbol '0,1|4' --q 2") == 0);
  CHECK(status("value --family C --symbol '0,1|4' --class '3|'") == 2);
  CHECK(status("--help") == 0);
}
