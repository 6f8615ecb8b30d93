#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semigrace/cli.hpp"

namespace fs = std::filesystem;
using semigrace::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("semigrace_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
             "_" + std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream(path) << doc.dump(1);
}

}  // namespace

TEST_CASE("trees command") {
  auto r = invoke({"trees", "--order", "7"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "11 trees"));

  r = invoke({"trees", "--order", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 tree"));
  CHECK_FALSE(contains(r.out, "1 trees"));

  r = invoke({"trees", "--order", "10"});
  CHECK(contains(r.out, "106 trees"));

  TempDir dir;
  r = invoke({"trees", "--order", "6", "--output", dir.file("cat.json")});
  CHECK(r.code == 0);
  CHECK(read_json(dir.file("cat.json"))["count"] == 6);

  r = invoke({"--machine", "trees", "--order", "5"});
  CHECK(json::parse(r.out)["count"] == 3);

  CHECK(invoke({"trees", "--order", "0"}).code == 2);
  CHECK(invoke({"trees", "--order", "21"}).code == 2);
  CHECK(invoke({"--max-order", "5", "trees", "--order", "6"}).code == 2);
  CHECK(invoke({"trees"}).code == 2);
}

TEST_CASE("label command") {
  auto r = invoke({"label", "--order", "5", "--mode", "semigraceful"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "3 labelings, all verified"));

  r = invoke({"--machine", "label", "--order", "7", "--mode", "graceful"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["labelings"].size() == 11);
  for (const auto& rec : doc["labelings"]) CHECK(rec["status"] == "found");

  CHECK(invoke({"label", "--order", "4", "--mode", "semigraceful"}).code == 2);
  CHECK(invoke({"label", "--order", "5", "--mode", "harmonious"}).code == 2);
  CHECK(invoke({"label", "--order", "9", "--mode", "graceful", "--budget", "3"}).code == 3);

  TempDir dir;
  std::ofstream(dir.file("p5.txt")) << "5\n0 1\n1 2\n2 3\n3 4\n";
  r = invoke({"label", "--tree-file", dir.file("p5.txt"), "--mode", "semigraceful"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 labeling, all verified"));
  std::ofstream(dir.file("bad.txt")) << "4\n0 1\n1 2\n2 0\n";
  CHECK(invoke({"label", "--tree-file", dir.file("bad.txt")}).code == 2);
}

TEST_CASE("label command covers all 1301 trees of order 13") {
  const auto r = invoke({"label", "--order", "13", "--mode", "graceful"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1301 labelings, all verified"));
}

TEST_CASE("budget comes from the environment when no flag is given") {
  ::setenv(semigrace::cli::kBudgetEnv, "2", 1);
  CHECK(invoke({"label", "--order", "9"}).code == 3);
  CHECK(invoke({"label", "--order", "9", "--budget", "100000000"}).code == 0);
  ::setenv(semigrace::cli::kBudgetEnv, "lots", 1);
  CHECK(invoke({"label", "--order", "5"}).code == 2);
  ::unsetenv(semigrace::cli::kBudgetEnv);
  CHECK(invoke({"label", "--order", "5"}).code == 0);
}

TEST_CASE("decompose and verify") {
  TempDir dir;
  for (const auto& [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 6}, {7, 22}, {9, 94}}) {
    CAPTURE(p);
    const std::string path = dir.file("K" + std::to_string(p) + ".json");
    auto r = invoke({"decompose", "--order", std::to_string(p), "--family", "--output", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "K_" + std::to_string(p) + "^(" + std::to_string(m) + ")"));
    CHECK(contains(r.out, "verified"));
    r = invoke({"verify", path});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "covered exactly " + std::to_string(m) + " times"));
  }

  const std::string single = dir.file("single.json");
  CHECK(invoke({"decompose", "--order", "7", "--tree", "4", "--output", single}).code == 0);
  CHECK(read_json(single)["kind"] == "rotation");
  CHECK(invoke({"verify", single}).code == 0);

  std::ofstream(dir.file("p5.txt")) << "5\n0 1\n1 2\n2 3\n3 4\n";
  const std::string from_file = dir.file("from_file.json");
  CHECK(invoke({"decompose", "--tree-file", dir.file("p5.txt"), "--output", from_file}).code == 0);
  CHECK(invoke({"verify", from_file}).code == 0);

  CHECK(invoke({"decompose", "--order", "6", "--family"}).code == 2);
  CHECK(invoke({"decompose", "--order", "5"}).code == 2);
  CHECK(invoke({"decompose", "--order", "5", "--family", "--tree", "1"}).code == 2);
  CHECK(invoke({"decompose", "--order", "5", "--tree", "3"}).code == 2);
  CHECK(invoke({"decompose", "--order", "9", "--family", "--budget", "1"}).code == 3);
}

TEST_CASE("verify reports deficits for a mutated certificate") {
  TempDir dir;
  const std::string path = dir.file("K5.json");
  REQUIRE(invoke({"decompose", "--order", "5", "--family", "--output", path}).code == 0);
  json doc = read_json(path);
  // Path P5 (index 2) in canonical numbering: 0-1-2, 0-3-4. Swapping the
  // labels of vertices 0 and 1 changes the induced distances.
  auto& labels = doc["trees"][2]["base_labeling"]["labels"];
  const std::string l0 = labels[0].get<std::string>().substr(2);
  const std::string l1 = labels[1].get<std::string>().substr(2);
  labels[0] = "0:" + l1;
  labels[1] = "1:" + l0;
  write_json(dir.file("mutated.json"), doc);
  const auto r = invoke({"verify", dir.file("mutated.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "deficit"));
  CHECK(contains(r.out, "FAILED"));

  std::ofstream(dir.file("garbage.json")) << "{ not json";
  CHECK(invoke({"verify", dir.file("garbage.json")}).code == 2);
  std::ofstream(dir.file("empty_obj.json")) << "{}";
  CHECK(invoke({"verify", dir.file("empty_obj.json")}).code == 2);
  CHECK(invoke({"verify", dir.file("does_not_exist.json")}).code == 2);
}

TEST_CASE("feasibility command") {
  auto r = invoke({"feasibility", "--order", "21", "--tau", "2144505"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1429670"));
  r = invoke({"--machine", "feasibility", "--order", "21", "--tau", "2144505"});
  auto doc = json::parse(r.out);
  CHECK(doc[0]["k_min"] == 7);
  CHECK(doc[0]["m_min"] == 1429670);

  r = invoke({"--machine", "feasibility", "--order", "25", "--tau", "104636890"});
  doc = json::parse(r.out);
  CHECK(doc[0]["k_min"] == 5);
  CHECK(doc[0]["m_min"] == 41854756);

  r = invoke({"--machine", "feasibility", "--order", "9"});
  doc = json::parse(r.out);
  CHECK(doc[0]["tau"] == 47);
  CHECK(doc[0]["k_min"] == 9);
  CHECK(doc[0]["m_min"] == 94);

  r = invoke({"--machine", "feasibility", "--table"});
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc.size() == 13);

  CHECK(invoke({"feasibility", "--order", "8"}).code == 2);
  CHECK(invoke({"feasibility"}).code == 2);
}

TEST_CASE("eggleton command") {
  TempDir dir;
  auto r = invoke({"eggleton", "--output-dir", dir.file("out")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "K_5^(6)"));
  CHECK(contains(r.out, "K_7^(22)"));
  CHECK(contains(r.out, "both decompositions verified"));
  CHECK(invoke({"verify", dir.file("out/eggleton_K5.json")}).code == 0);
  CHECK(invoke({"verify", dir.file("out/eggleton_K7.json")}).code == 0);

  CHECK(invoke({"eggleton", "--output-dir", dir.file("tiny"), "--budget", "1"}).code == 3);
}

TEST_CASE("output is byte-identical across runs") {
  TempDir dir;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"trees", "--order", "9"},
           {"--machine", "trees", "--order", "9"},
           {"label", "--order", "9", "--mode", "semigraceful"},
           {"--machine", "decompose", "--order", "7", "--family"},
           {"feasibility", "--table"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
  invoke({"decompose", "--order", "9", "--family", "--output", dir.file("a.json")});
  invoke({"decompose", "--order", "9", "--family", "--output", dir.file("b.json")});
  std::ifstream a(dir.file("a.json")), b(dir.file("b.json"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("help and unknown commands") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
}
