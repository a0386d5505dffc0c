#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  std::string cmd = std::string(EQSYM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("eqsym_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

const char* kC2 = R"({"schema_version": 1, "group": {"family": "cyclic", "order": 2},
  "cover": {"genus": 1, "monodromy": ["x", "e"]}})";

const char* kD8 = R"(schema_version = 1
[group]
family = "dihedral"
order = 8
[cover]
genus = 2
monodromy = ["x", "y", "x^3", "y"]
[config]
seed = 3
)";

Json strip_timing(Json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("cover report") {
  Scratch s;
  auto r = run("cover --input " + s.write("c2.json", kC2));
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["outputs"]["cells"]["vertices"] == 2);
  CHECK(j["outputs"]["cells"]["edges"] == 6);
  CHECK(j["outputs"]["cells"]["triangles"] == 4);
  CHECK(j["outputs"]["module_dimension"] == 2);
  CHECK(j["seed"] == 0);
}

TEST_CASE("find, verify and tamper") {
  Scratch s;
  auto in = s.write("c2.json", kC2);
  auto found = run("find-lagrangian --input " + in + " --output " + (s.dir / "r.json").string());
  REQUIRE(found.code == 0);
  std::ifstream f(s.dir / "r.json");
  Json report = Json::parse(f);
  CHECK(report["outputs"]["certificate"]["dimension"] == 1);
  CHECK(report["verdict"] == "pass");

  // the report carries its input, so verify needs nothing else
  auto again = run("verify --certificate " + (s.dir / "r.json").string());
  CHECK(again.code == 0);
  CHECK(again.json()["verdict"] == "pass");

  // D8 round trip with a 9-dimensional certificate, then one entry changed
  auto d8 = s.write("d8.toml", kD8);
  auto big = run("find-lagrangian --input " + d8);
  REQUIRE(big.code == 0);
  Json rep = big.json();
  CHECK(rep["seed"] == 3);
  s.write("big.json", rep.dump());
  CHECK(run("verify --input " + d8 + " --certificate " + (s.dir / "big.json").string()).code == 0);
  auto& basis = rep["outputs"]["certificate"]["basis"];
  REQUIRE(basis.size() == 9);
  basis[0][basis[0].size() - 1] = "7/3";
  auto bad = run("verify --certificate " + s.write("bad.json", rep.dump()));
  CHECK(bad.code == 1);
  auto fj = bad.json();
  CHECK(fj["verdict"] == "fail");
  CHECK(fj["outputs"]["failure"]["witness_a"].size() == 18);
}

TEST_CASE("reports are deterministic apart from timing") {
  Scratch s;
  auto d8 = s.write("d8.toml", kD8);
  auto a = run("find-lagrangian --input " + d8);
  auto b = run("find-lagrangian --input " + d8);
  CHECK(strip_timing(a.json()) == strip_timing(b.json()));
  auto c = run("find-lagrangian --seed 5 --input " + d8);
  CHECK(c.json()["seed"] == 5);
}

TEST_CASE("negative control exits 1") {
  Scratch s;
  auto in = s.write("rot.json", R"({"group": "C4", "module": {"omega": [[0, 1], [-1, 0]],
    "generators": {"x": [[0, -1], [1, 0]]}}})");
  auto r = run("find-lagrangian --height-bound 10 --input " + in);
  CHECK(r.code == 1);
  CHECK(r.json()["verdict"] == "exhausted");
}

TEST_CASE("witt and chevalley-weil") {
  Scratch s;
  auto a = s.write("a.json", R"({"group": "C2", "cover": {"genus": 2, "monodromy": ["x", "e", "e", "e"]}})");
  auto b = s.write("b.json", R"({"group": "C2", "cover": {"genus": 2, "monodromy": ["e", "x", "x", "x"]}})");
  auto w = run("witt-equiv --input " + a + " --input " + b);
  CHECK(w.code == 0);
  CHECK(w.json()["verdict"] == "pass");
  auto cw = run("chevalley-weil --input " + a);
  CHECK(cw.code == 0);
  for (const auto& t : cw.json()["outputs"]["traces"]) CHECK(t["ok"] == true);
}

TEST_CASE("input errors exit 2 with a location") {
  Scratch s;
  auto r1 = run("cover --input " + s.write("e1.json", R"({"group": {"family": "cyclic"}, "cover": {}})"));
  CHECK(r1.code == 2);
  CHECK(r1.json()["error"]["where"] == "group.order");

  auto r2 = run("cover --input " + s.write("e2.toml", "group = \"C4\"\n[cover\n"));
  CHECK(r2.code == 2);
  CHECK(r2.json()["error"]["where"].get<std::string>().find(":2:") != std::string::npos);

  auto r3 = run("cover --input " +
                s.write("e3.json", R"({"group": "D8", "cover": {"genus": 1, "monodromy": ["x", "q"]}})"));
  CHECK(r3.code == 2);
  CHECK(r3.json()["error"]["where"] == "cover.monodromy[1]");

  auto r4 = run("cover --input " + s.write("e4.toml", "group = \"C2\"\n[cover]\ngenus = 1\nmonodromy = [0.5, 1]\n"));
  CHECK(r4.code == 2);

  auto r5 = run("cover --input " + s.write("e5.json", R"({"group": "C2", "cover": {"genus": 1, "monodromy": ["e", "e"]}})"));
  CHECK(r5.code == 2);

  CHECK(run("cover --input /nonexistent/x.json").code == 2);
}
