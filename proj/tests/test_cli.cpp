#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef LIELAB_CLI
#error "LIELAB_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIELAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "lielab_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string emit(const std::string& spec, const std::string& file) {
  const auto path = (scratch() / file).string();
  REQUIRE(run("catalog emit " + spec + " -o " + path).code == 0);
  return path;
}

}  // namespace

TEST_CASE("exit codes follow the report status") {
  const auto su = emit("su2q", "su2q.json");
  const auto sl2 = emit("sl 2", "sl2.json");
  const auto sl2f5 = emit("sl 2 --field F5", "sl2f5.json");
  const auto h3 = emit("heisenberg 1", "h3.json");
  const auto quat = emit("quaternion -1 -1", "quat.json");
  const auto split = emit("quaternion -1 -1 --field F5", "splitq.json");

  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> cases = {
      {"regular " + su + " --mode certificate", 0},
      {"regular " + su + " --mode search", 2},
      {"regular " + sl2 + " --mode search", 1},
      {"regular " + sl2f5 + " --mode exhaustive", 1},
      {"regular " + h3 + " --mode search", 0},
      {"regular " + sl2 + " --mode exhaustive", 3},
      {"anisotropic " + su + " --mode certificate", 0},
      {"anisotropic " + sl2 + " --mode search", 1},
      {"nilpotent-free " + h3 + " --mode search", 1},
      {"rank " + sl2, 0},
      {"division " + quat + " --mode certificate", 0},
      {"division " + split + " --mode exhaustive", 1},
      {"simple " + su, 0},
      {"simple " + h3, 1},
      {"commutator " + su + " --target 1,2,3 --form killing", 0},
      {"commutator " + quat + " --target 0,1,1,0", 0},
      {"commutator " + sl2 + " --target 0,1", 3},
      {"commutator " + h3 + " --target 1,0,0", 3},
      {"fitting " + sl2 + " --element 0,1,0", 0},
      {"validate " + su, 0},
      {"derivations " + sl2, 0},
      {"centroid " + sl2, 0},
      {"h2 " + h3, 0},
      {"analyze " + sl2, 0},
      {"rank " + quat, 3},
      {"rank /nonexistent/file.json", 3},
      {"regular " + su + " --mode sideways", 3},
      {"enumerate --dim 2 --field F2", 0},
      {"enumerate --dim 2 --field Q", 3},
      {"catalog list", 0},
      {"catalog emit nothing", 3},
      {"nosuchcommand", 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    CHECK(run(c.args).code == c.code);
  }
}

TEST_CASE("reports") {
  const auto sl2 = emit("sl 2", "sl2.json");
  const auto r = nlohmann::json::parse(run("rank " + sl2).out);
  CHECK(r["rank"] == 1);
  const auto v = nlohmann::json::parse(run("regular " + sl2 + " --mode search").out);
  CHECK(v["status"] == "Refuted");
  CHECK(v["witness"][0] == nlohmann::json::array({"1", "0", "0"}));
  const auto h = nlohmann::json::parse(run("h2 " + sl2).out);
  CHECK(h["dim"] == 0);
  const auto e = nlohmann::json::parse(run("enumerate --dim 2 --field F2").out);
  CHECK(e["generated"] == 4);
  CHECK(e["regular"] == 1);
}

TEST_CASE("validate reports the violating triple") {
  const auto path = (scratch() / "bad.json").string();
  std::ofstream(path) << R"({"field":{"kind":"Q"},"dim":3,"basis":["a","b","c"],"brackets":[)"
                         R"({"i":0,"j":1,"coeffs":{"1":"1"}},{"i":1,"j":2,"coeffs":{"0":"1"}}]})";
  const auto r = run("validate " + path);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["k"] == 2);
  CHECK(run("rank " + path).code == 3);
}

TEST_CASE("emit then parse is byte-identical") {
  for (const std::string spec : {"sl 3", "su2q", "psl 3 --field F3", "quaternion -1 -1", "reduced-poly 2 --field F3"}) {
    CAPTURE(spec);
    const auto a = run("catalog emit " + spec);
    REQUIRE(a.code == 0);
    const auto path = (scratch() / "rt.json").string();
    std::ofstream(path) << a.out;
    const auto valid = run("validate " + path);
    CHECK(valid.code == 0);
    const auto written = run("catalog emit " + spec + " -o " + (scratch() / "rt2.json").string());
    CHECK(nlohmann::json::parse(valid.out)["hash"] == nlohmann::json::parse(written.out)["hash"]);
    CHECK(run("catalog emit " + spec).out == a.out);
  }
}
