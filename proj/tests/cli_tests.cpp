// End-to-end tests of the command-line binary: golden outputs, JSON report
// fields, and exit-code conventions (0 ok, 1 violated comparison, 2 input
// error, 3 resource guard). The binary path and fixture directory come in
// as compile definitions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(AFNORM_BIN_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

// Scratch file that removes itself; used for malformed-input tests.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& contents) {
    path = std::filesystem::temp_directory_path() / ("afnorm_cli_" + name);
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

nlohmann::json parse_json(const RunResult& r) {
  CAPTURE(r.output);
  REQUIRE(r.exit_code == 0);
  return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("parse: human-readable output") {
  RunResult r = run_cli("parse " + fixture("torus_2_3.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "< x, y | x^2 y^3 >\n"
        "generators: 2, relators: 1\n"
        "  x appears 2 time(s)\n"
        "  y appears 3 time(s)\n");
}

TEST_CASE("parse: json report") {
  nlohmann::json j = parse_json(run_cli("parse " + fixture("torus_2_3.txt") + " --json"));
  CHECK(j["tool"] == "afnorm");
  CHECK(j["command"] == "parse");
  CHECK(j["input"]["file"] == "torus_2_3.txt");
  // digest is over the file bytes, so it pins the fixture content too
  CHECK(j["input"]["digest"] == "5d41a70efe7d3f78");
  CHECK(j["presentation"]["text"] == "< x, y | x^2 y^3 >");
  CHECK(j["presentation"]["generators"] == nlohmann::json({"x", "y"}));
  CHECK(j["presentation"]["occurrences"]["y"] == 3);
}

TEST_CASE("norms: byte-exact json golden") {
  RunResult r = run_cli("norms " + fixture("torus_2_3.txt") + " --class 1 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == R"({
  "tool": "afnorm",
  "version": "0.1.0",
  "command": "norms",
  "input": {
    "file": "torus_2_3.txt",
    "digest": "5d41a70efe7d3f78"
  },
  "norms": {
    "class": [
      "1"
    ],
    "complex_norm": "1",
    "rank_one": "1",
    "terms": [
      {
        "character": [],
        "norm": "2",
        "penalty": "1",
        "bound": "1"
      }
    ],
    "best_bound": "1",
    "holds": true,
    "equality": true
  }
}
)");
}

TEST_CASE("homology: torsion and free rank") {
  nlohmann::json j =
      parse_json(run_cli("homology " + fixture("commutator_k2_l1_m3.txt") + " --json"));
  CHECK(j["homology"]["group"] == "Z/3 x Z");
  CHECK(j["homology"]["invariant_factors"] == nlohmann::json({"3"}));
  CHECK(j["homology"]["free_rank"] == 1);
  CHECK(j["homology"]["conductor"] == 3);
  CHECK(j["homology"]["characters"] == "3");
}

TEST_CASE("alexander: golden polynomials") {
  auto poly = [](const std::string& name) {
    return parse_json(run_cli("alexander " + fixture(name) + " --json"))["alexander"];
  };
  CHECK(poly("torus_2_3.txt")["polynomial"] == "t^2 - t + 1");
  CHECK(poly("torus_2_5.txt")["polynomial"] == "t^4 - t^3 + t^2 - t + 1");
  CHECK(poly("torus_3_4.txt")["polynomial"] == "t^6 - t^5 + t^3 - t + 1");
  CHECK(poly("mapping_torus.txt")["polynomial"] == "t^2 - t - 1");
  nlohmann::json defect = poly("deficiency_m4_n2.txt");
  CHECK(defect["polynomial"] == "0");
  CHECK(defect["zero"] == true);
}

TEST_CASE("alexander: twisted polynomials") {
  nlohmann::json alive = parse_json(
      run_cli("alexander " + fixture("commutator_k2_l1_m2.txt") + " --character 1 --json"));
  CHECK(alive["alexander"]["twisted"] == true);
  CHECK(alive["alexander"]["conductor"] == 2);
  CHECK(alive["alexander"]["polynomial"] == "t + 1");
  CHECK(alive["alexander"]["zero"] == false);

  // the character kills the twist when its order divides the inner exponent
  nlohmann::json dead = parse_json(
      run_cli("alexander " + fixture("commutator_k2_l2_m2.txt") + " --character 1 --json"));
  CHECK(dead["alexander"]["polynomial"] == "0");
  CHECK(dead["alexander"]["zero"] == true);
}

TEST_CASE("verify: scan reports equalities and exits zero") {
  nlohmann::json j =
      parse_json(run_cli("verify " + fixture("torus_2_3.txt") + " --scan 1 --json"));
  CHECK(j["verify"]["classes_checked"] == 3);
  CHECK(j["verify"]["violations"] == 0);
  CHECK(j["verify"]["equalities"] == 3);
  CHECK(j["verify"]["all_hold"] == true);
  CHECK(j["verify"]["results"][0]["class"] == nlohmann::json({"-1"}));
  CHECK(j["verify"]["results"][1]["complex_norm"] == "0");
}

TEST_CASE("verify: single class on the mapping torus") {
  nlohmann::json j =
      parse_json(run_cli("verify " + fixture("mapping_torus.txt") + " --class 1 --json"));
  CHECK(j["verify"]["classes_checked"] == 1);
  CHECK(j["verify"]["results"][0]["complex_norm"] == "1");
  CHECK(j["verify"]["results"][0]["equality"] == true);
}

TEST_CASE("specialize: applicable class divides as predicted") {
  nlohmann::json j = parse_json(run_cli(
      "specialize " + fixture("commutator_k2_l1_m2.txt") + " --class 1 --character 1 --json"));
  const nlohmann::json& s = j["specialize"];
  CHECK(s["delta"] == "t + 1");
  CHECK(s["delta_zero"] == false);
  CHECK(s["delta_exponent"] == 0);
  CHECK(s["primitive"] == true);
  CHECK(s["regular"] == true);
  CHECK(s["applicable"] == true);
  CHECK(s["specialized"] == "t + 1");
  CHECK(s["expected_divisor"] == "t + 1");
  CHECK(s["span_ok"] == true);
  CHECK(s["divisible"] == true);
}

TEST_CASE("cw-norm: minimization over the class") {
  nlohmann::json j = parse_json(run_cli("cw-norm " + fixture("parallel_edges.json") +
                                        " --cocycle " + fixture("cocycle_ab.json") +
                                        " --minimize --json"));
  CHECK(j["complex"]["vertices"] == 2);
  CHECK(j["complex"]["edges"] == 2);
  CHECK(j["complex"]["faces"] == 2);
  CHECK(j["norm"] == "2");
  CHECK(j["minimized"]["value"] == "0");
  CHECK(j["minimized"]["minimizer"] == nlohmann::json::object());
  // the potential shifts both parallel edges down by one
  CHECK(j["minimized"]["potential"] == nlohmann::json({{"u", 1}}));
}

TEST_CASE("cw-norm: pinned boundary blocks the shift") {
  nlohmann::json j = parse_json(run_cli("cw-norm " + fixture("parallel_edges_pinned.json") +
                                        " --cocycle " + fixture("cocycle_ab.json") +
                                        " --minimize --json"));
  CHECK(j["norm"] == "2");
  CHECK(j["minimized"]["value"] == "2");
  CHECK(j["minimized"]["minimizer"] == nlohmann::json({{"a", 1}, {"b", 1}}));
  CHECK(j["minimized"]["potential"] == nlohmann::json::object());
}

TEST_CASE("cw-norm: zero-weight loops cost nothing") {
  RunResult r = run_cli("cw-norm " + fixture("torus_complex.json") + " --cocycle " +
                        fixture("torus_cocycle.json") + " --minimize");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("cocycle norm: 0") != std::string::npos);
}

TEST_CASE("exit code 2: input errors") {
  CHECK(run_cli("parse " + fixture("no_such_file.txt")).exit_code == 2);

  TempFile bad("bad.txt", "< x, y | z >\n");
  RunResult r = run_cli("parse " + bad.path.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(r.output.find("unknown generator") != std::string::npos);

  // class length must match the free rank
  CHECK(run_cli("norms " + fixture("torus_2_3.txt") + " --class 1,2").exit_code == 2);

  // character exponent out of range
  CHECK(run_cli("alexander " + fixture("commutator_k2_l1_m2.txt") + " --character 5")
            .exit_code == 2);

  // the complex norm needs every generator to appear twice
  CHECK(run_cli("verify " + fixture("free_rank2.txt") + " --scan 1").exit_code == 2);

  TempFile not_cocycle("not_cocycle.json", "{\"a\": 1}\n");
  RunResult nc = run_cli("cw-norm " + fixture("parallel_edges.json") + " --cocycle " +
                         not_cocycle.path.string());
  CHECK(nc.exit_code == 2);
  CHECK(nc.output.find("face relation") != std::string::npos);

  TempFile bad_json("bad.json", "{\"vertices\": [\n");
  CHECK(run_cli("cw-norm " + bad_json.path.string()).exit_code == 2);
}

TEST_CASE("exit code 3: resource guards") {
  TempFile many("many.txt", "< a, b, c, d, e, f, g, h, i | a^2 >\n");
  RunResult r = run_cli("alexander " + many.path.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("AFNORM_MAX_GENERATORS") != std::string::npos);

  CHECK(run_cli("verify " + fixture("torus_2_3.txt") + " --scan 30000").exit_code == 3);

  CHECK(run_cli("norms " + fixture("commutator_k2_l1_m3.txt") +
                " --class 1 --max-characters 2")
            .exit_code == 3);
}

TEST_CASE("reports are byte-stable across runs") {
  std::string args = "verify " + fixture("commutator_k3_l2_m3.txt") + " --scan 2 --json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(parse_json(a)["verify"]["all_hold"] == true);
}
