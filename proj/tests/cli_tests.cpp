#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command =
      env_prefix + "\"" + CASIMIRT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

} // namespace

TEST_CASE("free energy at zero temperature in CSV") {
  const auto r = run_cli("free-energy --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "z,lT,a_hat,free_energy_per_area,tail_bound,method");
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == 6);
  CHECK(f[0] == "0");
  CHECK(f[1] == "inf");
  const double a_hat = std::stod(f[2]);
  CHECK(std::abs(a_hat + 9.8696044010893586188 / 720.0) < 1e-12);
  CHECK(std::stod(f[3]) == a_hat); // l3 = 1, natural units
  CHECK(f[5] == "expansion_lowT");
}

TEST_CASE("scalar field halves the electromagnetic result") {
  const auto em = run_cli("free-energy --format csv");
  const auto sc = run_cli("free-energy --field scalar --format csv");
  REQUIRE(em.exit_code == 0);
  REQUIRE(sc.exit_code == 0);
  const double em_a = std::stod(fields_of(lines_of(em.out)[1])[2]);
  const double sc_a = std::stod(fields_of(lines_of(sc.out)[1])[2]);
  CHECK(sc_a == 0.5 * em_a);
}

TEST_CASE("identical scan configurations produce identical bytes") {
  const std::string args =
      "scan --zmin 0.5 --zmax 2 --points 5 --tolerance 1e-10 --format csv";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  const auto lines = lines_of(first.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "z,a_hat,f_hat,e_hat,s_hat,method,tail_bound");
  const auto row0 = fields_of(lines[1]);
  const auto row4 = fields_of(lines[5]);
  REQUIRE(row0.size() == 7);
  CHECK(row0[0] == "0.5");
  CHECK(row4[0] == "2");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    CHECK(f[5] == "lattice");
    CHECK(std::stod(f[1]) < 0.0); // a_hat
    CHECK(std::stod(f[2]) < 0.0); // f_hat
    CHECK(std::stod(f[4]) > 0.0); // s_hat
    // the entropy bound carries a 2/z amplification, so the row-level
    // bound can sit a few-fold above the requested tolerance
    CHECK(std::stod(f[6]) <= 1e-8);
  }

  // serial evaluation produces the same bytes as the parallel default
  const auto serial = run_cli(args + " --serial");
  CHECK(serial.out == first.out);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("scan --zmin 2 --zmax 1 --points 5").exit_code == 2);
  CHECK(run_cli("scan --zmin 0 --zmax 1 --points 5").exit_code == 2);
  CHECK(run_cli("scan --zmin 0.5 --zmax 2").exit_code == 2);
  CHECK(run_cli("scan --zmin 0.5 --zmax 2 --points 1").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("free-energy --units furlongs").exit_code == 2);
  CHECK(run_cli("free-energy --l3 -1").exit_code == 2);
  CHECK(run_cli("orbits --max-length 0").exit_code == 2);
  CHECK(run_cli("force --method telepathy").exit_code == 2);
}

TEST_CASE("numeric domain failures exit with code 1") {
  CHECK(run_cli("classical-box --L 2 --l3 3").exit_code == 1);
  CHECK(run_cli("classical-box --L 2 --l3 2").exit_code == 1);
}

TEST_CASE("SI units reproduce the room-temperature reduced variable") {
  const auto r = run_cli(
      "force --l3 2e-6 --temperature 300 --units si --tolerance 1e-10 "
      "--format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto f = fields_of(lines[1]);
  CHECK(std::abs(std::stod(f[0]) / 0.52404389356715172 - 1.0) < 1e-12);
  CHECK(std::stod(f[2]) < 0.0);
  CHECK(std::stod(f[3]) < 0.0);
  CHECK(f[5] == "lattice");
}

TEST_CASE("the unit-system environment variable mirrors --units") {
  const std::string args =
      "force --l3 2e-6 --temperature 300 --tolerance 1e-10 --format csv";
  const auto flagged = run_cli(args + " --units si");
  const auto from_env = run_cli(args, "CASIMIRT_UNITS=si ");
  REQUIRE(flagged.exit_code == 0);
  REQUIRE(from_env.exit_code == 0);
  CHECK(flagged.out == from_env.out);
  // the parser discards env values that fail validation, so a typo falls
  // back to the default unit system instead of erroring
  const auto bad_env = run_cli(args, "CASIMIRT_UNITS=bogus ");
  const auto plain = run_cli(args);
  CHECK(bad_env.exit_code == 0);
  CHECK(bad_env.out == plain.out);
}

TEST_CASE("JSON output mirrors the CSV fields") {
  const auto r = run_cli("free-energy --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("{\"command\":\"free-energy\",\"rows\":[{", 0) == 0);
  CHECK(r.out.find("\"lT\":null") != std::string::npos); // infinite at T = 0
  CHECK(r.out.find("\"method\":\"expansion_lowT\"") != std::string::npos);
  CHECK(r.out.find("\"a_hat\":-0.013707783890") != std::string::npos);
}

TEST_CASE("--out writes the same bytes the terminal would receive") {
  const std::string path = "/tmp/casimirt_cli_out_test.csv";
  std::remove(path.c_str());
  const std::string args = "entropy --temperature 2 --format csv";
  const auto direct = run_cli(args);
  const auto filed = run_cli(args + " --out " + path);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("orbit enumeration lists the expected cylinder orbits") {
  const auto r = run_cli("orbits --l3 1 --lT 2 --max-length 5 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n3,nT,length,multiplicity");
  struct Expected {
    double n3, nT, length;
  };
  const Expected expected[] = {{1, 0, 2.0},
                               {1, 1, 2.8284271247461903},
                               {2, 0, 4.0},
                               {1, 2, 4.4721359549995796},
                               {2, 1, 4.4721359549995796}};
  for (int i = 0; i < 5; ++i) {
    const auto f = fields_of(lines[static_cast<size_t>(i) + 1]);
    REQUIRE(f.size() == 4);
    CHECK(std::stod(f[0]) == expected[i].n3);
    CHECK(std::stod(f[1]) == expected[i].nT);
    CHECK(std::abs(std::stod(f[2]) - expected[i].length) < 1e-12);
    CHECK(std::stod(f[3]) == 2.0);
  }
}

TEST_CASE("expansions command reports both branches") {
  const auto r = run_cli("expansions --z 1 --tolerance 1e-10 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "z,branch,order,a_hat,estimated_error,lattice_a_hat,abs_diff");
  const auto high = fields_of(lines[1]);
  const auto low = fields_of(lines[2]);
  CHECK(high[1] == "highT");
  CHECK(low[1] == "lowT");
  CHECK(high[2] == "8");
  CHECK(std::stod(high[6]) < 1e-9);
  CHECK(std::stod(low[6]) < 1e-9);
}

TEST_CASE("Matsubara route is available from the force command") {
  const auto r = run_cli(
      "force --temperature 0.5 --method matsubara --tolerance 1e-11 "
      "--format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const auto f = fields_of(lines[1]);
  CHECK(f[0] == "1");
  CHECK(std::abs(std::stod(f[2]) + 0.051873016981119345931) < 1e-10);
  CHECK(f[5] == "oracle");
}

TEST_CASE("selftest passes") {
  const auto r = run_cli("selftest --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() > 5);
  CHECK(lines[0] == "check,measured,threshold,status");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 4);
    CHECK(f[3] == "pass");
  }
}

TEST_CASE("oracle cross-checks pass") {
  const auto r = run_cli("oracle-check --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    CHECK(f[3] == "pass");
  }
}
