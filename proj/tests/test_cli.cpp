#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#ifndef VDGE_CLI_PATH
#error "VDGE_CLI_PATH must point at the vdge binary"
#endif

namespace {

using nlohmann::json;

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("vdge_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const TempDir& dir, const std::string& args) {
  const std::string out_path = dir.file("stdout.txt");
  const std::string err_path = dir.file("stderr.txt");
  const std::string command =
      std::string(VDGE_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  CliRun run;
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.out = slurp(out_path);
  run.err = slurp(err_path);
  return run;
}

void write_ghz3_file(const std::string& path) {
  const double v = 1.0 / std::sqrt(2.0);
  json doc;
  doc["n"] = 3;
  json amps = json::array();
  for (int i = 0; i < 8; ++i) {
    const double re = (i == 0 || i == 7) ? v : 0.0;
    amps.push_back(json::array({re, 0.0}));
  }
  doc["amplitudes"] = amps;
  std::ofstream(path) << doc.dump();
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> split_csv_row(const std::string& line) {
  std::vector<double> fields;
  std::istringstream in(line);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      fields.push_back(std::stod(tok));
    } catch (...) {
      fields.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return fields;
}

}  // namespace

TEST_CASE("estimate on a ghz state file") {
  TempDir dir;
  const std::string state = dir.file("ghz3.json");
  write_ghz3_file(state);
  const std::string result = dir.file("result.json");

  const CliRun run = run_cli(
      dir, "estimate " + state + " --iterations 60 --reps 3 --seed 11 -o " + result);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);

  const json doc = json::parse(slurp(result));
  CHECK(doc.at("schema") == "vdge-estimate-v1");
  CHECK(std::abs(doc.at("oracle").at("e").get<double>() - 0.5) < 1e-9);
  CHECK(std::abs(doc.at("vdge").at("e_star").get<double>() - 0.5) < 0.1);
  CHECK(doc.at("vdge").at("objective_evaluations").get<long>() == 2 * 60 * 3 + 3);
  CHECK(doc.at("vdge").at("traces").size() == 3);
  CHECK(doc.at("vdge").at("traces").at(0).at("f_plus").size() == 60);
  CHECK(doc.at("config").at("seed").get<unsigned long>() == 11);

  // Same config, same document bit for bit.
  const std::string again = dir.file("again.json");
  const CliRun rerun = run_cli(
      dir, "estimate " + state + " --iterations 60 --reps 3 --seed 11 -o " + again);
  REQUIRE(rerun.exit_code == 0);
  CHECK(slurp(result) == slurp(again));
}

TEST_CASE("estimate rejects malformed input with exit code 2") {
  TempDir dir;
  const std::string bad = dir.file("bad.json");
  std::ofstream(bad) << R"({"n": 3, "amplitudes": [[1.0, 0.0]]})";
  const CliRun run = run_cli(dir, "estimate " + bad);
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("amplitudes") != std::string::npos);

  const CliRun missing = run_cli(dir, "estimate " + dir.file("nope.json"));
  CHECK(missing.exit_code == 2);

  const CliRun unknown_flag = run_cli(dir, "estimate --definitely-not-a-flag");
  CHECK(unknown_flag.exit_code == 2);
}

TEST_CASE("estimate backend selection") {
  TempDir dir;
  const std::string state = dir.file("ghz3.json");
  write_ghz3_file(state);
  // A dense file cannot run on the MPS backend.
  const CliRun run = run_cli(dir, "estimate " + state + " --backend mps");
  CHECK(run.exit_code == 2);
}

TEST_CASE("gw-sweep produces the expected grid") {
  TempDir dir;
  const std::string csv = dir.file("sweep.csv");
  const CliRun run = run_cli(dir,
                             "gw-sweep --phi 0,3.141592653589793 --s-count 5 --reps 2 "
                             "--iterations 15 --oracle-starts 12 --seed 3 --threads 2 -o " +
                                 csv);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const std::string text = slurp(csv);
  CHECK(text.find("vdge-csv v1 gw-sweep") != std::string::npos);
  CHECK(text.find("# config") != std::string::npos);

  const auto rows = data_lines(text);
  REQUIRE(rows.size() == 10);  // 2 phi values x 5 s values
  // First row: phi = 0, s = 0 is the pure W state; last of the phi = 0
  // block: s = 1 is the GHZ state.
  const auto first = split_csv_row(rows[0]);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == 0.0);
  CHECK(first[2] == doctest::Approx(5.0 / 9.0).epsilon(1e-9));
  const auto ghz_row = split_csv_row(rows[4]);
  CHECK(ghz_row[1] == 1.0);
  CHECK(ghz_row[2] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("random-bench emits one row per qubit count and iteration") {
  TempDir dir;
  const std::string csv = dir.file("bench.csv");
  const CliRun run = run_cli(dir,
                             "random-bench --qubits 2,3 --states 3 --reps 2 --iterations 12 "
                             "--oracle-starts 10 --seed 9 --threads 2 -o " +
                                 csv);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const auto rows = data_lines(slurp(csv));
  REQUIRE(rows.size() == 2 * 12);
  const auto row = split_csv_row(rows[0]);
  CHECK(row[0] == 2.0);  // n
  CHECK(row[1] == 1.0);  // k starts at 1
  CHECK(row[5] == 3.0);  // states
}

TEST_CASE("mps-bench runs the perturbed family campaign") {
  TempDir dir;
  const std::string csv = dir.file("mps.csv");
  const CliRun run = run_cli(dir,
                             "mps-bench --qubits 6 --lambda 0.05 --family w --states 4 "
                             "--iterations 25 --oracle-starts 10 --seed 2 --threads 2 -o " +
                                 csv);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const auto rows = data_lines(slurp(csv));
  REQUIRE(rows.size() == 25);
  CHECK(rows[0].substr(0, 2) == "w,");

  // lambda = 0: initialized at the optimum, the first recorded estimate and
  // the converged tail sit near the shot-noise floor. The early iterations
  // in between show the usual large-gain transient, so only the endpoints
  // are pinned here.
  const std::string flat_csv = dir.file("flat.csv");
  const CliRun flat = run_cli(dir,
                              "mps-bench --qubits 6 --lambda 0 --family ghz --states 3 "
                              "--iterations 400 --oracle-starts 10 --seed 2 --threads 2 -o " +
                                  flat_csv);
  REQUIRE(flat.exit_code == 0);
  const auto flat_rows = data_lines(slurp(flat_csv));
  REQUIRE(flat_rows.size() == 400);
  CHECK(split_csv_row(flat_rows.front())[4] < 0.05);  // err_median at k = 1
  CHECK(split_csv_row(flat_rows.back())[4] < 0.05);   // err_median at k = 400
}

TEST_CASE("mps-bench stays in tensor form at 25 qubits") {
  TempDir dir;
  const std::string csv = dir.file("large.csv");
  const CliRun run = run_cli(dir,
                             "mps-bench --qubits 25 --lambda 0.1 --family w --states 2 "
                             "--iterations 40 --reps 1 --oracle-starts 20 --oracle-sweeps 200 "
                             "--seed 4 --threads 2 -o " +
                                 csv);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const auto rows = data_lines(slurp(csv));
  REQUIRE(rows.size() == 40);
  const auto first = split_csv_row(rows.front());
  CHECK(first[1] == 25.0);  // n column
}

TEST_CASE("gw-sweep reruns are byte identical for any thread count") {
  TempDir dir;
  const std::string a = dir.file("a.csv");
  const std::string b = dir.file("b.csv");
  const std::string args =
      "gw-sweep --phi 0 --s-count 3 --reps 2 --iterations 10 --oracle-starts 8 --seed 77 ";
  REQUIRE(run_cli(dir, args + "--threads 2 -o " + a).exit_code == 0);
  REQUIRE(run_cli(dir, args + "--threads 1 -o " + b).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("gw-sweep default grid covers 124 states") {
  TempDir dir;
  const std::string csv = dir.file("full.csv");
  // Default phi set and s grid; the optimizer budget is trimmed to keep the
  // test quick, the grid itself is what matters here.
  const CliRun run = run_cli(
      dir, "gw-sweep --reps 1 --iterations 5 --oracle-starts 5 --threads 2 --seed 1 -o " + csv);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  CHECK(data_lines(slurp(csv)).size() == 124);
}

TEST_CASE("options can come from a config file") {
  TempDir dir;
  const std::string conf = dir.file("run.conf");
  std::ofstream(conf) << "[gw-sweep]\nphi=0\ns-count=2\nreps=2\niterations=8\n"
                         "oracle-starts=8\nseed=5\noutput=" +
                             dir.file("out.csv") + "\n";
  const CliRun run = run_cli(dir, "--config " + conf + " gw-sweep");
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const auto rows = data_lines(slurp(dir.file("out.csv")));
  CHECK(rows.size() == 2);
}

TEST_CASE("mps state files round trip through estimate") {
  TempDir dir;
  // Write a 2-qubit |00> product MPS by hand and estimate it.
  const std::string path = dir.file("product.json");
  std::ofstream(path) << R"({"n": 2, "bond_dims": [1, 1, 1],
      "tensors": [[[[[1.0, 0.0]], [[0.0, 0.0]]]], [[[[1.0, 0.0]], [[0.0, 0.0]]]]]})";
  const std::string result = dir.file("result.json");
  const CliRun run =
      run_cli(dir, "estimate " + path + " --iterations 25 --reps 2 --seed 1 -o " + result);
  CAPTURE(run.err);
  REQUIRE(run.exit_code == 0);
  const json doc = json::parse(slurp(result));
  CHECK(doc.at("config").at("backend") == "mps");
  CHECK(std::abs(doc.at("oracle").at("e").get<double>()) < 1e-9);

  // The same file can be forced onto the dense backend.
  const std::string dense_result = dir.file("dense.json");
  const CliRun dense_run = run_cli(dir, "estimate " + path +
                                            " --backend dense --iterations 25 --reps 2 --seed 1 "
                                            "-o " +
                                            dense_result);
  CAPTURE(dense_run.err);
  REQUIRE(dense_run.exit_code == 0);
  const json dense_doc = json::parse(slurp(dense_result));
  CHECK(dense_doc.at("config").at("backend") == "dense");
  CHECK(std::abs(dense_doc.at("oracle").at("e").get<double>()) < 1e-9);
}
