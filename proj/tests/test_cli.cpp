#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cogrowth/cli.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cogrowth");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cogrowth::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(std::string const& s) {
    std::vector<std::string> out;
    std::istringstream       in(s);
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }

  // CSV rows without comment lines and header.
  std::vector<std::vector<std::string>> csv_rows(std::string const& s) {
    std::vector<std::vector<std::string>> rows;
    bool                                  header = true;
    for (auto const& line : lines(s)) {
      if (line.starts_with("#")) {
        continue;
      }
      if (header) {
        header = false;
        continue;
      }
      std::vector<std::string> cells;
      std::istringstream       in(line);
      for (std::string cell; std::getline(in, cell, ',');) {
        cells.push_back(cell);
      }
      rows.push_back(cells);
    }
    return rows;
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate") {
    auto const fib = run({"generate", "--spec", "fibonacci", "--n", "11"});
    CHECK(fib.code == 0);
    CHECK(fib.out == "abaababaaba\n");
    CHECK(fib.err.find("\"n\":11") != std::string::npos);
    CHECK(run({"generate", "--spec", "periodic:ab", "--n", "4"}).out == "abab\n");

    auto const missing = run({"generate", "--spec", "/nonexistent/spec.json", "--n", "3"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("spec") != std::string::npos);
  }

  TEST_CASE("output files") {
    auto const path = std::filesystem::temp_directory_path() / "cogrowth_cli_gen.txt";
    auto const r    = run({"generate", "--n", "11", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "abaababaaba\n");
    std::filesystem::remove(path);
    CHECK(run({"generate", "--n", "3", "--out", "/nonexistent/dir/x"}).code == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"generate"}).code == 2);
    CHECK(run({"generate", "--n", "0"}).code == 2);
    CHECK(run({"verify", "--lemma", "nope"}).code == 2);
    CHECK(run({"cogrowth", "--n-max", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("data errors") {
    auto const dir  = std::filesystem::temp_directory_path();
    auto const spec = dir / "cogrowth_cli_bad_seed.json";
    std::ofstream(spec) << R"({"variant": "morphic", "images": {"a": "ba", "b": "a"}, "seed": "a"})";
    auto const r = run({"cogrowth", "--spec", spec.string(), "--n-max", "5"});
    CHECK(r.code == 3);
    CHECK(r.err.find("NonProlongable") != std::string::npos);
    std::filesystem::remove(spec);

    auto const short_prefix = dir / "cogrowth_cli_short.json";
    std::ofstream(short_prefix) << R"({"variant": "explicit", "word": "abaab"})";
    CHECK(run({"rauzy", "--spec", short_prefix.string(), "--k", "1"}).code == 0);
    CHECK(run({"factors", "--spec", short_prefix.string(), "--k-max", "9"}).code == 0);
    std::filesystem::remove(short_prefix);
  }

  TEST_CASE("cogrowth CSV") {
    auto const fib = run({"cogrowth", "--spec", "fibonacci", "--n-max", "100"});
    REQUIRE(fib.code == 0);
    CHECK(lines(fib.out)[0].starts_with("# config: {"));
    auto const rows = csv_rows(fib.out);
    REQUIRE(rows.size() == 99);
    CHECK(rows[1][0] == "3");
    CHECK(rows[1][1] == "2");
    double prev = 0;
    for (auto const& row : rows) {
      double const m = std::stod(row[4]);
      CHECK(m >= prev);
      prev = m;
    }

    auto const ab = run({"cogrowth", "--spec", "periodic:ab", "--n-max", "50"});
    for (auto const& row : csv_rows(ab.out)) {
      CHECK(row[1] == "2");
    }
  }

  TEST_CASE("rauzy DOT") {
    auto const r1 = run({"rauzy", "--spec", "fibonacci", "--k", "1"});
    REQUIRE(r1.code == 0);
    auto count = [](std::string const& s, std::string const& what) {
      std::size_t n = 0;
      for (auto const& line : lines(s)) {
        if (line.find(what) != std::string::npos) {
          ++n;
        }
      }
      return n;
    };
    CHECK(count(r1.out, "->") == 3);
    CHECK(count(r1.out, "[label=") == 5);

    auto const r0 = run({"rauzy", "--spec", "fibonacci", "--k", "0"});
    CHECK(count(r0.out, "v0 -> v0") == 2);
    CHECK(count(r0.out, "[label=") == 3);

    CHECK(run({"rauzy", "--spec", "fibonacci", "--k", "1"}).out == r1.out);
    auto const both = run({"rauzy", "--k", "1", "--k", "2", "--line"});
    CHECK(count(both.out, "digraph") == 4);
  }

  TEST_CASE("factors and obstructions") {
    auto const f = run({"factors", "--spec", "fibonacci", "--k-max", "2"});
    CHECK(f.out.ends_with("# k=1 count=2\na\nb\n# k=2 count=3\naa\nab\nba\n"));
    auto const o = run({"obstructions", "--spec", "fibonacci", "--n-max", "3"});
    CHECK(o.out.ends_with("# k=2 count=1\nbb\n# k=3 count=1\naaa\n"));
  }

  TEST_CASE("verify") {
    auto const evol = run({"verify", "--lemma", "evol", "--seed", "42", "--count", "300"});
    CHECK(evol.code == 0);
    auto const j = nlohmann::json::parse(evol.out);
    CHECK(j["ok"] == true);
    CHECK(j["config"]["seed"] == 42);
    CHECK(j["reports"][0]["passes"] == 300);
    CHECK(j["reports"][0]["corpus"]["max_vertices"] == 12);
    CHECK(j["reports"][0]["violations"].empty());

    auto const th = run({"verify", "--lemma", "theorem", "--spec", "fibonacci", "--n-max", "1000"});
    CHECK(th.code == 0);
    auto const t = nlohmann::json::parse(th.out)["reports"][0];
    CHECK(t["details"]["max_ratio"].get<double>() >= 1.0);

    auto const ce = run({"verify", "--lemma", "corollary-er", "--spec", "fibonacci", "--n-max", "20"});
    CHECK(ce.code == 0);
    auto const rows = nlohmann::json::parse(ce.out)["reports"][0]["details"]["rows"];
    CHECK(rows.size() == 20);
    CHECK(rows[1]["er"] == 2);
    CHECK(rows[1]["cogrowth"] == 1);
  }

  TEST_CASE("verify budget") {
    auto const r = run({"verify", "--lemma", "main", "--budget", "5"});
    CHECK(r.code == 4);
    ::setenv("COGROWTH_BUDGET", "5", 1);
    CHECK(run({"verify", "--lemma", "main"}).code == 4);
    CHECK(run({"verify", "--lemma", "main", "--count", "3", "--budget", "1000000"}).code == 0);
    ::setenv("COGROWTH_BUDGET", "lots", 1);
    CHECK(run({"verify", "--lemma", "main", "--count", "1"}).code == 2);
    ::unsetenv("COGROWTH_BUDGET");
  }

  TEST_CASE("verify reports identical bytes on repeat") {
    auto const a = run({"verify", "--lemma", "del-edge", "--count", "40"});
    auto const b = run({"verify", "--lemma", "del-edge", "--count", "40", "--serial"});
    CHECK(a.code == 0);
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    CHECK(ja["reports"] == jb["reports"]);
    CHECK(run({"verify", "--lemma", "del-edge", "--count", "40"}).out == a.out);
  }
}
