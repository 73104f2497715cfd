// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cogrowth/obstructions.hpp"
#include "cogrowth/rauzy.hpp"
#include "cogrowth/report.hpp"
#include "cogrowth/spec_io.hpp"
#include "cogrowth/verify.hpp"

using namespace cogrowth;

namespace {
  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  int failures = 0;

  void criterion(int id, std::string const& title,
                 std::function<Outcome()> const& body) {
    auto const start = Clock::now();
    Outcome    o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::chrono::duration<double> secs = Clock::now() - start;
    if (!o.pass) {
      ++failures;
    }
    std::printf("%s [%d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id,
                title.c_str(), o.detail.c_str(), secs.count());
    std::fflush(stdout);
  }

  double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  }

  std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string report_line(LemmaReport const& r) {
    return r.lemma + " " + std::to_string(r.passes) + "/"
           + std::to_string(r.corpus_size) + ", "
           + std::to_string(r.violations.size()) + " violations";
  }
}  // namespace

int main() {
  criterion(1, "oracle equivalence, n_max <= 14", [] {
    auto const  start = Clock::now();
    std::size_t sets  = 0;
    for (auto const& name :
         {"fibonacci", "thue-morse", "period-doubling", "periodic:ab"}) {
      auto const spec = builtin_spec(name);
      auto const fl   = extract_factors(spec, 14);
      for (std::size_t n = 1; n <= 14; ++n) {
        if (minimal_forbidden(fl, n) != brute_force_minimal_forbidden(spec, n)) {
          return Outcome{false, std::string(name) + " differs at n_max = "
                                    + std::to_string(n)};
        }
        ++sets;
      }
    }
    double const t = seconds_since(start);
    return Outcome{t < 60.0, std::to_string(sets) + " sets equal, " + fmt(t)
                                 + "s (limit 60s)"};
  });

  criterion(2, "Fibonacci facts", [] {
    auto const fib = builtin::fibonacci();
    auto const fl  = extract_factors(fib, 3);
    auto const obs = minimal_forbidden(fl, 3);
    auto const bf  = brute_force_minimal_forbidden(fib, 3);
    std::vector<Word> const want{"bb", "aaa"};
    bool const small = cogrowth::cogrowth(obs, 2) == 1 && cogrowth::cogrowth(obs, 3) == 2
                       && obs.words == want && bf.words == want;
    auto const th = check_theorem(fib, 1000);
    double lo = 1e9, hi = 0;
    for (std::size_t i = 0; i < th.profile.rows.size(); ++i) {
      if (th.profile.rows[i].n >= 50) {
        lo = std::min(lo, th.log_phi_trend[i]);
        hi = std::max(hi, th.log_phi_trend[i]);
      }
    }
    bool const ok = small && th.asserted && th.profile.max_ratio() >= 1.0
                    && lo >= 0.5 && hi <= 2.0;
    return Outcome{ok, "O(2) = " + std::to_string(cogrowth::cogrowth(obs, 2))
                           + ", O(3) = " + std::to_string(cogrowth::cogrowth(obs, 3))
                           + ", max O/log3 n = " + fmt(th.profile.max_ratio())
                           + ", O/log_phi n in [" + fmt(lo) + ", " + fmt(hi)
                           + "] on [50, 1000]"};
  });

  criterion(3, "evolution identity, k = 0..12", [] {
    std::size_t mismatches = 0, deleted = 0;
    for (auto const& spec : {builtin::fibonacci(), builtin::thue_morse()}) {
      auto const fl  = extract_factors(spec, 14);
      auto const obs = minimal_forbidden(fl, 14);
      for (std::size_t k = 0; k <= 12; ++k) {
        auto const e = check_evolution(fl, obs, k);
        mismatches += e.mismatches.size() + (e.isomorphic ? 0 : 1);
        deleted += e.deleted.size();
      }
    }
    return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches, "
                                        + std::to_string(deleted)
                                        + " obstruction edges deleted"};
  });

  criterion(4, "er(R_{n-1}) <= 2^O(n), n = 1..20", [] {
    std::size_t bad = 0;
    bool        tight = false;
    for (auto const& spec : {builtin::fibonacci(), builtin::thue_morse()}) {
      auto const r = check_corollary_er(spec, 1, 20);
      bad += r.violations.size();
      for (auto const& row : r.rows) {
        bad += row.pass ? 0 : 1;
      }
      if (spec.name() == "fibonacci") {
        auto const& n2 = r.rows[1];
        tight = n2.n == 2 && n2.er == ErValue::finite(2) && n2.cogrowth == 1
                && n2.bound == 2.0;
      }
    }
    return Outcome{bad == 0 && tight,
                   std::to_string(bad) + " failures, fibonacci n = 2 "
                       + (tight ? "tight (2 = 2^1)" : "NOT tight")};
  });

  criterion(5, "er(f(H)) = er(H) on 300 random graphs", [] {
    auto const start = Clock::now();
    auto const spec  = corpus_defaults::evol();
    auto const r     = run_lemma_evol(spec);
    double const t   = seconds_since(start);
    bool shape = spec.max_vertices <= 12;
    for (auto const& item : make_corpus(spec)) {
      shape = shape && item.graph.max_out_degree() <= 2
              && strongly_connected(item.graph) && !is_cycle(item.graph);
    }
    return Outcome{r.ok() && r.corpus_size == 300 && shape && t < 60.0,
                   report_line(r) + ", " + fmt(t) + "s (limit 60s)"};
  });

  criterion(6, "edge deletion on every fork out-edge", [] {
    auto const a = run_lemma_del_edge(corpus_defaults::evol());
    auto const b = run_lemma_del_edge(corpus_defaults::del_edge());
    return Outcome{a.ok() && b.ok() && a.corpus_size == 300 && b.corpus_size == 300,
                   "seed 42: " + report_line(a) + " (" + std::to_string(a.checks)
                       + " edges); seed 7: " + report_line(b) + " ("
                       + std::to_string(b.checks) + " edges)"};
  });

  criterion(7, "main lemma and corollary on f^{3L}", [] {
    auto const start = Clock::now();
    auto const spec  = corpus_defaults::main_lemma();
    bool       shape = true;
    for (auto const& item : make_corpus(spec)) {
      shape = shape && item.graph.num_vertices() <= 6
              && entropy_regulator(item.graph).value() <= 2;
    }
    auto const m  = run_main_lemma(spec);
    auto const c0 = run_corollary_main(corpus_defaults::corollary_main(), 0);
    auto const c1 = run_corollary_main(corpus_defaults::corollary_main(), 1);
    double const t = seconds_since(start);
    return Outcome{shape && m.ok() && m.corpus_size == 50 && c0.ok() && c1.ok()
                       && t < 600.0,
                   report_line(m) + " (" + std::to_string(m.checks)
                       + " edges u); k = 3L: " + report_line(c0)
                       + "; k = 3L+1: " + report_line(c1) + ", " + fmt(t)
                       + "s (limit 600s)"};
  });

  criterion(8, "Proposition 1, k = 1..15", [] {
    auto const fib = check_proposition1(builtin::fibonacci(), 1, 15);
    auto const tm  = check_proposition1(builtin::thue_morse(), 1, 15);
    auto const ab  = check_proposition1(builtin_spec("periodic:ab"), 1, 15);
    auto good = [](Proposition1Report const& r) {
      return r.violations.empty() && r.rows.size() == 15
             && std::all_of(r.rows.begin(), r.rows.end(), [](auto const& row) {
                  return row.strongly_connected && !row.cycle;
                });
    };
    bool const ok = good(fib) && good(tm) && ab.all_cycles()
                    && ab.hypothesis == Recurrence::periodic;
    return Outcome{ok, std::string("fibonacci ") + (good(fib) ? "ok" : "FAILED")
                           + ", thue-morse " + (good(tm) ? "ok" : "FAILED")
                           + ", periodic:ab "
                           + (ab.all_cycles() ? "a cycle at every k" : "NOT all cycles")};
  });

  criterion(9, "good-path prolongation", [] {
    auto const r = run_good_path(corpus_defaults::main_lemma());
    return Outcome{r.ok() && r.checks > 0,
                   report_line(r) + ", " + std::to_string(r.checks)
                       + " good paths extended"};
  });

  criterion(10, "CLI determinism", [] {
    auto const dir = std::filesystem::temp_directory_path() / "cogrowth_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> const invocations{
        "generate --spec thue-morse --n 4096",
        "factors --spec period-doubling --k-max 20",
        "obstructions --spec fibonacci --n-max 200",
        "cogrowth --spec fibonacci --n-max 1000",
        "rauzy --spec thue-morse --k 3 --k 4 --line",
        "verify --lemma evol --seed 42 --count 300",
        "verify --lemma main --count 10",
        "verify --lemma good-path --count 10",
        "verify --lemma prop1",
        "verify --lemma evolution --spec fibonacci",
    };
    std::size_t same = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < invocations.size(); ++i) {
      std::string outs[2];
      for (int rep = 0; rep < 2; ++rep) {
        auto const file = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
        auto const cmd  = std::string(COGROWTH_CLI) + " " + invocations[i]
                         + " --out " + file.string() + " 2>/dev/null";
        if (std::system(cmd.c_str()) != 0) {
          return Outcome{false, "\"" + invocations[i] + "\" failed"};
        }
        outs[rep] = slurp(file);
      }
      if (outs[0] == outs[1] && !outs[0].empty()) {
        ++same;
      } else if (first_bad.empty()) {
        first_bad = invocations[i];
      }
    }
    std::filesystem::remove_all(dir);
    return Outcome{same == invocations.size(),
                   std::to_string(same) + "/" + std::to_string(invocations.size())
                       + " invocations byte-identical"
                       + (first_bad.empty() ? "" : ", differs: " + first_bad)};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
