#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cogrowth/error.hpp"
#include "cogrowth/obstructions.hpp"
#include "cogrowth/spec_io.hpp"
#include "oracles.hpp"

using namespace cogrowth;

namespace {
  using Words = std::vector<std::string>;

  // Literal definition over {a, b}, factor-hood from a long prefix.
  Words naive_obstructions(SequenceSpec const& spec, std::size_t n_max) {
    auto const text = expand_prefix(spec, std::size_t(1) << 13);
    std::vector<std::set<std::string>> f(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
      f[k] = oracle::factors(text, k);
    }
    Words out;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t bits = 0; bits < (std::size_t(1) << n); ++bits) {
        std::string w;
        for (std::size_t i = 0; i < n; ++i) {
          w += (bits >> (n - 1 - i)) & 1 ? 'b' : 'a';
        }
        if (f[n].contains(w)) {
          continue;
        }
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i) {
          for (std::size_t len = 0; i + len <= n && minimal; ++len) {
            if (len < n && !f[len].contains(w.substr(i, len))) {
              minimal = false;
            }
          }
        }
        if (minimal) {
          out.push_back(w);
        }
      }
    }
    return out;
  }

  ObstructionSet obstructions_of(SequenceSpec const& spec, std::size_t n_max,
                                 Execution exec = Execution::parallel) {
    return minimal_forbidden(extract_factors(spec, n_max), n_max, exec);
  }
}  // namespace

TEST_SUITE("obstructions") {
  TEST_CASE("small obstruction sets") {
    CHECK(obstructions_of(builtin::fibonacci(), 3).words == Words{"bb", "aaa"});
    CHECK(obstructions_of(builtin_spec("periodic:ab"), 6).words
          == Words{"aa", "bb"});
    CHECK(obstructions_of(builtin_spec("periodic:a"), 2).words == Words{"b"});
    CHECK(brute_force_minimal_forbidden(builtin::fibonacci(), 3).words
          == Words{"bb", "aaa"});
    CHECK(brute_force_minimal_forbidden(builtin_spec("periodic:ab"), 2).words
          == Words{"aa", "bb"});
    auto const tm = brute_force_minimal_forbidden(builtin::thue_morse(), 3);
    CHECK(std::find(tm.words.begin(), tm.words.end(), "aaa") != tm.words.end());
    CHECK(std::find(tm.words.begin(), tm.words.end(), "bbb") != tm.words.end());
  }

  TEST_CASE("Fibonacci obstruction lengths are Fibonacci numbers") {
    auto const obs = obstructions_of(builtin::fibonacci(), 100);
    std::vector<std::size_t> got;
    for (auto const& w : obs.words) {
      got.push_back(w.size());
    }
    CHECK(got == std::vector<std::size_t>{2, 3, 5, 8, 13, 21, 34, 55, 89});
  }

  TEST_CASE("agrees with the test oracle and the library brute force") {
    for (auto const& name : {"fibonacci", "thue-morse", "period-doubling",
                             "periodic:ab", "periodic:aab", "periodic:abbab"}) {
      CAPTURE(name);
      auto const spec = builtin_spec(name);
      auto const fast = obstructions_of(spec, 10);
      CHECK(fast.words == naive_obstructions(spec, 10));
      CHECK(fast == brute_force_minimal_forbidden(spec, 10));
      CHECK(check_invariants(fast, extract_factors(spec, 10)).empty());
    }
  }

  TEST_CASE("serial and parallel kernels agree") {
    for (auto const& name : {"fibonacci", "thue-morse", "period-doubling"}) {
      auto const fl = extract_factors(builtin_spec(name), 200);
      CHECK(minimal_forbidden(fl, 200, Execution::serial)
            == minimal_forbidden(fl, 200, Execution::parallel));
    }
  }

  TEST_CASE("errors") {
    auto const fl = extract_factors(builtin::fibonacci(), 5);
    CHECK_THROWS_AS(minimal_forbidden(fl, 6), Error);
    CHECK_THROWS_AS(brute_force_minimal_forbidden(builtin::fibonacci(), 17),
                    Error);
    auto const obs = minimal_forbidden(fl, 5);
    CHECK_THROWS_AS(cogrowth::cogrowth(obs, 6), Error);
    CHECK_THROWS_AS(cogrowth_profile(builtin::fibonacci(), 1), Error);
  }

  TEST_CASE("cogrowth counts") {
    auto const fib = obstructions_of(builtin::fibonacci(), 50);
    CHECK(cogrowth::cogrowth(fib, 1) == 0);
    CHECK(cogrowth::cogrowth(fib, 2) == 1);
    CHECK(cogrowth::cogrowth(fib, 3) == 2);
    for (std::size_t n = 2; n <= 50; ++n) {
      CHECK(cogrowth::cogrowth(fib, n) >= cogrowth::cogrowth(fib, n - 1));
    }
    auto const ab = obstructions_of(builtin_spec("periodic:ab"), 40);
    for (std::size_t n = 2; n <= 40; ++n) {
      CHECK(cogrowth::cogrowth(ab, n) == 2);
    }
    CHECK(cogrowth::cogrowth(obstructions_of(builtin::thue_morse(), 5), 1) == 0);
  }

  TEST_CASE("profile") {
    auto const p = cogrowth_profile(builtin::fibonacci(), 1000);
    REQUIRE(p.rows.size() == 999);
    CHECK(p.rows.front().n == 2);
    auto const& r3 = p.rows[1];
    CHECK(r3.n == 3);
    CHECK(r3.cogrowth == 2);
    CHECK(r3.log3n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r3.ratio == doctest::Approx(2.0).epsilon(1e-12));
    double running = 0;
    for (auto const& row : p.rows) {
      running = std::max(running, row.ratio);
      CHECK(row.running_max == running);
    }
    CHECK(p.max_ratio() >= 1.0);
    CHECK(p.rows.back().cogrowth == 14);

    // A word with no obstruction up to n has ratio 0.
    auto const tm = cogrowth_profile(builtin::thue_morse(), 2);
    CHECK(tm.rows.front().cogrowth == 0);
    CHECK(tm.rows.front().ratio == 0.0);
  }

  TEST_CASE("CSV and text output") {
    std::ostringstream csv;
    write_profile_csv(csv, cogrowth_profile(builtin::fibonacci(), 3));
    CHECK(csv.str()
          == "n,cogrowth,log3n,ratio,running_max\n"
             "2,1,0.630930,1.584963,1.584963\n"
             "3,2,1.000000,2.000000,2.000000\n");
    std::ostringstream txt;
    write_obstructions(txt, obstructions_of(builtin::fibonacci(), 3));
    CHECK(txt.str() == "# k=1 count=0\n# k=2 count=1\nbb\n# k=3 count=1\naaa\n");
  }
}
