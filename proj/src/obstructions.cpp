#include "cogrowth/obstructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "cogrowth/error.hpp"
#include "cogrowth/suffix_index.hpp"

namespace cogrowth {

  std::size_t ObstructionSet::count_of_length(std::size_t n) const {
    return static_cast<std::size_t>(
        std::count_if(words.begin(), words.end(), [n](Word const& w) {
          return w.size() == n;
        }));
  }

  namespace {
    using Mask = std::uint64_t;

    // Right-extension masks of the length-k classes: bit r is set iff the
    // class followed by the r-th letter occurs in the text.
    std::vector<Mask> right_extensions(detail::SuffixIndex const&        idx,
                                       std::string_view                  text,
                                       Alphabet const&                   a,
                                       std::size_t                       k,
                                       std::vector<std::uint32_t> const& cls,
                                       std::uint32_t                     count) {
      std::vector<Mask> masks(count, 0);
      auto const        n = text.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != detail::no_class && idx.sa[i] + k < n) {
          masks[cls[i]] |= Mask(1) << a.rank(text[idx.sa[i] + k]);
        }
      }
      return masks;
    }

    // Obstructions of length m >= 2. A word x w y is an obstruction iff x w
    // is a factor whose right extensions miss y while w y is a factor.
    std::vector<Word> obstructions_of_length(detail::SuffixIndex const& idx,
                                             std::string_view           text,
                                             Alphabet const&            a,
                                             std::size_t                m,
                                             Mask letters_present) {
      auto const                 n = text.size();
      std::vector<std::uint32_t> cls_long, cls_short;
      auto const count_long = detail::factor_classes(idx, n, m - 1, cls_long);
      auto const masks_long
          = right_extensions(idx, text, a, m - 1, cls_long, count_long);
      std::vector<Mask> masks_short;
      if (m > 2) {
        auto const count_short
            = detail::factor_classes(idx, n, m - 2, cls_short);
        masks_short
            = right_extensions(idx, text, a, m - 2, cls_short, count_short);
      }

      std::vector<Word> out;
      std::uint32_t     last = detail::no_class;
      for (std::size_t i = 0; i < n; ++i) {
        auto c = cls_long[i];
        if (c == detail::no_class || c == last) {
          continue;
        }
        last            = c;
        auto const off  = idx.sa[i];
        Mask       tail = m > 2 ? masks_short[cls_short[idx.rank[off + 1]]]
                                : letters_present;
        Mask       candidates = tail & ~masks_long[c];
        for (std::size_t r = 0; r < a.size(); ++r) {
          if (candidates & (Mask(1) << r)) {
            Word u(text.substr(off, m - 1));
            u += a.letters()[r];
            out.push_back(std::move(u));
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  ObstructionSet minimal_forbidden(FactorLanguage const& fl,
                                   std::size_t           n_max,
                                   Execution             exec) {
    if (fl.k_max() < n_max) {
      throw Error(ErrorCode::insufficient_strata,
                  "obstructions up to length " + std::to_string(n_max)
                      + " need strata through k = " + std::to_string(n_max)
                      + ", have " + std::to_string(fl.k_max()));
    }
    auto const& a = fl.alphabet();
    if (a.size() > 64) {
      throw Error(ErrorCode::invalid_argument, "alphabet larger than 64");
    }
    ObstructionSet obs;
    obs.n_max     = n_max;
    obs.source    = fl.source();
    obs.certified = fl.certified();
    if (n_max == 0) {
      return obs;
    }

    Mask present = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (fl.contains(std::string(1, a.letters()[r]))) {
        present |= Mask(1) << r;
      } else {
        obs.words.emplace_back(1, a.letters()[r]);
      }
    }

    auto const                     text = fl.text();
    detail::SuffixIndex            idx(text);
    std::vector<std::vector<Word>> by_length(n_max + 1);
    long long const                last = static_cast<long long>(n_max);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 2)
      for (long long m = 2; m <= last; ++m) {
        by_length[m] = obstructions_of_length(
            idx, text, a, static_cast<std::size_t>(m), present);
      }
    } else {
      for (long long m = 2; m <= last; ++m) {
        by_length[m] = obstructions_of_length(
            idx, text, a, static_cast<std::size_t>(m), present);
      }
    }
    for (auto& ws : by_length) {
      std::move(ws.begin(), ws.end(), std::back_inserter(obs.words));
    }
    return obs;
  }

  ObstructionSet brute_force_minimal_forbidden(SequenceSpec const& spec,
                                               std::size_t         n_max) {
    if (n_max > 16) {
      throw Error(ErrorCode::too_large,
                  "brute force is limited to n_max <= 16, got "
                      + std::to_string(n_max));
    }
    if (spec.alphabet().size() > 2) {
      throw Error(ErrorCode::invalid_argument,
                  "brute force needs a binary alphabet");
    }
    ObstructionSet obs;
    obs.n_max  = n_max;
    obs.source = spec.name();
    if (n_max == 0) {
      return obs;
    }
    auto fl       = extract_factors(spec, n_max);
    obs.certified = fl.certified();

    std::set<std::string, std::less<>> factors;
    auto const                         text = fl.text();
    for (std::size_t i = 0; i <= text.size(); ++i) {
      for (std::size_t len = 0; len <= n_max && i + len <= text.size(); ++len) {
        factors.emplace(text.substr(i, len));
      }
    }

    auto const& letters = spec.alphabet().letters();
    for (std::size_t len = 1; len <= n_max; ++len) {
      for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << len); ++bits) {
        Word u(len, letters[0]);
        for (std::size_t i = 0; i < len; ++i) {
          if (bits & (std::uint32_t(1) << (len - 1 - i))) {
            u[i] = letters[1];
          }
        }
        if (factors.contains(u)) {
          continue;
        }
        bool minimal = true;
        for (std::size_t sub = 0; sub < len && minimal; ++sub) {
          for (std::size_t i = 0; i + sub <= len && minimal; ++i) {
            minimal = factors.contains(std::string_view(u).substr(i, sub));
          }
        }
        if (minimal) {
          obs.words.push_back(std::move(u));
        }
      }
    }
    return obs;
  }

  std::size_t cogrowth(ObstructionSet const& obs, std::size_t n) {
    if (n > obs.n_max) {
      throw Error(ErrorCode::out_of_range,
                  "n = " + std::to_string(n) + " exceeds n_max = "
                      + std::to_string(obs.n_max));
    }
    return static_cast<std::size_t>(
        std::count_if(obs.words.begin(), obs.words.end(), [n](Word const& w) {
          return w.size() <= n;
        }));
  }

  std::vector<std::string> check_invariants(ObstructionSet const& obs,
                                            FactorLanguage const& fl) {
    std::vector<std::string> problems;
    auto const               by_len_lex = [](Word const& x, Word const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    };
    if (!std::is_sorted(obs.words.begin(), obs.words.end(), by_len_lex)) {
      problems.emplace_back("obstructions not sorted by (length, lex)");
    }
    for (auto const& u : obs.words) {
      if (u.empty() || u.size() > obs.n_max) {
        problems.push_back("length out of range: \"" + u + "\"");
        continue;
      }
      if (fl.contains(u)) {
        problems.push_back("\"" + u + "\" is a factor");
      }
      if (u.size() >= 2
          && (!fl.contains(std::string_view(u).substr(1))
              || !fl.contains(std::string_view(u).substr(0, u.size() - 1)))) {
        problems.push_back("\"" + u + "\" is not minimal");
      }
      for (auto const& v : obs.words) {
        if (v.size() < u.size() && u.find(v) != std::string::npos) {
          problems.push_back("\"" + v + "\" is a proper subword of \"" + u
                             + "\"");
        }
      }
    }
    return problems;
  }

  double log3(double x) noexcept {
    return std::log(x) / std::log(3.0);
  }

  CogrowthProfile cogrowth_profile(ObstructionSet const& obs) {
    CogrowthProfile profile;
    profile.source    = obs.source;
    profile.n_max     = obs.n_max;
    profile.certified = obs.certified;
    double      best  = 0.0;
    std::size_t count = 0;
    auto        it    = obs.words.begin();
    for (std::size_t n = 1; n <= obs.n_max; ++n) {
      while (it != obs.words.end() && it->size() <= n) {
        ++count;
        ++it;
      }
      if (n < 2) {
        continue;
      }
      auto const l     = log3(static_cast<double>(n));
      auto const ratio = static_cast<double>(count) / l;
      best             = std::max(best, ratio);
      profile.rows.push_back({n, count, l, ratio, best});
    }
    return profile;
  }

  CogrowthProfile cogrowth_profile(SequenceSpec const&   spec,
                                   std::size_t           n_max,
                                   ExtractOptions const& opts) {
    if (n_max < 2) {
      throw Error(ErrorCode::invalid_argument, "profile needs n_max >= 2");
    }
    auto fl = extract_factors(spec, n_max, opts);
    return cogrowth_profile(minimal_forbidden(fl, n_max, opts.exec));
  }

  void write_profile_csv(std::ostream& out, CogrowthProfile const& profile) {
    std::ostringstream buf;
    buf << std::fixed << std::setprecision(6);
    buf << "n,cogrowth,log3n,ratio,running_max\n";
    for (auto const& r : profile.rows) {
      buf << r.n << ',' << r.cogrowth << ',' << r.log3n << ',' << r.ratio
          << ',' << r.running_max << '\n';
    }
    out << buf.str();
  }

  void write_obstructions(std::ostream& out, ObstructionSet const& obs) {
    for (std::size_t k = 1; k <= obs.n_max; ++k) {
      out << "# k=" << k << " count=" << obs.count_of_length(k) << '\n';
      for (auto const& u : obs.words) {
        if (u.size() == k) {
          out << u << '\n';
        }
      }
    }
  }

}  // namespace cogrowth
