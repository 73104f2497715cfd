#include "cogrowth/factors.hpp"

#include <algorithm>
#include <ostream>

#include <omp.h>

#include "cogrowth/error.hpp"
#include "cogrowth/suffix_index.hpp"

namespace cogrowth {

  std::size_t available_threads() noexcept {
    return static_cast<std::size_t>(omp_get_max_threads());
  }

  namespace {
    using Strata = std::vector<std::vector<std::uint32_t>>;

    Strata strata_serial(detail::SuffixIndex const& idx,
                         std::size_t                n,
                         std::size_t                k_max) {
      Strata out(k_max + 1);
      for (std::size_t k = 0; k <= k_max; ++k) {
        out[k] = detail::distinct_factor_offsets(idx, n, k);
      }
      return out;
    }

    // Each stratum is an independent O(n) sweep of the suffix array.
    Strata strata_parallel(detail::SuffixIndex const& idx,
                           std::size_t                n,
                           std::size_t                k_max) {
      Strata    out(k_max + 1);
      long long count = static_cast<long long>(k_max) + 1;
#pragma omp parallel for schedule(dynamic, 4)
      for (long long k = 0; k < count; ++k) {
        out[k] = detail::distinct_factor_offsets(
            idx, n, static_cast<std::size_t>(k));
      }
      return out;
    }
  }  // namespace

  FactorLanguage::FactorLanguage(Alphabet    alphabet,
                                 std::string text,
                                 std::size_t k_max,
                                 std::string source,
                                 bool        certified,
                                 Execution   exec)
      : _alphabet(std::move(alphabet)),
        _text(std::make_shared<std::string const>(std::move(text))),
        _source(std::move(source)),
        _certified(certified) {
    if (!_alphabet.spells(*_text)) {
      throw Error(ErrorCode::invalid_argument,
                  "text contains letters outside the alphabet");
    }
    detail::SuffixIndex idx(*_text);
    _strata = exec == Execution::parallel
                  ? strata_parallel(idx, _text->size(), k_max)
                  : strata_serial(idx, _text->size(), k_max);
  }

  std::size_t FactorLanguage::complexity(std::size_t k) const {
    if (k > k_max()) {
      throw Error(ErrorCode::out_of_range,
                  "k = " + std::to_string(k) + " exceeds k_max = "
                      + std::to_string(k_max()));
    }
    return _strata[k].size();
  }

  std::string_view FactorLanguage::factor(std::size_t k, std::size_t i) const {
    if (k > k_max() || i >= _strata[k].size()) {
      throw Error(ErrorCode::out_of_range, "factor index out of range");
    }
    return text().substr(_strata[k][i], k);
  }

  std::vector<std::string_view> FactorLanguage::stratum(std::size_t k) const {
    auto const                    n = complexity(k);
    std::vector<std::string_view> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(text().substr(_strata[k][i], k));
    }
    return out;
  }

  std::size_t FactorLanguage::index_of(std::string_view u) const {
    auto const  k  = u.size();
    auto const& st = _strata.at(k);
    auto        t  = text();
    auto        it = std::lower_bound(
        st.begin(), st.end(), u, [&](std::uint32_t off, std::string_view x) {
          return t.substr(off, k) < x;
        });
    if (it != st.end() && t.substr(*it, k) == u) {
      return static_cast<std::size_t>(it - st.begin());
    }
    return st.size();
  }

  bool FactorLanguage::contains(std::string_view u) const {
    if (u.size() > k_max()) {
      throw Error(ErrorCode::out_of_range,
                  "|u| = " + std::to_string(u.size()) + " exceeds k_max = "
                      + std::to_string(k_max()));
    }
    return index_of(u) < _strata[u.size()].size();
  }

  bool FactorLanguage::same_strata(FactorLanguage const& other) const {
    auto const k = std::min(k_max(), other.k_max());
    for (std::size_t j = 0; j <= k; ++j) {
      if (_strata[j].size() != other._strata[j].size()) {
        return false;
      }
      for (std::size_t i = 0; i < _strata[j].size(); ++i) {
        if (factor(j, i) != other.factor(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  FactorLanguage extract_factors_impl(SequenceSpec const& spec,
                                      std::size_t         k_max,
                                      std::size_t         cap,
                                      Execution           exec) {
    if (spec.is_explicit()) {
      auto const& word = std::get<ExplicitPrefix>(spec.variant()).word;
      return FactorLanguage(
          spec.alphabet(), word, k_max, spec.name(), false, exec);
    }
    std::size_t n = std::max<std::size_t>(64, 8 * k_max);
    if (2 * n > cap) {
      n = std::max<std::size_t>(cap / 2, 1);
    }
    auto           text  = expand_prefix(spec, n);
    FactorLanguage small = FactorLanguage(
        spec.alphabet(), text, k_max, spec.name(), false, exec);
    while (true) {
      auto           text2 = expand_prefix(spec, 2 * n);
      FactorLanguage large(
          spec.alphabet(), std::move(text2), k_max, spec.name(), false, exec);
      if (small.same_strata(large)) {
        small._certified = true;
        return small;
      }
      if (4 * n > cap) {
        large._saturation_failed = true;
        return large;
      }
      small = std::move(large);
      n *= 2;
    }
  }

  FactorLanguage extract_factors(SequenceSpec const&   spec,
                                 std::size_t           k_max,
                                 ExtractOptions const& opts) {
    if (k_max == 0) {
      throw Error(ErrorCode::invalid_argument, "k_max must be >= 1");
    }
    return extract_factors_impl(spec, k_max, opts.cap, opts.exec);
  }

  std::vector<std::string> check_invariants(FactorLanguage const& fl) {
    std::vector<std::string> problems;
    if (fl.complexity(0) != 1) {
      problems.push_back("F_0 is not {empty word}");
    }
    for (std::size_t k = 0; k <= fl.k_max(); ++k) {
      auto st = fl.stratum(k);
      for (std::size_t i = 1; i < st.size(); ++i) {
        if (!(st[i - 1] < st[i])) {
          problems.push_back("F_" + std::to_string(k)
                             + " is not strictly sorted at \""
                             + std::string(st[i]) + "\"");
        }
      }
      if (k == 0) {
        continue;
      }
      for (auto u : st) {
        if (!fl.contains(u.substr(0, k - 1))
            || !fl.contains(u.substr(1, k - 1))) {
          problems.push_back("factor-closedness fails at \"" + std::string(u)
                             + "\"");
        }
      }
    }
    if (fl.certified()) {
      for (std::size_t k = 0; k < fl.k_max(); ++k) {
        for (auto u : fl.stratum(k)) {
          bool extends = false;
          for (char c : fl.alphabet().letters()) {
            extends = extends || fl.contains(std::string(u) + c);
          }
          if (!extends) {
            problems.push_back("\"" + std::string(u)
                               + "\" has no right extension");
          }
        }
      }
    }
    return problems;
  }

  void write_strata(std::ostream& out, FactorLanguage const& fl) {
    for (std::size_t k = 1; k <= fl.k_max(); ++k) {
      out << "# k=" << k << " count=" << fl.complexity(k) << '\n';
      for (auto u : fl.stratum(k)) {
        out << u << '\n';
      }
    }
  }

}  // namespace cogrowth
