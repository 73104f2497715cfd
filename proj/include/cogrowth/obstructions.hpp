#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cogrowth/execution.hpp"
#include "cogrowth/factors.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

  //! Minimal forbidden words (obstructions) of length <= n_max, sorted by
  //! length then lexicographically.
  struct ObstructionSet {
    std::vector<Word> words;
    std::size_t       n_max = 0;
    std::string       source;
    bool              certified = false;

    //! Number of obstructions of length exactly n.
    [[nodiscard]] std::size_t count_of_length(std::size_t n) const;
    bool operator==(ObstructionSet const& that) const {
      return words == that.words && n_max == that.n_max;
    }
  };

  //! Obstructions u with 1 <= |u| <= n_max of \p fl: absent letters, plus
  //! every x w y (x, y letters) with x w and w y factors and x w y not.
  //! Throws InsufficientStrata if fl.k_max() < n_max.
  ObstructionSet minimal_forbidden(FactorLanguage const& fl,
                                   std::size_t           n_max,
                                   Execution exec = Execution::parallel);

  //! Exponential oracle: tests every word of length <= n_max over a binary
  //! alphabet against the literal definition (the word is not a factor, every
  //! proper subword is). Factor-hood is decided by a naively built substring
  //! set of the certified prefix. Throws TooLarge if n_max > 16.
  ObstructionSet brute_force_minimal_forbidden(SequenceSpec const& spec,
                                               std::size_t         n_max);

  //! O_W(n): obstructions of length <= n. Throws OutOfRange if n > n_max.
  std::size_t cogrowth(ObstructionSet const& obs, std::size_t n);

  //! Violated invariants (factor, minimality, antichain, ordering).
  std::vector<std::string> check_invariants(ObstructionSet const& obs,
                                            FactorLanguage const& fl);

  struct ProfileRow {
    std::size_t n;
    std::size_t cogrowth;
    double      log3n;
    double      ratio;
    double      running_max;
  };

  struct CogrowthProfile {
    std::string             source;
    std::size_t             n_max = 0;
    bool                    certified = false;
    std::vector<ProfileRow> rows;  // n = 2 .. n_max

    [[nodiscard]] double max_ratio() const {
      return rows.empty() ? 0.0 : rows.back().running_max;
    }
  };

  double log3(double x) noexcept;

  CogrowthProfile cogrowth_profile(ObstructionSet const& obs);
  //! Throws InvalidArgument if n_max < 2 and propagates extraction errors.
  CogrowthProfile cogrowth_profile(SequenceSpec const&   spec,
                                   std::size_t           n_max,
                                   ExtractOptions const& opts = {});

  //! CSV with header "n,cogrowth,log3n,ratio,running_max", six decimals.
  void write_profile_csv(std::ostream& out, CogrowthProfile const& profile);

  //! Same layout as write_strata, for lengths 1 .. n_max.
  void write_obstructions(std::ostream& out, ObstructionSet const& obs);

}  // namespace cogrowth
