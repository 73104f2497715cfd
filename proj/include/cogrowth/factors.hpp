#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cogrowth/execution.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

  //! Stratified factor language F_0, ..., F_{k_max} of a sequence, read off a
  //! finite prefix. Each F_k is sorted lexicographically; factors are stored
  //! as offsets into the scanned prefix, so strata of long words stay small.
  class FactorLanguage {
   public:
    //! All distinct factors of \p text of length <= \p k_max.
    FactorLanguage(Alphabet    alphabet,
                   std::string text,
                   std::size_t k_max,
                   std::string source,
                   bool        certified,
                   Execution   exec = Execution::parallel);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t k_max() const noexcept {
      return _strata.size() - 1;
    }
    [[nodiscard]] std::string const& source() const noexcept {
      return _source;
    }
    //! True iff the strata were confirmed stable under doubling the prefix.
    [[nodiscard]] bool certified() const noexcept {
      return _certified;
    }
    [[nodiscard]] bool saturation_failed() const noexcept {
      return _saturation_failed;
    }
    [[nodiscard]] std::size_t prefix_len() const noexcept {
      return _text->size();
    }
    [[nodiscard]] std::string_view text() const noexcept {
      return *_text;
    }

    //! |F_k|; throws OutOfRange if k > k_max.
    [[nodiscard]] std::size_t complexity(std::size_t k) const;

    //! i-th factor of length k in lexicographic order.
    [[nodiscard]] std::string_view factor(std::size_t k, std::size_t i) const;

    //! F_k as views into text(), sorted.
    [[nodiscard]] std::vector<std::string_view> stratum(std::size_t k) const;

    //! Membership in F_{|u|}; throws OutOfRange if |u| > k_max.
    [[nodiscard]] bool contains(std::string_view u) const;

    //! Lexicographic index of \p u in F_{|u|}, or complexity(|u|) if absent.
    [[nodiscard]] std::size_t index_of(std::string_view u) const;

    //! Same strata (as sets of words) for every k up to the smaller k_max.
    [[nodiscard]] bool same_strata(FactorLanguage const& other) const;

   private:
    friend FactorLanguage extract_factors_impl(SequenceSpec const&,
                                               std::size_t,
                                               std::size_t,
                                               Execution);

    Alphabet                                 _alphabet;
    std::shared_ptr<std::string const>       _text;
    std::vector<std::vector<std::uint32_t>> _strata;
    std::string                              _source;
    bool                                     _certified;
    bool                                     _saturation_failed = false;
  };

  struct ExtractOptions {
    //! Saturation doubling stops once the prefix would exceed this length.
    std::size_t cap  = std::size_t(1) << 22;
    Execution   exec = Execution::parallel;
  };

  //! Factors of length <= k_max of the sequence described by \p spec.
  //!
  //! Morphic and periodic specs are scanned on a prefix of length N starting
  //! at max(64, 8 k_max) and doubled until the strata of the N- and
  //! 2N-prefixes agree (certified) or the cap is reached. In the latter case
  //! the uncertified language of the longest prefix is returned with
  //! saturation_failed() set. Explicit prefixes are scanned whole and never
  //! certified.
  FactorLanguage extract_factors(SequenceSpec const&   spec,
                                 std::size_t           k_max,
                                 ExtractOptions const& opts = {});

  //! Violated invariants (factor-closedness, right-extendability below
  //! k_max, F_0 = {empty}, sortedness, no duplicates); empty means valid.
  //! Right-extendability is only required of certified languages.
  std::vector<std::string> check_invariants(FactorLanguage const& fl);

  //! Plain-text strata: for each k >= 1 a header "# k=<k> count=<n>" followed by
  //! the factors, one per line.
  void write_strata(std::ostream& out, FactorLanguage const& fl);

}  // namespace cogrowth
