#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace cogrowth::detail {

  //! Suffix array, inverse suffix array and LCP array of a text.
  //!
  //! Suffixes are ordered by plain character comparison, so the order of the
  //! length-k prefixes visited in suffix-array order is the lexicographic
  //! order of the alphabet. lcp[i] is the length of the longest common prefix
  //! of the suffixes at sa[i - 1] and sa[i]; lcp[0] == 0.
  struct SuffixIndex {
    explicit SuffixIndex(std::string_view text);

    std::vector<std::uint32_t> sa;
    std::vector<std::uint32_t> rank;
    std::vector<std::uint32_t> lcp;
  };

  //! Offsets of one occurrence of every distinct length-k factor of the
  //! indexed text, listed in lexicographic order of the factors.
  std::vector<std::uint32_t> distinct_factor_offsets(SuffixIndex const& idx,
                                                     std::size_t        n,
                                                     std::size_t        k);

  inline constexpr std::uint32_t no_class = UINT32_MAX;

  //! Class ids of the length-k prefixes: cls[i] is the lexicographic index of
  //! the length-k prefix of the suffix sa[i], or no_class if that suffix is
  //! shorter than k. Returns the number of classes.
  std::uint32_t factor_classes(SuffixIndex const&          idx,
                               std::size_t                 n,
                               std::size_t                 k,
                               std::vector<std::uint32_t>& cls);

}  // namespace cogrowth::detail
