#include "cogrowth/suffix_index.hpp"

#include <algorithm>
#include <limits>

namespace cogrowth::detail {

  namespace {
    // Prefix doubling over cyclic shifts of text + '\0' with counting sort,
    // O(n log n).
    std::vector<std::uint32_t> sort_cyclic_shifts(std::string_view text) {
      std::size_t const n = text.size() + 1;
      auto sym = [&](std::size_t i) -> std::size_t {
        return i < text.size() ? static_cast<unsigned char>(text[i]) + 1 : 0;
      };
      std::size_t const          sigma = 257;
      std::vector<std::uint32_t> p(n), c(n), pn(n), cn(n);
      std::vector<std::uint32_t> cnt(std::max(sigma, n), 0);

      for (std::size_t i = 0; i < n; ++i) {
        ++cnt[sym(i)];
      }
      for (std::size_t i = 1; i < sigma; ++i) {
        cnt[i] += cnt[i - 1];
      }
      for (std::size_t i = n; i-- > 0;) {
        p[--cnt[sym(i)]] = static_cast<std::uint32_t>(i);
      }
      c[p[0]]             = 0;
      std::size_t classes = 1;
      for (std::size_t i = 1; i < n; ++i) {
        if (sym(p[i]) != sym(p[i - 1])) {
          ++classes;
        }
        c[p[i]] = static_cast<std::uint32_t>(classes - 1);
      }

      for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          pn[i] = static_cast<std::uint32_t>((p[i] + n - h) % n);
        }
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i) {
          ++cnt[c[pn[i]]];
        }
        for (std::size_t i = 1; i < classes; ++i) {
          cnt[i] += cnt[i - 1];
        }
        for (std::size_t i = n; i-- > 0;) {
          p[--cnt[c[pn[i]]]] = pn[i];
        }
        cn[p[0]] = 0;
        classes  = 1;
        for (std::size_t i = 1; i < n; ++i) {
          auto cur  = std::pair(c[p[i]], c[(p[i] + h) % n]);
          auto prev = std::pair(c[p[i - 1]], c[(p[i - 1] + h) % n]);
          if (cur != prev) {
            ++classes;
          }
          cn[p[i]] = static_cast<std::uint32_t>(classes - 1);
        }
        c.swap(cn);
      }
      return p;
    }
  }  // namespace

  SuffixIndex::SuffixIndex(std::string_view text) {
    auto const n = text.size();
    if (n >= std::numeric_limits<std::uint32_t>::max()) {
      throw std::length_error("text too long for a 32-bit suffix array");
    }
    auto cyclic = sort_cyclic_shifts(text);
    // cyclic[0] is the sentinel position.
    sa.assign(cyclic.begin() + 1, cyclic.end());

    rank.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      rank[sa[i]] = static_cast<std::uint32_t>(i);
    }

    // Kasai et al.
    lcp.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank[i] == 0) {
        h = 0;
        continue;
      }
      std::size_t j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
        ++h;
      }
      lcp[rank[i]] = static_cast<std::uint32_t>(h);
      if (h > 0) {
        --h;
      }
    }
  }

  std::vector<std::uint32_t> distinct_factor_offsets(SuffixIndex const& idx,
                                                     std::size_t        n,
                                                     std::size_t        k) {
    if (k == 0) {
      return {0};
    }
    std::vector<std::uint32_t> out;
    bool                       have_prev = false;
    std::size_t run_min = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        run_min = std::min<std::size_t>(run_min, idx.lcp[i]);
      }
      if (n - idx.sa[i] < k) {
        continue;
      }
      if (!have_prev || run_min < k) {
        out.push_back(idx.sa[i]);
      }
      have_prev = true;
      run_min   = std::numeric_limits<std::size_t>::max();
    }
    return out;
  }

  std::uint32_t factor_classes(SuffixIndex const&          idx,
                               std::size_t                 n,
                               std::size_t                 k,
                               std::vector<std::uint32_t>& cls) {
    cls.assign(n, no_class);
    std::uint32_t count     = 0;
    bool          have_prev = false;
    std::size_t   run_min   = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        run_min = std::min<std::size_t>(run_min, idx.lcp[i]);
      }
      if (n - idx.sa[i] < k) {
        continue;
      }
      if (!have_prev || run_min < k) {
        ++count;
      }
      cls[i]    = count - 1;
      have_prev = true;
      run_min   = std::numeric_limits<std::size_t>::max();
    }
    return count;
  }

}  // namespace cogrowth::detail
