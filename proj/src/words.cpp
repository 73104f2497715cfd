#include "cogrowth/words.hpp"

#include <algorithm>
#include <unordered_set>

#include "cogrowth/error.hpp"

namespace cogrowth {

  Alphabet::Alphabet(std::string letters) : _letters(std::move(letters)) {
    if (_letters.size() < 2) {
      throw Error(ErrorCode::invalid_argument,
                  "an alphabet needs at least two letters, found \"" + _letters
                      + "\"");
    }
    if (std::adjacent_find(_letters.begin(),
                           _letters.end(),
                           [](char x, char y) { return x >= y; })
        != _letters.end()) {
      throw Error(ErrorCode::invalid_argument,
                  "alphabet letters must be distinct and increasing, found \""
                      + _letters + "\"");
    }
  }

  bool Alphabet::contains(char c) const noexcept {
    return _letters.find(c) != std::string::npos;
  }

  std::size_t Alphabet::rank(char c) const noexcept {
    auto pos = _letters.find(c);
    return pos == std::string::npos ? _letters.size() : pos;
  }

  bool Alphabet::spells(std::string_view w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](char c) { return contains(c); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism
  ////////////////////////////////////////////////////////////////////////

  Morphism::Morphism(Alphabet alphabet, std::map<char, Word> images)
      : _alphabet(std::move(alphabet)), _images(std::move(images)) {
    for (char c : _alphabet.letters()) {
      auto it = _images.find(c);
      if (it == _images.end()) {
        throw Error(ErrorCode::invalid_spec,
                    std::string("no image for letter '") + c + "'");
      }
      if (it->second.empty()) {
        throw Error(ErrorCode::invalid_spec,
                    std::string("empty image for letter '") + c + "'");
      }
      if (!_alphabet.spells(it->second)) {
        throw Error(ErrorCode::invalid_spec,
                    "image \"" + it->second + "\" leaves the alphabet");
      }
    }
    if (_images.size() != _alphabet.size()) {
      throw Error(ErrorCode::invalid_spec,
                  "images given for letters outside the alphabet");
    }
  }

  Word const& Morphism::image(char letter) const {
    auto it = _images.find(letter);
    if (it == _images.end()) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("letter '") + letter + "' not in alphabet");
    }
    return it->second;
  }

  Word Morphism::apply(std::string_view w) const {
    Word out;
    for (char c : w) {
      out += image(c);
    }
    return out;
  }

  bool Morphism::prolongable(char seed) const {
    if (!_alphabet.contains(seed)) {
      return false;
    }
    auto const& img = image(seed);
    return img.size() >= 2 && img.front() == seed;
  }

  std::vector<std::vector<std::size_t>> Morphism::incidence() const {
    auto const n = _alphabet.size();
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (char c : image(_alphabet.letters()[i])) {
        ++m[i][_alphabet.rank(c)];
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // SequenceSpec
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Letters outside {a, b} widen the alphabet; periodic and explicit words
    // always live over at least the binary alphabet.
    Alphabet alphabet_for(std::string_view w) {
      std::string letters = Alphabet::binary().letters();
      for (char c : w) {
        if (letters.find(c) == std::string::npos) {
          letters += c;
        }
      }
      std::sort(letters.begin(), letters.end());
      return Alphabet(letters);
    }
  }  // namespace

  SequenceSpec::SequenceSpec(std::string name, Variant v, Alphabet a)
      : _name(std::move(name)), _variant(std::move(v)), _alphabet(std::move(a)) {}

  SequenceSpec SequenceSpec::morphic(std::string name, Morphism m, char seed) {
    if (!m.prolongable(seed)) {
      throw Error(ErrorCode::non_prolongable,
                  std::string("seed '") + seed
                      + "' does not begin its own image (or the image has "
                        "length 1)");
    }
    Alphabet a = m.alphabet();
    return SequenceSpec(
        std::move(name), MorphicFixedPoint{std::move(m), seed}, std::move(a));
  }

  SequenceSpec SequenceSpec::periodic(std::string name, Word period) {
    if (period.empty()) {
      throw Error(ErrorCode::empty_period, "periodic word needs a period");
    }
    Alphabet a = alphabet_for(period);
    return SequenceSpec(std::move(name), Periodic{std::move(period)}, a);
  }

  SequenceSpec SequenceSpec::explicit_prefix(std::string name, Word word) {
    Alphabet a = alphabet_for(word);
    return SequenceSpec(std::move(name), ExplicitPrefix{std::move(word)}, a);
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Word expand_prefix(SequenceSpec const& spec, std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::invalid_argument, "prefix length must be >= 1");
    }
    struct Visitor {
      std::size_t n;

      Word operator()(MorphicFixedPoint const& mfp) const {
        if (!mfp.morphism.prolongable(mfp.seed)) {
          throw Error(ErrorCode::non_prolongable,
                      std::string("seed '") + mfp.seed
                          + "' does not begin its own image");
        }
        Word w(1, mfp.seed);
        while (w.size() < n) {
          w = mfp.morphism.apply(w);
        }
        w.resize(n);
        return w;
      }

      Word operator()(Periodic const& p) const {
        if (p.period.empty()) {
          throw Error(ErrorCode::empty_period, "periodic word needs a period");
        }
        Word w;
        w.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          w += p.period[i % p.period.size()];
        }
        return w;
      }

      Word operator()(ExplicitPrefix const& e) const {
        if (e.word.size() < n) {
          throw Error(ErrorCode::prefix_too_short,
                      "explicit prefix has " + std::to_string(e.word.size())
                          + " letters, " + std::to_string(n) + " requested");
        }
        return e.word.substr(0, n);
      }
    };
    return std::visit(Visitor{n}, spec.variant());
  }

  bool is_primitive(Morphism const& m) {
    auto const n = m.alphabet().size();
    auto const a = m.incidence();
    // Boolean powers suffice: positivity only depends on the zero pattern.
    std::vector<std::vector<bool>> base(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        base[i][j] = a[i][j] != 0;
      }
    }
    auto power = base;
    for (std::size_t e = 1; e <= n * n; ++e) {
      bool positive = true;
      for (auto const& row : power) {
        positive = positive && std::all_of(row.begin(), row.end(), [](bool b) {
                     return b;
                   });
      }
      if (positive) {
        return true;
      }
      std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!power[i][k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            next[i][j] = next[i][j] || base[k][j];
          }
        }
      }
      power = std::move(next);
    }
    return false;
  }

  std::optional<std::size_t> is_eventually_periodic_prefix(std::string_view w) {
    for (std::size_t p = 1; p <= w.size() / 2; ++p) {
      bool ok = true;
      for (std::size_t i = p; i < w.size() && ok; ++i) {
        ok = w[i] == w[i - p];
      }
      if (ok) {
        return p;
      }
    }
    return std::nullopt;
  }

  Recurrence classify(SequenceSpec const& spec) {
    if (spec.is_periodic()) {
      return Recurrence::periodic;
    }
    if (spec.is_explicit()) {
      return Recurrence::unknown;
    }
    auto const& mfp = std::get<MorphicFixedPoint>(spec.variant());
    if (!is_primitive(mfp.morphism)) {
      return Recurrence::unknown;
    }
    // Morse-Hedlund: the word is eventually periodic iff p(k + 1) == p(k)
    // for some k. Counts come from a long prefix and k is kept small.
    auto const             w = expand_prefix(spec, std::size_t(1) << 15);
    std::string_view const v(w);
    std::size_t            prev = 1;
    for (std::size_t k = 1; k <= 32; ++k) {
      std::unordered_set<std::string_view> seen;
      for (std::size_t i = 0; i + k <= v.size(); ++i) {
        seen.insert(v.substr(i, k));
      }
      if (seen.size() <= prev) {
        return Recurrence::periodic;
      }
      prev = seen.size();
    }
    return Recurrence::uniformly_recurrent_aperiodic;
  }

  std::string_view to_string(Recurrence r) noexcept {
    switch (r) {
      case Recurrence::uniformly_recurrent_aperiodic:
        return "uniformly-recurrent-aperiodic";
      case Recurrence::periodic:
        return "periodic";
      case Recurrence::unknown:
        return "unknown";
    }
    return "unknown";
  }

  namespace builtin {
    Morphism fibonacci_morphism() {
      return Morphism(Alphabet::binary(), {{'a', "ab"}, {'b', "a"}});
    }

    Morphism thue_morse_morphism() {
      return Morphism(Alphabet::binary(), {{'a', "ab"}, {'b', "ba"}});
    }

    Morphism period_doubling_morphism() {
      return Morphism(Alphabet::binary(), {{'a', "ab"}, {'b', "aa"}});
    }

    SequenceSpec fibonacci() {
      return SequenceSpec::morphic("fibonacci", fibonacci_morphism(), 'a');
    }

    SequenceSpec thue_morse() {
      return SequenceSpec::morphic("thue-morse", thue_morse_morphism(), 'a');
    }

    SequenceSpec period_doubling() {
      return SequenceSpec::morphic(
          "period-doubling", period_doubling_morphism(), 'a');
    }
  }  // namespace builtin

}  // namespace cogrowth
