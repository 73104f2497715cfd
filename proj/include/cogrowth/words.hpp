#pragma once

// Finite words, letter substitutions (morphisms) and finitely described
// infinite sequences over small alphabets.
//
// Text I/O uses the characters 'a' and 'b' for the two letters of the binary
// alphabet. Words are stored as std::string; an Alphabet keeps its letters in
// strictly increasing character order, so ordinary string comparison is the
// lexicographic order induced by the alphabet.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cogrowth {

  using Word = std::string;

  class Alphabet {
   public:
    //! Throws Error(invalid_argument) unless \p letters has at least two
    //! distinct characters given in strictly increasing order.
    explicit Alphabet(std::string letters);

    static Alphabet binary() {
      return Alphabet("ab");
    }

    [[nodiscard]] std::string const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool contains(char c) const noexcept;
    //! Position of \p c in the alphabet, or size() if absent.
    [[nodiscard]] std::size_t rank(char c) const noexcept;
    [[nodiscard]] bool spells(std::string_view w) const noexcept;

    bool operator==(Alphabet const&) const = default;

   private:
    std::string _letters;
  };

  class Morphism {
   public:
    //! Every letter of \p alphabet needs a nonempty image over \p alphabet.
    Morphism(Alphabet alphabet, std::map<char, Word> images);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Word const& image(char letter) const;
    [[nodiscard]] std::map<char, Word> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] Word apply(std::string_view w) const;

    //! The image of \p seed starts with \p seed and is longer than one letter,
    //! so iterating from \p seed converges to an infinite fixed point.
    [[nodiscard]] bool prolongable(char seed) const;

    //! incidence[i][j] = occurrences of letter j in the image of letter i.
    [[nodiscard]] std::vector<std::vector<std::size_t>> incidence() const;

   private:
    Alphabet             _alphabet;
    std::map<char, Word> _images;
  };

  struct MorphicFixedPoint {
    Morphism morphism;
    char     seed;
  };

  struct Periodic {
    Word period;
  };

  struct ExplicitPrefix {
    Word word;
  };

  //! A finitely described infinite word W.
  class SequenceSpec {
   public:
    using Variant = std::variant<MorphicFixedPoint, Periodic, ExplicitPrefix>;

    static SequenceSpec morphic(std::string name, Morphism m, char seed);
    static SequenceSpec periodic(std::string name, Word period);
    static SequenceSpec explicit_prefix(std::string name, Word word);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] Variant const& variant() const noexcept {
      return _variant;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] bool is_morphic() const noexcept {
      return std::holds_alternative<MorphicFixedPoint>(_variant);
    }
    [[nodiscard]] bool is_periodic() const noexcept {
      return std::holds_alternative<Periodic>(_variant);
    }
    [[nodiscard]] bool is_explicit() const noexcept {
      return std::holds_alternative<ExplicitPrefix>(_variant);
    }

   private:
    SequenceSpec(std::string name, Variant v, Alphabet a);

    std::string _name;
    Variant     _variant;
    Alphabet    _alphabet;
  };

  //! First \p n letters of the sequence described by \p spec.
  //!
  //! Throws NonProlongable, EmptyPeriod or PrefixTooShort as appropriate, and
  //! InvalidArgument when n == 0.
  Word expand_prefix(SequenceSpec const& spec, std::size_t n);

  //! True iff some power (at most |A|^2) of the incidence matrix is positive.
  bool is_primitive(Morphism const& m);

  //! Smallest p <= |w|/2 such that w[i] == w[i - p] for all i >= p.
  std::optional<std::size_t> is_eventually_periodic_prefix(std::string_view w);

  //! Whether \p spec is known to describe a uniformly recurrent non-periodic
  //! word: a primitive morphic fixed point whose factor complexity, counted
  //! on a 2^15-letter prefix, grows strictly for k <= 32. Periodic specs are
  //! never, explicit prefixes are "unknown".
  enum class Recurrence { uniformly_recurrent_aperiodic, periodic, unknown };
  Recurrence classify(SequenceSpec const& spec);
  std::string_view to_string(Recurrence r) noexcept;

  namespace builtin {
    Morphism     fibonacci_morphism();
    Morphism     thue_morse_morphism();
    Morphism     period_doubling_morphism();
    SequenceSpec fibonacci();
    SequenceSpec thue_morse();
    SequenceSpec period_doubling();
  }  // namespace builtin

}  // namespace cogrowth
