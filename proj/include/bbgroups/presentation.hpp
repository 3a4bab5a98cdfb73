// Finite group presentations: abelianisation, bounded Tietze simplification
// and the text/JSON file formats.

#ifndef BBGROUPS_PRESENTATION_HPP_
#define BBGROUPS_PRESENTATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smith.hpp"
#include "words.hpp"

namespace bbgroups {

  //! Generators, nonempty freely reduced relators and free-form provenance
  //! tags (key, value) in insertion order.
  class Presentation {
   public:
    explicit Presentation(AlphabetPtr generators);
    //! Throws DomainError on an empty relator or one over another alphabet.
    Presentation(AlphabetPtr generators, std::vector<Word> relators);

    AlphabetPtr const& generators() const noexcept {
      return _generators;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::vector<std::pair<std::string, std::string>> const&
    provenance() const noexcept {
      return _provenance;
    }

    void add_relator(Word w);
    //! Sets (or overwrites) a provenance tag.
    void tag(std::string key, std::string value);
    //! Value of a provenance tag, or "" when absent.
    std::string const& tag(std::string_view key) const;

    friend bool operator==(Presentation const& a, Presentation const& b);

   private:
    AlphabetPtr                                      _generators;
    std::vector<Word>                                _relators;
    std::vector<std::pair<std::string, std::string>> _provenance;
  };

  struct AbelianizationResult {
    std::size_t          rank = 0;
    std::vector<Integer> torsion;

    friend bool operator==(AbelianizationResult const&,
                           AbelianizationResult const&)
        = default;
  };

  //! The |relators| x |generators| matrix of exponent sums.
  IntegerMatrix exponent_matrix(Presentation const& p);

  AbelianizationResult abelianization(Presentation const& p);

  enum class TietzeStatus { fixpoint, budget_exhausted };

  struct TietzeResult {
    Presentation presentation;
    TietzeStatus status;
    std::size_t  moves = 0;
  };

  inline constexpr std::size_t default_tietze_budget = 10'000;

  //! Applies elementary Tietze moves (cyclic reduction, removal of trivial or
  //! duplicate relators, elimination of a generator occurring once in a
  //! relator, shortening a relator by more than half of another) until no
  //! move applies or `budget` moves have been made.
  //! Throws DomainError when budget is 0.
  TietzeResult tietze_simplify(Presentation const& p,
                               std::size_t budget = default_tietze_budget);

  //! Text format:
  //!
  //!     # @key value         (provenance)
  //!     gens: a b c
  //!     rel: a b a^-1 b^-1
  std::string serialize(Presentation const& p);
  std::string serialize_json(Presentation const& p);

  //! Throws ParseError (with line and column) on bad syntax, an empty
  //! relator, or an undeclared generator.
  Presentation parse_presentation(std::string_view text);
  Presentation parse_presentation_json(std::string_view text);

}  // namespace bbgroups

#endif  // BBGROUPS_PRESENTATION_HPP_
