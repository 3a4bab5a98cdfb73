// Words in free groups over tagged alphabets, and the normal form for
// right-angled Artin groups.

#ifndef BBGROUPS_WORDS_HPP_
#define BBGROUPS_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "complex.hpp"

namespace bbgroups {

  enum class AlphabetKind : std::uint8_t {
    //! Names only.
    generic,
    //! One generator per vertex of a complex.
    vertex,
    //! Generators are directed edges; each carries its endpoints.
    directed_edge,
  };

  //! An ordered, named generating set. Alphabets are shared between words by
  //! pointer; two alphabets are compatible when they are the same object or
  //! have the same kind, names and endpoints.
  class Alphabet {
   public:
    using Generator = std::uint32_t;

    static std::shared_ptr<Alphabet const>
    generic(std::vector<std::string> names);
    //! The vertex alphabet of `complex`; generator i is vertex i.
    static std::shared_ptr<Alphabet const> vertices(FlagComplex const& complex);
    //! All directed edges of `complex`, numbered as in
    //! FlagComplex::directed_edge.
    static std::shared_ptr<Alphabet const>
    directed_edges(FlagComplex const& complex);
    //! Arbitrary directed edges of `complex` (for example one orientation
    //! per edge). Throws DomainError on a non-edge or a repeat.
    static std::shared_ptr<Alphabet const>
    directed_edges(FlagComplex const& complex, std::vector<DirectedEdge> edges);

    AlphabetKind kind() const noexcept {
      return _kind;
    }
    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(Generator g) const {
      return _names.at(g);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Generator> find(std::string_view name) const;

    //! Endpoints of a directed-edge generator.
    DirectedEdge const& endpoints(Generator g) const {
      return _endpoints.at(g);
    }
    std::optional<Generator> find(DirectedEdge e) const;

    //! The alphabet restricted to `keep` (in that order), same kind.
    std::shared_ptr<Alphabet const>
    subset(std::vector<Generator> const& keep) const;

    bool compatible(Alphabet const& other) const noexcept;

   private:
    Alphabet() = default;

    AlphabetKind                               _kind = AlphabetKind::generic;
    std::vector<std::string>                   _names;
    std::unordered_map<std::string, Generator> _lookup;
    std::vector<DirectedEdge>                  _endpoints;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  struct Letter {
    Alphabet::Generator gen;
    //! +1 or -1.
    int sign;

    Letter inverse() const noexcept {
      return {gen, -sign};
    }
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  //! A freely reduced word over an alphabet. Immutable value type.
  class Word {
   public:
    //! Empty word over `alphabet`.
    explicit Word(AlphabetPtr alphabet);
    //! Free-reduces `letters`. Throws DomainError for a generator outside
    //! the alphabet or a sign other than +1/-1.
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    //! g^k as a word.
    static Word power(AlphabetPtr alphabet, Alphabet::Generator g, long k);

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    Word inverse() const;
    //! Throws DomainError for incompatible alphabets.
    Word operator*(Word const& other) const;
    Word pow(long k) const;

    //! The same letters over a different alphabet, matched by name.
    Word rebind(AlphabetPtr alphabet) const;

    //! Textual form, e.g. `a^2 b^-1 [a>b]`; the empty word prints as "".
    std::string to_string() const;

    friend bool operator==(Word const& a, Word const& b) {
      return a._letters == b._letters
             && a._alphabet->compatible(*b._alphabet);
    }

   private:
    AlphabetPtr         _alphabet;
    std::vector<Letter> _letters;
  };

  //! Free reduction of a letter sequence (the Word constructor uses it).
  std::vector<Letter> free_reduce(std::vector<Letter> letters);

  //! Free reduction of a concatenation of words; throws DomainError when the
  //! alphabets are incompatible.
  Word free_reduce(std::vector<Word> const& pieces);

  //! Sum of the signs: the homomorphism to Z sending every generator to 1.
  long exponent_sum(Word const& w);

  //! Parses whitespace-separated factors `g`, `g^-1`, `g^k`, with `[a>b]`
  //! allowed as a generator name. Throws ParseError with a 1-based column
  //! (line is `line_no`) on bad syntax or an unknown generator.
  Word parse_word(AlphabetPtr      alphabet,
                  std::string_view text,
                  std::size_t      line_no = 1,
                  std::size_t      column_offset = 0);

  //! The right-angled Artin group of a flag complex: vertex generators, two
  //! of which commute iff adjacent.
  class RaagContext {
   public:
    explicit RaagContext(std::shared_ptr<FlagComplex const> complex);

    FlagComplex const& complex() const noexcept {
      return *_complex;
    }
    std::shared_ptr<FlagComplex const> const& complex_ptr() const noexcept {
      return _complex;
    }
    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    bool commute(Alphabet::Generator g, Alphabet::Generator h) const {
      return g != h && _complex->adjacent(g, h);
    }

    //! Convenience: parse a word over the vertex alphabet.
    Word word(std::string_view text) const {
      return parse_word(_alphabet, text);
    }

   private:
    std::shared_ptr<FlagComplex const> _complex;
    AlphabetPtr                        _alphabet;
  };

  //! Canonical representative of the element of G_Delta represented by `w`:
  //! the lexicographically least word (generator index, then + before -)
  //! among the commutation-equivalent rearrangements of its reduced form.
  //! Throws DomainError unless `w` is over the context's vertex alphabet.
  Word raag_normal_form(Word const& w, RaagContext const& ctx);

  bool is_identity(Word const& w, RaagContext const& ctx);

  //! Equality in G_Delta.
  bool raag_equal(Word const& u, Word const& v, RaagContext const& ctx);

}  // namespace bbgroups

#endif  // BBGROUPS_WORDS_HPP_
