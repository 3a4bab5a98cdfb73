#include "bbgroups/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "bbgroups/error.hpp"

namespace bbgroups {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  AlphabetPtr Alphabet::generic(std::vector<std::string> names) {
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->_kind = AlphabetKind::generic;
    for (auto& n : names) {
      if (n.empty()) {
        throw DomainError("empty generator name");
      }
      if (!a->_lookup.emplace(n, static_cast<Generator>(a->_names.size()))
               .second) {
        throw DomainError("duplicate generator \"" + n + "\"");
      }
      a->_names.push_back(std::move(n));
    }
    return a;
  }

  AlphabetPtr Alphabet::vertices(FlagComplex const& complex) {
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->_kind  = AlphabetKind::vertex;
    a->_names = complex.names();
    for (std::size_t i = 0; i < a->_names.size(); ++i) {
      a->_lookup.emplace(a->_names[i], static_cast<Generator>(i));
    }
    return a;
  }

  AlphabetPtr Alphabet::directed_edges(FlagComplex const& complex) {
    std::vector<DirectedEdge> edges;
    for (std::size_t i = 0; i < complex.num_directed_edges(); ++i) {
      edges.push_back(complex.directed_edge(i));
    }
    return directed_edges(complex, std::move(edges));
  }

  AlphabetPtr Alphabet::directed_edges(FlagComplex const&        complex,
                                       std::vector<DirectedEdge> edges) {
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->_kind = AlphabetKind::directed_edge;
    for (auto const& e : edges) {
      if (!complex.is_edge(e)) {
        throw DomainError("not a directed edge of the complex");
      }
      std::string name = complex.edge_name(e);
      if (!a->_lookup.emplace(name, static_cast<Generator>(a->_names.size()))
               .second) {
        throw DomainError("duplicate generator " + name);
      }
      a->_names.push_back(std::move(name));
    }
    a->_endpoints = std::move(edges);
    return a;
  }

  std::optional<Alphabet::Generator>
  Alphabet::find(std::string_view name) const {
    auto it = _lookup.find(std::string(name));
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Alphabet::Generator> Alphabet::find(DirectedEdge e) const {
    auto it = std::find(_endpoints.begin(), _endpoints.end(), e);
    if (it == _endpoints.end()) {
      return std::nullopt;
    }
    return static_cast<Generator>(it - _endpoints.begin());
  }

  AlphabetPtr Alphabet::subset(std::vector<Generator> const& keep) const {
    std::shared_ptr<Alphabet> a(new Alphabet());
    a->_kind = _kind;
    for (Generator g : keep) {
      a->_lookup.emplace(_names.at(g), static_cast<Generator>(a->_names.size()));
      a->_names.push_back(_names[g]);
      if (!_endpoints.empty()) {
        a->_endpoints.push_back(_endpoints[g]);
      }
    }
    return a;
  }

  bool Alphabet::compatible(Alphabet const& other) const noexcept {
    return this == &other
           || (_kind == other._kind && _names == other._names
               && _endpoints == other._endpoints);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  std::vector<Letter> free_reduce(std::vector<Letter> letters) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (top > 0 && letters[top - 1] == letters[i].inverse()) {
        --top;
      } else {
        letters[top++] = letters[i];
      }
    }
    letters.resize(top);
    return letters;
  }

  Word::Word(AlphabetPtr alphabet) : _alphabet(std::move(alphabet)) {}

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : _alphabet(std::move(alphabet)) {
    for (auto const& l : letters) {
      if (l.gen >= _alphabet->size()) {
        throw DomainError("generator index " + std::to_string(l.gen)
                          + " outside the alphabet");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw DomainError("letter sign must be +1 or -1");
      }
    }
    _letters = free_reduce(std::move(letters));
  }

  Word Word::power(AlphabetPtr alphabet, Alphabet::Generator g, long k) {
    int const           sign = k < 0 ? -1 : 1;
    std::vector<Letter> letters(static_cast<std::size_t>(k < 0 ? -k : k),
                                Letter{g, sign});
    return Word(std::move(alphabet), std::move(letters));
  }

  Word Word::inverse() const {
    Word out(_alphabet);
    out._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out._letters.push_back(it->inverse());
    }
    return out;
  }

  Word Word::operator*(Word const& other) const {
    if (!_alphabet->compatible(*other._alphabet)) {
      throw DomainError("cannot multiply words over different alphabets");
    }
    std::vector<Letter> letters = _letters;
    letters.insert(letters.end(), other._letters.begin(), other._letters.end());
    Word out(_alphabet);
    out._letters = free_reduce(std::move(letters));
    return out;
  }

  Word Word::pow(long k) const {
    Word const base = k < 0 ? inverse() : *this;
    Word       out(_alphabet);
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      out = out * base;
    }
    return out;
  }

  Word Word::rebind(AlphabetPtr alphabet) const {
    std::vector<Letter> letters;
    letters.reserve(_letters.size());
    for (auto const& l : _letters) {
      auto g = alphabet->find(_alphabet->name(l.gen));
      if (!g) {
        throw DomainError("generator " + _alphabet->name(l.gen)
                          + " not in target alphabet");
      }
      letters.push_back({*g, l.sign});
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  std::string Word::to_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < _letters.size()) {
      std::size_t j = i;
      while (j < _letters.size() && _letters[j] == _letters[i]) {
        ++j;
      }
      long const k = static_cast<long>(j - i) * _letters[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += _alphabet->name(_letters[i].gen);
      if (k != 1) {
        out += '^' + std::to_string(k);
      }
      i = j;
    }
    return out;
  }

  Word free_reduce(std::vector<Word> const& pieces) {
    if (pieces.empty()) {
      throw DomainError("free_reduce of no words has no alphabet");
    }
    std::vector<Letter> letters;
    for (auto const& p : pieces) {
      if (!p.alphabet()->compatible(*pieces.front().alphabet())) {
        throw DomainError("mixed alphabets in one word");
      }
      letters.insert(letters.end(), p.letters().begin(), p.letters().end());
    }
    return Word(pieces.front().alphabet(), std::move(letters));
  }

  long exponent_sum(Word const& w) {
    long s = 0;
    for (auto const& l : w.letters()) {
      s += l.sign;
    }
    return s;
  }

  Word parse_word(AlphabetPtr      alphabet,
                  std::string_view text,
                  std::size_t      line_no,
                  std::size_t      column_offset) {
    std::vector<Letter> letters;
    std::size_t         i = 0;
    auto                col = [&](std::size_t at) { return at + 1 + column_offset; };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t const start = i;
      if (text[i] == '[') {
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated edge letter", line_no, col(start));
        }
        i = close + 1;
      } else {
        while (i < text.size()
               && !std::isspace(static_cast<unsigned char>(text[i]))
               && text[i] != '^') {
          ++i;
        }
      }
      std::string_view name = text.substr(start, i - start);
      if (name.empty()) {
        throw ParseError("missing generator before '^'", line_no, col(start));
      }
      long exponent = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t const exp_start = ++i;
        while (i < text.size()
               && !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::string_view digits = text.substr(exp_start, i - exp_start);
        auto [ptr, ec]
            = std::from_chars(digits.data(), digits.data() + digits.size(),
                              exponent);
        if (digits.empty() || ec != std::errc()
            || ptr != digits.data() + digits.size() || exponent == 0) {
          throw ParseError("exponent must be a nonzero integer", line_no,
                           col(exp_start));
        }
      } else if (i < text.size()
                 && !std::isspace(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character after generator", line_no,
                         col(i));
      }
      auto g = alphabet->find(name);
      if (!g) {
        throw ParseError("unknown generator \"" + std::string(name) + "\"",
                         line_no, col(start));
      }
      int const sign = exponent < 0 ? -1 : 1;
      for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
        letters.push_back({*g, sign});
      }
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Right-angled Artin groups
  ////////////////////////////////////////////////////////////////////////

  RaagContext::RaagContext(std::shared_ptr<FlagComplex const> complex)
      : _complex(std::move(complex)),
        _alphabet(Alphabet::vertices(*_complex)) {}

  namespace {

    void require_vertex_word(Word const& w, RaagContext const& ctx) {
      if (!w.alphabet()->compatible(*ctx.alphabet())) {
        throw DomainError(
            "word is not over the vertex alphabet of the Artin group");
      }
    }

    // Reduced form: a letter cancels against the nearest occurrence of its
    // inverse to its left when every letter in between commutes with it.
    std::vector<Letter> reduce_trace(Word const& w, RaagContext const& ctx) {
      std::vector<Letter> out;
      out.reserve(w.size());
      for (auto const& x : w.letters()) {
        bool cancelled = false;
        for (std::size_t j = out.size(); j-- > 0;) {
          Letter const& y = out[j];
          if (y.gen == x.gen) {
            if (y.sign == -x.sign) {
              out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
              cancelled = true;
            }
            break;
          }
          if (!ctx.commute(y.gen, x.gen)) {
            break;
          }
        }
        if (!cancelled) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool letter_less(Letter const& a, Letter const& b) {
      return a.gen != b.gen ? a.gen < b.gen : a.sign > b.sign;
    }

  }  // namespace

  Word raag_normal_form(Word const& w, RaagContext const& ctx) {
    require_vertex_word(w, ctx);
    std::vector<Letter> rest = reduce_trace(w, ctx);
    std::vector<Letter> out;
    out.reserve(rest.size());
    // Greedy lex-least linearisation of the trace: repeatedly take the least
    // letter that commutes past everything to its left.
    while (!rest.empty()) {
      std::size_t best = rest.size();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (best != rest.size() && !letter_less(rest[i], rest[best])) {
          continue;
        }
        bool free = true;
        for (std::size_t j = 0; j < i && free; ++j) {
          free = ctx.commute(rest[j].gen, rest[i].gen);
        }
        if (free) {
          best = i;
        }
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return Word(ctx.alphabet(), std::move(out));
  }

  bool is_identity(Word const& w, RaagContext const& ctx) {
    require_vertex_word(w, ctx);
    return reduce_trace(w, ctx).empty();
  }

  bool raag_equal(Word const& u, Word const& v, RaagContext const& ctx) {
    return is_identity(u * v.inverse(), ctx);
  }

}  // namespace bbgroups
