#include "bbgroups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

#include "bbgroups/error.hpp"

namespace bbgroups {

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(AlphabetPtr generators)
      : _generators(std::move(generators)) {}

  Presentation::Presentation(AlphabetPtr generators, std::vector<Word> relators)
      : _generators(std::move(generators)) {
    for (auto& r : relators) {
      add_relator(std::move(r));
    }
  }

  void Presentation::add_relator(Word w) {
    if (!w.alphabet()->compatible(*_generators)) {
      throw DomainError("relator is not over the presentation's generators");
    }
    if (w.empty()) {
      throw DomainError("relators must be nonempty");
    }
    _relators.push_back(std::move(w));
  }

  void Presentation::tag(std::string key, std::string value) {
    for (auto& [k, v] : _provenance) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    _provenance.emplace_back(std::move(key), std::move(value));
  }

  std::string const& Presentation::tag(std::string_view key) const {
    static std::string const none;
    for (auto const& [k, v] : _provenance) {
      if (k == key) {
        return v;
      }
    }
    return none;
  }

  bool operator==(Presentation const& a, Presentation const& b) {
    if (a._generators->names() != b._generators->names()
        || a._relators.size() != b._relators.size()
        || a._provenance != b._provenance) {
      return false;
    }
    for (std::size_t i = 0; i < a._relators.size(); ++i) {
      if (a._relators[i].letters() != b._relators[i].letters()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianisation
  ////////////////////////////////////////////////////////////////////////

  IntegerMatrix exponent_matrix(Presentation const& p) {
    IntegerMatrix m(p.relators().size(), p.generators()->size());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      for (auto const& l : p.relators()[i].letters()) {
        m(i, l.gen) += l.sign;
      }
    }
    return m;
  }

  AbelianizationResult abelianization(Presentation const& p) {
    SmithResult snf = smith_normal_form(exponent_matrix(p));
    return {p.generators()->size() - snf.rank, snf.torsion()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze simplification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Letters = std::vector<Letter>;

    Letters inverse(Letters const& w) {
      Letters out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return out;
    }

    Letters rotate(Letters const& w, std::size_t k) {
      Letters out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
      out.insert(out.end(), w.begin(),
                 w.begin() + static_cast<std::ptrdiff_t>(k));
      return out;
    }

    Letters cyclic_reduce(Letters w) {
      w = free_reduce(std::move(w));
      std::size_t lo = 0, hi = w.size();
      while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
        ++lo;
        --hi;
      }
      return Letters(w.begin() + static_cast<std::ptrdiff_t>(lo),
                     w.begin() + static_cast<std::ptrdiff_t>(hi));
    }

    // Least rotation of w or of its inverse; equal keys mean the relators
    // have the same normal closure.
    Letters cyclic_key(Letters const& w) {
      Letters best = w;
      Letters inv  = inverse(w);
      for (std::size_t k = 0; k < w.size(); ++k) {
        best = std::min({best, rotate(w, k), rotate(inv, k)});
      }
      return best;
    }

    class TietzeEngine {
     public:
      TietzeEngine(Presentation const& p, std::size_t budget)
          : _alive(p.generators()->size(), true), _budget(budget) {
        for (auto const& r : p.relators()) {
          _rels.push_back(r.letters());
        }
      }

      TietzeStatus run() {
        while (step()) {
          if (_moves == _budget) {
            TietzeEngine probe = *this;
            return probe.step() ? TietzeStatus::budget_exhausted
                                : TietzeStatus::fixpoint;
          }
        }
        return TietzeStatus::fixpoint;
      }

      std::size_t moves() const noexcept {
        return _moves;
      }

      Presentation result(Presentation const& original) const {
        std::vector<Alphabet::Generator> keep;
        std::vector<Alphabet::Generator> renumber(_alive.size(), 0);
        for (Alphabet::Generator g = 0; g < _alive.size(); ++g) {
          if (_alive[g]) {
            renumber[g] = static_cast<Alphabet::Generator>(keep.size());
            keep.push_back(g);
          }
        }
        AlphabetPtr  alphabet = original.generators()->subset(keep);
        Presentation out(alphabet);
        for (auto const& r : _rels) {
          Letters letters;
          for (auto const& l : r) {
            letters.push_back({renumber[l.gen], l.sign});
          }
          out.add_relator(Word(alphabet, std::move(letters)));
        }
        for (auto const& [k, v] : original.provenance()) {
          out.tag(k, v);
        }
        return out;
      }

     private:
      // Cheapest move first; true if a move was made.
      bool step() {
        return cyclic_reduction() || drop_trivial() || drop_duplicate()
               || eliminate_generator() || shorten();
      }

      bool cyclic_reduction() {
        for (auto& r : _rels) {
          Letters reduced = cyclic_reduce(r);
          if (reduced != r) {
            r = std::move(reduced);
            ++_moves;
            return true;
          }
        }
        return false;
      }

      bool drop_trivial() {
        for (std::size_t i = 0; i < _rels.size(); ++i) {
          if (_rels[i].empty()) {
            _rels.erase(_rels.begin() + static_cast<std::ptrdiff_t>(i));
            ++_moves;
            return true;
          }
        }
        return false;
      }

      bool drop_duplicate() {
        std::set<Letters> seen;
        for (std::size_t i = 0; i < _rels.size(); ++i) {
          if (!seen.insert(cyclic_key(_rels[i])).second) {
            _rels.erase(_rels.begin() + static_cast<std::ptrdiff_t>(i));
            ++_moves;
            return true;
          }
        }
        return false;
      }

      bool eliminate_generator() {
        // Shortest relator first keeps substitutions small.
        std::vector<std::size_t> order(_rels.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
          order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
          return _rels[a].size() < _rels[b].size();
        });
        for (std::size_t i : order) {
          Letters const&                             r = _rels[i];
          std::map<Alphabet::Generator, std::size_t> count;
          for (auto const& l : r) {
            ++count[l.gen];
          }
          for (auto const& [g, c] : count) {
            if (c != 1) {
              continue;
            }
            std::size_t pos = 0;
            while (r[pos].gen != g) {
              ++pos;
            }
            // r rotated to x^s w, so x = w^-1 (s = +1) or x = w (s = -1).
            Letters const rot = rotate(r, pos);
            Letters const w(rot.begin() + 1, rot.end());
            Letters const image     = rot[0].sign == 1 ? inverse(w) : w;
            Letters const image_inv = inverse(image);
            _rels.erase(_rels.begin() + static_cast<std::ptrdiff_t>(i));
            for (auto& other : _rels) {
              Letters next;
              for (auto const& l : other) {
                if (l.gen == g) {
                  auto const& sub = l.sign == 1 ? image : image_inv;
                  next.insert(next.end(), sub.begin(), sub.end());
                } else {
                  next.push_back(l);
                }
              }
              other = free_reduce(std::move(next));
            }
            _alive[g] = false;
            ++_moves;
            return true;
          }
        }
        return false;
      }

      bool shorten() {
        for (std::size_t i = 0; i < _rels.size(); ++i) {
          for (std::size_t j = 0; j < _rels.size(); ++j) {
            if (i == j || _rels[j].size() > 2 * _rels[i].size()) {
              continue;
            }
            if (shorten_by(_rels[i], _rels[j])) {
              ++_moves;
              return true;
            }
          }
        }
        return false;
      }

      // Replaces a cyclic subword p of r by q^-1 when some rotation of s^+-1
      // is p q with |p| > |q|.
      static bool shorten_by(Letters& r, Letters const& s) {
        std::size_t const len = s.size();
        std::size_t const n   = r.size();
        if (len == 0 || n == 0) {
          return false;
        }
        Letters const inv = inverse(s);
        for (Letters const* base : {&s, &inv}) {
          for (std::size_t k = 0; k < len; ++k) {
            Letters const t = rotate(*base, k);
            for (std::size_t plen = len; plen > len / 2; --plen) {
              if (plen > n) {
                continue;
              }
              for (std::size_t start = 0; start < n; ++start) {
                bool match = true;
                for (std::size_t q = 0; q < plen && match; ++q) {
                  match = r[(start + q) % n] == t[q];
                }
                if (!match) {
                  continue;
                }
                Letters const tail(t.begin() + static_cast<std::ptrdiff_t>(plen),
                                   t.end());
                Letters next = inverse(tail);
                for (std::size_t q = plen; q < n; ++q) {
                  next.push_back(r[(start + q) % n]);
                }
                r = std::move(next);
                return true;
              }
            }
          }
        }
        return false;
      }

      std::vector<Letters> _rels;
      std::vector<bool>    _alive;
      std::size_t          _budget;
      std::size_t          _moves = 0;
    };

  }  // namespace

  TietzeResult tietze_simplify(Presentation const& p, std::size_t budget) {
    if (budget == 0) {
      throw DomainError("Tietze budget must be positive");
    }
    TietzeEngine engine(p, budget);
    TietzeStatus status = engine.run();
    return {engine.result(p), status, engine.moves()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialisation
  ////////////////////////////////////////////////////////////////////////

  std::string serialize(Presentation const& p) {
    std::string out;
    for (auto const& [k, v] : p.provenance()) {
      out += "# @" + k + (v.empty() ? "" : " " + v) + "\n";
    }
    out += "gens:";
    for (auto const& name : p.generators()->names()) {
      out += " " + name;
    }
    out += "\n";
    for (auto const& r : p.relators()) {
      out += "rel: " + r.to_string() + "\n";
    }
    return out;
  }

  std::string serialize_json(Presentation const& p) {
    nlohmann::ordered_json j;
    j["gens"] = p.generators()->names();
    j["rel"]  = nlohmann::ordered_json::array();
    for (auto const& r : p.relators()) {
      j["rel"].push_back(r.to_string());
    }
    j["provenance"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : p.provenance()) {
      j["provenance"][k] = v;
    }
    return j.dump(2) + "\n";
  }

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> provenance;
    AlphabetPtr                                      alphabet;
    std::vector<Word>                                relators;
    std::size_t                                      line_no = 0;
    std::size_t                                      pos     = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::string_view body = trim(line);
      if (body.rfind("# @", 0) == 0) {
        std::string_view tag = body.substr(3);
        std::size_t      sp  = tag.find(' ');
        std::string      key(tag.substr(0, sp));
        if (key.empty()) {
          throw ParseError("empty provenance key", line_no,
                           static_cast<std::size_t>(body.data() - line.data())
                               + 4);
        }
        provenance.emplace_back(
            key, sp == std::string_view::npos ? "" : std::string(tag.substr(sp + 1)));
        continue;
      }
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      body = trim(line);
      if (body.empty()) {
        continue;
      }
      std::size_t const lead
          = static_cast<std::size_t>(body.data() - line.data());
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected \"gens:\" or \"rel:\"", line_no, lead + 1);
      }
      std::string_view key = trim(line.substr(0, colon));
      std::string_view rest = line.substr(colon + 1);
      if (key == "gens") {
        if (alphabet) {
          throw ParseError("duplicate \"gens:\" line", line_no, lead + 1);
        }
        std::vector<std::string> names;
        std::set<std::string>    seen;
        std::size_t              i = 0;
        while (i < rest.size()) {
          if (std::isspace(static_cast<unsigned char>(rest[i]))) {
            ++i;
            continue;
          }
          std::size_t start = i;
          while (i < rest.size()
                 && !std::isspace(static_cast<unsigned char>(rest[i]))) {
            ++i;
          }
          std::string name(rest.substr(start, i - start));
          std::size_t col = colon + 2 + start;
          if (name.find('^') != std::string::npos) {
            throw ParseError("generator names may not contain '^'", line_no,
                             col);
          }
          if (!seen.insert(name).second) {
            throw ParseError("duplicate generator \"" + name + "\"", line_no,
                             col);
          }
          names.push_back(std::move(name));
        }
        alphabet = Alphabet::generic(std::move(names));
      } else if (key == "rel") {
        if (!alphabet) {
          throw ParseError("\"rel:\" before \"gens:\"", line_no, lead + 1);
        }
        Word w = parse_word(alphabet, rest, line_no, colon + 1);
        if (w.empty()) {
          throw ParseError("empty relator", line_no, colon + 1);
        }
        relators.push_back(std::move(w));
      } else {
        throw ParseError("unknown key \"" + std::string(key) + "\"", line_no,
                         lead + 1);
      }
    }
    if (!alphabet) {
      throw ParseError("missing \"gens:\" line", line_no == 0 ? 1 : line_no, 1);
    }
    Presentation p(alphabet, std::move(relators));
    for (auto& [k, v] : provenance) {
      p.tag(std::move(k), std::move(v));
    }
    return p;
  }

  Presentation parse_presentation_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("malformed JSON presentation: ") + e.what(),
                       0, 0);
    }
    if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
      throw ParseError("JSON presentation needs a \"gens\" array", 0, 0);
    }
    std::vector<std::string> names;
    for (auto const& g : j["gens"]) {
      if (!g.is_string()) {
        throw ParseError("generator names must be strings", 0, 0);
      }
      names.push_back(g.get<std::string>());
    }
    AlphabetPtr  alphabet = Alphabet::generic(std::move(names));
    Presentation p(alphabet);
    if (j.contains("rel")) {
      std::size_t index = 0;
      for (auto const& r : j["rel"]) {
        ++index;
        if (!r.is_string()) {
          throw ParseError("relators must be strings", 0, 0);
        }
        Word w = parse_word(alphabet, r.get<std::string>(), index);
        if (w.empty()) {
          throw ParseError("empty relator (entry " + std::to_string(index) + ")",
                           0, 0);
        }
        p.add_relator(std::move(w));
      }
    }
    if (j.contains("provenance")) {
      for (auto const& [k, v] : j["provenance"].items()) {
        p.tag(k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    return p;
  }

}  // namespace bbgroups
