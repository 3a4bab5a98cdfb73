#include "bbgroups/bb.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "bbgroups/error.hpp"

namespace bbgroups {

  namespace {

    // The letter for directed edge e over an edge alphabet that holds e or
    // its reverse (e-bar = e^-1 in H).
    Letter edge_letter(Alphabet const& alphabet, DirectedEdge e) {
      if (auto g = alphabet.find(e)) {
        return {*g, 1};
      }
      if (auto g = alphabet.find(e.reverse())) {
        return {*g, -1};
      }
      throw DomainError("directed edge not representable in the alphabet");
    }

    void require_edge_word(Word const& w, BBContext const& ctx) {
      auto const& a = *w.alphabet();
      if (a.kind() != AlphabetKind::directed_edge) {
        throw DomainError("expected a word over directed-edge letters");
      }
      if (&a == ctx.edge_alphabet().get()) {
        return;
      }
      for (auto const& l : w.letters()) {
        if (!ctx.complex().is_edge(a.endpoints(l.gen))) {
          throw DomainError("letter " + a.name(l.gen)
                            + " is not a directed edge of the complex");
        }
      }
    }

    std::vector<Letter> path_letters(Alphabet const&  alphabet,
                                     BBContext const& ctx,
                                     Vertex           from,
                                     Vertex           to) {
      std::vector<Letter> out;
      for (auto const& e : ctx.tree().path(from, to)) {
        out.push_back(edge_letter(alphabet, e));
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BBContext
  ////////////////////////////////////////////////////////////////////////

  BBContext::BBContext(std::shared_ptr<FlagComplex const> complex,
                       Vertex                             basepoint)
      : _basepoint(basepoint),
        _raag(complex),
        _tree((complex->num_vertices() == 0
                   ? throw DomainError("the complex is empty")
                   : *complex),
              basepoint),
        _edges(Alphabet::directed_edges(*complex)) {}

  Word BBContext::edge(DirectedEdge e) const {
    return Word(_edges, {edge_letter(*_edges, e)});
  }

  ////////////////////////////////////////////////////////////////////////
  // The proof maps
  ////////////////////////////////////////////////////////////////////////

  Word phi(Word const& edge_word, BBContext const& ctx) {
    require_edge_word(edge_word, ctx);
    auto const&         a = *edge_word.alphabet();
    std::vector<Letter> out;
    out.reserve(2 * edge_word.size());
    for (auto const& l : edge_word.letters()) {
      DirectedEdge const& e = a.endpoints(l.gen);
      if (l.sign == 1) {
        out.push_back({e.initial, 1});
        out.push_back({e.terminal, -1});
      } else {
        out.push_back({e.terminal, 1});
        out.push_back({e.initial, -1});
      }
    }
    return Word(ctx.vertex_alphabet(), std::move(out));
  }

  Word path_element(BBContext const& ctx, Vertex from, Vertex to) {
    if (from >= ctx.complex().num_vertices()
        || to >= ctx.complex().num_vertices()) {
      throw DomainError("unknown vertex");
    }
    return Word(ctx.edge_alphabet(),
                path_letters(*ctx.edge_alphabet(), ctx, from, to));
  }

  Word xi(Word const& edge_word) {
    std::vector<Letter> out = edge_word.letters();
    for (auto& l : out) {
      l.sign = -l.sign;
    }
    return Word(edge_word.alphabet(), std::move(out));
  }

  Word psi_a(Word const& edge_word, BBContext const& ctx) {
    require_edge_word(edge_word, ctx);
    auto const&         a    = *edge_word.alphabet();
    Vertex const        base = ctx.basepoint();
    std::vector<Letter> out;
    for (auto const& l : edge_word.letters()) {
      DirectedEdge const& e   = a.endpoints(l.gen);
      std::vector<Letter> img = path_letters(a, ctx, base, e.initial);
      img.push_back({l.gen, 1});
      auto back = path_letters(a, ctx, e.initial, base);
      img.insert(img.end(), back.begin(), back.end());
      if (l.sign == -1) {
        std::reverse(img.begin(), img.end());
        for (auto& x : img) {
          x = x.inverse();
        }
      }
      out.insert(out.end(), img.begin(), img.end());
    }
    return Word(edge_word.alphabet(), std::move(out));
  }

  Word psi_a_inverse(Word const& edge_word, BBContext const& ctx) {
    return xi(psi_a(xi(edge_word), ctx));
  }

  Word cn_relator(DirectedCycle const& cycle,
                  long                 n,
                  AlphabetPtr const&   alphabet) {
    if (n == 0) {
      throw DomainError("c^[n] needs n != 0");
    }
    std::vector<Letter> out;
    long const          reps = n < 0 ? -n : n;
    int const           sign = n < 0 ? -1 : 1;
    for (auto const& e : cycle.edges()) {
      Letter l = edge_letter(*alphabet, e);
      l.sign *= sign;
      for (long i = 0; i < reps; ++i) {
        out.push_back(l);
      }
    }
    return Word(alphabet, std::move(out));
  }

  Word cn_relator(DirectedCycle const& cycle, long n, BBContext const& ctx) {
    return cn_relator(cycle, n, ctx.edge_alphabet());
  }

  std::vector<DirectedCycle> closed_walks(FlagComplex const& complex,
                                          std::size_t        max_len) {
    std::vector<DirectedCycle> out;
    // Outgoing directed-edge indices per vertex, increasing.
    std::vector<std::vector<std::size_t>> outgoing(complex.num_vertices());
    for (std::size_t i = 0; i < complex.num_directed_edges(); ++i) {
      outgoing[complex.directed_edge(i).initial].push_back(i);
    }
    for (auto& o : outgoing) {
      std::sort(o.begin(), o.end());
    }
    auto least_rotation = [](std::vector<std::size_t> const& w) {
      for (std::size_t k = 1; k < w.size(); ++k) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::size_t const a = w[(k + i) % w.size()];
          if (a != w[i]) {
            if (a < w[i]) {
              return false;
            }
            break;
          }
        }
      }
      return true;
    };
    for (std::size_t len = 2; len <= max_len; ++len) {
      std::vector<std::vector<std::size_t>> found;
      std::vector<std::size_t>              walk;
      auto dfs = [&](auto&& self, Vertex at, Vertex start) -> void {
        if (walk.size() == len) {
          if (at == start && least_rotation(walk)) {
            found.push_back(walk);
          }
          return;
        }
        for (std::size_t idx : outgoing[at]) {
          // A least rotation starts with its smallest edge.
          if (idx < walk.front()) {
            continue;
          }
          walk.push_back(idx);
          self(self, complex.directed_edge(idx).terminal, start);
          walk.pop_back();
        }
      };
      for (std::size_t first = 0; first < complex.num_directed_edges();
           ++first) {
        walk = {first};
        DirectedEdge const e = complex.directed_edge(first);
        dfs(dfs, e.terminal, e.initial);
      }
      std::sort(found.begin(), found.end());
      for (auto const& w : found) {
        std::vector<DirectedEdge> edges;
        for (std::size_t idx : w) {
          edges.push_back(complex.directed_edge(idx));
        }
        out.emplace_back(complex, std::move(edges));
      }
    }
    return out;
  }

  Presentation relators_theorem1(BBContext const& ctx,
                                 std::size_t      max_len,
                                 long             max_exp) {
    if (max_len < 2) {
      throw DomainError("max_len must be at least 2");
    }
    if (max_exp < 1) {
      throw DomainError("max_exp must be at least 1");
    }
    Presentation p(ctx.edge_alphabet());
    for (auto const& c : closed_walks(ctx.complex(), max_len)) {
      for (long n = 1; n <= max_exp; ++n) {
        p.add_relator(cn_relator(c, n, ctx));
        p.add_relator(cn_relator(c, -n, ctx));
      }
    }
    p.tag("construction", "cycle relators c^[n] on directed edges");
    p.tag("max_len", std::to_string(max_len));
    p.tag("max_exp", std::to_string(max_exp));
    p.tag("presents", "H (kernel of G -> Z), truncated relator family");
    p.tag("complete", "false");
    return p;
  }

  std::vector<DirectedCycle> loop_basis(BBContext const& ctx) {
    std::vector<DirectedCycle> out;
    auto const&                k = ctx.complex();
    for (auto const& [u, v] : k.edges()) {
      if (ctx.tree().is_tree_edge(u, v)) {
        continue;
      }
      auto edges = ctx.tree().path(ctx.basepoint(), u);
      edges.push_back({u, v});
      auto back = ctx.tree().path(v, ctx.basepoint());
      edges.insert(edges.end(), back.begin(), back.end());
      out.emplace_back(k, std::move(edges));
    }
    return out;
  }

  Presentation finite_presentation(BBContext const&                  ctx,
                                   std::vector<DirectedCycle> const& extra_cycles,
                                   long                              max_exp,
                                   std::size_t                       budget) {
    auto const& k = ctx.complex();
    if (!extra_cycles.empty() && max_exp < 1) {
      throw DomainError("max_exp must be at least 1");
    }
    std::vector<DirectedEdge> oriented;
    for (auto const& [u, v] : k.edges()) {
      oriented.push_back({u, v});
    }
    AlphabetPtr  alphabet = Alphabet::directed_edges(k, std::move(oriented));
    Presentation p(alphabet);
    for (auto const& t : k.simplices(2)) {
      DirectedCycle c(k, {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}});
      p.add_relator(cn_relator(c, 1, alphabet));
      p.add_relator(cn_relator(c, -1, alphabet));
    }
    for (auto const& c : extra_cycles) {
      for (long n = 1; n <= max_exp; ++n) {
        for (long s : {n, -n}) {
          Word w = cn_relator(c, s, alphabet);
          if (!w.empty()) {
            p.add_relator(std::move(w));
          }
        }
      }
    }
    SimpleConnectivity const sc = simply_connected_status(k, budget);
    p.tag("construction", "triangle relators on undirected edges");
    p.tag("basepoint", k.name(ctx.basepoint()));
    p.tag("simply_connected", std::string(to_string(sc)));
    if (extra_cycles.empty()) {
      if (sc == SimpleConnectivity::certified_trivial) {
        p.tag("presents", "H (kernel of G -> Z)");
        p.tag("complete", "true");
      } else {
        p.tag("presents", "K (edge group with 2-cycle and triangle relations "
                          "only), maps onto H");
        p.tag("complete", "false");
      }
    } else {
      p.tag("extra_cycles", std::to_string(extra_cycles.size()));
      p.tag("max_exp", std::to_string(max_exp));
      p.tag("presents",
            "quotient of K by extra cycle relators, truncated in the exponent");
      p.tag("complete", "false");
    }
    return p;
  }

  bool verify_relator(Word const& edge_word, BBContext const& ctx) {
    return is_identity(phi(edge_word, ctx), ctx.raag());
  }

  Word express_in_kernel(Word const& vertex_word, BBContext const& ctx) {
    if (!vertex_word.alphabet()->compatible(*ctx.vertex_alphabet())) {
      throw DomainError("expected a word over the vertex generators");
    }
    if (exponent_sum(vertex_word) != 0) {
      throw DomainError("word has nonzero exponent sum, so it is not in H");
    }
    // Syllables a_1^{n_1} ... a_m^{n_m} with a_i != a_{i+1}.
    std::vector<std::pair<Vertex, long>> syl;
    for (auto const& l : vertex_word.letters()) {
      if (!syl.empty() && syl.back().first == l.gen) {
        syl.back().second += l.sign;
      } else {
        syl.emplace_back(l.gen, l.sign);
      }
    }
    // Peel the last syllable: with (f_1..f_r) the tree path from a_{m-1} to
    // a_m, phi(f_1^-n ... f_r^-n) = a_{m-1}^-n a_m^n (adjacent vertices
    // commute), so w = w' . phi(piece) with the last exponent merged left.
    auto const&                      alphabet = *ctx.edge_alphabet();
    std::vector<std::vector<Letter>> pieces;
    while (syl.size() > 1) {
      auto const [last, n] = syl.back();
      syl.pop_back();
      Vertex const        prev = syl.back().first;
      std::vector<Letter> piece;
      for (auto const& e : ctx.tree().path(prev, last)) {
        Letter l = edge_letter(alphabet, e);
        l.sign   = n > 0 ? -l.sign : l.sign;
        for (long i = 0; i < (n < 0 ? -n : n); ++i) {
          piece.push_back(l);
        }
      }
      pieces.push_back(std::move(piece));
      syl.back().second += n;
      if (syl.back().second == 0) {
        syl.pop_back();
        if (syl.size() >= 2
            && syl[syl.size() - 2].first == syl.back().first) {
          syl[syl.size() - 2].second += syl.back().second;
          syl.pop_back();
        }
      }
    }
    std::vector<Letter> out;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      out.insert(out.end(), it->begin(), it->end());
    }
    return Word(ctx.edge_alphabet(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homotopy moves
  ////////////////////////////////////////////////////////////////////////

  DirectedCycle apply_move(DirectedCycle const& cycle,
                           Move const&          move,
                           FlagComplex const&   complex) {
    std::vector<DirectedEdge> edges = cycle.edges();
    std::size_t const         l     = edges.size();
    auto                      at    = [&](std::size_t i) {
      return edges.begin() + static_cast<std::ptrdiff_t>(i);
    };
    switch (move.kind) {
      case Move::Kind::insert:
        if (move.pos > l) {
          throw DomainError("insert position out of range");
        }
        if (!complex.is_edge(move.e)) {
          throw DomainError("insert: not an edge of the complex");
        }
        if (move.e.initial != cycle.vertex_at(move.pos)) {
          throw DomainError("insert: edge does not start at the cycle vertex");
        }
        edges.insert(at(move.pos), {move.e, move.e.reverse()});
        break;
      case Move::Kind::remove:
        if (move.pos + 1 >= l) {
          throw DomainError("remove position out of range");
        }
        if (edges[move.pos + 1] != edges[move.pos].reverse()) {
          throw DomainError("remove: no backtrack e e-bar at this position");
        }
        if (l < 4) {
          throw DomainError("remove: the cycle would become shorter than 2");
        }
        edges.erase(at(move.pos), at(move.pos + 2));
        break;
      case Move::Kind::triangle: {
        if (move.pos >= l) {
          throw DomainError("triangle position out of range");
        }
        if (edges[move.pos] != move.e) {
          throw DomainError("triangle: the cycle has another edge here");
        }
        DirectedEdge const& e = move.e;
        DirectedEdge const& f = move.f;
        DirectedEdge const& g = move.g;
        if (!complex.is_edge(e) || !complex.is_edge(f) || !complex.is_edge(g)
            || e.terminal != f.initial || f.terminal != g.initial
            || g.terminal != e.initial || e.initial == f.terminal) {
          throw DomainError("triangle: (e, f, g) is not a directed triangle");
        }
        edges[move.pos] = g.reverse();
        edges.insert(at(move.pos + 1), f.reverse());
        break;
      }
      case Move::Kind::rotate:
        std::rotate(edges.begin(), at(move.pos % l), edges.end());
        break;
    }
    return DirectedCycle(complex, std::move(edges));
  }

  DirectedCycle cycle_from_relator(Word const&      relator,
                                   long             n,
                                   BBContext const& ctx) {
    if (n == 0) {
      throw DomainError("c^[n] needs n != 0");
    }
    require_edge_word(relator, ctx);
    std::size_t const reps = static_cast<std::size_t>(n < 0 ? -n : n);
    int const         sign = n < 0 ? -1 : 1;
    auto const&       ls   = relator.letters();
    if (ls.empty() || ls.size() % reps != 0) {
      throw DomainError("word is not of the form c^[n]");
    }
    std::vector<DirectedEdge> edges;
    for (std::size_t i = 0; i < ls.size(); i += reps) {
      for (std::size_t j = i; j < i + reps; ++j) {
        if (ls[j] != ls[i] || ls[j].sign != sign) {
          throw DomainError("word is not of the form c^[n]");
        }
      }
      edges.push_back(relator.alphabet()->endpoints(ls[i].gen));
    }
    return DirectedCycle(ctx.complex(), std::move(edges));
  }

  Word apply_homotopy_move(Word const&      relator,
                           Move const&      move,
                           long             n,
                           BBContext const& ctx) {
    DirectedCycle c = cycle_from_relator(relator, n, ctx);
    return cn_relator(apply_move(c, move, ctx.complex()), n,
                      relator.alphabet());
  }

  namespace {

    std::vector<Move> successor_moves(DirectedCycle const& c,
                                      FlagComplex const&   k,
                                      std::size_t          max_len) {
      std::vector<Move> out;
      auto const&       edges = c.edges();
      std::size_t const l     = edges.size();
      for (std::size_t r = 1; r < l; ++r) {
        out.push_back(Move::rotate(r));
      }
      if (l >= 4) {
        for (std::size_t i = 0; i + 1 < l; ++i) {
          if (edges[i + 1] == edges[i].reverse()) {
            out.push_back(Move::remove(i));
          }
        }
      }
      if (l + 1 <= max_len) {
        for (std::size_t i = 0; i < l; ++i) {
          DirectedEdge const e = edges[i];
          for (Vertex w : k.neighbours(e.terminal)) {
            if (w != e.initial && k.adjacent(w, e.initial)) {
              out.push_back(Move::triangle(
                  i, e, {e.terminal, w}, {w, e.initial}));
            }
          }
        }
      }
      if (l + 2 <= max_len) {
        for (std::size_t i = 0; i <= l; ++i) {
          Vertex const v = c.vertex_at(i);
          for (Vertex w : k.neighbours(v)) {
            out.push_back(Move::insert(i, {v, w}));
          }
        }
      }
      return out;
    }

  }  // namespace

  MoveSearchResult find_move_sequence(DirectedCycle const& from,
                                      DirectedCycle const& to,
                                      BBContext const&     ctx,
                                      std::size_t          budget,
                                      std::size_t          extra_length) {
    MoveSearchResult result;
    if (from == to) {
      result.moves = std::vector<Move>{};
      return result;
    }
    std::size_t const max_len
        = std::max(from.length(), to.length()) + extra_length;
    using Key = std::vector<DirectedEdge>;
    // Each visited cycle remembers its predecessor and the move taken.
    std::map<Key, std::pair<Key, Move>> parent;
    std::deque<DirectedCycle>           queue{from};
    parent.emplace(from.edges(), std::make_pair(Key{}, Move::rotate(0)));
    while (!queue.empty() && result.expanded < budget) {
      DirectedCycle c = queue.front();
      queue.pop_front();
      ++result.expanded;
      for (auto const& m : successor_moves(c, ctx.complex(), max_len)) {
        DirectedCycle next = apply_move(c, m, ctx.complex());
        if (!parent.emplace(next.edges(), std::make_pair(c.edges(), m))
                 .second) {
          continue;
        }
        if (next == to) {
          std::vector<Move> path;
          Key               cur = next.edges();
          while (cur != from.edges()) {
            auto const& [prev, move] = parent.at(cur);
            path.push_back(move);
            cur = prev;
          }
          std::reverse(path.begin(), path.end());
          result.moves = std::move(path);
          return result;
        }
        queue.push_back(std::move(next));
      }
    }
    return result;
  }

  std::string serialize_moves(std::vector<Move> const& moves,
                              FlagComplex const&       complex) {
    std::ostringstream out;
    for (auto const& m : moves) {
      switch (m.kind) {
        case Move::Kind::insert:
          out << "ins " << m.pos << ' ' << complex.edge_name(m.e) << '\n';
          break;
        case Move::Kind::remove:
          out << "del " << m.pos << '\n';
          break;
        case Move::Kind::triangle:
          out << "tri " << m.pos << ' ' << complex.edge_name(m.e) << ' '
              << complex.edge_name(m.f) << ' ' << complex.edge_name(m.g)
              << '\n';
          break;
        case Move::Kind::rotate:
          out << "rot " << m.pos << '\n';
          break;
      }
    }
    return out.str();
  }

  namespace {

    DirectedEdge parse_edge_token(std::string const& tok,
                                  FlagComplex const& complex,
                                  std::size_t        line,
                                  std::size_t        col) {
      if (tok.size() < 5 || tok.front() != '[' || tok.back() != ']') {
        throw ParseError("expected an edge [a>b], got \"" + tok + "\"", line,
                         col);
      }
      auto gt = tok.find('>');
      if (gt == std::string::npos) {
        throw ParseError("expected an edge [a>b], got \"" + tok + "\"", line,
                         col);
      }
      auto a = complex.find_vertex(tok.substr(1, gt - 1));
      auto b = complex.find_vertex(tok.substr(gt + 1, tok.size() - gt - 2));
      if (!a || !b || !complex.is_edge({*a, *b})) {
        throw ParseError("\"" + tok + "\" is not a directed edge of the complex",
                         line, col);
      }
      return {*a, *b};
    }

  }  // namespace

  std::vector<Move> parse_moves(std::string_view   text,
                                FlagComplex const& complex) {
    std::vector<Move> out;
    std::size_t       line_no = 0;
    std::size_t       pos     = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string line(text.substr(pos, end - pos));
      pos = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.resize(hash);
      }
      // Tokens with their 1-based columns.
      std::vector<std::pair<std::string, std::size_t>> toks;
      for (std::size_t i = 0; i < line.size();) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < line.size()
               && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        toks.emplace_back(line.substr(start, i - start), start + 1);
      }
      if (toks.empty()) {
        continue;
      }
      auto number = [&](std::size_t t) {
        if (t >= toks.size()) {
          throw ParseError("missing position", line_no, line.size() + 1);
        }
        auto const& s = toks[t].first;
        if (s.empty()
            || !std::all_of(s.begin(), s.end(),
                            [](char c) { return std::isdigit(
                                             static_cast<unsigned char>(c)); })) {
          throw ParseError("expected a nonnegative integer", line_no,
                           toks[t].second);
        }
        return static_cast<std::size_t>(std::stoull(s));
      };
      auto edge = [&](std::size_t t) {
        if (t >= toks.size()) {
          throw ParseError("missing edge", line_no, line.size() + 1);
        }
        return parse_edge_token(toks[t].first, complex, line_no,
                                toks[t].second);
      };
      auto arity = [&](std::size_t n) {
        if (toks.size() > n) {
          throw ParseError("trailing tokens", line_no, toks[n].second);
        }
      };
      std::string const& verb = toks[0].first;
      if (verb == "ins") {
        arity(3);
        out.push_back(Move::insert(number(1), edge(2)));
      } else if (verb == "del") {
        arity(2);
        out.push_back(Move::remove(number(1)));
      } else if (verb == "tri") {
        arity(5);
        out.push_back(Move::triangle(number(1), edge(2), edge(3), edge(4)));
      } else if (verb == "rot") {
        arity(2);
        out.push_back(Move::rotate(number(1)));
      } else {
        throw ParseError("unknown move \"" + verb + "\"", line_no,
                         toks[0].second);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // G'
  ////////////////////////////////////////////////////////////////////////

  GPrimeElement gprime_identity(BBContext const& ctx) {
    return {Word(ctx.edge_alphabet()), 0};
  }

  Word psi_a_power(Word const& h, long j, BBContext const& ctx) {
    Word out = h;
    for (long i = 0; i < (j < 0 ? -j : j); ++i) {
      out = j > 0 ? psi_a(out, ctx) : psi_a_inverse(out, ctx);
    }
    return out;
  }

  GPrimeElement gprime_multiply(GPrimeElement const& x,
                                GPrimeElement const& y,
                                BBContext const&     ctx) {
    return {x.h * psi_a_power(y.h, x.k, ctx), x.k + y.k};
  }

  GPrimeElement gprime_inverse(GPrimeElement const& x, BBContext const& ctx) {
    return {psi_a_power(x.h.inverse(), -x.k, ctx), -x.k};
  }

  GPrimeElement theta(Vertex b, BBContext const& ctx) {
    return {path_element(ctx, b, ctx.basepoint()), 1};
  }

  Word phi_tilde(GPrimeElement const& x, BBContext const& ctx) {
    return phi(x.h, ctx)
           * Word::power(ctx.vertex_alphabet(), ctx.basepoint(), x.k);
  }

}  // namespace bbgroups
