#include "bbgroups/complex.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "bbgroups/error.hpp"

namespace bbgroups {

  ////////////////////////////////////////////////////////////////////////
  // FlagComplex
  ////////////////////////////////////////////////////////////////////////

  bool valid_vertex_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c))
             || std::string_view("-^[]>#,:").find(c) != std::string_view::npos;
    });
  }

  FlagComplex FlagComplex::from_graph(
      std::vector<std::string> const&                         vertices,
      std::vector<std::pair<std::string, std::string>> const& edges,
      std::optional<std::size_t>                              dim_cap) {
    FlagComplex k;
    k._names = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!valid_vertex_name(vertices[i])) {
        throw DomainError("invalid vertex identifier \"" + vertices[i] + "\"");
      }
      if (!k._index.emplace(vertices[i], static_cast<Vertex>(i)).second) {
        throw DomainError("duplicate vertex \"" + vertices[i] + "\"");
      }
    }
    std::size_t const n = vertices.size();
    k._adj.assign(n * n, 0);
    k._nbrs.resize(n);
    for (auto const& [a, b] : edges) {
      auto ia = k.find_vertex(a);
      auto ib = k.find_vertex(b);
      if (!ia) {
        throw DomainError("edge " + a + "-" + b + ": unknown vertex \"" + a
                          + "\"");
      }
      if (!ib) {
        throw DomainError("edge " + a + "-" + b + ": unknown vertex \"" + b
                          + "\"");
      }
      if (*ia == *ib) {
        throw DomainError("loop edge " + a + "-" + b);
      }
      if (k._adj[*ia * n + *ib]) {
        throw DomainError("duplicate edge " + a + "-" + b);
      }
      k._adj[*ia * n + *ib] = k._adj[*ib * n + *ia] = 1;
      k._nbrs[*ia].push_back(*ib);
      k._nbrs[*ib].push_back(*ia);
      k._edges.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
    }
    for (auto& nb : k._nbrs) {
      std::sort(nb.begin(), nb.end());
    }
    std::sort(k._edges.begin(), k._edges.end());
    k.enumerate_cliques(dim_cap);
    return k;
  }

  void FlagComplex::enumerate_cliques(std::optional<std::size_t> dim_cap) {
    std::size_t const n = _names.size();
    _simplices.clear();
    _complete = true;
    if (n == 0) {
      return;
    }
    std::size_t const max_size
        = dim_cap ? std::min(*dim_cap + 1, n) : n;

    // Extend each clique only by vertices larger than its last one, so every
    // clique is produced exactly once.
    Simplex clique;
    auto    extend = [&](auto&& self, std::vector<Vertex> const& cands) -> void {
      std::size_t const dim = clique.size() - 1;
      if (_simplices.size() <= dim) {
        _simplices.resize(dim + 1);
      }
      _simplices[dim].push_back(clique);
      if (cands.empty()) {
        return;
      }
      if (clique.size() == max_size) {
        _complete = false;
        return;
      }
      for (std::size_t i = 0; i < cands.size(); ++i) {
        Vertex const        v = cands[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
          if (adjacent(v, cands[j])) {
            next.push_back(cands[j]);
          }
        }
        clique.push_back(v);
        self(self, next);
        clique.pop_back();
      }
    };
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> cands;
      for (Vertex w : _nbrs[v]) {
        if (w > v) {
          cands.push_back(w);
        }
      }
      clique = {v};
      extend(extend, cands);
    }
    _simplex_lookup.assign(_simplices.size(), {});
    for (std::size_t d = 0; d < _simplices.size(); ++d) {
      std::sort(_simplices[d].begin(), _simplices[d].end());
      for (std::size_t i = 0; i < _simplices[d].size(); ++i) {
        _simplex_lookup[d].emplace(_simplices[d][i], i);
      }
    }
  }

  std::optional<Vertex> FlagComplex::find_vertex(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Vertex FlagComplex::vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) {
      throw DomainError("unknown vertex \"" + std::string(name) + "\"");
    }
    return *v;
  }

  std::optional<std::size_t> FlagComplex::edge_index(Vertex u, Vertex v) const {
    std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(_edges.begin(), _edges.end(), key);
    if (it == _edges.end() || *it != key) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _edges.begin());
  }

  DirectedEdge FlagComplex::directed_edge(std::size_t index) const {
    auto const& [u, v] = _edges.at(index / 2);
    return index % 2 == 0 ? DirectedEdge{u, v} : DirectedEdge{v, u};
  }

  std::optional<std::size_t>
  FlagComplex::directed_edge_index(DirectedEdge e) const {
    auto i = edge_index(e.initial, e.terminal);
    if (!i) {
      return std::nullopt;
    }
    return 2 * *i + (e.initial < e.terminal ? 0 : 1);
  }

  std::string FlagComplex::edge_name(DirectedEdge e) const {
    return "[" + name(e.initial) + ">" + name(e.terminal) + "]";
  }

  std::vector<Simplex> const& FlagComplex::simplices(std::size_t k) const {
    static std::vector<Simplex> const empty;
    return k < _simplices.size() ? _simplices[k] : empty;
  }

  std::optional<std::size_t>
  FlagComplex::simplex_index(Simplex const& s) const {
    if (s.empty() || s.size() > _simplex_lookup.size()) {
      return std::nullopt;
    }
    auto const& m  = _simplex_lookup[s.size() - 1];
    auto        it = m.find(s);
    if (it == m.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::size_t> FlagComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (auto const& s : _simplices) {
      f.push_back(s.size());
    }
    return f;
  }

  bool FlagComplex::spans_simplex(std::vector<Vertex> const& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] >= num_vertices()) {
        return false;
      }
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Vertex>> FlagComplex::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char>                seen(num_vertices(), 0);
    for (Vertex s = 0; s < num_vertices(); ++s) {
      if (seen[s]) {
        continue;
      }
      std::vector<Vertex> comp;
      std::queue<Vertex>  q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        comp.push_back(v);
        for (Vertex w : _nbrs[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool FlagComplex::is_connected() const {
    return components().size() <= 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // DirectedCycle
  ////////////////////////////////////////////////////////////////////////

  DirectedCycle::DirectedCycle(FlagComplex const&        complex,
                               std::vector<DirectedEdge> edges)
      : _edges(std::move(edges)) {
    if (_edges.size() < 2) {
      throw DomainError("a directed cycle needs at least 2 edges");
    }
    for (std::size_t i = 0; i < _edges.size(); ++i) {
      if (!complex.is_edge(_edges[i])) {
        throw DomainError("cycle step " + std::to_string(i)
                          + " is not an edge of the complex");
      }
      auto const& next = _edges[(i + 1) % _edges.size()];
      if (_edges[i].terminal != next.initial) {
        throw DomainError(i + 1 == _edges.size()
                              ? "cycle is not closed"
                              : "cycle steps " + std::to_string(i) + " and "
                                    + std::to_string(i + 1) + " do not meet");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Homology
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> HomologyResult::betti() const {
    std::vector<std::size_t> b;
    for (auto const& g : groups) {
      b.push_back(g.betti);
    }
    return b;
  }

  std::int64_t euler_characteristic(FlagComplex const& complex) {
    if (!complex.fully_enumerated()) {
      throw DomainError(
          "Euler characteristic of a truncated clique enumeration");
    }
    std::int64_t chi  = 0;
    std::int64_t sign = 1;
    for (auto f : complex.f_vector()) {
      chi += sign * static_cast<std::int64_t>(f);
      sign = -sign;
    }
    return chi;
  }

  IntegerMatrix boundary_matrix(FlagComplex const& complex,
                                std::size_t        k,
                                bool               augmented) {
    auto const& cells = complex.simplices(k);
    if (k == 0) {
      IntegerMatrix m(augmented ? 1 : 0, cells.size());
      for (std::size_t j = 0; augmented && j < cells.size(); ++j) {
        m(0, j) = 1;
      }
      return m;
    }
    auto const&   faces = complex.simplices(k - 1);
    IntegerMatrix m(faces.size(), cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      Simplex const& s = cells[j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto row = complex.simplex_index(face);
        if (!row) {
          throw std::logic_error("face of a simplex missing from complex");
        }
        m(*row, j) = (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }

  HomologyResult homology(FlagComplex const& complex, bool reduced) {
    if (!complex.fully_enumerated()) {
      throw DomainError("homology of a truncated clique enumeration");
    }
    std::size_t const top = complex.num_dimensions();
    HomologyResult    result;
    result.reduced = reduced;
    if (top == 0) {
      return result;
    }
    // boundaries[k] = d_k for k = 0 .. top (d_top is the zero map from the
    // empty chain group).
    std::vector<IntegerMatrix> boundaries;
    for (std::size_t k = 0; k <= top; ++k) {
      boundaries.push_back(boundary_matrix(complex, k, reduced));
    }
    for (std::size_t k = 1; k <= top; ++k) {
      auto const& lower = boundaries[k - 1];
      if (lower.rows() > 0 && !(lower * boundaries[k]).is_zero()) {
        throw std::logic_error("boundary of a boundary is nonzero in degree "
                               + std::to_string(k));
      }
    }
    std::vector<SmithResult> snf;
    for (auto const& m : boundaries) {
      snf.push_back(smith_normal_form(m));
    }
    for (std::size_t k = 0; k < top; ++k) {
      HomologyGroup g;
      std::size_t   cycles = complex.simplices(k).size() - snf[k].rank;
      g.betti              = cycles - snf[k + 1].rank;
      g.torsion            = snf[k + 1].torsion();
      result.groups.push_back(std::move(g));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph input
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      line;
      std::size_t      column;
    };

    std::vector<Token> split_tokens(std::string_view line,
                                    std::size_t      line_no,
                                    std::size_t      offset) {
      std::vector<Token> out;
      std::size_t        i = offset;
      while (i < line.size()) {
        while (i < line.size()
               && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t start = i;
        while (i < line.size()
               && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back({line.substr(start, i - start), line_no, start + 1});
        }
      }
      return out;
    }

  }  // namespace

  FlagComplex parse_graph_text(std::string_view text) {
    std::vector<std::string>                         vertices;
    std::set<std::string, std::less<>>               declared;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>>    seen_edges;
    std::vector<Token>                               edge_tokens;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      ++line_no;
      pos = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::size_t first = 0;
      while (first < line.size()
             && std::isspace(static_cast<unsigned char>(line[first]))) {
        ++first;
      }
      if (first == line.size()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      std::size_t colon = line.find(':', first);
      if (colon == std::string_view::npos) {
        throw ParseError("expected \"vertices:\" or \"edges:\"", line_no,
                         first + 1);
      }
      std::string_view key = line.substr(first, colon - first);
      while (!key.empty()
             && std::isspace(static_cast<unsigned char>(key.back()))) {
        key.remove_suffix(1);
      }
      auto tokens = split_tokens(line, line_no, colon + 1);
      if (key == "vertices") {
        for (auto const& t : tokens) {
          if (!valid_vertex_name(t.text)) {
            throw ParseError("invalid vertex identifier \""
                                 + std::string(t.text) + "\"",
                             t.line, t.column);
          }
          if (!declared.emplace(t.text).second) {
            throw ParseError("duplicate vertex \"" + std::string(t.text)
                                 + "\"",
                             t.line, t.column);
          }
          vertices.emplace_back(t.text);
        }
      } else if (key == "edges") {
        for (auto const& t : tokens) {
          edge_tokens.push_back(t);
        }
      } else {
        throw ParseError("unknown key \"" + std::string(key) + "\"", line_no,
                         first + 1);
      }
      if (end == text.size()) {
        break;
      }
    }
    // Edges are checked after all vertex lines so declaration order is free.
    for (auto const& t : edge_tokens) {
      auto dash = t.text.find('-');
      if (dash == std::string_view::npos
          || t.text.find('-', dash + 1) != std::string_view::npos) {
        throw ParseError("expected an edge of the form a-b, got \""
                             + std::string(t.text) + "\"",
                         t.line, t.column);
      }
      std::string a(t.text.substr(0, dash));
      std::string b(t.text.substr(dash + 1));
      if (declared.count(a) == 0) {
        throw ParseError("unknown vertex \"" + a + "\"", t.line, t.column);
      }
      if (declared.count(b) == 0) {
        throw ParseError("unknown vertex \"" + b + "\"", t.line,
                         t.column + dash + 1);
      }
      if (a == b) {
        throw ParseError("loop edge \"" + std::string(t.text) + "\"", t.line,
                         t.column);
      }
      auto key = std::minmax(a, b);
      if (!seen_edges.emplace(key.first, key.second).second) {
        throw ParseError("duplicate edge \"" + std::string(t.text) + "\"",
                         t.line, t.column);
      }
      edges.emplace_back(std::move(a), std::move(b));
    }
    return FlagComplex::from_graph(vertices, edges);
  }

  namespace {

    // Position of the n-th occurrence (0-based) of `needle`, as line/column.
    std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                               std::string_view needle,
                                               std::size_t      nth) {
      std::size_t at = 0;
      for (std::size_t i = 0;; ++i) {
        at = text.find(needle, at);
        if (at == std::string_view::npos) {
          return {0, 0};
        }
        if (i == nth) {
          break;
        }
        ++at;
      }
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < at; ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    std::pair<std::size_t, std::size_t> byte_to_line_col(std::string_view text,
                                                         std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

  }  // namespace

  FlagComplex parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      auto [line, col] = byte_to_line_col(text, e.byte);
      throw ParseError("malformed JSON graph", line, col);
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")
        || !j["vertices"].is_array() || !j["edges"].is_array()) {
      throw ParseError(
          "JSON graph must be an object with \"vertices\" and \"edges\" arrays",
          1, 1);
    }
    std::vector<std::string>           vertices;
    std::set<std::string, std::less<>> declared;
    for (auto const& v : j["vertices"]) {
      if (!v.is_string()) {
        throw ParseError("vertex identifiers must be strings", 0, 0);
      }
      auto const& name = v.get_ref<std::string const&>();
      auto [line, col] = locate(text, "\"" + name + "\"", 0);
      if (!valid_vertex_name(name)) {
        throw ParseError("invalid vertex identifier \"" + name + "\"", line,
                         col);
      }
      if (!declared.insert(name).second) {
        auto [l2, c2] = locate(text, "\"" + name + "\"", 1);
        throw ParseError("duplicate vertex \"" + name + "\"", l2, c2);
      }
      vertices.push_back(name);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>>    seen;
    std::map<std::string, std::size_t>               occurrences;
    for (auto const& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string()
          || !e[1].is_string()) {
        throw ParseError("each edge must be a pair of vertex strings", 0, 0);
      }
      std::string a = e[0], b = e[1];
      for (auto const* end : {&a, &b}) {
        std::size_t nth = occurrences[*end]++ + (declared.count(*end) ? 1 : 0);
        if (declared.count(*end) == 0) {
          auto [line, col] = locate(text, "\"" + *end + "\"", nth);
          throw ParseError("unknown vertex \"" + *end + "\"", line, col);
        }
        if (end == &b && a == b) {
          auto [line, col] = locate(text, "\"" + *end + "\"", nth - 1);
          throw ParseError("loop edge " + a + "-" + b, line, col);
        }
      }
      auto key = std::minmax(a, b);
      if (!seen.emplace(key.first, key.second).second) {
        auto [line, col]
            = locate(text, "\"" + a + "\"", occurrences[a]);
        throw ParseError("duplicate edge " + a + "-" + b, line, col);
      }
      edges.emplace_back(std::move(a), std::move(b));
    }
    return FlagComplex::from_graph(vertices, edges);
  }

  FlagComplex parse_graph(std::string_view text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
    }
    return parse_graph_text(text);
  }

}  // namespace bbgroups
