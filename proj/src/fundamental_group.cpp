#include "bbgroups/fundamental_group.hpp"

#include <algorithm>
#include <queue>

#include "bbgroups/error.hpp"

namespace bbgroups {

  SpanningTree::SpanningTree(FlagComplex const& complex, Vertex root)
      : _root(root) {
    std::size_t const n = complex.num_vertices();
    if (root >= n) {
      throw DomainError("spanning tree root is not a vertex");
    }
    std::size_t const unseen = static_cast<std::size_t>(-1);
    _parent.assign(n, root);
    _depth.assign(n, unseen);
    _depth[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    std::size_t reached = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : complex.neighbours(v)) {
        if (_depth[w] == unseen) {
          _depth[w]  = _depth[v] + 1;
          _parent[w] = v;
          ++reached;
          q.push(w);
        }
      }
    }
    if (reached != n) {
      throw DomainError("complex is disconnected");
    }
  }

  bool SpanningTree::is_tree_edge(Vertex u, Vertex v) const {
    return (u != _root && _parent.at(u) == v)
           || (v != _root && _parent.at(v) == u);
  }

  std::vector<DirectedEdge> SpanningTree::path(Vertex from, Vertex to) const {
    std::vector<DirectedEdge> up, down;
    while (_depth.at(from) > _depth.at(to)) {
      up.push_back({from, _parent[from]});
      from = _parent[from];
    }
    while (_depth.at(to) > _depth.at(from)) {
      down.push_back({_parent[to], to});
      to = _parent[to];
    }
    while (from != to) {
      up.push_back({from, _parent[from]});
      from = _parent[from];
      down.push_back({_parent[to], to});
      to = _parent[to];
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  Presentation pi1_presentation(FlagComplex const& complex, Vertex basepoint) {
    SpanningTree              tree(complex, basepoint);
    std::vector<DirectedEdge> gens;
    for (auto const& [u, v] : complex.edges()) {
      if (!tree.is_tree_edge(u, v)) {
        gens.push_back({u, v});
      }
    }
    AlphabetPtr  alphabet = Alphabet::directed_edges(complex, gens);
    Presentation p(alphabet);
    for (auto const& t : complex.simplices(2)) {
      // Boundary u -> v -> w -> u of the triangle u < v < w.
      DirectedEdge const  steps[] = {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
      std::vector<Letter> letters;
      for (auto const& e : steps) {
        if (auto g = alphabet->find(e)) {
          letters.push_back({*g, 1});
        } else if (auto h = alphabet->find(e.reverse())) {
          letters.push_back({*h, -1});
        }
      }
      Word w(alphabet, std::move(letters));
      if (!w.empty()) {
        p.add_relator(std::move(w));
      }
    }
    p.tag("construction", "edge-path group");
    p.tag("basepoint", complex.name(basepoint));
    return p;
  }

  std::string_view to_string(SimpleConnectivity s) {
    switch (s) {
      case SimpleConnectivity::certified_trivial:
        return "CertifiedTrivial";
      case SimpleConnectivity::certified_nontrivial:
        return "CertifiedNontrivial";
      case SimpleConnectivity::unknown:
        break;
    }
    return "Unknown";
  }

  SimpleConnectivity simply_connected_status(FlagComplex const& complex,
                                             std::size_t        budget) {
    if (complex.num_vertices() == 0 || !complex.is_connected()) {
      throw DomainError("complex is disconnected");
    }
    auto h = homology(complex);
    if (h.groups.size() > 1 && !h.groups[1].is_zero()) {
      return SimpleConnectivity::certified_nontrivial;
    }
    auto simplified = tietze_simplify(pi1_presentation(complex, 0), budget);
    if (simplified.presentation.generators()->size() == 0) {
      return SimpleConnectivity::certified_trivial;
    }
    return SimpleConnectivity::unknown;
  }

}  // namespace bbgroups
