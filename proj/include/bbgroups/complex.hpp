// Flag complexes built from finite graphs: faces, connectivity, integral
// homology and Euler characteristic.

#ifndef BBGROUPS_COMPLEX_HPP_
#define BBGROUPS_COMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "smith.hpp"

namespace bbgroups {

  //! Index of a vertex in its complex (declaration order).
  using Vertex = std::uint32_t;

  //! Sorted tuple of vertex indices.
  using Simplex = std::vector<Vertex>;

  //! An edge together with an orientation.
  struct DirectedEdge {
    Vertex initial;
    Vertex terminal;

    DirectedEdge reverse() const noexcept {
      return {terminal, initial};
    }

    friend auto operator<=>(DirectedEdge const&, DirectedEdge const&)
        = default;
  };

  //! The clique complex of a finite simple graph.
  //!
  //! Every (k+1)-clique of the graph is a k-simplex; simplices are derived,
  //! never supplied. Instances are immutable after construction.
  class FlagComplex {
   public:
    //! Builds the clique complex. `dim_cap`, when given, bounds the
    //! dimension of enumerated simplices; the complex then records whether
    //! anything was cut off.
    //!
    //! Throws DomainError on a duplicate vertex, an unknown endpoint, a loop
    //! or a duplicate edge.
    static FlagComplex
    from_graph(std::vector<std::string> const&                         vertices,
               std::vector<std::pair<std::string, std::string>> const& edges,
               std::optional<std::size_t> dim_cap = std::nullopt);

    std::size_t num_vertices() const noexcept {
      return _names.size();
    }
    std::size_t num_edges() const noexcept {
      return _edges.size();
    }

    std::string const& name(Vertex v) const {
      return _names.at(v);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Vertex> find_vertex(std::string_view name) const;
    //! Like find_vertex, but throws DomainError for an unknown name.
    Vertex vertex(std::string_view name) const;

    bool adjacent(Vertex u, Vertex v) const {
      return _adj.at(u * _names.size() + v) != 0;
    }
    //! Neighbours of `v` in increasing vertex order.
    std::vector<Vertex> const& neighbours(Vertex v) const {
      return _nbrs.at(v);
    }

    //! Undirected edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<Vertex, Vertex>> const& edges() const noexcept {
      return _edges;
    }
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    //! Directed edges are numbered 2i (u -> v) and 2i + 1 (v -> u) for the
    //! i-th undirected edge (u, v), u < v.
    std::size_t num_directed_edges() const noexcept {
      return 2 * _edges.size();
    }
    DirectedEdge directed_edge(std::size_t index) const;
    std::optional<std::size_t> directed_edge_index(DirectedEdge e) const;
    bool is_edge(DirectedEdge e) const {
      return e.initial != e.terminal && e.initial < num_vertices()
             && e.terminal < num_vertices() && adjacent(e.initial, e.terminal);
    }
    //! Text form `[a>b]` of a directed edge.
    std::string edge_name(DirectedEdge e) const;

    //! simplices(k) are the k-simplices in lexicographic order.
    std::vector<Simplex> const& simplices(std::size_t k) const;
    std::optional<std::size_t> simplex_index(Simplex const& s) const;
    //! One more than the largest enumerated dimension (0 when empty).
    std::size_t num_dimensions() const noexcept {
      return _simplices.size();
    }
    //! Face counts (f_0, f_1, ...).
    std::vector<std::size_t> f_vector() const;

    //! False when `dim_cap` cut off nonempty higher-dimensional faces.
    bool fully_enumerated() const noexcept {
      return _complete;
    }

    //! Checks that a vertex set is a clique (flag condition).
    bool spans_simplex(std::vector<Vertex> const& vertices) const;

    bool is_connected() const;
    //! Connected components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<Vertex>> components() const;

   private:
    FlagComplex() = default;
    void enumerate_cliques(std::optional<std::size_t> dim_cap);

    std::vector<std::string>                _names;
    std::unordered_map<std::string, Vertex> _index;
    std::vector<char>                       _adj;
    std::vector<std::vector<Vertex>>        _nbrs;
    std::vector<std::pair<Vertex, Vertex>>  _edges;
    std::vector<std::vector<Simplex>>       _simplices;
    std::vector<std::map<Simplex, std::size_t>> _simplex_lookup;
    bool                                         _complete = true;
  };

  //! A closed directed edge-walk (e_1, ..., e_l), l >= 2, in a complex.
  //! Vertices and edges may repeat.
  class DirectedCycle {
   public:
    //! Throws DomainError when an edge is not in `complex`, consecutive
    //! edges do not meet, the walk is not closed, or l < 2.
    DirectedCycle(FlagComplex const& complex, std::vector<DirectedEdge> edges);

    std::vector<DirectedEdge> const& edges() const noexcept {
      return _edges;
    }
    std::size_t length() const noexcept {
      return _edges.size();
    }
    //! Vertex at which position `i` (0 <= i <= l) of the walk sits.
    Vertex vertex_at(std::size_t i) const {
      return i == _edges.size() ? _edges.front().initial
                                : _edges.at(i).initial;
    }

    friend bool operator==(DirectedCycle const&, DirectedCycle const&)
        = default;

   private:
    std::vector<DirectedEdge> _edges;
  };

  struct HomologyGroup {
    std::size_t          betti = 0;
    std::vector<Integer> torsion;

    bool is_zero() const noexcept {
      return betti == 0 && torsion.empty();
    }
    friend bool operator==(HomologyGroup const&, HomologyGroup const&)
        = default;
  };

  struct HomologyResult {
    //! groups[k] is H_k for k = 0 .. top dimension.
    std::vector<HomologyGroup> groups;
    bool                       reduced = false;

    std::vector<std::size_t> betti() const;
  };

  //! Throws DomainError when the enumeration was truncated by `dim_cap`.
  std::int64_t euler_characteristic(FlagComplex const& complex);

  //! Boundary matrix d_k : C_k -> C_{k-1} in the simplex bases (rows are
  //! (k-1)-simplices). For k = 0 and `augmented`, the augmentation row of
  //! ones.
  IntegerMatrix boundary_matrix(FlagComplex const& complex,
                                std::size_t        k,
                                bool               augmented = false);

  //! Integral simplicial homology via Smith normal form. Verifies
  //! d_{k-1} d_k = 0 first (std::logic_error if not).
  HomologyResult homology(FlagComplex const& complex, bool reduced = false);

  //! Parses the text graph format
  //!
  //!     vertices: a b c
  //!     edges: a-b b-c
  //!
  //! or its JSON mirror, chosen by the first non-blank character.
  FlagComplex parse_graph(std::string_view text);
  FlagComplex parse_graph_text(std::string_view text);
  FlagComplex parse_graph_json(std::string_view text);

  //! Vertex identifiers: nonempty, no whitespace and none of "-^[]>#,:".
  bool valid_vertex_name(std::string_view name);

}  // namespace bbgroups

#endif  // BBGROUPS_COMPLEX_HPP_
