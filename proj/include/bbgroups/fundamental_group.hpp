// Edge-path presentations of the fundamental group of a flag complex and
// bounded certification of simple connectivity.

#ifndef BBGROUPS_FUNDAMENTAL_GROUP_HPP_
#define BBGROUPS_FUNDAMENTAL_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "presentation.hpp"

namespace bbgroups {

  //! Breadth-first spanning tree of a connected complex; neighbours are
  //! visited in increasing vertex order.
  class SpanningTree {
   public:
    //! Throws DomainError if the complex is disconnected or `root` is not a
    //! vertex.
    SpanningTree(FlagComplex const& complex, Vertex root);

    Vertex root() const noexcept {
      return _root;
    }
    //! Parent of `v`, or nullopt for the root.
    std::optional<Vertex> parent(Vertex v) const {
      return v == _root ? std::nullopt : std::optional<Vertex>(_parent.at(v));
    }
    std::size_t depth(Vertex v) const {
      return _depth.at(v);
    }
    bool is_tree_edge(Vertex u, Vertex v) const;

    //! The directed edges of the unique tree path from `from` to `to`.
    std::vector<DirectedEdge> path(Vertex from, Vertex to) const;

   private:
    Vertex                   _root;
    std::vector<Vertex>      _parent;
    std::vector<std::size_t> _depth;
  };

  //! Generators: the non-tree edges (u, v), u < v, named `[u>v]`.
  //! Relators: one per triangle, its boundary with tree edges deleted
  //! (triangles whose boundary becomes trivial are omitted).
  Presentation pi1_presentation(FlagComplex const& complex, Vertex basepoint);

  enum class SimpleConnectivity {
    certified_trivial,
    certified_nontrivial,
    unknown,
  };

  std::string_view to_string(SimpleConnectivity s);

  //! Nontrivial when H_1 != 0; trivial when Tietze simplification of the
  //! edge-path presentation reaches no generators within `budget`; unknown
  //! otherwise. Throws DomainError on a disconnected complex.
  SimpleConnectivity
  simply_connected_status(FlagComplex const& complex,
                          std::size_t        budget = default_tietze_budget);

}  // namespace bbgroups

#endif  // BBGROUPS_FUNDAMENTAL_GROUP_HPP_
