// Presentations of the kernel H of the map G -> Z sending every vertex
// generator of a right-angled Artin group to 1, together with the maps used
// to prove them: edge words to vertex words (phi), tree paths, the letterwise
// inversion (xi), the basepoint twist (psi_a), the homotopy moves on
// cycles, and the extension G' of H by Z.
//
// Words over directed-edge letters denote elements of H through phi. Every
// identity here that involves tree paths holds in H, so tests compare
// phi-images in the Artin group rather than edge words.

#ifndef BBGROUPS_BB_HPP_
#define BBGROUPS_BB_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complex.hpp"
#include "fundamental_group.hpp"
#include "presentation.hpp"
#include "words.hpp"

namespace bbgroups {

  //! A connected flag complex with a basepoint and the breadth-first tree
  //! from it.
  class BBContext {
   public:
    //! Throws DomainError if the complex is empty or disconnected, or the
    //! basepoint is not a vertex.
    BBContext(std::shared_ptr<FlagComplex const> complex, Vertex basepoint = 0);

    FlagComplex const& complex() const noexcept {
      return _raag.complex();
    }
    Vertex basepoint() const noexcept {
      return _basepoint;
    }
    SpanningTree const& tree() const noexcept {
      return _tree;
    }
    RaagContext const& raag() const noexcept {
      return _raag;
    }
    //! Vertex letters of the Artin group.
    AlphabetPtr const& vertex_alphabet() const noexcept {
      return _raag.alphabet();
    }
    //! Every directed edge, numbered as in FlagComplex::directed_edge.
    AlphabetPtr const& edge_alphabet() const noexcept {
      return _edges;
    }

    //! Parses a word over the directed-edge letters, e.g. "[a>b]^2 [b>c]".
    Word edge_word(std::string_view text) const {
      return parse_word(_edges, text);
    }
    Word vertex_word(std::string_view text) const {
      return parse_word(_raag.alphabet(), text);
    }
    //! The one-letter word e.
    Word edge(DirectedEdge e) const;

   private:
    Vertex       _basepoint;
    RaagContext  _raag;
    SpanningTree _tree;
    AlphabetPtr  _edges;
  };

  //! Each edge letter e maps to (initial e)(terminal e)^-1. Accepts any
  //! directed-edge alphabet over the context's complex.
  Word phi(Word const& edge_word, BBContext const& ctx);

  //! Edge word of the tree path from `from` to `to`.
  Word path_element(BBContext const& ctx, Vertex from, Vertex to);

  //! Flips the sign of every letter in place (order preserved).
  Word xi(Word const& edge_word);

  //! e -> p(a, initial e) e p(initial e, a) on letters, extended
  //! multiplicatively. The result is over the input's alphabet.
  Word psi_a(Word const& edge_word, BBContext const& ctx);

  //! xi psi_a xi, the inverse of psi_a in H.
  Word psi_a_inverse(Word const& edge_word, BBContext const& ctx);

  //! e_1^n ... e_l^n over `alphabet`; edges not in the alphabet are written
  //! as the inverse of their reverse. Throws DomainError when n == 0.
  Word cn_relator(DirectedCycle const& cycle, long n, AlphabetPtr const& alphabet);
  //! Same, over the context's full directed-edge alphabet.
  Word cn_relator(DirectedCycle const& cycle, long n, BBContext const& ctx);

  //! Closed directed edge-walks of length 2 .. max_len, one per rotation
  //! class (the least rotation by directed-edge index), ordered by length
  //! and then lexicographically.
  std::vector<DirectedCycle> closed_walks(FlagComplex const& complex,
                                          std::size_t        max_len);

  //! The infinite presentation of H, truncated: all c^[n] for closed walks
  //! with 2 <= length <= max_len and 0 < |n| <= max_exp. Always tagged as
  //! a truncation.
  Presentation relators_theorem1(BBContext const& ctx,
                                 std::size_t      max_len,
                                 long             max_exp);

  //! One generator per undirected edge (u, v), u < v, written `[u>v]`.
  //! Relators c^[1] and c^[-1] for each triangle u < v < w oriented
  //! u -> v -> w -> u, plus c^[n], 0 < |n| <= max_exp, for every extra
  //! cycle. Tagged `complete` only when the complex is certified simply
  //! connected and no extra cycles are given.
  Presentation finite_presentation(BBContext const&                  ctx,
                                   std::vector<DirectedCycle> const& extra_cycles
                                   = {},
                                   long        max_exp = 1,
                                   std::size_t budget  = default_tietze_budget);

  //! One based loop p(a, u) [u>v] p(v, a) per non-tree edge (u, v), u < v.
  //! These generate the fundamental group.
  std::vector<DirectedCycle> loop_basis(BBContext const& ctx);

  //! True iff phi(edge_word) is trivial in the Artin group.
  bool verify_relator(Word const& edge_word, BBContext const& ctx);

  //! An edge word whose phi-image equals `vertex_word` in the Artin group.
  //! Throws DomainError when the exponent sum is nonzero.
  Word express_in_kernel(Word const& vertex_word, BBContext const& ctx);

  ////////////////////////////////////////////////////////////////////////
  // Homotopy moves
  ////////////////////////////////////////////////////////////////////////

  struct Move {
    enum class Kind { insert, remove, triangle, rotate };

    Kind        kind;
    std::size_t pos = 0;
    //! insert: the edge e spliced in as e e-bar. triangle: (e, f, g).
    DirectedEdge e{}, f{}, g{};

    static Move insert(std::size_t pos, DirectedEdge e) {
      return {Kind::insert, pos, e, {}, {}};
    }
    static Move remove(std::size_t pos) {
      return {Kind::remove, pos, {}, {}, {}};
    }
    static Move triangle(std::size_t pos, DirectedEdge e, DirectedEdge f,
                         DirectedEdge g) {
      return {Kind::triangle, pos, e, f, g};
    }
    //! Re-root the cycle at edge `k`.
    static Move rotate(std::size_t k) {
      return {Kind::rotate, k, {}, {}, {}};
    }

    friend bool operator==(Move const&, Move const&) = default;
  };

  //! Applies one move:
  //!   insert p e:     d'.d''   -> d'.e.e-bar.d''  (e starts at vertex p)
  //!   remove p:       d'.e.e-bar.d'' -> d'.d''    (e at position p)
  //!   triangle p efg: d'.e.d'' -> d'.g-bar.f-bar.d'' ((e,f,g) a triangle)
  //!   rotate k:       (e_1..e_l) -> (e_{k+1}..e_l, e_1..e_k)
  //! Throws DomainError when the site does not match.
  DirectedCycle apply_move(DirectedCycle const& cycle,
                           Move const&          move,
                           FlagComplex const&   complex);

  //! Recovers c from the word c^[n] over the full directed-edge alphabet.
  DirectedCycle cycle_from_relator(Word const&      relator,
                                   long             n,
                                   BBContext const& ctx);

  //! The relator of the moved cycle: decodes `relator` as c^[n], applies
  //! the move, and returns c'^[n].
  Word apply_homotopy_move(Word const&      relator,
                           Move const&      move,
                           long             n,
                           BBContext const& ctx);

  struct MoveSearchResult {
    //! Set when a sequence was found; nullopt means unknown, never "not
    //! homotopic".
    std::optional<std::vector<Move>> moves;
    std::size_t                      expanded = 0;
  };

  //! Breadth-first search over the moves, expanding at most `budget`
  //! cycles. Intermediate cycles are at most `extra_length` longer than the
  //! longer of the two endpoints.
  MoveSearchResult find_move_sequence(DirectedCycle const& from,
                                      DirectedCycle const& to,
                                      BBContext const&     ctx,
                                      std::size_t          budget,
                                      std::size_t          extra_length = 2);

  //! One move per line: `ins <pos> <edge>`, `del <pos>`,
  //! `tri <pos> <e> <f> <g>`, `rot <k>`; edges written `[a>b]`.
  std::string       serialize_moves(std::vector<Move> const& moves,
                                    FlagComplex const&       complex);
  std::vector<Move> parse_moves(std::string_view text, FlagComplex const& complex);

  ////////////////////////////////////////////////////////////////////////
  // The extension G' of H by Z
  ////////////////////////////////////////////////////////////////////////

  //! (h, k) stands for h a'^k, where a' acts on H by conjugation as psi_a.
  struct GPrimeElement {
    Word h;
    long k = 0;
  };

  GPrimeElement gprime_identity(BBContext const& ctx);
  //! (h, j)(h', k) = (h psi_a^j(h'), j + k).
  GPrimeElement gprime_multiply(GPrimeElement const& x,
                                GPrimeElement const& y,
                                BBContext const&     ctx);
  GPrimeElement gprime_inverse(GPrimeElement const& x, BBContext const& ctx);
  //! psi_a applied j times (its inverse when j < 0).
  Word psi_a_power(Word const& h, long j, BBContext const& ctx);

  //! theta(b) = (p(b, a), 1).
  GPrimeElement theta(Vertex b, BBContext const& ctx);
  //! (h, k) -> phi(h) a^k in the Artin group.
  Word phi_tilde(GPrimeElement const& x, BBContext const& ctx);

}  // namespace bbgroups

#endif  // BBGROUPS_BB_HPP_
