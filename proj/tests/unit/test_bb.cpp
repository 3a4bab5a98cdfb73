#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bbgroups/bb.hpp"
#include "bbgroups/error.hpp"

using namespace bbgroups;

namespace {

  std::shared_ptr<FlagComplex const> load(std::string const& name) {
    return std::make_shared<FlagComplex const>(
        parse_graph(oracle::slurp(oracle::data_path(name))));
  }

  bool same(Word const& x, Word const& y, BBContext const& ctx) {
    return raag_equal(x, y, ctx.raag());
  }

  Word random_edge_word(std::mt19937_64& rng, BBContext const& ctx,
                        std::size_t len) {
    auto const& a = ctx.edge_alphabet();
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(a->size() - 1));
    std::bernoulli_distribution coin;
    std::vector<Letter>         ls;
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back({pick(rng), coin(rng) ? 1 : -1});
    }
    return Word(a, ls);
  }

}  // namespace

TEST_CASE("phi") {
  BBContext edge(load("edge.txt"));
  CHECK(phi(edge.edge_word("[a>b]"), edge).to_string() == "a b^-1");
  CHECK(phi(edge.edge_word("[a>b] [b>a]"), edge).empty());

  BBContext c4(load("c4.txt"));
  CHECK(phi(c4.edge_word("[a>b] [b>c] [c>d] [d>a]"), c4).empty());
  CHECK(verify_relator(c4.edge_word("[a>b]^3 [b>c]^3 [c>d]^3 [d>a]^3"), c4));
  CHECK_FALSE(verify_relator(c4.edge_word("[a>b] [b>c]"), c4));
  CHECK(verify_relator(Word(c4.edge_alphabet()), c4));
}

TEST_CASE("tree paths") {
  BBContext path(load("path.txt"));
  CHECK(path_element(path, 0, 0).empty());
  CHECK(path_element(path, 0, 1).to_string() == "[a>b]");
  auto p = path_element(path, 0, 2);
  CHECK(p.to_string() == "[a>b] [b>c]");
  CHECK(phi(p, path).to_string() == "a c^-1");
}

TEST_CASE("xi") {
  BBContext k3(load("k3.txt"));
  CHECK(xi(k3.edge_word("[a>b]")).to_string() == "[a>b]^-1");
  CHECK(xi(k3.edge_word("[a>b] [b>c]")).to_string() == "[a>b]^-1 [b>c]^-1");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto w = random_edge_word(rng, k3, 9);
    CHECK(xi(xi(w)) == w);
  }
}

TEST_CASE("psi_a") {
  BBContext k3(load("k3.txt"));
  CHECK(psi_a(k3.edge_word("[a>b]"), k3).to_string() == "[a>b]");
  CHECK(psi_a(k3.edge_word("[b>c]"), k3).to_string() == "[a>b] [b>c] [b>a]");
}

TEST_CASE("psi_a contracts on every edge and basepoint") {
  for (auto const& m : oracle::corpus()) {
    if (m.complex->num_vertices() == 0 || !m.complex->is_connected()) {
      continue;
    }
    CAPTURE(m.name);
    for (Vertex a = 0; a < m.complex->num_vertices(); ++a) {
      BBContext ctx(m.complex, a);
      Word      av = Word::power(ctx.vertex_alphabet(), a, 1);
      for (std::size_t i = 0; i < m.complex->num_directed_edges(); ++i) {
        Word e = ctx.edge(m.complex->directed_edge(i));
        CHECK(same(phi(psi_a(e, ctx), ctx), av * phi(e, ctx) * av.inverse(), ctx));
        CHECK(same(phi(psi_a(xi(psi_a(xi(e), ctx)), ctx), ctx), phi(e, ctx), ctx));
        CHECK(same(phi(psi_a(psi_a_inverse(e, ctx), ctx), ctx), phi(e, ctx), ctx));
      }
    }
  }
}

TEST_CASE("cn relators") {
  BBContext edge(load("edge.txt"));
  DirectedCycle two(edge.complex(), {{0, 1}, {1, 0}});
  CHECK(cn_relator(two, 1, edge).to_string() == "[a>b] [b>a]");
  CHECK_THROWS_AS(cn_relator(two, 0, edge), DomainError);

  BBContext k3(load("k3.txt"));
  DirectedCycle t(k3.complex(), {{0, 1}, {1, 2}, {2, 0}});
  CHECK(cn_relator(t, -1, k3).to_string() == "[a>b]^-1 [b>c]^-1 [c>a]^-1");

  BBContext c4(load("c4.txt"));
  DirectedCycle sq(c4.complex(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(cn_relator(sq, 2, c4).to_string() == "[a>b]^2 [b>c]^2 [c>d]^2 [d>a]^2");
}

TEST_CASE("truncated relator families") {
  BBContext edge(load("edge.txt"));
  auto      p = relators_theorem1(edge, 2, 2);
  CHECK(p.relators().size() == 4);
  CHECK(p.tag("complete") == "false");

  BBContext k3(load("k3.txt"));
  CHECK(closed_walks(k3.complex(), 3).size() == 5);
  auto q = relators_theorem1(k3, 3, 1);
  CHECK(q.relators().size() == 10);

  // Letterwise inversion permutes the family.
  auto r = relators_theorem1(k3, 4, 2);
  std::set<std::string> all;
  for (auto const& w : r.relators()) {
    all.insert(w.to_string());
  }
  for (auto const& w : r.relators()) {
    CHECK(all.contains(xi(w).to_string()));
  }
}

TEST_CASE("closed walks match brute force") {
  // Every closed walk of length l, counted as sequences, is l times the
  // number of rotation classes when no class has a nontrivial period.
  BBContext   c4(load("c4.txt"));
  auto const& c = c4.complex();
  auto        walks = closed_walks(c, 4);
  std::size_t brute = 0;
  for (std::size_t i = 0; i < c.num_directed_edges(); ++i) {
    for (std::size_t j = 0; j < c.num_directed_edges(); ++j) {
      auto e = c.directed_edge(i), f = c.directed_edge(j);
      brute += e.terminal == f.initial && f.terminal == e.initial;
    }
  }
  std::size_t twos = 0;
  for (auto const& w : walks) {
    twos += w.length() == 2;
  }
  CHECK(twos * 2 == brute);
}

TEST_CASE("finite presentations") {
  BBContext k3(load("k3.txt"));
  auto      p = finite_presentation(k3);
  CHECK(p.generators()->size() == 3);
  CHECK(p.relators().size() == 2);
  CHECK(abelianization(p).rank == 2);
  CHECK(p.tag("complete") == "true");

  BBContext oct(load("octahedron.txt"));
  auto      o = finite_presentation(oct);
  CHECK(o.generators()->size() == 12);
  CHECK(o.relators().size() == 16);
  CHECK(o.tag("complete") == "true");

  BBContext     c4(load("c4.txt"));
  DirectedCycle sq(c4.complex(), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto          q = finite_presentation(c4, {sq}, 2);
  CHECK(q.relators().size() == 4);
  CHECK(q.tag("complete") == "false");
  CHECK(finite_presentation(c4).tag("complete") == "false");
  for (auto const& r : q.relators()) {
    CHECK(verify_relator(r, c4));
  }
  for (auto const& l : loop_basis(c4)) {
    CHECK(verify_relator(cn_relator(l, 3, c4), c4));
  }
}

TEST_CASE("express_in_kernel") {
  BBContext edge(load("edge.txt"));
  CHECK(express_in_kernel(edge.vertex_word("a b^-1"), edge).to_string() == "[a>b]");
  auto w = express_in_kernel(edge.vertex_word("a^2 b^-2"), edge);
  CHECK(w.to_string() == "[a>b]^2");
  CHECK(same(phi(w, edge), edge.vertex_word("a^2 b^-2"), edge));

  BBContext path(load("path.txt"));
  CHECK(express_in_kernel(path.vertex_word("a c^-1"), path).to_string() == "[a>b] [b>c]");
  CHECK_THROWS_AS(express_in_kernel(path.vertex_word("a"), path), DomainError);

  std::mt19937_64 rng(9);
  for (auto const& m : oracle::corpus()) {
    if (m.complex->num_vertices() == 0 || !m.complex->is_connected()) {
      continue;
    }
    BBContext ctx(m.complex);
    for (int t = 0; t < 50; ++t) {
      auto v = oracle::random_balanced_word(rng, ctx.vertex_alphabet(), 10);
      CHECK(same(phi(express_in_kernel(v, ctx), ctx), v, ctx));
      if (m.complex->num_edges() > 0) {
        auto e = random_edge_word(rng, ctx, 8);
        CHECK(exponent_sum(phi(e, ctx)) == 0);
      }
    }
  }
}

TEST_CASE("disconnected and empty complexes are rejected") {
  CHECK_THROWS_AS(BBContext{load("two_points.txt")}, DomainError);
  auto empty = std::make_shared<FlagComplex const>(FlagComplex::from_graph({}, {}));
  CHECK_THROWS_AS(BBContext{empty}, DomainError);
}

TEST_CASE("homotopy moves") {
  BBContext     k3(load("k3.txt"));
  DirectedCycle t(k3.complex(), {{0, 1}, {1, 2}, {2, 0}});
  for (long n : {-3L, -2L, -1L, 1L, 2L, 3L}) {
    CAPTURE(n);
    Word r = cn_relator(t, n, k3);
    REQUIRE(verify_relator(r, k3));
    for (std::size_t pos = 0; pos <= 3; ++pos) {
      Vertex v = t.vertex_at(pos);
      for (Vertex w : k3.complex().neighbours(v)) {
        CHECK(verify_relator(apply_homotopy_move(r, Move::insert(pos, {v, w}), n, k3), k3));
      }
    }
    Word rot = apply_homotopy_move(r, Move::rotate(1), n, k3);
    CHECK(verify_relator(rot, k3));
    CHECK(cycle_from_relator(rot, n, k3).edges().front() == DirectedEdge{1, 2});
    Word tri = apply_homotopy_move(
        r, Move::triangle(0, {0, 1}, {1, 2}, {2, 0}), n, k3);
    CHECK(cycle_from_relator(tri, n, k3).length() == 4);
    CHECK(verify_relator(tri, k3));
  }
  CHECK_THROWS_AS(apply_move(t, Move::remove(0), k3.complex()), DomainError);
  CHECK_THROWS_AS(apply_move(t, Move::insert(0, {1, 2}), k3.complex()), DomainError);
  CHECK_THROWS_AS(apply_move(t, Move::triangle(1, {0, 1}, {1, 2}, {2, 0}), k3.complex()),
                  DomainError);
}

TEST_CASE("move search") {
  BBContext     k3(load("k3.txt"));
  DirectedCycle t(k3.complex(), {{0, 1}, {1, 2}, {2, 0}});
  auto          self = find_move_sequence(t, t, k3, 10);
  REQUIRE(self.moves);
  CHECK(self.moves->empty());

  auto padded = apply_move(t, Move::insert(1, {1, 0}), k3.complex());
  auto one    = find_move_sequence(t, padded, k3, 1000);
  REQUIRE(one.moves);
  REQUIRE(one.moves->size() == 1);
  CHECK(apply_move(t, one.moves->front(), k3.complex()) == padded);

  DirectedCycle two(k3.complex(), {{0, 1}, {1, 0}});
  auto          res = find_move_sequence(t, two, k3, 20000);
  REQUIRE(res.moves);
  for (long n : {-3L, -1L, 2L}) {
    Word r = cn_relator(t, n, k3);
    for (auto const& m : *res.moves) {
      r = apply_homotopy_move(r, m, n, k3);
      CHECK(verify_relator(r, k3));
    }
    CHECK(cycle_from_relator(r, n, k3) == two);
  }
  CHECK_FALSE(find_move_sequence(t, two, k3, 1).moves);
}

TEST_CASE("move files") {
  BBContext         k3(load("k3.txt"));
  std::vector<Move> ms{Move::insert(1, {1, 0}), Move::remove(2), Move::rotate(3),
                       Move::triangle(0, {0, 1}, {1, 2}, {2, 0})};
  auto text = serialize_moves(ms, k3.complex());
  CHECK(text == "ins 1 [b>a]\ndel 2\nrot 3\ntri 0 [a>b] [b>c] [c>a]\n");
  CHECK(parse_moves(text, k3.complex()) == ms);
  CHECK_THROWS_AS(parse_moves("jump 1\n", k3.complex()), ParseError);
  CHECK_THROWS_AS(parse_moves("ins x [a>b]\n", k3.complex()), ParseError);
  CHECK_THROWS_AS(parse_moves("ins 1 [a>q]\n", k3.complex()), ParseError);
}

TEST_CASE("the extension G'") {
  BBContext oct(load("octahedron.txt"));
  auto      a0 = theta(0, oct);
  CHECK(a0.h.empty());
  CHECK(a0.k == 1);
  CHECK(phi_tilde(a0, oct).to_string() == "x1");

  for (Vertex b = 0; b < oct.complex().num_vertices(); ++b) {
    CHECK(same(phi_tilde(theta(b, oct), oct),
               Word::power(oct.vertex_alphabet(), b, 1), oct));
  }

  GPrimeElement t{Word(oct.edge_alphabet()), 1};
  GPrimeElement ti{Word(oct.edge_alphabet()), -1};
  for (std::size_t i = 0; i < oct.complex().num_directed_edges(); ++i) {
    auto          de = oct.complex().directed_edge(i);
    GPrimeElement e{oct.edge(de), 0};
    auto conj = gprime_multiply(gprime_multiply(t, e, oct), ti, oct);
    CHECK(conj.k == 0);
    CHECK(conj.h == psi_a(e.h, oct));
    CHECK(same(phi_tilde(theta(de.initial, oct), oct),
               phi_tilde(gprime_multiply(e, theta(de.terminal, oct), oct), oct),
               oct));
  }

  std::mt19937_64                     rng(4);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    GPrimeElement x{random_edge_word(rng, oct, 3), k(rng)};
    GPrimeElement y{random_edge_word(rng, oct, 3), k(rng)};
    GPrimeElement z{random_edge_word(rng, oct, 3), k(rng)};
    auto l = gprime_multiply(gprime_multiply(x, y, oct), z, oct);
    auto r = gprime_multiply(x, gprime_multiply(y, z, oct), oct);
    CHECK(l.k == r.k);
    CHECK(same(phi_tilde(l, oct), phi_tilde(r, oct), oct));
    auto id = gprime_multiply(x, gprime_inverse(x, oct), oct);
    CHECK(id.k == 0);
    CHECK(verify_relator(id.h, oct));
    CHECK(same(phi_tilde(gprime_multiply(x, y, oct), oct),
               phi_tilde(x, oct) * phi_tilde(y, oct), oct));
    CHECK(same(phi(psi_a_power(psi_a_power(x.h, 2, oct), -2, oct), oct),
               phi(x.h, oct), oct));
  }
}
