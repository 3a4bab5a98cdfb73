#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bbgroups/complex.hpp"
#include "bbgroups/error.hpp"
#include "bbgroups/fundamental_group.hpp"
#include "bbgroups/presentation.hpp"

using namespace bbgroups;

namespace {

  FlagComplex load(std::string const& name) {
    return parse_graph(oracle::slurp(oracle::data_path(name)));
  }

  std::vector<std::size_t> betti(FlagComplex const& c, bool reduced = false) {
    return homology(c, reduced).betti();
  }

}  // namespace

TEST_CASE("f-vectors") {
  CHECK(load("k3.txt").f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(load("c4.txt").f_vector() == std::vector<std::size_t>{4, 4});
  auto oct = load("octahedron.txt");
  CHECK(oct.f_vector() == std::vector<std::size_t>{6, 12, 8});
  CHECK(oracle::brute_f_vector(oct) == oct.f_vector());
  CHECK(oct.simplices(3).empty());
  CHECK(load("join3.json").f_vector() == oct.f_vector());
}

TEST_CASE("simplices are listed lexicographically") {
  auto k3 = load("k3.txt");
  CHECK(k3.simplices(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3.simplex_index({0, 2}) == 1);
  CHECK(k3.edge_name({2, 0}) == "[c>a]");
}

TEST_CASE("dimension cap") {
  auto c = FlagComplex::from_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, 1);
  CHECK_FALSE(c.fully_enumerated());
  CHECK_THROWS_AS(euler_characteristic(c), Error);
  auto full = FlagComplex::from_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, 2);
  CHECK(full.fully_enumerated());
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(load("point.txt")) == 1);
  CHECK(euler_characteristic(load("octahedron.txt")) == 2);
  CHECK(euler_characteristic(load("c4.txt")) == 0);
}

TEST_CASE("homology") {
  CHECK(betti(load("three_points.txt")) == std::vector<std::size_t>{3});
  CHECK(betti(load("octahedron.txt")) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti(load("c4.txt")) == std::vector<std::size_t>{1, 1});
  CHECK(betti(load("k3.txt"), true) == std::vector<std::size_t>{0, 0, 0});
  CHECK(betti(load("two_points.txt"), true) == std::vector<std::size_t>{1});
  for (auto const& g : homology(load("octahedron.txt")).groups) {
    CHECK(g.torsion.empty());
  }
}

TEST_CASE("graph parse errors carry positions") {
  CHECK_THROWS_AS(parse_graph("vertices: a a\nedges:\n"), ParseError);
  CHECK_THROWS_AS(FlagComplex::from_graph({"a", "a"}, {}), DomainError);
  try {
    parse_graph("vertices: a b\nedges: a-q\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS(parse_graph("vertices: a b\nedges: a-a\n"));
  CHECK_THROWS(parse_graph("vertices: a b\nedges: a-b b-a\n"));
  CHECK_THROWS(parse_graph("edges: a-b\n"));
  CHECK_THROWS(parse_graph("{\"vertices\": [\"a\"], \"edges\": [[\"a\"]]}"));
  CHECK_THROWS(parse_graph("{\"vertices\": [\"a>\"], \"edges\": []}"));
  CHECK_FALSE(valid_vertex_name("a^b"));
  CHECK(valid_vertex_name("x_1"));
}

TEST_CASE("directed cycles are validated") {
  auto k3 = load("k3.txt");
  DirectedCycle t(k3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(t.length() == 3);
  CHECK(t.vertex_at(3) == 0);
  CHECK_THROWS_AS(DirectedCycle(k3, {{0, 1}, {2, 0}}), DomainError);
  CHECK_THROWS_AS(DirectedCycle(k3, {{0, 1}}), DomainError);
  auto c4 = load("c4.txt");
  CHECK_THROWS_AS(DirectedCycle(c4, {{0, 2}, {2, 0}}), DomainError);
}

TEST_CASE("pi1 presentations") {
  auto path = load("path.txt");
  CHECK(pi1_presentation(path, 0).generators()->size() == 0);
  auto c4p = pi1_presentation(load("c4.txt"), 0);
  CHECK(c4p.generators()->size() == 1);
  CHECK(c4p.relators().empty());
  auto k3p = pi1_presentation(load("k3.txt"), 0);
  CHECK(k3p.generators()->size() == 1);
  CHECK(k3p.relators().size() == 1);
  CHECK(simply_connected_status(load("octahedron.txt")) == SimpleConnectivity::certified_trivial);
  CHECK(simply_connected_status(load("c4.txt")) == SimpleConnectivity::certified_nontrivial);
  CHECK(simply_connected_status(load("k3.txt")) == SimpleConnectivity::certified_trivial);
  CHECK(to_string(SimpleConnectivity::unknown) == "Unknown");
  CHECK_THROWS_AS(simply_connected_status(load("two_points.txt")), DomainError);
}

TEST_CASE("spanning tree paths") {
  auto         c4 = load("c4.txt");
  SpanningTree t(c4, 0);
  CHECK(t.path(0, 0).empty());
  CHECK(t.path(1, 3) == std::vector<DirectedEdge>{{1, 0}, {0, 3}});
  CHECK(t.depth(2) == 2);
  CHECK_FALSE(t.parent(0).has_value());
}

TEST_CASE("corpus-wide invariants") {
  for (auto const& m : oracle::corpus()) {
    CAPTURE(m.name);
    auto const& c = *m.complex;
    CHECK(oracle::brute_f_vector(c) == c.f_vector());

    auto          h   = homology(c);
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
      alt += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(h.groups[k].betti);
    }
    CHECK(alt == euler_characteristic(c));

    for (std::size_t k = 1; k + 1 < c.num_dimensions(); ++k) {
      CHECK((boundary_matrix(c, k) * boundary_matrix(c, k + 1)).is_zero());
    }
    if (c.num_dimensions() > 1) {
      CHECK((boundary_matrix(c, 0, true) * boundary_matrix(c, 1)).is_zero());
    }

    if (c.is_connected()) {
      auto ab = abelianization(pi1_presentation(c, 0));
      auto h1 = h.groups.size() > 1 ? h.groups[1] : HomologyGroup{};
      CHECK(ab.rank == h1.betti);
      CHECK(ab.torsion == h1.torsion);
    }
  }
}

TEST_CASE("flag property on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = oracle::random_flag_complex(rng, 8, 0.55);
    std::uniform_int_distribution<int> size(2, 5);
    for (int s = 0; s < 50; ++s) {
      std::vector<Vertex> vs(8);
      std::iota(vs.begin(), vs.end(), 0);
      std::shuffle(vs.begin(), vs.end(), rng);
      vs.resize(size(rng));
      std::sort(vs.begin(), vs.end());
      bool pairs = true;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          pairs = pairs && c->adjacent(vs[i], vs[j]);
        }
      }
      CHECK(c->spans_simplex(vs) == pairs);
    }
  }
}
