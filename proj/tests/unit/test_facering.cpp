#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bbgroups/error.hpp"
#include "bbgroups/facering.hpp"

using namespace bbgroups;

namespace {

  FlagComplex load(std::string const& name) {
    return parse_graph(oracle::slurp(oracle::data_path(name)));
  }

  // All faces as sorted monomials, the empty face included.
  std::vector<FaceMonomial> basis(FlagComplex const& c) {
    std::vector<FaceMonomial> out{make_monomial({}, 1, c)};
    for (std::size_t k = 0; k < c.num_dimensions(); ++k) {
      for (auto const& s : c.simplices(k)) {
        out.push_back(make_monomial(s, 1, c));
      }
    }
    return out;
  }

  FaceMonomial scaled(FaceMonomial m, std::int64_t k) {
    m.coefficient *= k;
    if (m.coefficient == 0) {
      m.vertices.clear();
    }
    return m;
  }

}  // namespace

TEST_CASE("monomials") {
  auto c4 = load("c4.txt");
  CHECK(monomial_product(make_monomial({0}, 1, c4), make_monomial({2}, 1, c4), c4).is_zero());
  CHECK(make_monomial({0, 0}, 1, c4).is_zero());
  CHECK(make_monomial({1, 0}, 1, c4).coefficient == -1);

  auto k3 = load("k3.txt");
  auto vw = make_monomial({1, 2}, 1, k3);
  auto u  = make_monomial({0}, 1, k3);
  auto p  = monomial_product(vw, u, k3);
  CHECK(p.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(p.coefficient == oracle::parity_sign({1, 2, 0}));
  CHECK(p.coefficient == 1);
}

TEST_CASE("hilbert series and euler characteristics") {
  CHECK(hilbert_series(load("point.txt")) == std::vector<std::size_t>{1, 1});
  CHECK(hilbert_series(load("octahedron.txt")) == std::vector<std::size_t>{1, 6, 12, 8});
  CHECK(hilbert_series(load("k3.txt")) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(group_euler_characteristic(load("k3.txt")) == 0);
  CHECK(group_euler_characteristic(load("edge.txt")) == 0);
  CHECK(group_euler_characteristic(load("octahedron.txt")) == -1);
  CHECK(group_euler_characteristic(load("c4.txt")) == 1);
}

TEST_CASE("ring laws on corpus monomials") {
  std::mt19937_64 rng(2);
  for (auto const& m : oracle::corpus()) {
    CAPTURE(m.name);
    auto const& c = *m.complex;
    auto        b = basis(c);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    std::uniform_int_distribution<int>         coef(-3, 3);
    for (int t = 0; t < 200; ++t) {
      auto x = b[pick(rng)], y = b[pick(rng)], z = b[pick(rng)];
      // Random vertex order, sign from the parity oracle.
      std::vector<Vertex> shuffled = x.vertices;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(make_monomial(shuffled, 1, c).coefficient
            == oracle::parity_sign(shuffled));

      CHECK(monomial_product(monomial_product(x, y, c), z, c)
            == monomial_product(x, monomial_product(y, z, c), c));
      auto xy   = monomial_product(x, y, c);
      auto yx   = monomial_product(y, x, c);
      int  sign = (x.degree() * y.degree()) % 2 ? -1 : 1;
      CHECK(xy == scaled(yx, sign));
      int k = coef(rng);
      CHECK(monomial_product(scaled(x, k), y, c) == scaled(xy, k));
      CHECK(monomial_product(x, scaled(y, k), c) == scaled(xy, k));
    }
    if (c.num_vertices() > 0) {
      auto h = hilbert_series(c);
      for (std::size_t i = 1; i < h.size(); ++i) {
        CHECK(h[i] == c.simplices(i - 1).size());
      }
      std::int64_t alt = 0;
      for (std::size_t i = 0; i < h.size(); ++i) {
        alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(h[i]);
      }
      CHECK(alt == group_euler_characteristic(c));
    }
  }
}

TEST_CASE("finiteness reports") {
  auto oct = finiteness_report(load("octahedron.txt"));
  CHECK(oct.finitely_generated);
  CHECK(oct.finitely_presented == TriState::yes);
  CHECK(oct.fp_level == 2);
  CHECK(oct.corollary7_applies);
  CHECK(oct.corollary6_obstruction);
  CHECK(oct.chi_delta == 2);
  CHECK(oct.chi_group == -1);

  auto c4 = finiteness_report(load("c4.txt"));
  CHECK(c4.finitely_generated);
  CHECK(c4.finitely_presented == TriState::no);
  CHECK(c4.fp_level == 1);
  CHECK_FALSE(c4.corollary7_applies);

  auto two = finiteness_report(load("two_points.txt"));
  CHECK_FALSE(two.finitely_generated);
  CHECK(two.finitely_presented == TriState::no);

  auto k3 = finiteness_report(load("k3.txt"));
  CHECK_FALSE(k3.fp_level.has_value());
  CHECK(k3.finitely_presented == TriState::yes);
  CHECK_FALSE(k3.corollary6_obstruction);

  CHECK_THROWS_AS(finiteness_report(FlagComplex::from_graph({}, {})), DomainError);

  for (auto const& m : oracle::corpus()) {
    auto r = finiteness_report(*m.complex);
    if (r.finitely_presented == TriState::yes) {
      CHECK(r.finitely_generated);
      CHECK((!r.fp_level || *r.fp_level >= 2));
    }
    if (r.finitely_generated) {
      CHECK((!r.fp_level || *r.fp_level >= 1));
    }
    auto json = to_json(r);
    for (auto const* key : {"finitely_generated", "finitely_presented", "fp_level",
                            "chi_delta", "chi_group", "corollary6_obstruction",
                            "corollary7_applies"}) {
      CHECK(json.find(std::string("\"") + key + "\"") != std::string::npos);
    }
  }
}
