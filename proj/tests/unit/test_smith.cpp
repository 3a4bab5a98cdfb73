#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "bbgroups/smith.hpp"

using namespace bbgroups;

namespace {

  IntegerMatrix make(std::vector<std::vector<long>> const& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  std::vector<long long> factors(SmithResult const& s) {
    std::vector<long long> out;
    for (auto const& d : s.invariant_factors) {
      out.push_back(static_cast<long long>(d));
    }
    return out;
  }

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  CHECK(factors(smith_normal_form(make({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})))
        == std::vector<long long>{2, 6, 12});
  CHECK(smith_normal_form(make({{0, 0}, {0, 0}})).rank == 0);
  CHECK(factors(smith_normal_form(make({{2}}))) == std::vector<long long>{2});
  auto s = smith_normal_form(make({{2, 0}, {0, 3}}));
  CHECK(factors(s) == std::vector<long long>{1, 6});
  CHECK(s.torsion() == std::vector<Integer>{6});
  CHECK(smith_normal_form(IntegerMatrix(0, 3)).rank == 0);
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937_64                    rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t   r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    oracle::Small small(r, std::vector<long long>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        small[i][j] = entry(rng);
        m(i, j)     = small[i][j];
      }
    }
    auto s = smith_normal_form(m);
    CHECK(factors(s) == oracle::determinantal_factors(small));
    CHECK(s.rank == s.invariant_factors.size());
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k) {
      CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
    }
  }
}

TEST_CASE("big entries stay exact") {
  IntegerMatrix m(2, 2);
  m(0, 0) = Integer(1) << 100;
  m(1, 1) = (Integer(1) << 100) * 3;
  auto s  = smith_normal_form(m);
  CHECK(s.invariant_factors[0] == Integer(1) << 100);
  CHECK(s.invariant_factors[1] == (Integer(1) << 100) * 3);
}

TEST_CASE("matrix product") {
  auto a = make({{1, 2}, {3, 4}});
  auto b = make({{0, 1}, {1, 0}});
  CHECK(a * b == make({{2, 1}, {4, 3}}));
  CHECK_THROWS_AS(a * IntegerMatrix(3, 1), std::invalid_argument);
  CHECK(IntegerMatrix(2, 2).is_zero());
}
