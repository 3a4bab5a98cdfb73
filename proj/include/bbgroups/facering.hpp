// The exterior face ring of a flag complex (the integral cohomology ring of
// its right-angled Artin group), its Hilbert series, and the finiteness
// properties of the kernel H that the topology of the complex determines.

#ifndef BBGROUPS_FACERING_HPP_
#define BBGROUPS_FACERING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "fundamental_group.hpp"

namespace bbgroups {

  //! coefficient * v_0 ^ v_1 ^ ... with v_0 < v_1 < ... . The zero element
  //! has coefficient 0 and no vertices.
  struct FaceMonomial {
    std::vector<Vertex> vertices;
    std::int64_t        coefficient = 0;

    bool is_zero() const noexcept {
      return coefficient == 0;
    }
    std::size_t degree() const noexcept {
      return vertices.size();
    }
    friend bool operator==(FaceMonomial const&, FaceMonomial const&) = default;
  };

  //! Normalises an arbitrary vertex tuple: sorts it, folding the sign of the
  //! sorting permutation into the coefficient; zero on a repeated vertex or
  //! a non-face.
  FaceMonomial make_monomial(std::vector<Vertex> vertices,
                             std::int64_t        coefficient,
                             FlagComplex const&  complex);

  FaceMonomial monomial_product(FaceMonomial const& a,
                                FaceMonomial const& b,
                                FlagComplex const&  complex);

  //! (1, f_0, f_1, ...): degree i has rank equal to the number of
  //! (i-1)-simplices.
  std::vector<std::size_t> hilbert_series(FlagComplex const& complex);

  //! 1 - chi(complex).
  std::int64_t group_euler_characteristic(FlagComplex const& complex);

  enum class TriState { yes, no, unknown };

  std::string to_string(TriState t);

  struct FinitenessReport {
    bool finitely_generated = false;
    //! unknown when simple connectivity could not be certified.
    TriState finitely_presented = TriState::unknown;
    //! Largest n with H of type FP(n); nullopt when every n works (type FP).
    std::optional<std::size_t> fp_level;
    std::int64_t               chi_delta = 0;
    std::int64_t               chi_group = 0;
    //! chi(complex) != 1: the rational cohomology of H is infinite
    //! dimensional. When false nothing is concluded.
    bool corollary6_obstruction = false;
    //! Connected, certified simply connected and chi != 1: H is finitely
    //! presented but not of type FP.
    bool corollary7_applies = false;
    SimpleConnectivity         simple_connectivity = SimpleConnectivity::unknown;
    std::vector<HomologyGroup> reduced_homology;
    //! Field name -> the theorem licensing its value.
    std::vector<std::pair<std::string, std::string>> reasons;
  };

  //! Throws DomainError on an empty or truncated complex.
  FinitenessReport
  finiteness_report(FlagComplex const& complex,
                    std::size_t        budget = default_tietze_budget);

  std::string to_text(FinitenessReport const& r);
  std::string to_json(FinitenessReport const& r);

}  // namespace bbgroups

#endif  // BBGROUPS_FACERING_HPP_
