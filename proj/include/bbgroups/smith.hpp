// Exact Smith normal form over the integers. This is the single kernel
// behind simplicial homology and presentation abelianisation.

#ifndef BBGROUPS_SMITH_HPP_
#define BBGROUPS_SMITH_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bbgroups {

  using Integer = boost::multiprecision::cpp_int;

  //! Dense row-major integer matrix.
  class IntegerMatrix {
   public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Integer const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    bool is_zero() const;

    friend bool operator==(IntegerMatrix const&, IntegerMatrix const&)
        = default;

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _data;
  };

  //! Product of two matrices; throws std::invalid_argument on a shape
  //! mismatch.
  IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b);

  struct SmithResult {
    //! Number of nonzero invariant factors.
    std::size_t rank = 0;
    //! The nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Integer> invariant_factors;

    //! The invariant factors greater than one.
    std::vector<Integer> torsion() const;
  };

  //! Invariant factors of `m` by unimodular row and column operations.
  SmithResult smith_normal_form(IntegerMatrix m);

}  // namespace bbgroups

#endif  // BBGROUPS_SMITH_HPP_
