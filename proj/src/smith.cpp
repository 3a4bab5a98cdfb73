#include "bbgroups/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bbgroups {

  bool IntegerMatrix::is_zero() const {
    return std::all_of(
        _data.begin(), _data.end(), [](Integer const& x) { return x == 0; });
  }

  IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix product: shape mismatch");
    }
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

  std::vector<Integer> SmithResult::torsion() const {
    std::vector<Integer> out;
    for (auto const& d : invariant_factors) {
      if (d > 1) {
        out.push_back(d);
      }
    }
    return out;
  }

  namespace {

    void swap_rows(IntegerMatrix& m, std::size_t r1, std::size_t r2) {
      if (r1 == r2) {
        return;
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(r1, c), m(r2, c));
      }
    }

    void swap_cols(IntegerMatrix& m, std::size_t c1, std::size_t c2) {
      if (c1 == c2) {
        return;
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::swap(m(r, c1), m(r, c2));
      }
    }

    // row[dst] -= q * row[src]
    void axpy_row(IntegerMatrix&     m,
                  std::size_t        dst,
                  std::size_t        src,
                  Integer const&     q,
                  std::size_t        from) {
      for (std::size_t c = from; c < m.cols(); ++c) {
        if (m(src, c) != 0) {
          m(dst, c) -= q * m(src, c);
        }
      }
    }

    void axpy_col(IntegerMatrix& m,
                  std::size_t    dst,
                  std::size_t    src,
                  Integer const& q,
                  std::size_t    from) {
      for (std::size_t r = from; r < m.rows(); ++r) {
        if (m(r, src) != 0) {
          m(r, dst) -= q * m(r, src);
        }
      }
    }

    // Truncating division: |a - q p| < |p|.
    Integer quotient(Integer const& a, Integer const& p) {
      return a / p;
    }

  }  // namespace

  SmithResult smith_normal_form(IntegerMatrix m) {
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    std::size_t       t    = 0;

    while (t < rows && t < cols) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool        found = false;
      std::size_t pr = 0, pc = 0;
      Integer     best;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m(r, c) != 0) {
            Integer a = abs(m(r, c));
            if (!found || a < best) {
              found = true;
              best  = a;
              pr    = r;
              pc    = c;
            }
          }
        }
      }
      if (!found) {
        break;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = false;
      while (!clean) {
        clean = true;
        Integer const p = m(t, t);
        for (std::size_t r = t + 1; r < rows; ++r) {
          if (m(r, t) != 0) {
            axpy_row(m, r, t, quotient(m(r, t), p), t);
            if (m(r, t) != 0) {
              clean = false;
            }
          }
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(t, c) != 0) {
            axpy_col(m, c, t, quotient(m(t, c), p), t);
            if (m(t, c) != 0) {
              clean = false;
            }
          }
        }
        if (!clean) {
          // Move the smallest remainder in row/column t into the pivot.
          std::size_t br = t, bc = t;
          Integer     b = abs(m(t, t));
          for (std::size_t r = t + 1; r < rows; ++r) {
            if (m(r, t) != 0 && abs(m(r, t)) < b) {
              b  = abs(m(r, t));
              br = r;
              bc = t;
            }
          }
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (m(t, c) != 0 && abs(m(t, c)) < b) {
              b  = abs(m(t, c));
              br = t;
              bc = c;
            }
          }
          swap_rows(m, t, br);
          swap_cols(m, t, bc);
          continue;
        }
        // Row and column are clear; the pivot must divide the whole
        // trailing block, otherwise fold an offending row in and repeat.
        for (std::size_t r = t + 1; r < rows && clean; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (m(r, c) % p != 0) {
              axpy_row(m, t, r, Integer(-1), t);
              clean = false;
              break;
            }
          }
        }
      }
      ++t;
    }

    SmithResult result;
    for (std::size_t i = 0; i < t; ++i) {
      result.invariant_factors.push_back(abs(m(i, i)));
    }
    result.rank = result.invariant_factors.size();
    return result;
  }

}  // namespace bbgroups
