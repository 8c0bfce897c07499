#pragma once

#include <optional>
#include <vector>

#include "spin7/ratfunc.hpp"

namespace spin7 {

/// Dense exact matrix over the fraction field of Z[q,q^-1].
class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}

  static RepMatrix identity(int n) {
    RepMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  RatFunc& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const RatFunc& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const {
    for (const RatFunc& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Entry involution reversing both indices, A_ij <-> A_{n-i+1, n-j+1};
  /// conjugation by the antidiagonal permutation, an algebra automorphism.
  RepMatrix reverse_involution() const;

  /// q <-> q^-1 on every entry.
  RepMatrix bar() const;

  /// Minor keeping rows/columns from `from` (0-based) onward.
  RepMatrix trailing_minor(int from) const;

  friend RepMatrix operator+(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator-(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  friend RepMatrix operator*(const RatFunc& s, const RepMatrix& a);
  friend bool operator==(const RepMatrix& a, const RepMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RatFunc> e_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const RepMatrix& m);

/// Solve A x = b over the fraction field; nullopt when inconsistent.
/// Requires unique solvability on the consistent pivots; underdetermined
/// free variables are set to zero.
std::optional<std::vector<RatFunc>> solve(const RepMatrix& a, const std::vector<RatFunc>& b);

/// Solve A X = B column-by-column with a single elimination pass.
/// Throws rank_deficient unless A is square and invertible.
std::vector<std::vector<RatFunc>> solve_batch(const RepMatrix& a,
                                              const std::vector<std::vector<RatFunc>>& columns);

/// Basis of the right null space, one vector per free column.
std::vector<std::vector<RatFunc>> null_space(const RepMatrix& a);

/// Monic characteristic polynomial, coefficients ascending in x.
std::vector<RatFunc> char_poly(const RepMatrix& m);

}  // namespace spin7
