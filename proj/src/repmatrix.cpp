#include "spin7/repmatrix.hpp"

#include <utility>

namespace spin7 {

RepMatrix RepMatrix::reverse_involution() const {
  RepMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ - 1 - i, cols_ - 1 - j) = at(i, j);
  return r;
}

RepMatrix RepMatrix::bar() const {
  RepMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).bar();
  return r;
}

RepMatrix RepMatrix::trailing_minor(int from) const {
  RepMatrix r(rows_ - from, cols_ - from);
  for (int i = from; i < rows_; ++i)
    for (int j = from; j < cols_; ++j) r.at(i - from, j - from) = at(i, j);
  return r;
}

RepMatrix operator+(const RepMatrix& a, const RepMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw mismatched_context("matrix shape mismatch");
  RepMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

RepMatrix operator-(const RepMatrix& a, const RepMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw mismatched_context("matrix shape mismatch");
  RepMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.cols_ != b.rows_) throw mismatched_context("matrix shape mismatch");
  RepMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

RepMatrix operator*(const RatFunc& s, const RepMatrix& a) {
  RepMatrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
  return r;
}

namespace {

struct Echelon {
  std::vector<std::vector<LaurentPoly>> m;  // rows x (cols), polynomial entries
  std::vector<int> pivot_col;               // per eliminated row
  int rows = 0, cols = 0;
};

// Clear denominators row by row, then run one-step fraction-free Bareiss
// elimination with row pivoting. Row scaling by nonzero polynomials leaves
// both the rank and the solution set of an augmented system unchanged.
Echelon bareiss(const RepMatrix& a, const std::vector<std::vector<RatFunc>>& extra_cols) {
  Echelon ech;
  ech.rows = a.rows();
  ech.cols = a.cols() + static_cast<int>(extra_cols.size());
  ech.m.assign(static_cast<std::size_t>(ech.rows), {});
  for (int i = 0; i < ech.rows; ++i) {
    LaurentPoly scale{Int(1)};
    auto fold = [&scale](const RatFunc& v) {
      if (!v.is_zero() && !v.den().is_one())
        scale = exact_div(scale * v.den(), laurent_gcd(scale, v.den()));
    };
    for (int j = 0; j < a.cols(); ++j) fold(a.at(i, j));
    for (const auto& col : extra_cols) fold(col[static_cast<std::size_t>(i)]);
    auto cleared = [&scale](const RatFunc& v) {
      return v.num() * exact_div(scale, v.den());
    };
    auto& row = ech.m[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(ech.cols));
    for (int j = 0; j < a.cols(); ++j) row.push_back(cleared(a.at(i, j)));
    for (const auto& col : extra_cols) row.push_back(cleared(col[static_cast<std::size_t>(i)]));
  }

  LaurentPoly prev{Int(1)};
  int r = 0;
  for (int c = 0; c < a.cols() && r < ech.rows; ++c) {
    int piv = -1;
    for (int i = r; i < ech.rows; ++i) {
      if (!ech.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(ech.m[static_cast<std::size_t>(r)], ech.m[static_cast<std::size_t>(piv)]);
    const auto& prow = ech.m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < ech.rows; ++i) {
      auto& row = ech.m[static_cast<std::size_t>(i)];
      for (int j = c + 1; j < ech.cols; ++j) {
        LaurentPoly t = prow[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(j)] -
                        row[static_cast<std::size_t>(c)] * prow[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(j)] = exact_div(t, prev);
      }
      row[static_cast<std::size_t>(c)] = LaurentPoly{};
    }
    prev = prow[static_cast<std::size_t>(c)];
    ech.pivot_col.push_back(c);
    ++r;
  }
  return ech;
}

std::optional<std::vector<RatFunc>> back_substitute(const Echelon& ech, int ncols, int rhs_index) {
  int col = ncols + rhs_index;
  int nrows = ech.rows;
  int npiv = static_cast<int>(ech.pivot_col.size());
  // Consistency: zero coefficient rows must have a zero right-hand side.
  for (int i = npiv; i < nrows; ++i) {
    if (!ech.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero())
      return std::nullopt;
  }
  std::vector<RatFunc> x(static_cast<std::size_t>(ncols));
  for (int i = npiv - 1; i >= 0; --i) {
    int pc = ech.pivot_col[static_cast<std::size_t>(i)];
    const auto& row = ech.m[static_cast<std::size_t>(i)];
    RatFunc acc(row[static_cast<std::size_t>(col)]);
    for (int j = pc + 1; j < ncols; ++j) {
      if (row[static_cast<std::size_t>(j)].is_zero() || x[static_cast<std::size_t>(j)].is_zero())
        continue;
      acc = acc - RatFunc(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(pc)] = acc / RatFunc(row[static_cast<std::size_t>(pc)]);
  }
  return x;
}

}  // namespace

int rank(const RepMatrix& m) {
  return static_cast<int>(bareiss(m, {}).pivot_col.size());
}

std::optional<std::vector<RatFunc>> solve(const RepMatrix& a, const std::vector<RatFunc>& b) {
  Echelon ech = bareiss(a, {b});
  return back_substitute(ech, a.cols(), 0);
}

std::vector<std::vector<RatFunc>> solve_batch(const RepMatrix& a,
                                              const std::vector<std::vector<RatFunc>>& columns) {
  if (a.rows() != a.cols()) throw rank_deficient("solve_batch requires a square matrix");
  Echelon ech = bareiss(a, columns);
  if (static_cast<int>(ech.pivot_col.size()) != a.cols())
    throw rank_deficient("coefficient matrix is singular");
  std::vector<std::vector<RatFunc>> out;
  out.reserve(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    auto x = back_substitute(ech, a.cols(), static_cast<int>(k));
    out.push_back(std::move(*x));  // full rank: always consistent
  }
  return out;
}

std::vector<std::vector<RatFunc>> null_space(const RepMatrix& a) {
  Echelon ech = bareiss(a, {});
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int pc : ech.pivot_col) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<std::vector<RatFunc>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<RatFunc> x(static_cast<std::size_t>(a.cols()));
    x[static_cast<std::size_t>(free)] = RatFunc(1);
    for (int i = static_cast<int>(ech.pivot_col.size()) - 1; i >= 0; --i) {
      int pc = ech.pivot_col[static_cast<std::size_t>(i)];
      const auto& row = ech.m[static_cast<std::size_t>(i)];
      RatFunc acc;
      for (int j = pc + 1; j < a.cols(); ++j) {
        if (row[static_cast<std::size_t>(j)].is_zero() || x[static_cast<std::size_t>(j)].is_zero())
          continue;
        acc = acc + RatFunc(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
      }
      x[static_cast<std::size_t>(pc)] = (RatFunc(0) - acc) / RatFunc(row[static_cast<std::size_t>(pc)]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RatFunc> char_poly(const RepMatrix& m) {
  if (m.rows() != m.cols()) throw mismatched_context("char_poly requires a square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier; exact over a field of characteristic zero.
  std::vector<RatFunc> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = RatFunc(1);
  RepMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    RatFunc tr;
    for (int i = 0; i < n; ++i) tr = tr + mk.at(i, i);
    RatFunc ck = RatFunc(0) - tr / RatFunc(Int(k));
    c[static_cast<std::size_t>(n - k)] = ck;
    if (k < n) {
      RepMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
      mk = m * shifted;
    }
  }
  return c;
}

}  // namespace spin7
