#include "torus/linalg.hpp"

#include <boost/multiprecision/integer.hpp>
#include <algorithm>

namespace torus {

void for_each_combination(
    std::size_t pool, std::size_t r,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > pool) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw InvalidInputError("rational with non-positive denominator: " + s);
    return Rat(num) / Rat(den);
  } catch (const std::exception& e) {
    throw InvalidInputError("bad rational literal '" + s + "': " + e.what());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  IntVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by the Bareiss identity: prev divides the numerator.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int lcm_all(const std::vector<Int>& values) {
  if (values.empty()) throw EmptySetError("lcm_all: empty list");
  Int acc = 1;
  for (const Int& v : values) {
    if (v <= 0) throw InvalidInputError("lcm_all: non-positive entry");
    acc = boost::multiprecision::lcm(acc, v);
  }
  return acc;
}

namespace {

// Forward elimination over Q; returns the pivot row indices in elimination
// order. Shared by rank and by integral_solution's independent-row selection.
std::vector<std::size_t> pivot_rows(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RatVec> a(rows, RatVec(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Rat(m(r, c));
  std::vector<std::size_t> index(rows);
  for (std::size_t r = 0; r < rows; ++r) index[r] = r;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    std::swap(index[r], index[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(index[r]);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) { return pivot_rows(m).size(); }

std::size_t rank_of_rows(const std::vector<IntVec>& rows) {
  return rank_rational(IntMatrix::from_rows(rows));
}

RatVec solve_exact(const IntMatrix& b_mat, const IntVec& rhs) {
  const std::size_t n = b_mat.rows();
  if (b_mat.cols() != n) throw DimensionError("solve_exact: matrix not square");
  if (rhs.size() != n) throw DimensionError("solve_exact: rhs length mismatch");
  Int d = det(b_mat);
  if (d == 0) throw SingularMatrixError("solve_exact: singular matrix");
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix bi = b_mat;
    for (std::size_t r = 0; r < n; ++r) bi(r, i) = rhs[r];
    x[i] = Rat(det(bi)) / Rat(d);
  }
  return x;
}

IntMatrix hnf_row_basis(const IntMatrix& m) {
  std::vector<IntVec> rows = m.to_rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Gcd-reduce column c over rows >= r until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            abs(rows[i][c]) < abs(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = rows[i][c] / rows[r][c];  // truncated: leaves |rem| < |pivot|
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(rows[i][c], rows[r][c]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return IntMatrix::from_rows(rows);
}

namespace {

std::vector<std::size_t> hnf_pivot_cols(const IntMatrix& hnf) {
  std::vector<std::size_t> pc;
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t c = 0;
    while (c < hnf.cols() && hnf(r, c) == 0) ++c;
    pc.push_back(c);
  }
  return pc;
}

}  // namespace

bool in_row_lattice(const IntMatrix& hnf, const IntVec& v) {
  if (v.size() != hnf.cols()) throw DimensionError("in_row_lattice: length mismatch");
  IntVec w = v;
  auto pc = hnf_pivot_cols(hnf);
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t c = pc[r];
    if (w[c] % hnf(r, c) != 0) return false;
    Int q = w[c] / hnf(r, c);
    for (std::size_t j = 0; j < hnf.cols(); ++j) w[j] -= q * hnf(r, j);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

IntVec reduce_mod_row_lattice(const IntMatrix& hnf, IntVec v) {
  if (v.size() != hnf.cols())
    throw DimensionError("reduce_mod_row_lattice: length mismatch");
  auto pc = hnf_pivot_cols(hnf);
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t c = pc[r];
    Int q = floor_div(v[c], hnf(r, c));
    if (q == 0) continue;
    for (std::size_t j = 0; j < hnf.cols(); ++j) v[j] -= q * hnf(r, j);
  }
  return v;
}

std::optional<IntVec> integral_solution(const IntMatrix& b_mat,
                                        const IntVec& rhs) {
  const std::size_t k = b_mat.rows(), n = b_mat.cols();
  if (rhs.size() != k) throw DimensionError("integral_solution: rhs length mismatch");
  auto pivots = pivot_rows(b_mat);
  if (pivots.size() < n)
    throw SingularMatrixError("integral_solution: columns are dependent");
  IntMatrix sq(n, n);
  IntVec sq_rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) sq(i, c) = b_mat(pivots[i], c);
    sq_rhs[i] = rhs[pivots[i]];
  }
  RatVec x = solve_exact(sq, sq_rhs);
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integral(x[i])) return std::nullopt;
    out[i] = numerator(x[i]);
  }
  for (std::size_t r = 0; r < k; ++r)
    if (dot(b_mat.row(r), out) != rhs[r]) return std::nullopt;
  return out;
}

}  // namespace torus
