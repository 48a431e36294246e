#include "dynshaf/linalg.hpp"

#include <algorithm>

namespace dynshaf {

Int det_int(IntMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<int> rref(RatMat& a) {
  std::vector<int> pivots;
  const std::size_t rows = a.size();
  if (rows == 0) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Rat inv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  RatMat m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_col];
    IntVec prim = primitive_integer_vector(v);
    for (std::size_t j = 0; j < cols; ++j) v[j] = Rat(prim[j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
  const std::size_t n = a.size();
  RatMat aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == static_cast<int>(n)) return std::nullopt;  // inconsistent
  if (pivots.size() < n) return std::nullopt;  // singular
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

RatMat mat_inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= static_cast<int>(n))
    throw std::domain_error("matrix not invertible");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMat out(n, IntVec(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

IntVec int_mat_vec(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

RatMat to_rat(const IntMat& a) {
  RatMat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = RatVec(a[i].begin(), a[i].end());
  return out;
}

IntVec primitive_integer_vector(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& q : v) lcm = lcm * q.get_den() / gcd(lcm, Int(q.get_den()));
  IntVec out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(Int(q.get_num()) * (lcm / q.get_den()));
  Int content = 0;
  for (const Int& x : out) content = gcd(content, x);
  if (content > 1)
    for (Int& x : out) x /= content;
  canonicalize_sign(out);
  return out;
}

void canonicalize_sign(IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    return;
  }
}

}  // namespace dynshaf
