#include "cheb/gf.hpp"

#include <utility>

namespace cheb::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t MatrixHash::operator()(const Matrix& m) const {
  std::size_t h = m.rows * 131 + m.cols;
  for (Elem e : m.data) h = h * 1000003u ^ e;
  return h;
}

Elem inv_mod(Elem a, Elem p) {
  // p is prime, so a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

Matrix multiply(const Matrix& a, const Matrix& b, Elem p) {
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = static_cast<Elem>((c.at(i, j) + aik * b.at(k, j)) % p);
    }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b, Elem p) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = (a.data[i] + b.data[i]) % p;
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b, Elem p) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = (a.data[i] + p - b.data[i]) % p;
  return c;
}

Matrix scale(const Matrix& a, Elem s, Elem p) {
  Matrix c = a;
  for (auto& e : c.data) e = static_cast<Elem>(std::uint64_t{e} * s % p);
  return c;
}

Vec apply(const Vec& v, const Matrix& m, Elem p) {
  Vec out(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const std::uint64_t vi = v[i];
    if (vi == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j)
      out[j] = static_cast<Elem>((out[j] + vi * m.at(i, j)) % p);
  }
  return out;
}

Vec add(const Vec& a, const Vec& b, Elem p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p;
  return c;
}

Vec subtract(const Vec& a, const Vec& b, Elem p) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + p - b[i]) % p;
  return c;
}

namespace {

// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, Elem p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    const std::uint64_t inv = inv_mod(m.at(row, col), p);
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(row, j) = static_cast<Elem>(m.at(row, j) * inv % p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t factor = m.at(r, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(r, j) = static_cast<Elem>((m.at(r, j) + (p - factor) * m.at(row, j)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m, Elem p) { return row_reduce(m, p).size(); }

std::optional<Matrix> inverse(const Matrix& m, Elem p) {
  const std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug, p);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool is_invertible(const Matrix& m, Elem p) { return m.rows == m.cols && rank(m, p) == m.rows; }

std::vector<Vec> nullspace(Matrix m, Elem p) {
  const auto pivots = row_reduce(m, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - m.at(r, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t fixed_space_dim(const Matrix& m, Elem p) {
  return m.rows - rank(subtract(m, Matrix::identity(m.rows), p), p);
}

std::uint64_t encode(const Vec& v, Elem p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Vec decode(std::uint64_t code, std::size_t dim, Elem p) {
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<Elem>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace cheb::gf
