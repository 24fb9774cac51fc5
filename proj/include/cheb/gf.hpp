#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cheb::gf {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

bool is_prime(std::uint64_t n);

/// Dense matrix over F_p. The prime travels with the operations, not the
/// matrix, so modules over one prime share plain storage.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static Matrix identity(std::size_t n);

  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    if (auto c = a.cols <=> b.cols; c != 0) return c;
    return a.data <=> b.data;
  }
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const;
};

Elem inv_mod(Elem a, Elem p);

Matrix multiply(const Matrix& a, const Matrix& b, Elem p);
Matrix add(const Matrix& a, const Matrix& b, Elem p);
Matrix subtract(const Matrix& a, const Matrix& b, Elem p);
Matrix scale(const Matrix& a, Elem s, Elem p);
/// Row vector times matrix.
Vec apply(const Vec& v, const Matrix& m, Elem p);
Vec add(const Vec& a, const Vec& b, Elem p);
Vec subtract(const Vec& a, const Vec& b, Elem p);

std::size_t rank(Matrix m, Elem p);
std::optional<Matrix> inverse(const Matrix& m, Elem p);
bool is_invertible(const Matrix& m, Elem p);

/// Basis of { x : m * x = 0 } as column vectors of length m.cols.
std::vector<Vec> nullspace(Matrix m, Elem p);

/// dim { v : v * m = v }.
std::size_t fixed_space_dim(const Matrix& m, Elem p);

/// Integer encoding of a vector (base-p digits, coordinate 0 least significant).
std::uint64_t encode(const Vec& v, Elem p);
Vec decode(std::uint64_t code, std::size_t dim, Elem p);

}  // namespace cheb::gf
