#pragma once

// Exact linear algebra over Q: dense matrices, canonical reduced row-echelon
// forms and subspaces of Q^n represented by their RREF basis.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quadop {

using Rational = mpq_class;
using VectorQ = std::vector<Rational>;

/// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixQ(std::initializer_list<std::initializer_list<long>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  VectorQ row_vector(std::size_t r) const { return VectorQ(row(r).begin(), row(r).end()); }
  VectorQ column_vector(std::size_t c) const;

  void append_row(std::span<const Rational> v);

  MatrixQ transpose() const;
  MatrixQ operator*(const MatrixQ& rhs) const;
  VectorQ operator*(std::span<const Rational> v) const;
  MatrixQ operator*(const Rational& s) const;
  MatrixQ operator-() const;
  MatrixQ operator+(const MatrixQ& rhs) const;
  MatrixQ operator-(const MatrixQ& rhs) const;
  bool operator==(const MatrixQ& other) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; (a⊗b)(i*b.rows+k, j*b.cols+l) = a(i,j)·b(k,l).
MatrixQ kron(const MatrixQ& a, const MatrixQ& b);

/// Unique reduced row-echelon form of m with zero rows removed.
MatrixQ rref_canonical(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
MatrixQ inverse(const MatrixQ& m);

bool is_zero(std::span<const Rational> v);

class SubspaceQ {
 public:
  SubspaceQ() = default;
  explicit SubspaceQ(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `generators`.
  static SubspaceQ span(const MatrixQ& generators);
  static SubspaceQ span(const std::vector<VectorQ>& generators, std::size_t ambient_dim);
  static SubspaceQ full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its echelon reduction against the basis; zero iff v lies in the span.
  VectorQ reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const SubspaceQ& other) const;

  /// Columns that are not pivots, in increasing order.
  std::vector<std::size_t> free_columns() const;

  bool operator==(const SubspaceQ& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}.
SubspaceQ kernel_basis(const MatrixQ& m);

SubspaceQ subspace_sum(const SubspaceQ& u, const SubspaceQ& w);
SubspaceQ subspace_intersect(const SubspaceQ& u, const SubspaceQ& w);
bool subspace_contains(const SubspaceQ& u, std::span<const Rational> v);

/// Annihilator {φ : φ·u = 0 for all u ∈ U} under the standard dot product.
SubspaceQ annihilator(const SubspaceQ& u);

/// Image of U under the linear map v ↦ m·v.
SubspaceQ image(const MatrixQ& m, const SubspaceQ& u);

}  // namespace quadop
