#include "quadop/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quadop {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

VectorQ MatrixQ::column_vector(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void MatrixQ::append_row(std::span<const Rational> v) {
  if (v.size() != cols_) throw DimensionError("append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  MatrixQ out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        if (sgn(rhs(k, c)) != 0) out(r, c) += a * rhs(k, c);
    }
  return out;
}

VectorQ MatrixQ::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
  VectorQ out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

MatrixQ MatrixQ::operator*(const Rational& s) const {
  MatrixQ out(*this);
  for (auto& x : out.data_) x *= s;
  return out;
}

MatrixQ MatrixQ::operator-() const { return *this * Rational(-1); }

MatrixQ MatrixQ::operator+(const MatrixQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
  MatrixQ out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& rhs) const { return *this + (-rhs); }

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

MatrixQ kron(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Rows beyond the rank are zero.
std::vector<std::size_t> gauss_jordan(MatrixQ& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (sgn(m(lead_row, k)) != 0) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

MatrixQ leading_rows(const MatrixQ& m, std::size_t count) {
  MatrixQ out(0, m.cols());
  for (std::size_t r = 0; r < count; ++r) out.append_row(m.row(r));
  return out;
}

}  // namespace

MatrixQ rref_canonical(const MatrixQ& m) {
  MatrixQ work(m);
  auto pivots = gauss_jordan(work);
  return leading_rows(work, pivots.size());
}

std::size_t rank(const MatrixQ& m) {
  MatrixQ work(m);
  return gauss_jordan(work).size();
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = gauss_jordan(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  MatrixQ inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

SubspaceQ SubspaceQ::span(const MatrixQ& generators) {
  SubspaceQ s(generators.cols());
  MatrixQ work(generators);
  s.pivots_ = gauss_jordan(work);
  s.basis_ = leading_rows(work, s.pivots_.size());
  return s;
}

SubspaceQ SubspaceQ::span(const std::vector<VectorQ>& generators, std::size_t ambient_dim) {
  return span(MatrixQ::from_rows(generators, ambient_dim));
}

SubspaceQ SubspaceQ::full(std::size_t ambient_dim) { return span(MatrixQ::identity(ambient_dim)); }

VectorQ SubspaceQ::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionError("reduce: vector length mismatch");
  VectorQ out(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Rational f = out[pivots_[r]];
    if (sgn(f) == 0) continue;
    auto row = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (sgn(row[c]) != 0) out[c] -= f * row[c];
  }
  return out;
}

bool SubspaceQ::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

bool SubspaceQ::contains(const SubspaceQ& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<std::size_t> SubspaceQ::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SubspaceQ kernel_basis(const MatrixQ& m) {
  SubspaceQ row_space = SubspaceQ::span(m);
  const auto& pivots = row_space.pivots();
  const auto& rref = row_space.basis();
  std::vector<VectorQ> vecs;
  for (std::size_t f : row_space.free_columns()) {
    VectorQ v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref(r, f);
    vecs.push_back(std::move(v));
  }
  return SubspaceQ::span(vecs, m.cols());
}

SubspaceQ subspace_sum(const SubspaceQ& u, const SubspaceQ& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("sum: ambient dimension mismatch");
  MatrixQ stacked(u.basis());
  for (std::size_t r = 0; r < w.dim(); ++r) stacked.append_row(w.basis().row(r));
  return SubspaceQ::span(stacked);
}

SubspaceQ subspace_intersect(const SubspaceQ& u, const SubspaceQ& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DimensionError("intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return SubspaceQ(n);
  // Coefficient vectors (α, β) with α·U = β·W form the kernel of [U; W]ᵀ (sign absorbed in β).
  MatrixQ stacked(u.basis());
  for (std::size_t r = 0; r < w.dim(); ++r) stacked.append_row(w.basis().row(r));
  SubspaceQ coeffs = kernel_basis(stacked.transpose());
  std::vector<VectorQ> vecs;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    VectorQ v(n);
    for (std::size_t r = 0; r < u.dim(); ++r) {
      const Rational& a = coeffs.basis()(k, r);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += a * u.basis()(r, c);
    }
    vecs.push_back(std::move(v));
  }
  return SubspaceQ::span(vecs, n);
}

bool subspace_contains(const SubspaceQ& u, std::span<const Rational> v) { return u.contains(v); }

SubspaceQ annihilator(const SubspaceQ& u) {
  if (u.dim() == 0) return SubspaceQ::full(u.ambient_dim());
  return kernel_basis(u.basis());
}

SubspaceQ image(const MatrixQ& m, const SubspaceQ& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionError("image: dimension mismatch");
  std::vector<VectorQ> vecs;
  for (std::size_t r = 0; r < u.dim(); ++r) vecs.push_back(m * u.basis().row(r));
  return SubspaceQ::span(vecs, m.rows());
}

}  // namespace quadop
