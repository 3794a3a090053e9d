#pragma once

// Dense vectors and matrices over an idempotent semifield.
//
// Operator spelling follows the algebra: `+` is ⊕ and `*` is ⊗. Vectors carry
// an orientation, and products reject orientations that do not conform so
// that q⁻A x style expressions cannot silently transpose.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/semifield.hpp"

namespace tropical {

enum class Orientation { column, row };

inline Orientation flipped(Orientation o) noexcept {
  return o == Orientation::column ? Orientation::row : Orientation::column;
}

template <Semifield F>
class BasicVector {
 public:
  using element_type = Element<F>;

  BasicVector(std::vector<element_type> elements, Orientation orientation = Orientation::column)
      : elements_(std::move(elements)), orientation_(orientation) {
    if (elements_.empty()) throw Error(Errc::shape_mismatch, "vectors must be nonempty");
  }

  static BasicVector column(std::initializer_list<double> values) {
    return from_values(std::span<const double>(values.begin(), values.size()), Orientation::column);
  }
  static BasicVector row(std::initializer_list<double> values) {
    return from_values(std::span<const double>(values.begin(), values.size()), Orientation::row);
  }
  static BasicVector from_values(std::span<const double> values,
                                 Orientation orientation = Orientation::column) {
    std::vector<element_type> elements;
    elements.reserve(values.size());
    for (double v : values) elements.emplace_back(v);
    return BasicVector(std::move(elements), orientation);
  }
  static BasicVector filled(std::size_t n, element_type value,
                            Orientation orientation = Orientation::column) {
    return BasicVector(std::vector<element_type>(n, value), orientation);
  }
  static BasicVector zeros(std::size_t n, Orientation orientation = Orientation::column) {
    return filled(n, element_type::zero(), orientation);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  Orientation orientation() const noexcept { return orientation_; }
  bool is_column() const noexcept { return orientation_ == Orientation::column; }
  bool is_row() const noexcept { return orientation_ == Orientation::row; }

  const element_type& operator[](std::size_t i) const { return elements_[i]; }
  element_type& operator[](std::size_t i) { return elements_[i]; }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  std::span<const element_type> elements() const noexcept { return elements_; }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(size());
    for (auto e : elements_) out.push_back(e.value());
    return out;
  }

  // No element equals zero.
  bool is_regular() const noexcept {
    return std::none_of(begin(), end(), [](element_type e) { return e.is_zero(); });
  }
  bool is_zero() const noexcept {
    return std::all_of(begin(), end(), [](element_type e) { return e.is_zero(); });
  }

  BasicVector transposed() const { return BasicVector(elements_, flipped(orientation_)); }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << (v.is_column() ? ")^T" : ")");
  }

 private:
  std::vector<element_type> elements_;
  Orientation orientation_;
};

template <Semifield F>
class BasicMatrix {
 public:
  using element_type = Element<F>;

  // rows x cols matrix filled with the zero element.
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(Errc::shape_mismatch, "matrices must be at least 1x1");
  }

  BasicMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : BasicMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::shape_mismatch, "ragged matrix rows");
      std::size_t j = 0;
      for (double v : r) (*this)(i, j++) = element_type(v);
      ++i;
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = element_type::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const element_type& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  element_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  BasicVector<F> row(std::size_t i) const {
    std::vector<element_type> r(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return BasicVector<F>(std::move(r), Orientation::row);
  }

  bool is_row_regular() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < cols_ && !any; ++j) any = !(*this)(i, j).is_zero();
      if (!any) return false;
    }
    return true;
  }
  bool is_column_regular() const noexcept {
    for (std::size_t j = 0; j < cols_; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < rows_ && !any; ++i) any = !(*this)(i, j).is_zero();
      if (!any) return false;
    }
    return true;
  }
  bool is_regular() const noexcept { return is_row_regular() && is_column_regular(); }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicMatrix& m) {
    os << '(';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i ? ",(" : "(");
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
      os << ')';
    }
    return os << ')';
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<element_type> entries_;
};

namespace detail {

inline void require(bool ok, Errc code, const char* what) {
  if (!ok) throw Error(code, what);
}

template <Semifield F>
void require_same_shape(const BasicVector<F>& a, const BasicVector<F>& b) {
  require(a.size() == b.size() && a.orientation() == b.orientation(), Errc::shape_mismatch,
          "vector shapes differ");
}

}  // namespace detail

// ---- vector algebra --------------------------------------------------------

template <Semifield F>
BasicVector<F> operator+(const BasicVector<F>& a, const BasicVector<F>& b) {
  detail::require_same_shape(a, b);
  BasicVector<F> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <Semifield F>
BasicVector<F> operator*(Element<F> c, const BasicVector<F>& v) {
  BasicVector<F> out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

// Row times column: the scalar ⊕ᵢ aᵢ ⊗ bᵢ.
template <Semifield F>
Element<F> operator*(const BasicVector<F>& row, const BasicVector<F>& column) {
  detail::require(row.is_row() && column.is_column() && row.size() == column.size(),
                  Errc::shape_mismatch, "inner product needs a row and a column of equal size");
  Element<F> acc = Element<F>::zero();
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * column[i];
  return acc;
}

// Column times row: the outer-product matrix.
template <Semifield F>
BasicMatrix<F> outer(const BasicVector<F>& column, const BasicVector<F>& row) {
  detail::require(column.is_column() && row.is_row(), Errc::shape_mismatch,
                  "outer product needs a column and a row");
  BasicMatrix<F> out(column.size(), row.size());
  for (std::size_t i = 0; i < column.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) out(i, j) = column[i] * row[j];
  return out;
}

// Componentwise order; shapes must agree.
template <Semifield F>
bool leq(const BasicVector<F>& a, const BasicVector<F>& b) {
  detail::require_same_shape(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

// Multiplicative conjugate transpose. Zero entries stay zero.
template <Semifield F>
BasicVector<F> conjugate(const BasicVector<F>& x) {
  detail::require(!x.is_zero(), Errc::zero_vector, "conjugate of the zero vector");
  BasicVector<F> out = x.transposed();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!out[i].is_zero()) out[i] = out[i].inv();
  return out;
}

// rho(x, y) = y⁻x ⊕ x⁻y; in max-plus this is the Chebyshev distance.
template <Semifield F>
Element<F> distance(const BasicVector<F>& x, const BasicVector<F>& y) {
  detail::require(x.is_column() && y.is_column() && x.size() == y.size(), Errc::shape_mismatch,
                  "distance needs two columns of equal size");
  detail::require(x.is_regular() && y.is_regular(), Errc::not_regular,
                  "distance is defined for regular vectors only");
  return conjugate(y) * x + conjugate(x) * y;
}

// ---- matrix algebra --------------------------------------------------------

template <Semifield F>
BasicMatrix<F> operator+(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::shape_mismatch,
                  "matrix shapes differ");
  BasicMatrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

template <Semifield F>
BasicMatrix<F> operator*(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  detail::require(a.cols() == b.rows(), Errc::shape_mismatch, "inner dimensions differ");
  BasicMatrix<F> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <Semifield F>
BasicMatrix<F> operator*(Element<F> c, const BasicMatrix<F>& a) {
  BasicMatrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

template <Semifield F>
BasicVector<F> operator*(const BasicMatrix<F>& a, const BasicVector<F>& x) {
  detail::require(x.is_column() && x.size() == a.cols(), Errc::shape_mismatch,
                  "matrix-vector product needs a conforming column");
  std::vector<Element<F>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return BasicVector<F>(std::move(out), Orientation::column);
}

template <Semifield F>
BasicVector<F> operator*(const BasicVector<F>& x, const BasicMatrix<F>& a) {
  detail::require(x.is_row() && x.size() == a.rows(), Errc::shape_mismatch,
                  "vector-matrix product needs a conforming row");
  std::vector<Element<F>> out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  return BasicVector<F>(std::move(out), Orientation::row);
}

template <Semifield F>
bool leq(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::shape_mismatch,
                  "matrix shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) <= b(i, j))) return false;
  return true;
}

template <Semifield F>
BasicMatrix<F> mat_add(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  return a + b;
}
template <Semifield F>
BasicMatrix<F> mat_mul(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  return a * b;
}
template <Semifield F>
BasicMatrix<F> scalar_mul(Element<F> c, const BasicMatrix<F>& a) {
  return c * a;
}

// Greatest regular solution of A x <= p, namely (p⁻A)⁻. Every regular x with
// A x <= p satisfies x <= (p⁻A)⁻.
template <Semifield F>
BasicVector<F> max_solution_leq(const BasicMatrix<F>& a, const BasicVector<F>& p) {
  detail::require(p.is_column() && p.size() == a.rows(), Errc::shape_mismatch,
                  "right-hand side must be a column with one entry per row");
  detail::require(a.is_column_regular(), Errc::not_column_regular,
                  "matrix must be column-regular");
  detail::require(p.is_regular(), Errc::not_regular, "right-hand side must be regular");
  return conjugate(conjugate(p) * a);
}

using TropVector = BasicVector<MaxPlus>;
using TropMatrix = BasicMatrix<MaxPlus>;

}  // namespace tropical
