#pragma once

// The quandle algebra k[X] with basis {e_x} and product e_x · e_y = e_{x ▷ y}.

#include <cstddef>

#include "qder/exactla.hpp"
#include "qder/quandle.hpp"

namespace qder {

class AlgebraElement {
 public:
  AlgebraElement(const FieldSpec& f, std::size_t n) : field_(f), coeffs_(zero_vector(f, n)) {}
  AlgebraElement(const FieldSpec& f, Vector coeffs);
  static AlgebraElement basis(const FieldSpec& f, std::size_t n, Element x);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return coeffs_.size(); }
  const Vector& coeffs() const { return coeffs_; }
  Scalar& operator[](std::size_t x) { return coeffs_[x]; }
  const Scalar& operator[](std::size_t x) const { return coeffs_[x]; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldSpec field_;
  Vector coeffs_;
};

/// Throws std::invalid_argument on size or field mismatch.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const Quandle& q);
Scalar augmentation(const AlgebraElement& a);

/// Canonical basis of I_X = ker ε.
SubspaceBasis augmentation_ideal(const Quandle& q, const FieldSpec& f);

bool is_right_ideal(const SubspaceBasis& s, const Quandle& q);
bool is_left_ideal(const SubspaceBasis& s, const Quandle& q);

/// Right-ideal closure of {e_{x▷y} - e_{y▷x}}. For medial quandles the result
/// is also checked to be a left ideal; std::logic_error if that fails.
SubspaceBasis jx_ideal(const Quandle& q, const FieldSpec& f);

/// Square operator on k[X]. Column x holds the image of e_x, so entry (u, x)
/// is c_x^u and maps act on column vectors.
class LinearMap {
 public:
  explicit LinearMap(Matrix m);
  static LinearMap zero(const FieldSpec& f, std::size_t n) { return LinearMap(Matrix(f, n, n)); }
  static LinearMap identity(const FieldSpec& f, std::size_t n) { return LinearMap(Matrix::identity(f, n)); }

  std::size_t order() const { return m_.rows(); }
  const FieldSpec& field() const { return m_.field(); }
  const Matrix& matrix() const { return m_; }
  /// c_x^u.
  const Scalar& coeff(std::size_t x, std::size_t u) const { return m_(u, x); }

  AlgebraElement apply(const AlgebraElement& a) const;
  /// (*this) ∘ other.
  LinearMap compose(const LinearMap& other) const { return LinearMap(m_ * other.m_); }
  bool is_zero() const { return m_.is_zero(); }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ + b.m_); }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ - b.m_); }
  friend LinearMap operator*(const LinearMap& a, const Scalar& s) { return LinearMap(a.m_ * s); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// L_x : e_y ↦ e_{x▷y}.
LinearMap left_mult(Element x, const Quandle& q, const FieldSpec& f);
/// R_x : e_y ↦ e_{y▷x}.
LinearMap right_mult(Element x, const Quandle& q, const FieldSpec& f);

// Two fixed flattenings of n×n operators into k^{n²}:
//   row-major    index u·n + x  (derivation unknowns c_x^u)
//   column-major index x·n + u  (operator spaces in lietransform)
Vector flatten_row_major(const LinearMap& m);
LinearMap unflatten_row_major(const FieldSpec& f, std::size_t n, std::span<const Scalar> v);
Vector flatten_col_major(const LinearMap& m);
LinearMap unflatten_col_major(const FieldSpec& f, std::size_t n, std::span<const Scalar> v);

}  // namespace qder
