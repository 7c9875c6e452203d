#pragma once

/**
 * @file exactla.hpp
 * @brief Exact scalars over Q and GF(p) and dense exact linear algebra.
 *
 * Every computation in the library runs on top of this header. Nothing is
 * ever rounded: rationals are GMP fractions in lowest terms and residues are
 * kept in [0, p).
 *
 * Subspaces are always stored in reduced row-echelon form, which makes the
 * representation canonical: two subspaces are equal iff their SubspaceBasis
 * values compare equal.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qder {

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element of Q or GF(p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_rational(mpq_class q);
  static Scalar residue(std::uint32_t p, std::int64_t v);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

  /// The GMP value; throws FieldMismatch for residues.
  const mpq_class& rational() const;
  /// The canonical residue; throws FieldMismatch for rationals.
  std::uint32_t residue_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  /// *this -= f * b without temporaries (the elimination hot path).
  void sub_mul(const Scalar& f, const Scalar& b);
  void set_int(long v);

  /// "num/den" for rationals, decimal residue for GF(p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  /// Row-major integer entries, reduced into the field.
  static Matrix from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                          std::span<const long> entries);
  static Matrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> entries() const { return data_; }

  Vector column(std::size_t c) const;
  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Canonical basis of a subspace of field^ambient_dim, rows in RREF.
class SubspaceBasis {
 public:
  SubspaceBasis(const FieldSpec& f, std::size_t ambient_dim);
  /// Span of arbitrary generators (any order, any redundancy).
  static SubspaceBasis span(const FieldSpec& f, std::size_t ambient_dim,
                            const std::vector<Vector>& generators);
  static SubspaceBasis whole(const FieldSpec& f, std::size_t ambient_dim);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix as_matrix() const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

 private:
  friend class Echelon;
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

/**
 * Incrementally maintained reduced row-echelon form.
 *
 * Rows are kept fully reduced at all times, so reducing a new vector only
 * touches the non-pivot columns. This is what lets the Leibniz systems be fed
 * row by row from a sparse generator instead of as a dense n^3 x n^2 matrix.
 */
class Echelon {
 public:
  Echelon(const FieldSpec& f, std::size_t ambient_dim);

  /// Returns true iff the rank increased.
  bool insert(std::span<const Scalar> v);
  /// Integer sparse row given as (column, coefficient) pairs; duplicate
  /// columns accumulate.
  bool insert_sparse(std::span<const std::pair<std::size_t, long>> entries);
  bool contains(std::span<const Scalar> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const FieldSpec& field() const { return field_; }
  SubspaceBasis basis() const;
  /// Sorted pivot columns.
  std::vector<std::size_t> pivots() const;

 private:
  bool absorb_scratch();

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::size_t> free_cols_;
  Vector scratch_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);
/// Canonical basis of {v : m v = 0}.
SubspaceBasis nullspace(const Matrix& m);
/// Kernel read off from a finished echelon form of the system.
SubspaceBasis nullspace(const Echelon& system);
SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// Zassenhaus intersection.
SubspaceBasis span_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
/// Coordinates of v in the canonical basis, or nullopt when v is outside.
std::optional<Vector> contains(const SubspaceBasis& basis, std::span<const Scalar> v);
/// Unique x with Σ x_i generators[i] = v, or nullopt when v is outside the
/// span. Throws std::invalid_argument if the generators are dependent.
std::optional<Vector> coordinates(const FieldSpec& f, const std::vector<Vector>& generators,
                                  std::span<const Scalar> v);
bool is_subspace_of(const SubspaceBasis& inner, const SubspaceBasis& outer);

}  // namespace qder
