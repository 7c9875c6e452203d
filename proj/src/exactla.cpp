#include "qder/exactla.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qder {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("prime modulus must be below 2^31: " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  auto bad = [&] { return std::invalid_argument("unsupported field: '" + std::string(text) + "'"); };
  if (text.size() < 5 || text.substr(0, 3) != "GF(" || text.back() != ')') throw bad();
  auto digits = text.substr(3, text.size() - 4);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad();
  return prime(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

// --- Scalar ---------------------------------------------------------------

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  if (f.is_rational()) return Scalar(mpq_class(v));
  return Scalar(Residue{reduce_mod(v, f.modulus()), f.modulus()});
}

Scalar Scalar::from_rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(std::uint32_t p, std::int64_t v) { return Scalar(Residue{reduce_mod(v, p), p}); }

FieldSpec Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return FieldSpec(FieldSpec::Kind::PrimeField, r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("scalar is a residue, not a rational");
}

std::uint32_t Scalar::residue_value() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("scalar is a rational, not a residue");
}

void Scalar::check_same(const Scalar& o) const {
  if (value_.index() != o.value_.index())
    throw FieldMismatch("mixing rational and modular scalars");
  if (auto r = std::get_if<Residue>(&value_); r && r->modulus != std::get<Residue>(o.value_).modulus)
    throw FieldMismatch("mixing residues of different moduli");
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  auto r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + std::get<Residue>(o.value_).value) % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(
        (std::uint64_t{r.value} + r.modulus - std::get<Residue>(o.value_).value) % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} * std::get<Residue>(o.value_).value % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<Scalar::Residue>(a.value_) == std::get<Scalar::Residue>(b.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
  auto r = std::get<Residue>(value_);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

void Scalar::sub_mul(const Scalar& f, const Scalar& b) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(f.value_).get_mpq_t(),
            std::get<mpq_class>(b.value_).get_mpq_t());
    mpq_sub(q->get_mpq_t(), q->get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  auto& r = std::get<Residue>(value_);
  auto prod = std::uint64_t{std::get<Residue>(f.value_).value} * std::get<Residue>(b.value_).value % r.modulus;
  r.value = static_cast<std::uint32_t>((r.value + r.modulus - prod) % r.modulus);
}

void Scalar::set_int(long v) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    *q = v;
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = reduce_mod(v, r.modulus);
  }
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_))
    return q->get_num().get_str() + "/" + q->get_den().get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, std::size_t rows, std::size_t cols,
                         std::span<const long> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = Scalar::from_int(f, entries[i]);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return qder::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix fields differ");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j).sub_mul(-aik, b(k, j));
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// --- Echelon --------------------------------------------------------------

Echelon::Echelon(const FieldSpec& f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), scratch_(zero_vector(f, ambient_dim)) {
  free_cols_.resize(ambient_dim);
  for (std::size_t c = 0; c < ambient_dim; ++c) free_cols_[c] = c;
}

bool Echelon::insert(std::span<const Scalar> v) {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!v[c].is_zero() && v[c].field() != field_) throw FieldMismatch("vector over a different field");
    scratch_[c] = v[c];
  }
  return absorb_scratch();
}

bool Echelon::insert_sparse(std::span<const std::pair<std::size_t, long>> entries) {
  for (auto [c, coeff] : entries) {
    if (c >= ambient_) throw std::out_of_range("sparse column out of range");
    scratch_[c] += Scalar::from_int(field_, coeff);
  }
  return absorb_scratch();
}

// Reduces scratch_ against the current rows. Leaves scratch_ all-zero on
// return either way.
bool Echelon::absorb_scratch() {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto pc = row_pivot_[r];
    if (scratch_[pc].is_zero()) continue;
    Scalar f = scratch_[pc];
    scratch_[pc].set_int(0);
    const auto& row = rows_[r];
    for (auto c : free_cols_)
      if (!row[c].is_zero()) scratch_[c].sub_mul(f, row[c]);
  }
  auto lead_it = std::find_if(free_cols_.begin(), free_cols_.end(),
                              [&](std::size_t c) { return !scratch_[c].is_zero(); });
  if (lead_it == free_cols_.end()) return false;
  const auto lead = *lead_it;
  free_cols_.erase(lead_it);

  Scalar inv = scratch_[lead].inverse();
  Vector fresh = zero_vector(field_, ambient_);
  fresh[lead] = Scalar::one(field_);
  for (auto c : free_cols_)
    if (!scratch_[c].is_zero()) {
      fresh[c] = scratch_[c] * inv;
      scratch_[c].set_int(0);
    }
  scratch_[lead].set_int(0);

  for (auto& row : rows_) {
    if (row[lead].is_zero()) continue;
    Scalar f = row[lead];
    row[lead].set_int(0);
    for (auto c : free_cols_)
      if (!fresh[c].is_zero()) row[c].sub_mul(f, fresh[c]);
  }
  rows_.push_back(std::move(fresh));
  row_pivot_.push_back(lead);
  return true;
}

bool Echelon::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  // In reduced form v is in the span iff v == sum_r v[pivot_r] * row_r.
  Vector w = zero_vector(field_, ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& coeff = v[row_pivot_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!rows_[r][c].is_zero()) w[c].sub_mul(-coeff, rows_[r][c]);
  }
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!(w[c] == v[c])) return false;
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  auto p = row_pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

SubspaceBasis Echelon::basis() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return row_pivot_[a] < row_pivot_[b]; });
  SubspaceBasis out(field_, ambient_);
  for (auto i : order) {
    out.vectors_.push_back(rows_[i]);
    out.pivots_.push_back(row_pivot_[i]);
  }
  return out;
}

// --- SubspaceBasis ----------------------------------------------------------

SubspaceBasis::SubspaceBasis(const FieldSpec& f, std::size_t ambient_dim) : field_(f), ambient_(ambient_dim) {}

SubspaceBasis SubspaceBasis::span(const FieldSpec& f, std::size_t ambient_dim,
                                  const std::vector<Vector>& generators) {
  Echelon e(f, ambient_dim);
  for (const auto& g : generators) e.insert(g);
  return e.basis();
}

SubspaceBasis SubspaceBasis::whole(const FieldSpec& f, std::size_t ambient_dim) {
  SubspaceBasis out(f, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector v = zero_vector(f, ambient_dim);
    v[i] = Scalar::one(f);
    out.vectors_.push_back(std::move(v));
    out.pivots_.push_back(i);
  }
  return out;
}

Matrix SubspaceBasis::as_matrix() const { return Matrix::from_rows(field_, ambient_, vectors_); }

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
}

// --- free functions ---------------------------------------------------------

RrefResult rref(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  auto b = e.basis();
  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < b.dim(); ++r)
    std::copy(b.vectors()[r].begin(), b.vectors()[r].end(), reduced.row(r).begin());
  return {std::move(reduced), b.pivots()};
}

SubspaceBasis nullspace(const Echelon& system) {
  const auto& f = system.field();
  const auto n = system.ambient_dim();
  auto b = system.basis();
  std::vector<bool> is_pivot(n, false);
  for (auto p : b.pivots()) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < b.dim(); ++r)
      if (!b.vectors()[r][free].is_zero()) v[b.pivots()[r]] = -b.vectors()[r][free];
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(f, n, gens);
}

SubspaceBasis nullspace(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return nullspace(e);
}

namespace {

void require_compatible(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspaces live in ambient spaces of different dimension");
  if (a.field() != b.field()) throw FieldMismatch("subspaces over different fields");
}

}  // namespace

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_compatible(a, b);
  Echelon e(a.field(), a.ambient_dim());
  for (const auto& v : a.vectors()) e.insert(v);
  for (const auto& v : b.vectors()) e.insert(v);
  return e.basis();
}

SubspaceBasis span_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_compatible(a, b);
  const auto d = a.ambient_dim();
  const auto& f = a.field();
  // Rows (a | a) and (b | 0); echelon rows whose pivot sits in the right half
  // have a zero left half and their right halves span the intersection.
  Echelon e(f, 2 * d);
  Vector buf = zero_vector(f, 2 * d);
  for (const auto& v : a.vectors()) {
    std::copy(v.begin(), v.end(), buf.begin());
    std::copy(v.begin(), v.end(), buf.begin() + static_cast<std::ptrdiff_t>(d));
    e.insert(buf);
  }
  for (const auto& v : b.vectors()) {
    std::copy(v.begin(), v.end(), buf.begin());
    std::fill(buf.begin() + static_cast<std::ptrdiff_t>(d), buf.end(), Scalar::zero(f));
    e.insert(buf);
  }
  auto z = e.basis();
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < z.dim(); ++r)
    if (z.pivots()[r] >= d)
      gens.emplace_back(z.vectors()[r].begin() + static_cast<std::ptrdiff_t>(d), z.vectors()[r].end());
  return SubspaceBasis::span(f, d, gens);
}

std::optional<Vector> contains(const SubspaceBasis& basis, std::span<const Scalar> v) {
  if (v.size() != basis.ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
  const auto& f = basis.field();
  Vector coords;
  Vector w = zero_vector(f, v.size());
  for (std::size_t r = 0; r < basis.dim(); ++r) {
    const auto& coeff = v[basis.pivots()[r]];
    coords.push_back(coeff);
    if (coeff.is_zero()) continue;
    const auto& row = basis.vectors()[r];
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!row[c].is_zero()) w[c].sub_mul(-coeff, row[c]);
  }
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!(w[c] == v[c])) return std::nullopt;
  return coords;
}

std::optional<Vector> coordinates(const FieldSpec& f, const std::vector<Vector>& generators,
                                  std::span<const Scalar> v) {
  const auto k = generators.size();
  Matrix aug(f, v.size(), k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].size() != v.size()) throw std::invalid_argument("generator length does not match vector");
    for (std::size_t r = 0; r < v.size(); ++r) aug(r, j) = generators[j][r];
  }
  for (std::size_t r = 0; r < v.size(); ++r) aug(r, k) = v[r];
  auto [red, piv] = rref(aug);
  const bool outside = !piv.empty() && piv.back() == k;
  if (piv.size() - (outside ? 1 : 0) != k) throw std::invalid_argument("generators are linearly dependent");
  if (outside) return std::nullopt;
  Vector x = zero_vector(f, k);
  for (std::size_t r = 0; r < k; ++r) x[piv[r]] = red(r, k);
  return x;
}

bool is_subspace_of(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  require_compatible(inner, outer);
  return std::all_of(inner.vectors().begin(), inner.vectors().end(),
                     [&](const Vector& v) { return contains(outer, v).has_value(); });
}

}  // namespace qder
