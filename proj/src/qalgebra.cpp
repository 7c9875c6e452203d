#include "qder/qalgebra.hpp"

#include <stdexcept>

namespace qder {

AlgebraElement::AlgebraElement(const FieldSpec& f, Vector coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) throw FieldMismatch("coefficient field differs from algebra field");
}

AlgebraElement AlgebraElement::basis(const FieldSpec& f, std::size_t n, Element x) {
  if (x >= n) throw std::out_of_range("basis index out of range");
  AlgebraElement e(f, n);
  e.coeffs_[x] = Scalar::one(f);
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("algebra element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("algebra element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const Quandle& q) {
  const auto n = q.order();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("algebra element size does not match quandle");
  if (a.field() != b.field()) throw FieldMismatch("algebra elements over different fields");
  AlgebraElement out(a.field(), n);
  for (Element x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (Element y = 0; y < n; ++y)
      if (!b[y].is_zero()) out[q.op(x, y)] += a[x] * b[y];
  }
  return out;
}

Scalar augmentation(const AlgebraElement& a) {
  auto s = Scalar::zero(a.field());
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

SubspaceBasis augmentation_ideal(const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  std::vector<Vector> gens;
  for (std::size_t x = 1; x < n; ++x) {
    auto v = zero_vector(f, n);
    v[x] = Scalar::one(f);
    v[0] = -Scalar::one(f);
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(f, n, gens);
}

namespace {

template <typename Mul>
bool closed_under(const SubspaceBasis& s, const Quandle& q, Mul mul) {
  const auto& f = s.field();
  for (const auto& v : s.vectors())
    for (Element z = 0; z < q.order(); ++z) {
      auto p = mul(AlgebraElement(f, v), AlgebraElement::basis(f, q.order(), z));
      if (!contains(s, p.coeffs())) return false;
    }
  return true;
}

}  // namespace

bool is_right_ideal(const SubspaceBasis& s, const Quandle& q) {
  return closed_under(s, q, [&](const AlgebraElement& v, const AlgebraElement& e) { return multiply(v, e, q); });
}

bool is_left_ideal(const SubspaceBasis& s, const Quandle& q) {
  return closed_under(s, q, [&](const AlgebraElement& v, const AlgebraElement& e) { return multiply(e, v, q); });
}

SubspaceBasis jx_ideal(const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  Echelon ech(f, n);
  std::vector<Vector> frontier;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto v = zero_vector(f, n);
      v[q.op(x, y)] += Scalar::one(f);
      v[q.op(y, x)] -= Scalar::one(f);
      if (ech.insert(v)) frontier.push_back(std::move(v));
    }
  // Each new vector only needs to be multiplied once by every e_z.
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier)
      for (Element z = 0; z < n; ++z) {
        auto p = multiply(AlgebraElement(f, v), AlgebraElement::basis(f, n, z), q);
        if (ech.insert(p.coeffs())) next.push_back(p.coeffs());
      }
    frontier = std::move(next);
  }
  auto jx = ech.basis();
  if (props(q).medial && !is_left_ideal(jx, q)) throw std::logic_error("J_X is not a left ideal of a medial quandle");
  return jx;
}

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("linear map must be square");
}

AlgebraElement LinearMap::apply(const AlgebraElement& a) const {
  if (a.size() != order()) throw std::invalid_argument("linear map order does not match element");
  return AlgebraElement(field(), m_.apply(a.coeffs()));
}

LinearMap left_mult(Element x, const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  if (x >= n) throw std::out_of_range("element index out of range");
  Matrix m(f, n, n);
  for (Element y = 0; y < n; ++y) m(q.op(x, y), y) = Scalar::one(f);
  return LinearMap(std::move(m));
}

LinearMap right_mult(Element x, const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  if (x >= n) throw std::out_of_range("element index out of range");
  Matrix m(f, n, n);
  for (Element y = 0; y < n; ++y) m(q.op(y, x), y) = Scalar::one(f);
  return LinearMap(std::move(m));
}

Vector flatten_row_major(const LinearMap& m) {
  auto e = m.matrix().entries();
  return Vector(e.begin(), e.end());
}

LinearMap unflatten_row_major(const FieldSpec& f, std::size_t n, std::span<const Scalar> v) {
  if (v.size() != n * n) throw std::invalid_argument("flattened operator has wrong length");
  Matrix m(f, n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t x = 0; x < n; ++x) m(u, x) = v[u * n + x];
  return LinearMap(std::move(m));
}

Vector flatten_col_major(const LinearMap& m) {
  const auto n = m.order();
  Vector v;
  v.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < n; ++u) v.push_back(m.matrix()(u, x));
  return v;
}

LinearMap unflatten_col_major(const FieldSpec& f, std::size_t n, std::span<const Scalar> v) {
  if (v.size() != n * n) throw std::invalid_argument("flattened operator has wrong length");
  Matrix m(f, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < n; ++u) m(u, x) = v[x * n + u];
  return LinearMap(std::move(m));
}

}  // namespace qder
