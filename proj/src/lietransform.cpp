#include "qder/lietransform.hpp"

#include <stdexcept>

#include "qder/derivations.hpp"

namespace qder {

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  if (a.order() != b.order()) throw std::invalid_argument("commutator of maps of different order");
  if (a.field() != b.field()) throw FieldMismatch("commutator of maps over different fields");
  return a.compose(b) - b.compose(a);
}

std::vector<LinearMap> OperatorSpace::operators() const {
  std::vector<LinearMap> out;
  for (const auto& v : basis.vectors()) out.push_back(unflatten_col_major(field, n, v));
  return out;
}

bool OperatorSpace::contains(const LinearMap& m) const {
  return qder::contains(basis, flatten_col_major(m)).has_value();
}

namespace {

// Echelon over flattened operators that remembers the map behind each
// accepted generator.
struct GeneratorSet {
  Echelon ech;
  std::vector<LinearMap> maps;
  std::vector<GeneratorLogEntry> log;

  GeneratorSet(const FieldSpec& f, std::size_t n) : ech(f, n * n) {}

  bool add(LinearMap m, std::string origin) {
    if (!ech.insert(flatten_col_major(m))) return false;
    maps.push_back(std::move(m));
    log.push_back({std::move(origin), ech.rank()});
    return true;
  }
};

GeneratorSet multiplications(const Quandle& q, const FieldSpec& f) {
  GeneratorSet g(f, q.order());
  for (Element x = 0; x < q.order(); ++x) g.add(left_mult(x, q, f), "L" + std::to_string(x));
  for (Element x = 0; x < q.order(); ++x) g.add(right_mult(x, q, f), "R" + std::to_string(x));
  return g;
}

std::string bracket_name(std::size_t i, std::size_t j) {
  return "[g" + std::to_string(i) + ",g" + std::to_string(j) + "]";
}

}  // namespace

OperatorSpace lie_transformation_algebra(const Quandle& q, const FieldSpec& f) {
  auto g = multiplications(q, f);
  std::size_t done = 0;
  while (done < g.maps.size()) {
    const auto end = g.maps.size();
    for (std::size_t j = done; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) g.add(commutator(g.maps[i], g.maps[j]), bracket_name(i, j));
    done = end;
  }
  return {f, q.order(), g.ech.basis(), std::move(g.log)};
}

OperatorSpace lie_tower(const Quandle& q, const FieldSpec& f) {
  auto g = multiplications(q, f);
  const auto t1 = g.maps.size();
  // The previous layer T_{i-1} is spanned by the brackets [T_1, T_{i-2}]
  // computed last round, including those that were already in the sum.
  std::vector<std::pair<LinearMap, std::string>> layer;
  for (std::size_t i = 0; i < t1; ++i) layer.emplace_back(g.maps[i], "g" + std::to_string(i));
  while (true) {
    std::vector<std::pair<LinearMap, std::string>> next;
    Echelon layer_ech(f, q.order() * q.order());
    bool grew = false;
    for (std::size_t i = 0; i < t1; ++i)
      for (const auto& [m, name] : layer) {
        auto c = commutator(g.maps[i], m);
        if (!layer_ech.insert(flatten_col_major(c))) continue;
        std::string origin = "[g" + std::to_string(i) + "," + name + "]";
        grew = g.add(c, origin) || grew;
        next.emplace_back(std::move(c), std::move(origin));
      }
    if (!grew) break;
    layer = std::move(next);
  }
  return {f, q.order(), g.ech.basis(), std::move(g.log)};
}

InnerDerivations inner_derivations(const Quandle& q, const FieldSpec& f) {
  auto der = derivation_space(q, f);
  auto lie = lie_transformation_algebra(q, f);
  std::vector<Vector> gens;
  for (const auto& d : der.basis) gens.push_back(flatten_col_major(d));
  const auto n2 = q.order() * q.order();
  auto der_flat = SubspaceBasis::span(f, n2, gens);
  return {span_intersect(der_flat, lie.basis), der.dim(), lie.dim()};
}

namespace {

// Smallest subspace containing id and closed under left composition with
// every map in gens; this is Σ_m (span gens)^m.
std::vector<LinearMap> power_sum(const std::vector<LinearMap>& gens, const FieldSpec& f, std::size_t n) {
  Echelon ech(f, n * n);
  std::vector<LinearMap> found{LinearMap::identity(f, n)};
  ech.insert(flatten_col_major(found.front()));
  for (std::size_t next = 0; next < found.size(); ++next)
    for (const auto& g : gens) {
      auto m = g.compose(found[next]);
      if (ech.insert(flatten_col_major(m))) found.push_back(std::move(m));
    }
  return found;
}

}  // namespace

LRBound lr_form_bound(const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  std::vector<LinearMap> ls, rs;
  for (Element x = 0; x < n; ++x) {
    ls.push_back(left_mult(x, q, f));
    rs.push_back(right_mult(x, q, f));
  }
  auto lsum = power_sum(ls, f, n);
  auto rsum = power_sum(rs, f, n);
  Echelon ech(f, n * n);
  for (const auto& a : lsum)
    for (const auto& b : rsum) ech.insert(flatten_col_major(a.compose(b)));
  auto lr = ech.basis();
  auto lie = lie_transformation_algebra(q, f);
  bool inside = is_subspace_of(lie.basis, lr);
  return {lr, lie.dim(), inside, inside && lie.dim() < lr.dim()};
}

namespace {

// id, m, m², ... up to the first repeated power.
std::vector<LinearMap> distinct_powers(const LinearMap& m) {
  std::vector<LinearMap> out{LinearMap::identity(m.field(), m.order())};
  while (true) {
    auto next = m.compose(out.back());
    for (const auto& p : out)
      if (p == next) return out;
    out.push_back(std::move(next));
  }
}

}  // namespace

AlexanderFormCheck alexander_canonical_form(const Quandle& q, const FieldSpec& f) {
  if (!q.alexander_params()) throw std::invalid_argument("quandle carries no Alexander parameters");
  const auto n = q.order();
  auto l0 = distinct_powers(left_mult(0, q, f));
  auto r0 = distinct_powers(right_mult(0, q, f));
  Echelon ech(f, n * n);
  for (const auto& a : l0)
    for (const auto& b : r0) {
      auto tail = a.compose(b);
      for (Element x = 0; x < n; ++x) {
        ech.insert(flatten_col_major(left_mult(x, q, f).compose(tail)));
        ech.insert(flatten_col_major(right_mult(x, q, f).compose(tail)));
      }
    }
  AlexanderFormCheck out{ech.basis(), 0, {}, l0.size() - 1, r0.size() - 1};
  auto lie = lie_transformation_algebra(q, f);
  out.lie_dim = lie.dim();
  for (std::size_t i = 0; i < lie.basis.dim(); ++i)
    if (!ech.contains(lie.basis.vectors()[i])) out.outside.push_back(i);
  return out;
}

std::optional<Element> lr_commutation_failure(const Quandle& q, const FieldSpec& f) {
  for (Element x = 0; x < q.order(); ++x)
    if (!commutator(left_mult(x, q, f), right_mult(x, q, f)).is_zero()) return x;
  return std::nullopt;
}

}  // namespace qder
