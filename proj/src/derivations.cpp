#include "qder/derivations.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qder {

void for_each_leibniz_row(const Quandle& q, const std::function<void(std::size_t, const SparseRow&)>& visit) {
  const auto n = q.order();
  // left_pre[x][z] lists the w with x ▷ w = z.
  std::vector<std::vector<std::vector<Element>>> left_pre(n, std::vector<std::vector<Element>>(n));
  for (Element x = 0; x < n; ++x)
    for (Element w = 0; w < n; ++w) left_pre[x][q.op(x, w)].push_back(w);

  SparseRow row;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        row.clear();
        row.emplace_back(z * n + q.op(x, y), 1);
        row.emplace_back(q.right_div(z, y) * n + x, -1);
        for (auto w : left_pre[x][z]) row.emplace_back(w * n + y, -1);
        visit((x * n + y) * n + z, row);
      }
}

Matrix leibniz_system(const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  Matrix m(f, n * n * n, n * n);
  for_each_leibniz_row(q, [&](std::size_t r, const SparseRow& row) {
    for (auto [c, v] : row) m(r, c) += Scalar::from_int(f, v);
  });
  return m;
}

DerivationBasis derivation_space(const Quandle& q, const FieldSpec& f) {
  const auto n = q.order();
  Echelon ech(f, n * n);
  for_each_leibniz_row(q, [&](std::size_t, const SparseRow& row) {
    if (ech.rank() < n * n) ech.insert_sparse(row);
  });
  auto flat = nullspace(ech);
  std::vector<LinearMap> maps;
  for (const auto& v : flat.vectors()) maps.push_back(unflatten_row_major(f, n, v));
  return DerivationBasis{q, f, std::move(flat), std::move(maps)};
}

std::optional<Triple> leibniz_violation(const LinearMap& d, const Quandle& q) {
  const auto n = q.order();
  if (d.order() != n) throw std::invalid_argument("map order does not match quandle");
  const auto& f = d.field();
  std::vector<AlgebraElement> e, de;
  for (Element x = 0; x < n; ++x) {
    e.push_back(AlgebraElement::basis(f, n, x));
    de.push_back(d.apply(e.back()));
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto defect = d.apply(multiply(e[x], e[y], q)) - multiply(de[x], e[y], q) - multiply(e[x], de[y], q);
      for (Element z = 0; z < n; ++z)
        if (!defect[z].is_zero()) return Triple{x, y, z};
    }
  return std::nullopt;
}

StructureCheck verify_structure_relations(const LinearMap& d, const Quandle& q) {
  const auto n = q.order();
  if (d.order() != n) throw std::invalid_argument("map order does not match quandle");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        auto rhs = d.coeff(x, q.right_div(z, y));
        for (Element w = 0; w < n; ++w)
          if (q.op(x, w) == z) rhs += d.coeff(y, w);
        if (d.coeff(q.op(x, y), z) != rhs) return {false, Triple{x, y, z}};
      }
  return {true, std::nullopt};
}

std::string to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::Holds: return "holds";
    case RelationStatus::Fails: return "fails";
    case RelationStatus::NotApplicable: return "n/a";
  }
  return "?";
}

const RelationResult& SymmetryReport::relation(std::string_view name) const {
  for (const auto& r : relations)
    if (r.name == name) return r;
  throw std::out_of_range("unknown relation: " + std::string(name));
}

bool SymmetryReport::all_hold() const {
  for (const auto& r : relations)
    if (r.status == RelationStatus::Fails) return false;
  return true;
}

SymmetryReport dihedral_symmetry_report(const LinearMap& d, std::size_t n) {
  if (d.order() != n) throw std::invalid_argument("map order does not match n");
  const bool four_k = n % 4 == 0 && n > 0;
  const bool two_k_odd = n % 4 == 2;
  const std::size_t k = four_k ? n / 4 : (two_k_odd ? n / 2 : 0);
  auto md = [n](std::size_t v) { return static_cast<Element>(v % n); };
  // c_t^x, indices reduced mod n.
  auto c = [&](std::size_t t, std::size_t x) -> const Scalar& { return d.coeff(md(t), md(x)); };

  using Check = std::function<bool(std::size_t t, std::size_t x, std::size_t dd)>;
  SymmetryReport report{n, {}};
  auto run = [&](std::string name, bool applicable, bool uses_d, const Check& ok) {
    RelationResult res{std::move(name), RelationStatus::NotApplicable, std::nullopt};
    if (applicable) {
      res.status = RelationStatus::Holds;
      for (std::size_t t = 0; t < n && !res.witness; ++t)
        for (std::size_t x = 0; x < n && !res.witness; ++x)
          for (std::size_t dd = 0; dd < (uses_d ? n : 1) && !res.witness; ++dd)
            if (!ok(t, x, dd)) res.witness = Triple{md(t), md(x), md(dd)};
      if (res.witness) res.status = RelationStatus::Fails;
    }
    report.relations.push_back(std::move(res));
  };

  const std::size_t two_n = 2 * n;
  run("master", n % 2 == 0 && n > 0, true,
      [&](auto t, auto x, auto dd) { return c(t + 2 * dd, x) == c(t, 2 * t + 2 * dd + two_n - x); });
  run("neg2k", four_k, false, [&](auto t, auto x, auto) { return c(t, x) == -c(t, x + 2 * k); });
  run("shift2k", four_k, false, [&](auto t, auto x, auto) { return c(t, x) == c(t + 2 * k, x + 2 * k); });
  run("negk", two_k_odd, false, [&](auto t, auto x, auto) { return c(t, x) == -c(t, x + k); });
  run("diagk", four_k || two_k_odd, false, [&](auto t, auto x, auto) { return x != 0 || c(t, k + t).is_zero(); });
  run("shiftk", four_k && k % 2 == 0, false, [&](auto t, auto x, auto) { return c(t, x) == c(t + k, x + k); });
  run("shiftk1", four_k && k % 2 == 1, false,
      [&](auto t, auto x, auto) { return c(t, x) == c(t + k - 1, x + k - 1); });
  return report;
}

namespace {

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  Matrix out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

// Checks m against a block pattern: pattern[i][j] = ±(index+1) into blocks.
bool matches_pattern(const Matrix& m, std::size_t b, const std::vector<std::vector<int>>& pattern,
                     const std::vector<Matrix>& blocks) {
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = 0; j < pattern[i].size(); ++j) {
      int p = pattern[i][j];
      const Matrix& src = blocks[static_cast<std::size_t>(std::abs(p) - 1)];
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c) {
          const auto& want = src(r, c);
          if (m(i * b + r, j * b + c) != (p > 0 ? want : -want)) return false;
        }
    }
  return true;
}

}  // namespace

BlockReport block_decomposition(const LinearMap& d, std::size_t n) {
  if (n % 2 != 0 || n == 0) throw std::invalid_argument("block decomposition needs even n");
  if (d.order() != n) throw std::invalid_argument("map order does not match n");
  const auto& m = d.matrix();
  BlockReport rep{n, 0, {}, {}, {}, {}, {}, {}, {}};
  if (n % 4 == 0) {
    rep.k = n / 4;
    const auto h = n / 2;
    rep.p = block(m, 0, 0, h, h);
    rep.pp_form = matches_pattern(m, h, {{1, -1}, {-1, 1}}, {*rep.p});
    if (rep.k % 2 == 0) {
      rep.u = block(m, 0, 0, rep.k, rep.k);
      rep.v = block(m, 0, rep.k, rep.k, rep.k);
      rep.uv_form = matches_pattern(m, rep.k, {{1, 2, -1, -2}, {-2, 1, 2, -1}, {-1, -2, 1, 2}, {2, -1, -2, 1}},
                                    {*rep.u, *rep.v});
    }
  } else {
    rep.k = n / 2;
    rep.r = block(m, 0, 0, rep.k, n);
    bool ok = true;
    for (std::size_t u = 0; u < rep.k && ok; ++u)
      for (std::size_t x = 0; x < n && ok; ++x) ok = m(u + rep.k, x) == -m(u, x);
    rep.row_shift_form = ok;
  }
  return rep;
}

DimPrediction predicted_dim_dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n % 2 == 1) return {n, 0, false, "odd order: derivation algebra vanishes in characteristic 0"};
  if (n % 4 == 2) return {n, std::nullopt, false, "n = 2k with k odd: symmetries only, no dimension count"};
  const auto k = n / 4;
  return {n, k % 2 == 0 ? 2 * k : 2 * k - 1, true, k % 2 == 0 ? "formula 2k (k even)" : "formula 2k-1 (k odd)"};
}

LinearMap central_translation(const CayleyTable& g, Element x, const FieldSpec& f) {
  check_group(g);
  const auto n = g.size();
  if (x >= n) throw std::invalid_argument("element index out of range");
  for (Element y = 0; y < n; ++y)
    if (g[x][y] != g[y][x])
      throw std::invalid_argument("element " + std::to_string(x) + " is not central: fails to commute with " +
                                  std::to_string(y));
  Matrix m(f, n, n);
  for (Element y = 0; y < n; ++y) {
    m(y, y) += Scalar::one(f);
    m(g[y][x], y) -= Scalar::one(f);
  }
  return LinearMap(std::move(m));
}

bool image_in_augmentation_ideal(const LinearMap& d) {
  const auto n = d.order();
  for (std::size_t x = 0; x < n; ++x) {
    auto s = Scalar::zero(d.field());
    for (std::size_t u = 0; u < n; ++u) s += d.coeff(x, u);
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace qder
