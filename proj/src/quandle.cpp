#include "qder/quandle.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace qder {

std::string AxiomViolation::axiom_name() const {
  switch (axiom) {
    case Axiom::Shape: return "shape";
    case Axiom::Range: return "range";
    case Axiom::Idempotence: return "I";
    case Axiom::RightInvertibility: return "II";
    case Axiom::SelfDistributivity: return "III";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  auto w = [&](std::size_t i) { return i < witness.size() ? std::to_string(witness[i]) : std::string("?"); };
  switch (axiom) {
    case Axiom::Shape: return "table is not square";
    case Axiom::Range: return "entry out of range at (" + w(0) + ", " + w(1) + ")";
    case Axiom::Idempotence: return "axiom I fails: x ▷ x != x for x = " + w(0);
    case Axiom::RightInvertibility: return "axiom II fails: column " + w(0) + " is not a permutation";
    case Axiom::SelfDistributivity:
      return "axiom III fails: (x▷y)▷z != (x▷z)▷(y▷z) for (x, y, z) = (" + w(0) + ", " + w(1) + ", " + w(2) + ")";
  }
  return "unknown violation";
}

AlexanderParams AlexanderParams::make(std::uint32_t n, std::uint32_t alpha) {
  if (n == 0) throw std::invalid_argument("Alexander quandle needs n >= 1");
  alpha %= n;
  if (std::gcd(alpha, n) != 1 && n != 1)
    throw std::invalid_argument("alpha = " + std::to_string(alpha) + " is not a unit mod " + std::to_string(n));
  return {n, alpha, static_cast<std::uint32_t>((n + 1 - alpha) % n)};
}

std::optional<AxiomViolation> check_axioms(const CayleyTable& t) {
  using A = AxiomViolation::Axiom;
  const auto n = t.size();
  for (const auto& row : t)
    if (row.size() != n) return AxiomViolation{A::Shape, {}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t[x][y] >= n) return AxiomViolation{A::Range, {x, y}};
  for (Element x = 0; x < n; ++x)
    if (t[x][x] != x) return AxiomViolation{A::Idempotence, {x}};
  for (Element y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (Element x = 0; x < n; ++x) {
      if (seen[t[x][y]]) return AxiomViolation{A::RightInvertibility, {y}};
      seen[t[x][y]] = true;
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return AxiomViolation{A::SelfDistributivity, {x, y, z}};
  return std::nullopt;
}

Quandle Quandle::from_table(const CayleyTable& table) {
  if (auto v = check_axioms(table)) throw QuandleError(*v);
  Quandle q;
  q.n_ = table.size();
  q.table_.reserve(q.n_ * q.n_);
  for (const auto& row : table) q.table_.insert(q.table_.end(), row.begin(), row.end());
  q.right_div_.assign(q.n_ * q.n_, 0);
  for (Element x = 0; x < q.n_; ++x)
    for (Element y = 0; y < q.n_; ++y) q.right_div_[q.op(x, y) * q.n_ + y] = x;
  return q;
}

CayleyTable Quandle::table() const {
  CayleyTable t(n_, std::vector<Element>(n_));
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) t[x][y] = op(x, y);
  return t;
}

Quandle Quandle::with_alexander_tag(const AlexanderParams& p) const {
  if (alexander(p) != *this) throw std::invalid_argument("table does not match the Alexander parameters");
  Quandle q = *this;
  q.alexander_ = p;
  return q;
}

Element Quandle::right_div(Element z, Element y) const { return right_div_[z * n_ + y]; }

Quandle trivial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quandle order must be positive");
  return alexander(AlexanderParams::make(static_cast<std::uint32_t>(n), 1));
}

Quandle dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quandle order must be positive");
  const auto m = static_cast<std::uint32_t>(n);
  return alexander(AlexanderParams::make(m, m - 1));
}

Quandle alexander(const AlexanderParams& p) {
  if (p.n == 0 || (p.alpha + p.beta) % p.n != 1 % p.n || (p.n > 1 && std::gcd(p.alpha, p.n) != 1))
    throw std::invalid_argument("invalid Alexander parameters");
  CayleyTable t(p.n, std::vector<Element>(p.n));
  for (std::uint64_t x = 0; x < p.n; ++x)
    for (std::uint64_t y = 0; y < p.n; ++y) t[x][y] = static_cast<Element>((p.alpha * x + p.beta * y) % p.n);
  auto q = Quandle::from_table(t);
  q.alexander_ = p;
  return q;
}

Element check_group(const CayleyTable& g) {
  const auto n = g.size();
  auto fail = [](const std::string& what) { return GroupError("not a group: " + what); };
  if (n == 0) throw fail("empty table");
  for (const auto& row : g) {
    if (row.size() != n) throw fail("table is not square");
    for (auto v : row)
      if (v >= n) throw fail("entry out of range");
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = g[e][a] == a && g[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw fail("no identity element");
  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = g[a][b] == *identity && g[b][a] == *identity;
    if (!has_inverse) throw fail("element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g[g[a][b]][c] != g[a][g[b][c]])
          throw fail("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                     std::to_string(c) + ")");
  return *identity;
}

Quandle conjugation(const CayleyTable& g) {
  const auto e = check_group(g);
  const auto n = g.size();
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g[a][b] == e) inv[a] = b;
  CayleyTable t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x][y] = g[g[inv[y]][x]][y];
  return Quandle::from_table(t);
}

CayleyTable cyclic_group_table(std::size_t n) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return t;
}

CayleyTable s3_group_table() {
  using Perm = std::array<int, 3>;
  auto compose = [](const Perm& p, const Perm& q) {  // p∘q
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  const Perm e{0, 1, 2}, y{1, 2, 0}, x{0, 2, 1};
  const Perm y2 = compose(y, y);
  const std::array<Perm, 6> elems{e, y, y2, x, compose(y, x), compose(y2, x)};
  CayleyTable t(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      auto prod = compose(elems[a], elems[b]);
      t[a][b] = static_cast<Element>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  return t;
}

QuandleProps props(const Quandle& q) {
  const auto n = q.order();
  QuandleProps p{true, true, true, true, {}};
  for (Element x = 0; x < n && p.involutive; ++x)
    for (Element y = 0; y < n && p.involutive; ++y) p.involutive = q.op(q.op(y, x), x) == y;
  for (Element x = 0; x < n && p.latin; ++x) {
    std::vector<bool> seen(n, false);
    for (Element y = 0; y < n && p.latin; ++y) {
      p.latin = !seen[q.op(x, y)];
      seen[q.op(x, y)] = true;
    }
  }
  for (Element w = 0; w < n && p.medial; ++w)
    for (Element x = 0; x < n && p.medial; ++x)
      for (Element y = 0; y < n && p.medial; ++y)
        for (Element z = 0; z < n && p.medial; ++z)
          p.medial = q.op(q.op(w, x), q.op(y, z)) == q.op(q.op(w, y), q.op(x, z));

  // Orbits of Inn(X) are the connected components of the graph x -- x ▷ y.
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto a = find(x), b = find(q.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Element>> by_root(n);
  for (Element x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  for (auto& o : by_root)
    if (!o.empty()) p.orbits.push_back(std::move(o));
  p.connected = p.orbits.size() <= 1;
  return p;
}

Quandle relabel(const Quandle& q, const std::vector<Element>& perm) {
  const auto n = q.order();
  if (perm.size() != n) throw std::invalid_argument("permutation length does not match quandle order");
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("relabeling is not a permutation");
    seen[v] = true;
  }
  CayleyTable t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[perm[x]][perm[y]] = perm[q.op(x, y)];
  return Quandle::from_table(t);
}

namespace {

// Rows as printed in the reference tables, 1-indexed.
struct RawEntry {
  const char* label;
  std::vector<std::vector<int>> rows;
};

const std::vector<RawEntry>& raw_catalog() {
  static const std::vector<RawEntry> entries = {
      {"3.1", {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}},
      {"3.2", {{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}},
      {"3.3", {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}},
      {"4.1", {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}}},
      {"4.2", {{1, 1, 1, 1}, {2, 2, 2, 3}, {3, 3, 3, 2}, {4, 4, 4, 4}}},
      {"4.3", {{1, 1, 1, 2}, {2, 2, 2, 3}, {3, 3, 3, 1}, {4, 4, 4, 4}}},
      {"4.4", {{1, 1, 1, 1}, {2, 2, 4, 3}, {3, 4, 3, 2}, {4, 3, 2, 4}}},
      {"4.5", {{1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 3, 3}, {4, 4, 4, 4}}},
      {"4.6", {{1, 1, 2, 2}, {2, 2, 1, 1}, {4, 4, 3, 3}, {3, 3, 4, 4}}},
      {"4.7", {{1, 4, 2, 3}, {3, 2, 4, 1}, {4, 1, 3, 2}, {2, 3, 1, 4}}},
  };
  return entries;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<CatalogEntry> catalog(std::size_t order) {
  if (order != 3 && order != 4)
    throw std::invalid_argument("catalog only covers orders 3 and 4, not " + std::to_string(order));
  std::vector<CatalogEntry> out;
  for (const auto& raw : raw_catalog()) {
    if (raw.rows.size() != order) continue;
    CayleyTable t;
    for (const auto& r : raw.rows) {
      std::vector<Element> row;
      for (int v : r) row.push_back(static_cast<Element>(v - 1));
      t.push_back(std::move(row));
    }
    out.push_back({raw.label, Quandle::from_table(t)});
  }
  return out;
}

Quandle catalog_quandle(std::string_view label) {
  if (label.size() == 3 && label[1] == '.' && (label[0] == '3' || label[0] == '4'))
    for (auto& e : catalog(static_cast<std::size_t>(label[0] - '0')))
      if (e.label == label) return e.quandle;
  throw std::invalid_argument("unknown catalog label: '" + std::string(label) + "'");
}

Quandle quandle_from_source(std::string_view source) {
  auto take = [&](std::string_view prefix) {
    if (source.substr(0, prefix.size()) != prefix) return false;
    source.remove_prefix(prefix.size());
    return true;
  };
  if (take("trivial:")) return trivial(parse_count(source, "order"));
  if (take("dihedral:")) return dihedral(parse_count(source, "order"));
  if (take("catalog:")) return catalog_quandle(source);
  if (take("alexander:")) {
    auto colon = source.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected alexander:N:ALPHA");
    auto n = parse_count(source.substr(0, colon), "order");
    auto a = parse_count(source.substr(colon + 1), "alpha");
    return alexander(AlexanderParams::make(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(a)));
  }
  if (take("conjugation:")) {
    if (source == "s3") return conjugation(s3_group_table());
    if (take("cyclic:")) return conjugation(cyclic_group_table(parse_count(source, "order")));
  }
  throw std::invalid_argument("unknown quandle source: '" + std::string(source) + "'");
}

}  // namespace qder
