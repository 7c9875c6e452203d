#pragma once

/**
 * @file quandle.hpp
 * @brief Finite quandles stored as validated Cayley tables.
 *
 * Elements are 0..n-1 and table(x, y) = x ▷ y: the row is the element acted
 * on, the column the acting element. Right multiplication R_y : x ↦ x ▷ y is
 * therefore a column of the table and left multiplication L_x a row.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qder {

using Element = std::uint32_t;
using CayleyTable = std::vector<std::vector<Element>>;

/// x ▷ y = alpha x + beta y on Z_n, beta = 1 - alpha.
struct AlexanderParams {
  std::uint32_t n;
  std::uint32_t alpha;
  std::uint32_t beta;

  /// Throws std::invalid_argument if alpha is not a unit mod n.
  static AlexanderParams make(std::uint32_t n, std::uint32_t alpha);
  friend bool operator==(const AlexanderParams&, const AlexanderParams&) = default;
};

struct AxiomViolation {
  enum class Axiom { Shape, Range, Idempotence, RightInvertibility, SelfDistributivity };
  Axiom axiom;
  /// Idempotence: {x}; RightInvertibility: {y}; SelfDistributivity: {x, y, z}.
  std::vector<Element> witness;

  /// "I", "II", "III" (or "shape"/"range" for malformed input).
  std::string axiom_name() const;
  std::string describe() const;
};

class QuandleError : public std::invalid_argument {
 public:
  explicit QuandleError(AxiomViolation v) : std::invalid_argument(v.describe()), violation_(std::move(v)) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

/// First violated axiom in the order shape, range, I, II, III, or nullopt.
std::optional<AxiomViolation> check_axioms(const CayleyTable& table);

class Quandle {
 public:
  /// Throws QuandleError naming the first violated axiom.
  static Quandle from_table(const CayleyTable& table);

  std::size_t order() const { return n_; }
  Element op(Element x, Element y) const { return table_[x * n_ + y]; }
  CayleyTable table() const;

  /// Set for quandles built by alexander(), dihedral() and trivial().
  const std::optional<AlexanderParams>& alexander_params() const { return alexander_; }
  Quandle with_alexander_tag(const AlexanderParams& p) const;

  /// Unique x with x ▷ y = z.
  Element right_div(Element z, Element y) const;

  /// Tables compare equal; the Alexander tag is ignored.
  friend bool operator==(const Quandle& a, const Quandle& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  friend Quandle alexander(const AlexanderParams& params);
  Quandle() = default;
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> right_div_;  // right_div_[z * n + y]
  std::optional<AlexanderParams> alexander_;
};

struct QuandleProps {
  bool involutive;
  bool latin;
  bool medial;
  bool connected;
  /// Orbits of Inn(X), each sorted, ordered by smallest element.
  std::vector<std::vector<Element>> orbits;
};

Quandle trivial(std::size_t n);
Quandle dihedral(std::size_t n);
Quandle alexander(const AlexanderParams& params);

struct GroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Identity element of a validated group table; throws GroupError (with the
/// witness in the message) if the table is not a group.
Element check_group(const CayleyTable& group_table);
/// x ▷ y = y^-1 x y.
Quandle conjugation(const CayleyTable& group_table);

CayleyTable cyclic_group_table(std::size_t n);
/// S3 in the element order 1, y, y^2, x, yx, y^2x with y = (0 1 2), x = (1 2)
/// and juxtaposition read as composition (uv = u∘v).
CayleyTable s3_group_table();

QuandleProps props(const Quandle& q);

/// Relabels by perm: the result satisfies out(perm[x], perm[y]) = perm[q(x, y)].
Quandle relabel(const Quandle& q, const std::vector<Element>& perm);

struct CatalogEntry {
  std::string label;  // "3.1".."3.3", "4.1".."4.7"
  Quandle quandle;
};

/// The isomorphism-class representatives of order 3 or 4, in reference order.
std::vector<CatalogEntry> catalog(std::size_t order);
Quandle catalog_quandle(std::string_view label);

/**
 * Builds a quandle from a source string:
 *   trivial:N, dihedral:N, alexander:N:ALPHA, catalog:LABEL,
 *   conjugation:s3, conjugation:cyclic:N.
 * Throws std::invalid_argument on unknown names.
 */
Quandle quandle_from_source(std::string_view source);

}  // namespace qder
