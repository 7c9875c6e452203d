#pragma once

/**
 * @file lietransform.hpp
 * @brief Lie transformation algebras, inner derivations and the L·R product bound.
 *
 * Operator spaces live in k^{n²} under the column-major flattening
 * (index x·n + u holds the coefficient of e_u in the image of e_x).
 */

#include <optional>
#include <string>
#include <vector>

#include "qder/exactla.hpp"
#include "qder/qalgebra.hpp"
#include "qder/quandle.hpp"

namespace qder {

/// AB - BA. Throws std::invalid_argument on order or field mismatch.
LinearMap commutator(const LinearMap& a, const LinearMap& b);

struct GeneratorLogEntry {
  /// "L0", "R2", or "[g3,g5]" referring to earlier log entries.
  std::string origin;
  std::size_t dim_after;
};

struct OperatorSpace {
  FieldSpec field;
  std::size_t n;
  SubspaceBasis basis;
  /// One entry per dimension increase, in the order they happened.
  std::vector<GeneratorLogEntry> log;

  std::size_t dim() const { return basis.dim(); }
  std::vector<LinearMap> operators() const;
  bool contains(const LinearMap& m) const;
};

/// Closure of span{L_x, R_x} under brackets of all basis pairs.
OperatorSpace lie_transformation_algebra(const Quandle& q, const FieldSpec& f);
/// T_1 + [T_1, T_1] + [T_1, [T_1, T_1]] + ... ; agrees with the full closure.
OperatorSpace lie_tower(const Quandle& q, const FieldSpec& f);

struct InnerDerivations {
  /// Der ∩ T in the column-major flattening.
  SubspaceBasis inner;
  std::size_t der_dim;
  std::size_t lie_dim;

  std::size_t inner_dim() const { return inner.dim(); }
  std::size_t outer_dim() const { return der_dim - inner.dim(); }
};

InnerDerivations inner_derivations(const Quandle& q, const FieldSpec& f);

struct LRBound {
  /// Σ_{m,n ≥ 0} L^m(A) · R^n(A), L^0 = R^0 = k·id.
  SubspaceBasis lr;
  std::size_t lie_dim;
  bool contains_lie;
  bool strict;
};

LRBound lr_form_bound(const Quandle& q, const FieldSpec& f);

struct AlexanderFormCheck {
  /// span{L_f L_0^a R_0^b, R_g L_0^a R_0^b}.
  SubspaceBasis form;
  std::size_t lie_dim;
  /// Indices into the canonical basis of T(A) that fall outside the form.
  std::vector<std::size_t> outside;
  std::size_t max_l_power;
  std::size_t max_r_power;

  bool holds() const { return outside.empty(); }
};

/// Throws std::invalid_argument if q carries no Alexander tag.
AlexanderFormCheck alexander_canonical_form(const Quandle& q, const FieldSpec& f);

/// First x with [L_x, R_x] != 0, or nullopt.
std::optional<Element> lr_commutation_failure(const Quandle& q, const FieldSpec& f);

}  // namespace qder
