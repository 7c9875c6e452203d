#pragma once

/**
 * @file derivations.hpp
 * @brief Derivation algebras of quandle algebras and the dihedral symmetry checks.
 *
 * A derivation D is stored as a LinearMap with entry (u, x) = c_x^u. The
 * Leibniz unknowns are flattened row-major: c_x^u sits at index u·n + x.
 */

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qder/exactla.hpp"
#include "qder/qalgebra.hpp"
#include "qder/quandle.hpp"

namespace qder {

using Triple = std::array<Element, 3>;

/// Sparse integer row of the Leibniz system; duplicate columns accumulate.
using SparseRow = std::vector<std::pair<std::size_t, long>>;

/**
 * Streams the rows of the Leibniz system in row order (x, y, z), row index
 * (x·n + y)·n + z. Each row is the coefficient of e_z in
 * D(e_{x▷y}) - D(e_x)·e_y - e_x·D(e_y).
 */
void for_each_leibniz_row(const Quandle& q, const std::function<void(std::size_t, const SparseRow&)>& visit);

/// Dense n³ × n² form of the same system.
Matrix leibniz_system(const Quandle& q, const FieldSpec& f);

struct DerivationBasis {
  Quandle quandle;
  FieldSpec field;
  /// Canonical nullspace basis in the row-major flattening.
  SubspaceBasis flat;
  std::vector<LinearMap> basis;

  std::size_t dim() const { return basis.size(); }
};

DerivationBasis derivation_space(const Quandle& q, const FieldSpec& f);

/// First (x, y, z) where the coefficient of e_z in the Leibniz defect of
/// (e_x, e_y) is nonzero, evaluated with the algebra product.
std::optional<Triple> leibniz_violation(const LinearMap& d, const Quandle& q);
inline bool is_derivation(const LinearMap& d, const Quandle& q) { return !leibniz_violation(d, q); }

struct StructureCheck {
  bool holds;
  /// First (x, y, z) with c_{x▷y}^z != c_x^ẑ + Σ_{x▷w=z} c_y^w.
  std::optional<Triple> witness;
};

StructureCheck verify_structure_relations(const LinearMap& d, const Quandle& q);

enum class RelationStatus { Holds, Fails, NotApplicable };
std::string to_string(RelationStatus s);

struct RelationResult {
  std::string name;
  RelationStatus status;
  /// First failing (t, x, d); d is 0 for relations without it.
  std::optional<Triple> witness;
};

/**
 * The seven dihedral relations, in this order:
 *   master     c_{t+2d}^x = c_t^{2t+2d-x}           n even
 *   neg2k      c_t^x = -c_t^{x+2k}                   n = 4k
 *   shift2k    c_t^x = c_{t+2k}^{x+2k}               n = 4k
 *   negk       c_t^x = -c_t^{x+k}                    n = 2k, k odd
 *   diagk      c_t^{k+t} = 0                         n = 4k or n = 2k with k odd
 *   shiftk     c_t^x = c_{t+k}^{x+k}                 n = 4k, k even
 *   shiftk1    c_t^x = c_{t+k-1}^{x+k-1}             n = 4k, k odd
 * Indices are taken mod n.
 */
struct SymmetryReport {
  std::size_t n;
  std::vector<RelationResult> relations;

  const RelationResult& relation(std::string_view name) const;
  /// True iff no applicable relation fails.
  bool all_hold() const;
};

SymmetryReport dihedral_symmetry_report(const LinearMap& d, std::size_t n);

struct BlockReport {
  std::size_t n;
  std::size_t k;
  /// n = 4k: D = (P, -P; -P, P).
  std::optional<bool> pp_form;
  std::optional<Matrix> p;
  /// n = 4k, k even: D = (U V -U -V; -V U V -U; -U -V U V; V -U -V U).
  std::optional<bool> uv_form;
  std::optional<Matrix> u;
  std::optional<Matrix> v;
  /// n = 2k, k odd: c_t^{x+k} = -c_t^x, i.e. row block u+k is minus row block u.
  std::optional<bool> row_shift_form;
  std::optional<Matrix> r;
};

/// Throws std::invalid_argument for odd n or a map of another order.
BlockReport block_decomposition(const LinearMap& d, std::size_t n);

struct DimPrediction {
  std::size_t n;
  std::optional<std::size_t> value;
  /// Set when the value comes from the closed-form count for n = 4k rather
  /// than from the vanishing result for odd n.
  bool from_formula = false;
  std::string note;
};

DimPrediction predicted_dim_dihedral(std::size_t n);

/// Builds the matrix of D_x(e_y) = e_y - e_{yx} for a group table; x must be
/// central. Throws std::invalid_argument otherwise.
LinearMap central_translation(const CayleyTable& group_table, Element x,
                             const FieldSpec& f = FieldSpec::rationals());

/// True iff every column of d sums to zero.
bool image_in_augmentation_ideal(const LinearMap& d);

}  // namespace qder
