#pragma once

/**
 * @file reference.hpp
 * @brief Golden derivation parametrizations and their comparison with the solver.
 *
 * Each reference file describes one (quandle, field) pair and a matrix whose
 * entries are integer linear forms in free parameters a1, a2, ... . Row u,
 * column x of the matrix is c_x^u. Files look like:
 *
 *   # free text
 *   label: order3/3.2/Q
 *   quandle: catalog:3.2
 *   field: Q
 *   layout: full          (full | uv | zero)
 *   matrix:
 *   a1 -a1 0
 *   -a1 a1 0
 *   0 0 0
 *
 * The uv layout gives k×k blocks after "U:" and "V:" and expands them to
 *   U  V -U -V
 *  -V  U  V -U
 *  -U -V  U  V
 *   V -U -V  U
 * The zero layout has no matrix and states that the space is {0}.
 */

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qder/exactla.hpp"

namespace qder {

/// Integer combination of parameters; key i stands for a_i (1-based).
using LinearForm = std::map<std::size_t, long>;

/// Parses sums such as "a1", "-a1+a2", "4a1+3a2", "-(a1+a2)", "2*a3", "0".
/// Throws std::invalid_argument on malformed input.
LinearForm parse_linear_form(std::string_view text);

struct ReferenceEntry {
  std::string file;
  std::string label;
  std::string quandle;
  FieldSpec field = FieldSpec::rationals();
  std::size_t n = 0;
  /// n×n matrix of forms, row u, column x.
  std::vector<std::vector<LinearForm>> entries;

  /// Largest parameter index that occurs.
  std::size_t parameter_count() const;
  /// Span of the coefficient matrices of a1, a2, ... (row-major flattening).
  SubspaceBasis subspace() const;
};

/// Throws std::invalid_argument with the file name and line on bad input.
ReferenceEntry parse_reference(std::string_view text, std::string file_name);

/// All embedded reference files, ordered by file name.
const std::vector<ReferenceEntry>& reference_entries();
const ReferenceEntry& reference_entry(std::string_view label);

enum class SubspaceRelation { Equal, ReferenceInsideSolver, SolverInsideReference, Incomparable };
std::string to_string(SubspaceRelation r);

struct ReferenceCheck {
  std::string label;
  std::size_t solver_dim;
  std::size_t reference_dim;
  std::size_t parameters;
  SubspaceRelation relation;

  bool pass() const { return relation == SubspaceRelation::Equal; }
};

ReferenceCheck check_reference(const ReferenceEntry& entry);

namespace detail {
struct EmbeddedFile {
  const char* name;
  const char* content;
};
const std::vector<EmbeddedFile>& embedded_reference_files();
}  // namespace detail

}  // namespace qder
