#pragma once

#include <array>
#include <cstddef>
#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stagedtrees/polynomial.hpp"

namespace stagedtrees {

struct ConditionResult {
  std::string name;
  bool holds = true;
  std::vector<std::string> diagnostics;
};

/// Necessary conditions for a square-free polynomial to interpolate some
/// labeled event tree.
struct ScreenReport {
  std::size_t n = 0;       // monomials
  std::size_t d = 0;       // indeterminates
  std::size_t degree = 0;  // deg(c)
  std::array<ConditionResult, 4> conditions;

  bool passes() const noexcept;
  nlohmann::json to_json() const;
};

/// Evaluates the four conditions; never throws.
///  1. size_bounds: c = 1, or d, n >= 2, d <= 2n - 2 and d > deg(c).
///  2. root_label_frequency: some minimal prime F has every x in F dividing
///     at least as many monomials as the largest degree among them.
///  3. maximal_degree_partner: each monomial of degree deg(c) has another of
///     the same degree sharing a divisor of degree deg(c) - 1.
///  4. antichain: no monomial in the support is a proper multiple of another.
ScreenReport screen(const Polynomial& f);

/// Variable-by-monomial exponent matrix.
struct IncidenceMatrix {
  std::vector<Indeterminate> rows;
  std::vector<Monomial> cols;
  std::vector<std::vector<unsigned>> entries;  // entries[i][j]

  unsigned at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
  unsigned row_sum(std::size_t i) const;
  unsigned col_sum(std::size_t j) const;
  std::optional<std::size_t> row_of(const Indeterminate& x) const;

  /// Header row of monomials (factors written in row order) after an empty
  /// corner cell, then one line per variable.
  std::string to_csv() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

/// Rows follow `row_order` when given (it must list every variable of f
/// exactly once, else UnknownVariable), otherwise name order. Columns are
/// sorted by degree, then lexicographically with respect to the row order,
/// higher exponents of earlier rows first.
IncidenceMatrix incidence_matrix(const Polynomial& f, std::span<const Indeterminate> row_order = {});

/// Matrix of the subtree past an edge labeled x: keeps the columns divisible
/// by x (relabeled t/x^a), drops row x and rows left all zero.
/// Throws UnknownVariable when x is not a row.
IncidenceMatrix subtree_submatrix(const IncidenceMatrix& m, const Indeterminate& x);

/// Facets only; faces are implicit.
struct SimplicialComplex {
  std::vector<std::vector<Indeterminate>> facets;  // sorted, antichain
  std::vector<Indeterminate> vertices;             // sorted

  /// Number of facets containing v.
  std::size_t degree(const Indeterminate& v) const;
};

/// Facets are the supports of f's monomials after interreduction.
SimplicialComplex simplicial_complex(const Polynomial& f);

struct ComplexComponent {
  std::vector<Indeterminate> vertices;
  std::size_t facets = 0;
  std::optional<Indeterminate> max_degree_vertex;  // set only when unique
  bool covers_facets = false;                      // max vertex lies in every facet
};

struct SaturationReport {
  bool saturated = false;
  std::vector<ComplexComponent> components;

  nlohmann::json to_json() const;
};

/// Components of the co-occurrence graph of the vertices. Saturated when
/// there are at least two components, each with a unique max-degree vertex
/// lying in all its facets, and the same holds recursively once that vertex
/// is removed. The complex of the constant 1 counts as saturated.
SaturationReport saturation_test(const SimplicialComplex& sc);

/// Undirected graph on the vertices, an edge per co-occurring pair.
std::string complex_to_dot(const SimplicialComplex& sc, std::string_view graph_name = "complex");

}  // namespace stagedtrees
