// Quadratic transforms in the two coordinate charts, point-basis trees over
// the infinitely near chart origins, and the multiplicity sums derived from
// them.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ideal2d/newton.hpp"
#include "ideal2d/staircase.hpp"

namespace ideal2d {

enum class Chart { X, Y };

/// Transform of an m-primary or unit ideal in one chart of the blowup of
/// the origin: in the X chart (a, b) -> (a + b - order, b), in the Y chart
/// (a, b) -> (a, a + b - order). The result is again m-primary or unit.
MonomialIdeal transform(const MonomialIdeal& a, Chart chart);

/// One infinitely near chart origin reached from the root ideal.
struct PointBasisNode {
  /// Chart letters on the path from the root, e.g. "XY"; empty at the root.
  std::string path;
  /// Transform of the root ideal at this point, in chart coordinates.
  MonomialIdeal ideal = MonomialIdeal::unit();
  /// Order of `ideal`; zero only at a unit root.
  std::int64_t order = 0;
  /// Residue field degree over the base; always 1 for chart origins.
  std::int64_t residue_degree = 1;
  /// Children with a non-unit transform, X chart before Y chart.
  std::vector<PointBasisNode> children;
};

/// Tree of all chart origins where the transform of `a` is non-unit.
/// Requires an m-primary ideal.
PointBasisNode point_basis(const MonomialIdeal& a);

/// Flattened list of the positive orders in the point-basis tree.
std::vector<std::int64_t> point_basis_orders(const MonomialIdeal& a);

/// Sum of order*(order+1)/2 over the tree. Requires a complete ideal;
/// otherwise throws DomainError("HD requires a complete ideal").
Int pb_colength(const MonomialIdeal& a);

/// Sum of order^2 over the tree. Requires a complete ideal.
Int pb_multiplicity(const MonomialIdeal& a);

/// Sum of order*(order-1)/2 over the tree. Requires a complete ideal.
Int pb_e1(const MonomialIdeal& a);

/// Node of the joint tree of two ideals transformed along the same points.
struct JointPointBasisNode {
  std::string path;
  MonomialIdeal left = MonomialIdeal::unit();
  MonomialIdeal right = MonomialIdeal::unit();
  std::int64_t order_left = 0;
  std::int64_t order_right = 0;
  std::vector<JointPointBasisNode> children;
};

/// Joint tree, expanded wherever either transform is non-unit.
/// Requires both ideals m-primary.
JointPointBasisNode joint_point_basis(const MonomialIdeal& a,
                                      const MonomialIdeal& b);

/// Sum of order_left * order_right over the joint tree.
/// Requires both ideals complete.
Int pb_mixed_e1(const MonomialIdeal& a, const MonomialIdeal& b);

/// (e, e_1) extracted from the colengths of I, I^2 via
/// colength(I^n) = e*C(n+1,2) - e_1*n, cross-checked at n = 3 and against
/// the point-basis sums. Requires a complete ideal.
std::pair<Int, Int> hilbert_coefficients(const MonomialIdeal& a);

}  // namespace ideal2d
