// Newton diagrams of m-primary monomial ideals: integral closure,
// covolume, multiplicity, mixed multiplicity, and the interior-lattice-point
// adjoint.
#pragma once

#include "ideal2d/staircase.hpp"

namespace ideal2d {

/// Vertices of the lower-left convex boundary of the exponent region,
/// listed by strictly decreasing i, starting at (A, 0) and ending at (0, B).
/// For the unit ideal the single vertex is (0, 0).
struct NewtonDiagram {
  std::vector<Exponent> vertices;
};

/// Requires an m-primary ideal.
NewtonDiagram newton_diagram(const MonomialIdeal& a);

/// Integral closure: all lattice points on or above the Newton boundary.
/// Requires an m-primary ideal.
MonomialIdeal integral_closure(const MonomialIdeal& a);

/// True when the ideal equals its integral closure.
bool is_complete(const MonomialIdeal& a);

/// Area between the staircase axes region and the Newton boundary,
/// i.e. the area of the complement of the diagram in the first quadrant.
Rat covolume(const MonomialIdeal& a);

/// Multiplicity e(I) = 2 * covolume(I); always an integer.
Int multiplicity(const MonomialIdeal& a);

/// Mixed multiplicity e_1(I | J) = (e(IJ) - e(I) - e(J)) / 2.
Int mixed_e1(const MonomialIdeal& a, const MonomialIdeal& b);

/// Adjoint computed directly from the Newton diagram: the monomials x^a y^b
/// such that (a+1, b+1) lies strictly inside the diagram region.
MonomialIdeal diagram_adjoint(const MonomialIdeal& a);

}  // namespace ideal2d
