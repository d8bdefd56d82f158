/// @file oracle.hpp
/// @brief Independent cross-checks that bypass the representation-matrix
/// machinery: resultant-based implicitization for curves and a brute-force
/// sumset test for polytope normality.

#pragma once

#include "toric/lattice.hpp"
#include "toric/mapspec.hpp"
#include "toric/multipoly.hpp"

namespace toric {

/// Sylvester resultant of a and b with respect to the roster variable `var`,
/// using the nominal degrees degree_in(var).  The result lives on the same
/// roster with `var` eliminated (exponent zero in every term).  Errors when
/// either input is zero or both are constant in `var`.
MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, int var);

/// Implicit equation of a curve parametrization (one parameter, two
/// coordinates) obtained by eliminating the parameter with a resultant.
/// For Target::projective the result is a polynomial in X1, X2 (the affine
/// chart X3 = 1 of the X1, X2, X3 roster); for Target::multiprojective it is
/// bihomogeneous in (X1, Y1), (X2, Y2).  In both cases the result equals the
/// implicit equation raised to the degree of the parametrization onto its
/// image, content-normalized.  Errors when the image is degenerate.
MultiPoly curve_implicit(const MapSpec& spec, Target target);

/// Brute-force normality check at one dilation level: the m-fold sumset of
/// the lattice points of p must exhaust the lattice points of m*p.
/// Requires m >= 2.
bool normality_sumset(const LatticePolytope& p, int m);

}  // namespace toric
