/// @file lattice.hpp
/// @brief Lattice polytopes: hulls, dilations, Ehrhart counts, normality,
///        contraction and the embedding-size comparison.

#pragma once

#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

using Point = std::vector<int>;

/// Ascending graded-lex order: total coordinate sum first, then lex.
bool point_less(const Point& a, const Point& b);

std::string point_str(const Point& p);

/// Half-space `normal . x <= offset` (or `= offset` when used as an equation).
struct HalfSpace {
    std::vector<long> normal;
    long offset = 0;
};

/// A lattice polytope with both vertex and half-space representations.
/// `facets` are the genuine codimension-one inequalities; for polytopes that
/// are not full-dimensional, `equations` cut out the affine hull and the
/// facet inequalities are only meaningful on it.
struct LatticePolytope {
    int dim = 0;         // ambient dimension
    int affine_dim = 0;  // dimension of the affine hull
    std::vector<Point> vertices;  // extreme points, sorted by point_less
    std::vector<HalfSpace> facets;
    std::vector<HalfSpace> equations;

    bool full_dimensional() const { return affine_dim == dim; }
};

/// Convex hull of a nonempty set of integer points (ambient dimension <= 3).
LatticePolytope make_polytope(std::vector<Point> points);

/// All integer points of the dilation k*P (k >= 0), sorted by point_less.
/// k = 0 gives the origin.
std::vector<Point> lattice_points(const LatticePolytope& p, int k);

/// True iff x lies in the dilation k*P (half-space test, no enumeration).
bool contains_dilated(const LatticePolytope& p, int k, const Point& x);

long ehrhart(const LatticePolytope& p, int k);

/// Number of integer points in the relative interior of k*P.
long ehrhart_interior(const LatticePolytope& p, int k);

/// gamma = max{ i >= 0 : ehrhart_interior(P, i) = 0 }, with the scan
/// starting at i = 1.  Requires P full-dimensional; always <= dim.
int gamma(const LatticePolytope& p);

/// True iff for all 2 <= m <= up_to every lattice point of m*P is a sum of
/// m lattice points of P.  up_to <= 0 selects the default affine_dim + 1.
bool is_normal(const LatticePolytope& p, int up_to = 0);

struct Contraction {
    LatticePolytope base;  // P = factor * base, exactly (no translation)
    int factor = 1;
};

/// Divides out the largest integer d with P = d * base; the gcd of all
/// vertex coordinates (factor 1 when P is the origin).
Contraction contract(const LatticePolytope& p);

/// Size comparison of the two toric embeddings of the same parametrization:
/// over P itself the data has degree 1, over the contracted base degree d.
/// Row counts are compared at the respective saturation bounds
/// nu0 = max{(n-2)*deg, (n-1)*deg - gamma} with n = dim + 1.
struct EmbeddingComparison {
    int factor = 1;    // d
    int gamma_big = 0;   // gamma of P
    int gamma_base = 0;  // gamma of the contracted base
    int delta = 0;       // d*(gamma_big + 1) - (gamma_base + 1), always >= 0
    int nu0_big = 0;
    int nu0_base = 0;
    long rows_big = 0;   // ehrhart(P, nu0_big)
    long rows_base = 0;  // ehrhart(base, nu0_base)
    bool prefer_contracted = false;  // rows_big > rows_base
};

EmbeddingComparison compare_embeddings(const LatticePolytope& p);

}  // namespace toric
