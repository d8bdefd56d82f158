/// @file toricring.hpp
/// @brief Graded coordinate ring of a (normal) lattice polytope, represented
///        purely by its graded pieces: basis of degree nu = lattice points of
///        nu*P, multiplication by lattice-point convolution.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/multipoly.hpp"

namespace toric {

struct NotNormal : HypothesisError {
    explicit NotNormal(const std::string& what) : HypothesisError(what) {}
};

class ToricRing {
  public:
    /// Throws NotNormal when the polytope fails the bounded sumset check
    /// (every graded-piece basis below presupposes normality).
    explicit ToricRing(LatticePolytope poly);

    const LatticePolytope& polytope() const { return poly_; }
    int dim() const { return poly_.dim; }

    /// Basis of the degree-nu piece: lattice points of nu*P in graded-lex
    /// order.  Cached; append-only under an internal lock.
    const std::vector<Point>& basis(int nu) const;

    /// dim A_nu = ehrhart(P, nu); zero for negative nu.
    long hilbert(int nu) const;

    /// Position of w in basis(nu); throws if w is not a lattice point of nu*P.
    std::size_t index_of(int nu, const Point& w) const;

  private:
    LatticePolytope poly_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Point>> cache_;
};

using RingPtr = std::shared_ptr<const ToricRing>;

RingPtr make_ring(LatticePolytope poly);

/// Element of one graded piece A_degree, as a coefficient vector over the
/// degree basis.  Immutable in spirit: operations return new elements.
struct GradedElement {
    RingPtr ring;
    int degree = 0;
    std::vector<Rat> coeffs;

    bool is_zero() const;
};

GradedElement make_element(RingPtr ring, int degree, std::vector<Rat> coeffs);

/// Places each coefficient of p at the basis position of its exponent
/// vector.  Errors when some exponent vector lies outside degree*P.
GradedElement homogenize(const RingPtr& ring, const MultiPoly& p, int degree);

/// Convolution product; degrees add.  Same-ring elements only.
GradedElement multiply(const GradedElement& a, const GradedElement& b);

/// Inverse of homogenize: sum of coeff * s^point over the degree basis.
MultiPoly dehomogenize(const GradedElement& e, const RosterPtr& roster);

}  // namespace toric
