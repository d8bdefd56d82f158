#include "toric/toricring.hpp"

#include <algorithm>

namespace toric {

ToricRing::ToricRing(LatticePolytope poly) : poly_(std::move(poly)) {
    if (!is_normal(poly_))
        throw NotNormal("polytope fails the normality (sumset) check; graded pieces would be wrong");
}

const std::vector<Point>& ToricRing::basis(int nu) const {
    if (nu < 0) throw UsageError("negative degree has no basis");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(nu);
    if (it == cache_.end())
        it = cache_.emplace(nu, lattice_points(poly_, nu)).first;
    return it->second;
}

long ToricRing::hilbert(int nu) const {
    if (nu < 0) return 0;
    return static_cast<long>(basis(nu).size());
}

std::size_t ToricRing::index_of(int nu, const Point& w) const {
    const std::vector<Point>& b = basis(nu);
    auto it = std::lower_bound(b.begin(), b.end(), w, point_less);
    if (it == b.end() || *it != w)
        throw Error("point " + point_str(w) + " is not in the degree-" +
                    std::to_string(nu) + " basis");
    return static_cast<std::size_t>(it - b.begin());
}

RingPtr make_ring(LatticePolytope poly) {
    return std::make_shared<const ToricRing>(std::move(poly));
}

bool GradedElement::is_zero() const {
    for (const Rat& c : coeffs)
        if (c != 0) return false;
    return true;
}

GradedElement make_element(RingPtr ring, int degree, std::vector<Rat> coeffs) {
    if (!ring) throw UsageError("graded element needs a ring");
    if (static_cast<long>(coeffs.size()) != ring->hilbert(degree))
        throw UsageError("coefficient vector length does not match hilbert(degree)");
    return GradedElement{std::move(ring), degree, std::move(coeffs)};
}

GradedElement homogenize(const RingPtr& ring, const MultiPoly& p, int degree) {
    if (static_cast<int>(p.nvars()) != ring->dim())
        throw UsageError("variable count does not match the ring dimension");
    std::vector<Rat> coeffs(ring->hilbert(degree), Rat(0));
    for (const auto& [m, c] : p.terms()) {
        Point w(m.e.begin(), m.e.end());
        std::size_t idx;
        try {
            idx = ring->index_of(degree, w);
        } catch (const Error&) {
            throw HypothesisError("support point " + point_str(w) +
                                  " lies outside the degree-" +
                                  std::to_string(degree) + " dilation");
        }
        coeffs[idx] = c;
    }
    return GradedElement{ring, degree, std::move(coeffs)};
}

GradedElement multiply(const GradedElement& a, const GradedElement& b) {
    if (a.ring != b.ring) throw UsageError("graded elements from different rings");
    const ToricRing& ring = *a.ring;
    int degree = a.degree + b.degree;
    const std::vector<Point>& ba = ring.basis(a.degree);
    const std::vector<Point>& bb = ring.basis(b.degree);
    std::vector<Rat> coeffs(ring.hilbert(degree), Rat(0));
    for (std::size_t i = 0; i < ba.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < bb.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            Point w(ring.dim());
            for (int k = 0; k < ring.dim(); ++k) w[k] = ba[i][k] + bb[j][k];
            // Sums of dilation points always land in the sum dilation.
            coeffs[ring.index_of(degree, w)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return GradedElement{a.ring, degree, std::move(coeffs)};
}

MultiPoly dehomogenize(const GradedElement& e, const RosterPtr& roster) {
    if (static_cast<int>(roster->size()) != e.ring->dim())
        throw UsageError("roster size does not match the ring dimension");
    const std::vector<Point>& b = e.ring->basis(e.degree);
    MultiPoly p(roster);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (e.coeffs[i] == 0) continue;
        p.add_term(Monomial(std::vector<int>(b[i].begin(), b[i].end())), e.coeffs[i]);
    }
    return p;
}

}  // namespace toric
