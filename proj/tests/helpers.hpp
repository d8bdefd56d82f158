/// Shared helpers for test binaries: fixture paths and symbolic checks on
/// linear-form matrices.

#pragma once

#include <string>
#include <vector>

#include "toric/linform.hpp"
#include "toric/multipoly.hpp"
#include "toric/strands.hpp"

namespace toric_test {

inline std::string fixture(const std::string& name) {
    return std::string(TORIC_FIXTURE_DIR) + "/" + name;
}

/// Product of consecutive differentials as polynomial matrices; true iff
/// every entry of maps[p] * maps[p+1] is identically zero.
inline bool composes_to_zero(const toric::LinearFormMatrix& a,
                             const toric::LinearFormMatrix& b) {
    using toric::MultiPoly;
    if (a.cols != b.rows) return false;
    for (std::size_t c = 0; c < b.cols; ++c) {
        std::vector<MultiPoly> out(a.rows, MultiPoly::zero(a.x_roster));
        for (const auto& [mid, bform] : b.columns[c]) {
            MultiPoly bp = bform.to_poly(a.x_roster);
            for (const auto& [r, aform] : a.columns[mid])
                out[r] = toric::poly_add(out[r], toric::poly_mul(aform.to_poly(a.x_roster), bp));
        }
        for (const MultiPoly& p : out)
            if (!p.is_zero()) return false;
    }
    return true;
}

/// Every column of a syzygy-style matrix m encodes forms a_i with
/// sum_i a_i h_i = 0; checks that identity symbolically.  Column c stores,
/// at row w, the linear form sum_i coeff_w(a_i) X_i, so a_i is recovered by
/// collecting the X_i coefficients over the rows.
inline bool columns_are_syzygies(const toric::LinearFormMatrix& m,
                                 const std::vector<toric::GradedElement>& h, int nu) {
    using toric::GradedElement;
    using toric::Rat;
    if (h.empty()) return false;
    const toric::RingPtr& ring = h[0].ring;
    for (std::size_t c = 0; c < m.cols; ++c) {
        // a_i coefficient vectors over the row basis of A_nu
        std::vector<std::vector<Rat>> a(h.size(), std::vector<Rat>(m.rows, Rat(0)));
        for (const auto& [r, form] : m.columns[c])
            for (const auto& [var, coef] : form.terms)
                a[static_cast<std::size_t>(var)][r] = coef;
        std::vector<Rat> acc;
        for (std::size_t i = 0; i < h.size(); ++i) {
            bool zero = true;
            for (const Rat& q : a[i])
                if (q != 0) zero = false;
            if (zero) continue;  // pairs of different degree never mix in one column
            GradedElement term = toric::multiply(toric::make_element(ring, nu, a[i]), h[i]);
            if (acc.empty()) acc.assign(term.coeffs.size(), Rat(0));
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] += term.coeffs[w];
        }
        for (const Rat& q : acc)
            if (q != 0) return false;
    }
    return true;
}

}  // namespace toric_test
