#include "toric/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/qlinalg.hpp"

namespace toric {
namespace {

/// Coefficient of var^k in a, as a polynomial on the same roster with the
/// var exponent cleared.
MultiPoly coeff_in_var(const MultiPoly& a, int var, int k) {
    MultiPoly c = MultiPoly::zero(a.roster());
    for (const auto& [mono, coef] : a.terms()) {
        if (mono.e[static_cast<std::size_t>(var)] != k) continue;
        Monomial m = mono;
        m.e[static_cast<std::size_t>(var)] = 0;
        c.add_term(m, coef);
    }
    return c;
}

/// Re-expresses a polynomial over `vars` on the combined roster, mapping
/// variable i of the source to slot `offset + i`.
MultiPoly lift_poly(const MultiPoly& a, const RosterPtr& combined,
                    std::size_t offset) {
    MultiPoly out = MultiPoly::zero(combined);
    for (const auto& [mono, coef] : a.terms()) {
        Monomial m(combined->size());
        for (std::size_t i = 0; i < mono.e.size(); ++i) m.e[offset + i] = mono.e[i];
        out.add_term(m, coef);
    }
    return out;
}

/// Drops variable 0 (which must have exponent zero everywhere) and returns
/// the polynomial on the tail roster.
MultiPoly drop_first_var(const MultiPoly& a, const RosterPtr& tail) {
    MultiPoly out = MultiPoly::zero(tail);
    for (const auto& [mono, coef] : a.terms()) {
        if (mono.e[0] != 0)
            throw Error("resultant did not eliminate the parameter");
        Monomial m(std::vector<int>(mono.e.begin() + 1, mono.e.end()));
        out.add_term(m, coef);
    }
    return out;
}

}  // namespace

MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, int var) {
    if (a.is_zero() || b.is_zero())
        throw UsageError("resultant of the zero polynomial is undefined");
    if (var < 0 || static_cast<std::size_t>(var) >= a.nvars())
        throw UsageError("resultant variable index out of range");
    int da = a.degree_in(var);
    int db = b.degree_in(var);
    if (da == 0 && db == 0)
        throw UsageError("both polynomials are constant in the chosen variable");
    const RosterPtr& roster = a.roster();
    std::vector<MultiPoly> ac, bc;
    for (int k = 0; k <= da; ++k) ac.push_back(coeff_in_var(a, var, k));
    for (int k = 0; k <= db; ++k) bc.push_back(coeff_in_var(b, var, k));
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<MultiPoly>> s(n,
                                          std::vector<MultiPoly>(n, MultiPoly::zero(roster)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                ac[static_cast<std::size_t>(da - j)];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j)
            s[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + j)] =
                bc[static_cast<std::size_t>(db - j)];
    return det_poly(std::move(s), roster);
}

MultiPoly curve_implicit(const MapSpec& spec, Target target) {
    if (spec.vars->size() != 1 || spec.n != 2)
        throw UsageError(
            "the resultant oracle handles curve parametrizations only: one "
            "parameter, two coordinates");
    RosterPtr x_roster = target == Target::projective ? projective_x_roster(3)
                                                      : multiprojective_x_roster(2);
    std::vector<std::string> names{(*spec.vars)[0]};
    names.insert(names.end(), x_roster->begin(), x_roster->end());
    RosterPtr combined = make_roster(std::move(names));

    auto xvar = [&](std::size_t i) { return MultiPoly::variable(combined, static_cast<int>(i) + 1); };
    std::vector<MultiPoly> eqs;
    if (target == Target::projective) {
        // X3 is the homogenizing slot and stays out of the equations; the
        // result is the affine implicit curve of (f1/g1, f2/g2) in X1, X2.
        eqs.push_back(poly_sub(lift_poly(spec.nums[0], combined, 0),
                               poly_mul(xvar(0), lift_poly(spec.dens[0], combined, 0))));
        eqs.push_back(poly_sub(lift_poly(spec.nums[1], combined, 0),
                               poly_mul(xvar(1), lift_poly(spec.dens[1], combined, 0))));
    } else {
        // Roster order X1, Y1, X2, Y2: equation i is Y_i f_i - X_i g_i.
        eqs.push_back(poly_sub(poly_mul(xvar(1), lift_poly(spec.nums[0], combined, 0)),
                               poly_mul(xvar(0), lift_poly(spec.dens[0], combined, 0))));
        eqs.push_back(poly_sub(poly_mul(xvar(3), lift_poly(spec.nums[1], combined, 0)),
                               poly_mul(xvar(2), lift_poly(spec.dens[1], combined, 0))));
    }
    if (eqs[0].degree_in(0) <= 0 && eqs[1].degree_in(0) <= 0)
        throw Error("both coordinates are constant; the image is a point");
    MultiPoly res = sylvester_resultant(eqs[0], eqs[1], 0);
    if (res.is_zero())
        throw Error("resultant vanished identically; the parametrization is degenerate");
    return poly_normalize(drop_first_var(res, x_roster));
}

bool normality_sumset(const LatticePolytope& p, int m) {
    if (m < 2) throw UsageError("sumset normality check needs m >= 2");
    std::vector<Point> gen = lattice_points(p, 1);
    std::set<Point> sum(gen.begin(), gen.end());
    for (int level = 2; level <= m; ++level) {
        std::set<Point> next;
        for (const Point& s : sum)
            for (const Point& q : gen) {
                Point t(s);
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += q[i];
                next.insert(std::move(t));
            }
        sum = std::move(next);
    }
    std::vector<Point> want = lattice_points(p, m);
    if (sum.size() != want.size()) return false;
    for (const Point& w : want)
        if (!sum.count(w)) return false;
    return true;
}

}  // namespace toric
