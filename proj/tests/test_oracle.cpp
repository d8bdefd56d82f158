#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "helpers.hpp"
#include "toric/lattice.hpp"
#include "toric/mapspec.hpp"
#include "toric/oracle.hpp"
#include "toric/parser.hpp"
#include "toric/rng.hpp"

using namespace toric;
using toric_test::fixture;

namespace {

MapSpec curve(const std::string& n1, const std::string& d1, const std::string& n2,
              const std::string& d2, Target target) {
    RosterPtr s = make_roster({"s"});
    return make_map_spec(s, target, {parse_poly(n1, s), parse_poly(n2, s)},
                         {parse_poly(d1, s), parse_poly(d2, s)});
}

/// Affine image coordinates (f1/g1, f2/g2) of a parameter value; empty when a
/// denominator vanishes.
std::optional<std::vector<Rat>> affine_image(const MapSpec& spec, const Rat& p) {
    std::vector<Rat> out;
    for (int i = 0; i < 2; ++i) {
        Rat den = poly_eval(spec.dens[static_cast<std::size_t>(i)], {p});
        if (den == 0) return std::nullopt;
        out.push_back(poly_eval(spec.nums[static_cast<std::size_t>(i)], {p}) / den);
    }
    return out;
}

LatticePolytope reeve() {
    return make_polytope({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

}  // namespace

TEST_CASE("sylvester resultant on univariate pins") {
    RosterPtr r = make_roster({"s", "X1", "X2"});
    auto P = [&](const char* text) { return parse_poly(text, r); };

    CHECK(poly_proportional(sylvester_resultant(P("s - X1"), P("s - X2"), 0),
                            P("X1 - X2")));
    CHECK(poly_proportional(sylvester_resultant(P("s^2 - X1"), P("s^3 - X2"), 0),
                            P("X2^2 - X1^3")));
    // Res(a, b) when a is constant in s is a^(deg b)
    CHECK(sylvester_resultant(P("X1"), P("s^3 - X2"), 0) == P("X1^3"));
}

TEST_CASE("resultant degree law and multiplicativity") {
    RosterPtr r = make_roster({"s", "X1", "X2"});
    auto P = [&](const char* text) { return parse_poly(text, r); };

    // X1 enters a = s^3 - X1 linearly, so deg_X1 Res(a, b) = deg_s b
    MultiPoly res = sylvester_resultant(P("s^3 - X1"), P("s^4 + 2*s + 1"), 0);
    CHECK(res.degree_in(1) == 4);

    MultiPoly a = P("s^2 + 3*s - X1");
    MultiPoly b = P("s - 2*X2");
    MultiPoly c = P("s^2 + X2");
    CHECK(sylvester_resultant(a, poly_mul(b, c), 0) ==
          poly_mul(sylvester_resultant(a, b, 0), sylvester_resultant(a, c, 0)));
}

TEST_CASE("resultant guards") {
    RosterPtr r = make_roster({"s", "X1", "X2"});
    auto P = [&](const char* text) { return parse_poly(text, r); };
    CHECK_THROWS_AS(sylvester_resultant(P("X1"), P("X2 + 1"), 0), UsageError);
    CHECK_THROWS_AS(sylvester_resultant(P("0"), P("s"), 0), UsageError);
    CHECK_THROWS_AS(sylvester_resultant(P("s"), P("s"), 5), UsageError);
}

TEST_CASE("curve implicit equations by elimination") {
    MapSpec cusp = curve("s^2", "1", "s^3", "1", Target::projective);
    RosterPtr xp = projective_x_roster(3);
    MultiPoly f = curve_implicit(cusp, Target::projective);
    CHECK(poly_proportional(f, parse_poly("X2^2 - X1^3", xp)));
    CHECK(f.degree_in(2) == 0);  // affine in X1, X2

    MapSpec line = curve("s", "1", "s", "1", Target::projective);
    CHECK(poly_proportional(curve_implicit(line, Target::projective),
                            parse_poly("X1 - X2", xp)));

    // the double cover picks up the map degree as an exponent
    MapSpec dbl = curve("s^2", "1", "s^2 + 1", "1", Target::multiprojective);
    CHECK(poly_proportional(curve_implicit(dbl, Target::projective),
                            poly_pow(parse_poly("X2 - X1 - 1", xp), 2)));
    RosterPtr xm = multiprojective_x_roster(2);
    CHECK(poly_proportional(curve_implicit(dbl, Target::multiprojective),
                            poly_pow(parse_poly("X2*Y1 - X1*Y2 - Y1*Y2", xm), 2)));
}

TEST_CASE("oracle equations vanish on the image and only there") {
    std::vector<MapSpec> specs;
    specs.push_back(curve("s^2", "1", "s^3", "1", Target::multiprojective));
    specs.push_back(curve("s^2 + 1", "s - 2", "s^3 - s", "s + 3", Target::multiprojective));
    specs.push_back(curve("s^3 + 2*s", "1", "s^2 - 1", "s", Target::multiprojective));

    Rng rng(5);
    for (const MapSpec& spec : specs) {
        MultiPoly fm = curve_implicit(spec, Target::multiprojective);
        MultiPoly fp = curve_implicit(spec, Target::projective);
        RouteData multi = build_route(spec, Target::multiprojective);

        int on_curve = 0;
        while (on_curve < 5) {
            Rat p = rng.rat();
            auto xm = push_forward(multi, spec.vars, {p});
            auto aff = affine_image(spec, p);
            if (!xm || !aff) continue;
            CHECK(poly_eval(fm, *xm) == 0);
            CHECK(poly_eval(fp, {(*aff)[0], (*aff)[1], Rat(1)}) == 0);
            ++on_curve;
        }
        for (int i = 0; i < 5; ++i) {
            CHECK(poly_eval(fm, rng.point(4)) != 0);
            CHECK(poly_eval(fp, {rng.rat(), rng.rat(), Rat(1)}) != 0);
        }
    }
}

TEST_CASE("curve oracle guards") {
    RosterPtr st = make_roster({"s", "t"});
    MapSpec surf = make_map_spec(
        st, Target::multiprojective,
        {parse_poly("s", st), parse_poly("t", st), parse_poly("s*t", st)},
        {parse_poly("1", st), parse_poly("1", st), parse_poly("1", st)});
    CHECK_THROWS_AS(curve_implicit(surf, Target::multiprojective), UsageError);
}

TEST_CASE("sumset normality agrees with the facet-based check") {
    LatticePolytope square = make_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    LatticePolytope trapezoid = make_polytope({{0, 0}, {2, 0}, {0, 1}, {1, 1}});
    LatticePolytope hexagon =
        make_polytope({{0, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}});
    LatticePolytope box = load_spec(fixture("example3.map")).route.newton;

    for (int m = 2; m <= 4; ++m) {
        CHECK(normality_sumset(square, m));
        CHECK(normality_sumset(trapezoid, m));
    }
    CHECK(normality_sumset(hexagon, 2));
    CHECK(normality_sumset(hexagon, 3));
    CHECK(normality_sumset(box, 2));
    CHECK(normality_sumset(box, 3));
    CHECK(is_normal(square));
    CHECK(is_normal(hexagon));
    CHECK(is_normal(box));

    CHECK_FALSE(normality_sumset(reeve(), 2));
    CHECK_FALSE(is_normal(reeve()));
    CHECK_THROWS_AS(normality_sumset(square, 1), UsageError);
}
