#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "toric/implicit.hpp"
#include "toric/mapspec.hpp"
#include "toric/parser.hpp"
#include "toric/rng.hpp"

using namespace toric;
using toric_test::fixture;

namespace {

MapSpec curve_spec(const std::string& num1, const std::string& num2, Target target) {
    RosterPtr s = make_roster({"s"});
    return make_map_spec(s, target, {parse_poly(num1, s), parse_poly(num2, s)},
                         {parse_poly("1", s), parse_poly("1", s)});
}

LinearFormMatrix cuspidal_m2() {
    MapSpec spec = load_spec(fixture("cuspidal.map"));
    return build_matrix_projective(spec.route.elems, 2, spec.route.x_roster);
}

/// 2 x 3 matrix [[X1, X2, X3], [X2, X3, X1]] whose maximal minors are coprime.
LinearFormMatrix coprime_2x3() {
    LinearFormMatrix m;
    m.x_roster = projective_x_roster(3);
    m.rows = 2;
    m.cols = 3;
    m.columns.resize(3);
    int top[3] = {0, 1, 2}, bottom[3] = {1, 2, 0};
    for (std::size_t c = 0; c < 3; ++c) {
        LinearForm a, b;
        a.add(top[c], Rat(1));
        b.add(bottom[c], Rat(1));
        m.columns[c].push_back({0, a});
        m.columns[c].push_back({1, b});
    }
    return m;
}

/// 2 x 2 matrix [[X1, X1], [X2, X2]] of generic rank 1.
LinearFormMatrix deficient_2x2() {
    LinearFormMatrix m;
    m.x_roster = projective_x_roster(2);
    m.rows = 2;
    m.cols = 2;
    m.columns.resize(2);
    for (std::size_t c = 0; c < 2; ++c) {
        LinearForm a, b;
        a.add(0, Rat(1));
        b.add(1, Rat(1));
        m.columns[c].push_back({0, a});
        m.columns[c].push_back({1, b});
    }
    return m;
}

}  // namespace

TEST_CASE("cuspidal cubic: determinant and minor gcd give the implicit equation") {
    LinearFormMatrix m2 = cuspidal_m2();
    RosterPtr xr = m2.x_roster;
    MultiPoly curve = parse_poly("X1^3 - X2^2*X3", xr);

    MultiPoly d = det_symbolic(m2);
    CHECK(poly_proportional(d, curve));

    MultiPoly g = gcd_maximal_minors(m2);
    CHECK(poly_proportional(g, curve));
    CHECK(g == poly_normalize(g));  // returned in canonical scale

    // a square matrix's only maximal minor is its determinant
    CHECK(poly_proportional(g, d));
}

TEST_CASE("symbolic factor verification accepts the right exponent only") {
    LinearFormMatrix m2 = cuspidal_m2();
    RosterPtr xr = m2.x_roster;
    MultiPoly H = parse_poly("X2^2*X3 - X1^3", xr);
    MultiPoly one = MultiPoly::constant(xr, Rat(1));

    ImplicitReport ok = verify_factorization_symbolic(m2, H, 1, one);
    CHECK(ok.pass);
    CHECK(ok.mode == "symbolic");
    ImplicitReport bad = verify_factorization_symbolic(m2, H, 2, one);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("line map minor gcd") {
    RosterPtr s = make_roster({"s"});
    MapSpec spec = make_map_spec(s, Target::projective,
                                 {parse_poly("s", s), parse_poly("s", s)},
                                 {parse_poly("1", s), parse_poly("1", s)});
    LinearFormMatrix m0 =
        build_matrix_projective(spec.route.elems, 0, spec.route.x_roster);
    MultiPoly g = gcd_maximal_minors(m0);
    CHECK(poly_proportional(g, parse_poly("X1 - X2", spec.route.x_roster)));
}

TEST_CASE("coprime maximal minors have trivial gcd") {
    MultiPoly g = gcd_maximal_minors(coprime_2x3());
    CHECK(g.is_constant());
    CHECK(!g.is_zero());
}

TEST_CASE("minor sweep guards") {
    CHECK_THROWS_AS(gcd_maximal_minors(cuspidal_m2(), 2), UsageError);
    MapSpec spec = load_spec(fixture("example2.map"));
    KoszulStrand strand = build_koszul_strand(spec.route.elems, 2, spec.route.x_roster);
    CHECK_THROWS_AS(gcd_maximal_minors(strand.maps[1]), UsageError);  // 15 x 3
    CHECK_THROWS_AS(membership(deficient_2x2(), {Rat(1), Rat(2)}), Error);
}

TEST_CASE("trapezoid strand: determinant plan telescopes to (12, 3)") {
    MapSpec spec = load_spec(fixture("example2.map"));
    KoszulStrand strand = build_koszul_strand(spec.route.elems, 2, spec.route.x_roster);
    DetComplexPlan plan = plan_det_complex(strand, 0);
    CHECK(plan.block_sizes == std::vector<std::size_t>{12, 3});
    CHECK(plan.block_rows[0].size() == 12);
    CHECK(plan.block_cols[1].size() == 3);

    // the strand determinant does not depend on the staircase choice (up to a
    // constant): two plans agree at shared points up to one fixed ratio
    DetComplexPlan plan2 = plan_det_complex(strand, 1);
    Rng rng(99);
    Rat ratio;
    bool have_ratio = false;
    int used = 0;
    while (used < 5) {
        std::vector<Rat> x = rng.point(6);
        Rat a, b;
        try {
            a = det_complex_at_point(strand, plan, x);
            b = det_complex_at_point(strand, plan2, x);
        } catch (const SingularBlock&) {
            continue;
        }
        if (b == 0) {
            CHECK(a == 0);
            continue;
        }
        if (!have_ratio) {
            ratio = a / b;
            have_ratio = true;
        } else {
            CHECK(a / b == ratio);
        }
        ++used;
    }
    CHECK(have_ratio);
    CHECK(ratio != 0);
}

TEST_CASE("membership separates image points from random points") {
    MapSpec spec = load_spec(fixture("example2.map"));
    const RouteData& route = spec.route;
    KoszulStrand strand = build_koszul_strand(route.elems, 2, route.x_roster);
    const LinearFormMatrix& m = strand.maps[0];

    Rng rng(7);
    int pushed = 0;
    while (pushed < 3) {
        auto x = push_forward(route, spec.vars, rng.point(2));
        if (!x) continue;
        CHECK(membership(m, *x));
        ++pushed;
    }
    for (int i = 0; i < 3; ++i) CHECK_FALSE(membership(m, rng.point(6)));
}

TEST_CASE("double cover of a line: map degree 2, strand determinant degree 4") {
    MapSpec spec = curve_spec("s^2", "s^2 + 1", Target::multiprojective);
    const RouteData& route = spec.route;
    CHECK(route.degrees == std::vector<int>{2, 2});
    CHECK(route.nu0 == 3);
    KoszulStrand strand = build_koszul_strand(route.elems, 3, route.x_roster);
    CHECK(strand.terms == std::vector<long>{4, 4, 0});

    MultiPoly H = parse_poly("X2*Y1 - X1*Y2 - Y1*Y2", route.x_roster);
    MultiPoly one = MultiPoly::constant(route.x_roster, Rat(1));
    CHECK(degree_of_map(strand, H, one, 0) == 2);

    DetComplexPlan plan = plan_det_complex(strand, 0);
    CHECK(plan.block_sizes == std::vector<std::size_t>{4});
    CHECK(degree_probe(strand, plan, 0) == 4);

    ImplicitReport rep = verify_factorization(strand, H, 2, one, 0);
    CHECK(rep.pass);
    CHECK(rep.evidence.size() == 5);
    ImplicitReport wrong_k = verify_factorization(strand, H, 1, one, 0);
    CHECK_FALSE(wrong_k.pass);
}

TEST_CASE("cuspidal cubic, multiprojective strand: verified factorization") {
    MapSpec spec = curve_spec("s^2", "s^3", Target::multiprojective);
    const RouteData& route = spec.route;
    CHECK(route.degrees == std::vector<int>{2, 3});
    CHECK(route.nu0 == 4);
    KoszulStrand strand = build_koszul_strand(route.elems, 4, route.x_roster);
    CHECK(strand.terms == std::vector<long>{5, 5, 0});

    MultiPoly H = parse_poly("X2^2*Y1^3 - X1^3*Y2^2", route.x_roster);
    MultiPoly one = MultiPoly::constant(route.x_roster, Rat(1));
    ImplicitReport rep = verify_factorization(strand, H, 1, one, 0);
    CHECK(rep.pass);
    CHECK(rep.seed == 0);
    CHECK(rep.mode == "evaluated");
    for (const EvidenceRow& row : rep.evidence) CHECK(row.ratio == rep.evidence[0].ratio);

    CHECK(degree_of_map(strand, H, one, 0) == 1);
    DetComplexPlan plan = plan_det_complex(strand, 0);
    CHECK(degree_probe(strand, plan, 0) == 5);
}

TEST_CASE("ratio protocol guards") {
    MapSpec spec = curve_spec("s^2", "s^3", Target::multiprojective);
    KoszulStrand strand =
        build_koszul_strand(spec.route.elems, 4, spec.route.x_roster);
    RosterPtr xr = spec.route.x_roster;
    MultiPoly H = parse_poly("X2^2*Y1^3 - X1^3*Y2^2", xr);
    MultiPoly one = MultiPoly::constant(xr, Rat(1));
    CHECK_THROWS_AS(verify_factorization(strand, H, 1, one, 0, 2), UsageError);
    CHECK_THROWS_AS(verify_factorization(strand, H, 0, one, 0), UsageError);
    // a zero candidate can never be witnessed
    MultiPoly zero = MultiPoly::zero(xr);
    CHECK_THROWS_AS(verify_factorization(strand, zero, 1, one, 0), Error);
}

TEST_CASE("box parametrization: strand determinant is H^4 times a monomial square") {
    MapSpec spec = load_spec(fixture("example3.map"));
    const RouteData& route = spec.route;
    KoszulStrand strand = build_koszul_strand(route.elems, route.nu0, route.x_roster);
    DetComplexPlan plan = plan_det_complex(strand, 0);
    CHECK(plan.block_sizes == std::vector<std::size_t>{112, 68, 4});
    // every block entry is a linear form, so the determinant is homogeneous
    // of total degree 112 - 68 + 4 = 48
    CHECK(degree_probe(strand, plan, 0) == 48);

    MultiPoly H = load_poly(fixture("example3_H.poly"), route.x_roster);
    MultiPoly G = load_poly(fixture("example3_G_observed.poly"), route.x_roster);
    ImplicitReport rep = verify_factorization(strand, H, 4, G, 0, 5);
    CHECK(rep.pass);
    // the constant is exactly 1: det = H^4 * (Y1^2*X2*Y2*X3*Y3*X4*Y4)^2
    for (const EvidenceRow& row : rep.evidence) CHECK(row.ratio == Rat(1));
    CHECK(degree_of_map(strand, H, G, 0) == 4);

    // the degree-8 monomial shipped next to H is not a cofactor of the
    // determinant for any exponent of H; in particular H^2 * G_small fails
    MultiPoly small = load_poly(fixture("example3_G.poly"), route.x_roster);
    ImplicitReport wrong = verify_factorization(strand, H, 2, small, 0, 5);
    CHECK_FALSE(wrong.pass);
}
