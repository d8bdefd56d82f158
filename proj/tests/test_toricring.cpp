#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toric/parser.hpp"
#include "toric/rng.hpp"
#include "toric/toricring.hpp"

using namespace toric;

namespace {

RingPtr hexring() {
    return make_ring(make_polytope({{0, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}}));
}

RingPtr segring() { return make_ring(make_polytope({{0}, {1}})); }

RingPtr boxring() {
    return make_ring(make_polytope({{0, 0, 0}, {1, 1, 2}, {1, 0, 0}, {0, 1, 0},
                                    {0, 0, 2}, {1, 1, 0}, {1, 0, 2}, {0, 1, 2}}));
}

MultiPoly random_supported_poly(Rng& rng, const RingPtr& ring, const RosterPtr& vars,
                                int degree) {
    const std::vector<Point>& b = ring->basis(degree);
    MultiPoly p(vars);
    for (const Point& w : b)
        if (rng.int_in(0, 2) == 0)
            p.add_term(Monomial(std::vector<int>(w.begin(), w.end())), rng.rat());
    return p;
}

}  // namespace

TEST_CASE("hilbert equals the lattice point count") {
    RingPtr trap = make_ring(make_polytope({{0, 0}, {2, 0}, {1, 1}, {0, 1}}));
    CHECK(trap->hilbert(0) == 1);
    CHECK(trap->hilbert(1) == 5);
    CHECK(trap->hilbert(2) == 12);
    CHECK(trap->hilbert(-1) == 0);
    CHECK(hexring()->hilbert(3) == 34);
}

TEST_CASE("homogenize places coefficients on the basis") {
    RingPtr ring = hexring();
    RosterPtr st = make_roster({"s", "t"});
    GradedElement f1 = homogenize(ring, parse_poly("s*t^6 + 2", st), 1);
    CHECK(f1.coeffs == std::vector<Rat>{Rat(2), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});

    RosterPtr s = make_roster({"s"});
    GradedElement sq = homogenize(segring(), parse_poly("s^2", s), 3);
    CHECK(sq.coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(0)});

    GradedElement one = homogenize(segring(), parse_poly("1", s), 0);
    CHECK(one.coeffs == std::vector<Rat>{Rat(1)});

    CHECK_THROWS_AS(homogenize(segring(), parse_poly("s^2", s), 1), HypothesisError);
}

TEST_CASE("multiplication is lattice point convolution") {
    RingPtr ring = segring();
    RosterPtr s = make_roster({"s"});
    GradedElement a = homogenize(ring, parse_poly("s", s), 1);
    GradedElement sq = multiply(a, a);
    CHECK(sq.degree == 2);
    CHECK(sq.coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

    GradedElement unit = homogenize(ring, parse_poly("1", s), 0);
    GradedElement b = homogenize(ring, parse_poly("2*s + 3", s), 1);
    GradedElement same = multiply(unit, b);
    CHECK(same.degree == 1);
    CHECK(same.coeffs == b.coeffs);

    CHECK_THROWS_AS(multiply(a, homogenize(hexring(), parse_poly("1", make_roster({"s", "t"})), 0)),
                    UsageError);
}

TEST_CASE("homogenize is a ring homomorphism on fitting supports") {
    RingPtr ring = boxring();
    RosterPtr stu = make_roster({"s", "t", "u"});
    Rng rng(5);
    for (int it = 0; it < 8; ++it) {
        int da = static_cast<int>(rng.int_in(1, 2));
        int db = static_cast<int>(rng.int_in(1, 2));
        MultiPoly p = random_supported_poly(rng, ring, stu, da);
        MultiPoly q = random_supported_poly(rng, ring, stu, db);
        GradedElement lhs = multiply(homogenize(ring, p, da), homogenize(ring, q, db));
        GradedElement rhs = homogenize(ring, poly_mul(p, q), da + db);
        CHECK(lhs.coeffs == rhs.coeffs);
        CHECK(dehomogenize(lhs, stu) == poly_mul(p, q));
    }
}

TEST_CASE("dehomogenize round trips") {
    RingPtr ring = hexring();
    RosterPtr st = make_roster({"s", "t"});
    Rng rng(17);
    for (int it = 0; it < 6; ++it) {
        MultiPoly p = random_supported_poly(rng, ring, st, 2);
        CHECK(dehomogenize(homogenize(ring, p, 2), st) == p);
    }
    GradedElement z = make_element(ring, 1, std::vector<Rat>(6, Rat(0)));
    CHECK(z.is_zero());
    CHECK(dehomogenize(z, st).is_zero());
}

TEST_CASE("non-normal polytopes are rejected") {
    // Tetrahedron whose double dilation contains (1,1,1), which is not a sum
    // of two of its lattice points.
    std::vector<Point> reeve = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK_FALSE(is_normal(make_polytope(reeve)));
    CHECK_THROWS_AS(make_ring(make_polytope(reeve)), NotNormal);
}

TEST_CASE("element construction validates lengths") {
    RingPtr ring = segring();
    CHECK_THROWS_AS(make_element(ring, 1, {Rat(1)}), UsageError);
    GradedElement e = make_element(ring, 1, {Rat(1), Rat(2)});
    CHECK(e.coeffs.size() == 2);
}
