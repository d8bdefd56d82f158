#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "toric/lattice.hpp"
#include "toric/rng.hpp"

using namespace toric;

namespace {

LatticePolytope trapezoid() {
    return make_polytope({{0, 0}, {2, 0}, {1, 1}, {0, 1}});
}

LatticePolytope hexseg() {  // hull of the six support points of the first fixture
    return make_polytope({{0, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}});
}

LatticePolytope box112() {
    return make_polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2},
                          {1, 1, 0}, {1, 0, 2}, {0, 1, 2}, {1, 1, 2}});
}

LatticePolytope triangle(int d) {
    return make_polytope({{0, 0}, {d, 0}, {0, d}});
}

// Random full-dimensional polytope dilated by f, so its contraction is
// nontrivial; every dilation of a polygon (and every >= 2 dilation in dim 3)
// passes the normality check.
LatticePolytope random_scaled_polytope(Rng& rng, int dim, int factor) {
    for (;;) {
        std::vector<Point> pts;
        int count = static_cast<int>(rng.int_in(dim + 1, dim + 4));
        for (int i = 0; i < count; ++i) {
            Point p(dim);
            for (int& c : p) c = static_cast<int>(rng.int_in(0, 3)) * factor;
            pts.push_back(std::move(p));
        }
        LatticePolytope poly = make_polytope(pts);
        if (poly.full_dimensional()) return poly;
    }
}

}  // namespace

TEST_CASE("trapezoid counts") {
    LatticePolytope p = trapezoid();
    CHECK(p.vertices == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}, {2, 0}});
    CHECK(ehrhart(p, 1) == 5);
    CHECK(ehrhart(p, 2) == 12);
    CHECK(ehrhart(p, 5) == 51);
    CHECK(gamma(p) == 1);
    CHECK(is_normal(p));
    CHECK(contract(p).factor == 1);
}

TEST_CASE("first fixture hull") {
    LatticePolytope p = hexseg();
    CHECK(p.vertices == std::vector<Point>{{0, 0}, {1, 6}, {2, 6}});
    CHECK(lattice_points(p, 1).size() == 6);
    CHECK(lattice_points(p, 1) ==
          std::vector<Point>{{0, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}});
    CHECK(ehrhart(p, 2) == 17);
    CHECK(ehrhart(p, 3) == 34);
    CHECK(gamma(p) == 0);
    CHECK(is_normal(p));
}

TEST_CASE("box counts") {
    LatticePolytope p = box112();
    CHECK(p.vertices.size() == 8);
    CHECK(ehrhart(p, 1) == 12);
    CHECK(ehrhart(p, 2) == 45);
    CHECK(ehrhart(p, 3) == 112);
    CHECK(gamma(p) == 1);
    CHECK(is_normal(p, 4));
}

TEST_CASE("segments and squares") {
    LatticePolytope seg = make_polytope({{0}, {1}});
    CHECK(lattice_points(seg, 5) == std::vector<Point>{{0}, {1}, {2}, {3}, {4}, {5}});
    CHECK(is_normal(seg, 6));
    CHECK(gamma(seg) == 1);

    LatticePolytope square = make_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(ehrhart_interior(square, 1) == 0);
    CHECK(ehrhart_interior(square, 2) == 1);
    CHECK(gamma(square) == 1);

    LatticePolytope seg6 = make_polytope({{0}, {6}});
    Contraction c = contract(seg6);
    CHECK(c.factor == 6);
    CHECK(c.base.vertices == std::vector<Point>{{0}, {1}});
}

TEST_CASE("hull drops non-extreme points") {
    LatticePolytope p = make_polytope({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
    CHECK(p.vertices == std::vector<Point>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    CHECK(ehrhart(p, 1) == 9);
}

TEST_CASE("degenerate polytopes keep exact counts") {
    LatticePolytope diag = make_polytope({{1, 1}, {3, 3}});
    CHECK(diag.affine_dim == 1);
    CHECK_FALSE(diag.full_dimensional());
    CHECK(diag.vertices == std::vector<Point>{{1, 1}, {3, 3}});
    CHECK(ehrhart(diag, 1) == 3);
    CHECK(ehrhart(diag, 2) == 5);
    CHECK(ehrhart_interior(diag, 1) == 1);
    CHECK(is_normal(diag));
    CHECK_THROWS_AS(gamma(diag), HypothesisError);

    LatticePolytope tri3d = make_polytope({{0, 0, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(tri3d.affine_dim == 2);
    CHECK(ehrhart(tri3d, 1) == 3);
    CHECK(ehrhart(tri3d, 2) == 6);
    CHECK(ehrhart(tri3d, 3) == 10);
    CHECK(is_normal(tri3d));

    LatticePolytope pt = make_polytope({{2, 4}});
    CHECK(ehrhart(pt, 7) == 1);
    Contraction pc = contract(pt);
    CHECK(pc.factor == 2);
    CHECK(pc.base.vertices == std::vector<Point>{{1, 2}});
    CHECK(contract(make_polytope({{0, 0}})).factor == 1);
}

TEST_CASE("embedding comparison on the scaled triangles") {
    EmbeddingComparison t3 = compare_embeddings(triangle(3));
    CHECK(t3.factor == 3);
    CHECK(t3.gamma_big == 0);
    CHECK(t3.gamma_base == 2);
    CHECK(t3.delta == 0);
    CHECK(t3.nu0_big == 2);
    CHECK(t3.nu0_base == 4);
    CHECK(t3.rows_big == 28);
    CHECK(t3.rows_base == 15);
    CHECK(t3.prefer_contracted);

    EmbeddingComparison t4 = compare_embeddings(triangle(4));
    CHECK(t4.factor == 4);
    CHECK(t4.gamma_big == 0);
    CHECK(t4.gamma_base == 2);
    CHECK(t4.delta == 1);
    CHECK(t4.rows_big == 45);
    CHECK(t4.rows_base == 28);
    CHECK(t4.prefer_contracted);

    // Doubled unit triangle: the two embeddings tie (6 rows each), so the
    // strict comparison prefers neither.
    EmbeddingComparison t2 = compare_embeddings(triangle(2));
    CHECK(t2.factor == 2);
    CHECK(t2.gamma_big == 1);
    CHECK(t2.gamma_base == 2);
    CHECK(t2.delta == 1);
    CHECK(t2.rows_big == 6);
    CHECK(t2.rows_base == 6);
    CHECK_FALSE(t2.prefer_contracted);

    // Trivial contraction: comparison at equal bounds, never preferred.
    EmbeddingComparison tz = compare_embeddings(trapezoid());
    CHECK(tz.factor == 1);
    CHECK(tz.delta == 0);
    CHECK_FALSE(tz.prefer_contracted);
}

TEST_CASE("contraction laws hold on random polytopes") {
    Rng rng(2024);
    int tested = 0;
    while (tested < 12) {
        int dim = static_cast<int>(rng.int_in(1, 3));
        int factor = static_cast<int>(rng.int_in(2, 4));
        LatticePolytope p = random_scaled_polytope(rng, dim, factor);
        Contraction c = contract(p);
        if (c.factor < 2) continue;
        ++tested;
        REQUIRE(is_normal(p));
        EmbeddingComparison cmp = compare_embeddings(p);
        CHECK(cmp.gamma_base >= cmp.gamma_big);
        CHECK(cmp.factor * (cmp.gamma_big + 1) >= cmp.gamma_base + 1);
        CHECK(cmp.delta >= 0);
        CHECK(cmp.prefer_contracted == (cmp.rows_big > cmp.rows_base));
        for (int mu = 0; mu <= 6; ++mu)
            CHECK(ehrhart(c.base, c.factor * mu) == ehrhart(p, mu));
    }
}

TEST_CASE("lattice point lists are sorted, unique and inside every facet") {
    Rng rng(99);
    for (int it = 0; it < 8; ++it) {
        int dim = static_cast<int>(rng.int_in(1, 3));
        std::vector<Point> pts;
        for (int i = 0; i < dim + 3; ++i) {
            Point p(dim);
            for (int& c : p) c = static_cast<int>(rng.int_in(-3, 4));
            pts.push_back(std::move(p));
        }
        LatticePolytope poly = make_polytope(pts);
        for (int k = 0; k <= 3; ++k) {
            std::vector<Point> lp = lattice_points(poly, k);
            CHECK(std::is_sorted(lp.begin(), lp.end(), point_less));
            CHECK(std::adjacent_find(lp.begin(), lp.end()) == lp.end());
            for (const Point& x : lp) CHECK(contains_dilated(poly, k, x));
            CHECK(static_cast<long>(lp.size()) == ehrhart(poly, k));
            CHECK(ehrhart_interior(poly, k) <= ehrhart(poly, k));
        }
        CHECK(ehrhart(poly, 2) >= ehrhart(poly, 1));
        // Every input point of the hull is a lattice point of the polytope.
        std::vector<Point> lp1 = lattice_points(poly, 1);
        for (const Point& x : pts)
            CHECK(std::find(lp1.begin(), lp1.end(), x) != lp1.end());
    }
}

TEST_CASE("dilation zero is the origin") {
    CHECK(lattice_points(trapezoid(), 0) == std::vector<Point>{{0, 0}});
    CHECK(ehrhart(box112(), 0) == 1);
}
