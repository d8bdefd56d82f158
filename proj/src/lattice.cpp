#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/qlinalg.hpp"

namespace toric {
namespace {

long dot(const std::vector<long>& a, const Point& x) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

std::vector<long> primitive(std::vector<long> v) {
    long g = 0;
    for (long c : v) g = std::gcd(g, c);
    if (g > 1)
        for (long& c : v) c /= g;
    return v;
}

// Z-basis of { v : A v = 0 } via unimodular column elimination; the basis
// spans the saturation, so integer points of the kernel have integer
// coordinates in it.
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a,
                                             std::size_t n) {
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (auto& row : a) row[dst] -= f * row[src];
        for (std::size_t i = 0; i < n; ++i) u[i][dst] -= f * u[i][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
        for (std::size_t i = 0; i < n; ++i) std::swap(u[i][x], u[i][y]);
    };
    std::size_t r = 0;
    for (auto& row : a) {
        if (r == n) break;
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = r; j < n; ++j)
                if (row[j] != 0 &&
                    (best == n || cmp(abs(row[j]), abs(row[best])) < 0))
                    best = j;
            if (best == n) break;
            bool others = false;
            for (std::size_t j = r; j < n; ++j) {
                if (j == best || row[j] == 0) continue;
                Int f = row[j] / row[best];
                col_sub(j, best, f);
                if (row[j] != 0) others = true;
            }
            if (!others) {
                col_swap(r, best);
                ++r;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < n; ++j) {
        std::vector<Int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M y = rhs (consistent by construction); free variables get 0.
std::vector<Rat> solve_rational(const std::vector<std::vector<Rat>>& m,
                                const std::vector<Rat>& rhs) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    QMat aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m[i][j];
        aug.at(i, cols) = rhs[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    std::vector<Rat> y(cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == cols) throw Error("inconsistent linear system");
        y[pivots[k]] = aug.at(k, cols);
    }
    return y;
}

// Full-dimensional hull in dimension m <= 3: supporting half-spaces from
// m-subsets of the points, vertices by the tight-normal rank test.
void hull_full_dim(const std::vector<Point>& pts, int m,
                   std::vector<HalfSpace>& facets, std::vector<Point>& vertices) {
    std::set<std::pair<std::vector<long>, long>> seen;
    auto consider = [&](std::vector<long> n, const Point& through) {
        if (std::all_of(n.begin(), n.end(), [](long c) { return c == 0; })) return;
        n = primitive(std::move(n));
        long b = dot(n, through);
        bool all_le = true, all_ge = true;
        for (const Point& p : pts) {
            long v = dot(n, p);
            all_le = all_le && v <= b;
            all_ge = all_ge && v >= b;
        }
        if (all_le) seen.insert({n, b});
        if (all_ge) {
            for (long& c : n) c = -c;
            seen.insert({std::move(n), -b});
        }
    };
    std::size_t np = pts.size();
    if (m == 1) {
        consider({1}, *std::max_element(pts.begin(), pts.end()));
        consider({-1}, *std::min_element(pts.begin(), pts.end()));
    } else if (m == 2) {
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = i + 1; j < np; ++j) {
                long dx = pts[j][0] - pts[i][0], dy = pts[j][1] - pts[i][1];
                consider({-dy, dx}, pts[i]);
            }
    } else {
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = i + 1; j < np; ++j)
                for (std::size_t k = j + 1; k < np; ++k) {
                    long ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1],
                         az = pts[j][2] - pts[i][2];
                    long bx = pts[k][0] - pts[i][0], by = pts[k][1] - pts[i][1],
                         bz = pts[k][2] - pts[i][2];
                    consider({ay * bz - az * by, az * bx - ax * bz,
                              ax * by - ay * bx},
                             pts[i]);
                }
    }
    for (const auto& [n, b] : seen) facets.push_back({n, b});
    for (const Point& p : pts) {
        std::vector<const HalfSpace*> tight;
        for (const HalfSpace& f : facets)
            if (dot(f.normal, p) == f.offset) tight.push_back(&f);
        if (tight.size() < static_cast<std::size_t>(m)) continue;
        QMat nm(tight.size(), m);
        for (std::size_t i = 0; i < tight.size(); ++i)
            for (int j = 0; j < m; ++j) nm.at(i, j) = Rat(tight[i]->normal[j]);
        if (rank_exact(std::move(nm)) == static_cast<std::size_t>(m))
            vertices.push_back(p);
    }
}

std::vector<Point> enumerate_points(const LatticePolytope& p, int k, bool strict);

}  // namespace

bool point_less(const Point& a, const Point& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
}

std::string point_str(const Point& p) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    out << ")";
    return out.str();
}

LatticePolytope make_polytope(std::vector<Point> points) {
    if (points.empty()) throw Error("polytope needs at least one point");
    int dim = static_cast<int>(points[0].size());
    if (dim < 1 || dim > 3) throw Error("ambient dimension must be 1, 2 or 3");
    for (const Point& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw Error("points of mixed dimension");
    std::sort(points.begin(), points.end(), point_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope poly;
    poly.dim = dim;
    const Point& p0 = points[0];

    QMat diff(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (int j = 0; j < dim; ++j)
            diff.at(i - 1, j) = Rat(static_cast<long>(points[i][j] - p0[j]));
    poly.affine_dim = static_cast<int>(rank_exact(diff));

    // Affine-hull equations: primitive integer kernel vectors of the
    // difference matrix.
    for (const auto& kv : kernel_basis(diff)) {
        Int l = 1;
        for (const Rat& c : kv) {
            Int d(c.get_den());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<long> n(dim);
        for (int j = 0; j < dim; ++j) {
            Rat scaled = kv[j] * Rat(l);
            n[j] = scaled.get_num().get_si();
        }
        n = primitive(std::move(n));
        for (int j = 0; j < dim; ++j)
            if (n[j] != 0) {
                if (n[j] < 0)
                    for (long& c : n) c = -c;
                break;
            }
        long off = dot(n, p0);
        poly.equations.push_back({std::move(n), off});
    }

    int m = poly.affine_dim;
    if (m == 0) {
        poly.vertices = {p0};
    } else if (m == dim) {
        hull_full_dim(points, m, poly.facets, poly.vertices);
    } else {
        // Project onto an integer basis of the affine hull's direction
        // lattice, hull there, and lift the half-spaces back.
        std::vector<std::vector<Int>> eq(poly.equations.size(),
                                         std::vector<Int>(dim));
        for (std::size_t i = 0; i < poly.equations.size(); ++i)
            for (int j = 0; j < dim; ++j) eq[i][j] = poly.equations[i].normal[j];
        auto basis = integer_kernel(std::move(eq), dim);
        if (static_cast<int>(basis.size()) != m)
            throw Error("affine hull basis has unexpected rank");

        std::vector<std::vector<Rat>> bmat(dim, std::vector<Rat>(m));
        std::vector<std::vector<Rat>> btr(m, std::vector<Rat>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < m; ++j) {
                bmat[i][j] = Rat(basis[j][i]);
                btr[j][i] = bmat[i][j];
            }

        std::vector<Point> proj;
        for (const Point& p : points) {
            std::vector<Rat> rhs(dim);
            for (int j = 0; j < dim; ++j)
                rhs[j] = Rat(static_cast<long>(p[j] - p0[j]));
            std::vector<Rat> u = solve_rational(bmat, rhs);
            Point q(m);
            for (int j = 0; j < m; ++j) {
                if (u[j].get_den() != 1)
                    throw Error("non-integral projected coordinate");
                q[j] = static_cast<int>(u[j].get_num().get_si());
            }
            proj.push_back(std::move(q));
        }

        std::vector<HalfSpace> pfacets;
        std::vector<Point> pverts;
        hull_full_dim(proj, m, pfacets, pverts);

        for (const HalfSpace& f : pfacets) {
            std::vector<Rat> rhs(m);
            for (int j = 0; j < m; ++j) rhs[j] = Rat(f.normal[j]);
            std::vector<Rat> n = solve_rational(btr, rhs);
            Int l = 1;
            for (const Rat& c : n) {
                Int d(c.get_den());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            }
            std::vector<long> nn(dim);
            for (int j = 0; j < dim; ++j) {
                Rat scaled = n[j] * Rat(l);
                nn[j] = scaled.get_num().get_si();
            }
            nn = primitive(std::move(nn));
            long best = 0;
            bool have = false;
            for (const Point& p : points) {
                long v = dot(nn, p);
                if (!have || v > best) best = v;
                have = true;
            }
            poly.facets.push_back({std::move(nn), best});
        }
        for (const Point& u : pverts) {
            Point p(dim);
            for (int i = 0; i < dim; ++i) {
                Int c = p0[i];
                for (int j = 0; j < m; ++j) c += basis[j][i] * u[j];
                p[i] = static_cast<int>(c.get_si());
            }
            poly.vertices.push_back(std::move(p));
        }
    }
    std::sort(poly.vertices.begin(), poly.vertices.end(), point_less);
    return poly;
}

namespace {

std::vector<Point> enumerate_points(const LatticePolytope& p, int k, bool strict) {
    if (k < 0) throw Error("negative dilation");
    std::vector<Point> out;
    if (k == 0) {
        if (!strict || p.facets.empty()) out.push_back(Point(p.dim, 0));
        return out;
    }
    std::vector<long> lo(p.dim), hi(p.dim);
    for (int j = 0; j < p.dim; ++j) {
        lo[j] = hi[j] = static_cast<long>(p.vertices[0][j]) * k;
        for (const Point& v : p.vertices) {
            lo[j] = std::min(lo[j], static_cast<long>(v[j]) * k);
            hi[j] = std::max(hi[j], static_cast<long>(v[j]) * k);
        }
    }
    long cells = 1;
    for (int j = 0; j < p.dim; ++j) {
        cells *= hi[j] - lo[j] + 1;
        if (cells > 8'000'000) throw Error("dilation too large to enumerate");
    }
    Point x(p.dim);
    for (int j = 0; j < p.dim; ++j) x[j] = static_cast<int>(lo[j]);
    for (;;) {
        bool ok = true;
        for (const HalfSpace& e : p.equations)
            if (dot(e.normal, x) != e.offset * k) {
                ok = false;
                break;
            }
        if (ok)
            for (const HalfSpace& f : p.facets) {
                long v = dot(f.normal, x);
                long b = f.offset * k;
                if (strict ? v >= b : v > b) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(x);
        int j = p.dim - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = static_cast<int>(lo[j]);
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

}  // namespace

bool contains_dilated(const LatticePolytope& p, int k, const Point& x) {
    for (const HalfSpace& e : p.equations)
        if (dot(e.normal, x) != e.offset * k) return false;
    for (const HalfSpace& f : p.facets)
        if (dot(f.normal, x) > f.offset * k) return false;
    return true;
}

std::vector<Point> lattice_points(const LatticePolytope& p, int k) {
    return enumerate_points(p, k, false);
}

long ehrhart(const LatticePolytope& p, int k) {
    return static_cast<long>(enumerate_points(p, k, false).size());
}

long ehrhart_interior(const LatticePolytope& p, int k) {
    return static_cast<long>(enumerate_points(p, k, true).size());
}

int gamma(const LatticePolytope& p) {
    if (!p.full_dimensional())
        throw HypothesisError("gamma requires a full-dimensional polytope");
    for (int i = 1; i <= p.dim + 1; ++i)
        if (ehrhart_interior(p, i) > 0) return i - 1;
    throw Error("no interior points up to dilation dim+1");
}

bool is_normal(const LatticePolytope& p, int up_to) {
    if (up_to <= 0) up_to = std::max(2, p.affine_dim + 1);
    if (up_to < 2) throw UsageError("normality bound must be at least 2");
    std::vector<Point> base = lattice_points(p, 1);
    std::vector<Point> cur = base;
    for (int m = 2; m <= up_to; ++m) {
        std::set<Point> sum;
        for (const Point& a : cur)
            for (const Point& b : base) {
                Point c(p.dim);
                for (int j = 0; j < p.dim; ++j) c[j] = a[j] + b[j];
                sum.insert(std::move(c));
            }
        std::vector<Point> pts = lattice_points(p, m);
        if (sum.size() != pts.size()) return false;
        cur.assign(sum.begin(), sum.end());
    }
    return true;
}

Contraction contract(const LatticePolytope& p) {
    long g = 0;
    for (const Point& v : p.vertices)
        for (int c : v) g = std::gcd(g, static_cast<long>(c));
    if (g <= 1) return {p, 1};
    std::vector<Point> scaled;
    for (const Point& v : p.vertices) {
        Point w(p.dim);
        for (int j = 0; j < p.dim; ++j) w[j] = static_cast<int>(v[j] / g);
        scaled.push_back(std::move(w));
    }
    return {make_polytope(std::move(scaled)), static_cast<int>(g)};
}

EmbeddingComparison compare_embeddings(const LatticePolytope& p) {
    if (!p.full_dimensional())
        throw HypothesisError("embedding comparison requires a full-dimensional polytope");
    Contraction c = contract(p);
    EmbeddingComparison r;
    r.factor = c.factor;
    r.gamma_big = gamma(p);
    r.gamma_base = gamma(c.base);
    r.delta = r.factor * (r.gamma_big + 1) - (r.gamma_base + 1);
    int n_minus_1 = p.dim;  // number of map coordinates minus one
    r.nu0_big = std::max((n_minus_1 - 1) * 1, n_minus_1 * 1 - r.gamma_big);
    r.nu0_base =
        std::max((n_minus_1 - 1) * r.factor, n_minus_1 * r.factor - r.gamma_base);
    r.rows_big = ehrhart(p, r.nu0_big);
    r.rows_base = ehrhart(c.base, r.nu0_base);
    r.prefer_contracted = r.rows_big > r.rows_base;
    return r;
}

}  // namespace toric
