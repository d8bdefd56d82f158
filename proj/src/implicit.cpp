#include "toric/implicit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "toric/qlinalg.hpp"
#include "toric/rng.hpp"

namespace toric {
namespace {

constexpr std::uint64_t kPlanSalt = 0x706c616e2d646574ULL;
constexpr std::uint64_t kVerifySalt = 0x726174696f2d3937ULL;
constexpr std::uint64_t kProbeSalt = 0x70726f62652d6c6eULL;

std::vector<std::size_t> inverse_index(std::size_t size,
                                       const std::vector<std::size_t>& sel) {
    std::vector<std::size_t> inv(size, size);
    for (std::size_t i = 0; i < sel.size(); ++i) inv[sel[i]] = i;
    return inv;
}

/// Rows restricted to `rows`, all columns, evaluated at x.
QMat evaluate_rows(const LinearFormMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<Rat>& x) {
    std::vector<std::size_t> inv = inverse_index(m.rows, rows);
    QMat sub(rows.size(), m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, form] : m.columns[c])
            if (inv[r] != m.rows) sub.at(inv[r], c) = form.eval(x);
    return sub;
}

/// Square block on (rows, cols) evaluated at x.
QMat evaluate_block(const LinearFormMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols, const std::vector<Rat>& x) {
    std::vector<std::size_t> inv = inverse_index(m.rows, rows);
    QMat sub(rows.size(), cols.size());
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
        for (const auto& [r, form] : m.columns[cols[cj]])
            if (inv[r] != m.rows) sub.at(inv[r], cj) = form.eval(x);
    return sub;
}

std::vector<std::size_t> certified_pivots(const QMat& sub) {
    for (std::size_t pi = 0; pi < 4; ++pi) {
        try {
            return pivot_columns_mod_prime(sub, modular_prime(pi));
        } catch (const PrimeClash&) {
            continue;
        }
    }
    throw Error("all moduli clashed with the planning point's denominators");
}

}  // namespace

DetComplexPlan plan_det_complex(const KoszulStrand& strand, std::uint64_t seed) {
    if (strand.maps.empty()) throw UsageError("strand has no differentials");
    std::size_t nvars = strand.maps[0].x_roster->size();
    std::string last_fail = "no invertible block found";
    for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
        Rng rng((seed + attempt) ^ kPlanSalt);
        DetComplexPlan plan;
        plan.seed = seed + attempt;
        plan.point = rng.point(nvars);
        std::vector<std::size_t> need(static_cast<std::size_t>(strand.terms[0]));
        std::iota(need.begin(), need.end(), 0);
        bool ok = true;
        std::size_t p = 0;
        while (!need.empty()) {
            if (p >= strand.maps.size()) {
                ok = false;
                last_fail = "strand terms do not telescope to zero";
                break;
            }
            const LinearFormMatrix& map = strand.maps[p];
            std::vector<std::size_t> pivots =
                certified_pivots(evaluate_rows(map, need, plan.point));
            if (pivots.size() < need.size()) {
                ok = false;
                last_fail = "differential " + std::to_string(p) +
                            " is rank-deficient at the planning point";
                break;
            }
            plan.block_rows.push_back(need);
            plan.block_cols.push_back(pivots);
            plan.block_sizes.push_back(pivots.size());
            std::vector<char> used(map.cols, 0);
            for (std::size_t c : pivots) used[c] = 1;
            std::vector<std::size_t> next;
            for (std::size_t c = 0; c < map.cols; ++c)
                if (!used[c]) next.push_back(c);
            need = std::move(next);
            ++p;
        }
        if (!ok) continue;
        for (std::size_t q = p + 1; q < strand.terms.size(); ++q)
            if (strand.terms[q] != 0)
                throw Error("strand terms do not telescope: K_" + std::to_string(q) +
                            " is nonzero but unreachable from the staircase");
        return plan;
    }
    throw Error("no determinant-of-strand plan after 10 seeds: " + last_fail);
}

Rat det_complex_at_point(const KoszulStrand& strand, const DetComplexPlan& plan,
                         const std::vector<Rat>& x) {
    std::vector<Rat> dets;
    for (std::size_t p = 0; p < plan.block_sizes.size(); ++p)
        dets.push_back(det_exact(
            evaluate_block(strand.maps[p], plan.block_rows[p], plan.block_cols[p], x)));
    for (std::size_t p = 1; p < dets.size(); p += 2)
        if (dets[p] == 0)
            throw SingularBlock("denominator block " + std::to_string(p) +
                                " is singular at the evaluation point");
    Rat d(1);
    for (std::size_t p = 0; p < dets.size(); ++p) {
        if (p % 2 == 0)
            d *= dets[p];
        else
            d /= dets[p];
    }
    return d;
}

namespace {

bool next_combination(std::vector<std::size_t>& sel, std::size_t total) {
    std::size_t r = sel.size();
    for (std::size_t i = r; i-- > 0;) {
        if (sel[i] < total - (r - i)) {
            ++sel[i];
            for (std::size_t j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<MultiPoly>> dense_poly_matrix(const LinearFormMatrix& m) {
    std::vector<std::vector<MultiPoly>> d(
        m.rows, std::vector<MultiPoly>(m.cols, MultiPoly::zero(m.x_roster)));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, form] : m.columns[c]) d[r][c] = form.to_poly(m.x_roster);
    return d;
}

}  // namespace

MultiPoly gcd_maximal_minors(const LinearFormMatrix& m, int limit) {
    if (m.rows == 0) throw UsageError("matrix has no rows");
    if (m.rows > m.cols)
        throw UsageError("matrix has more rows than columns; maximal minors need rows <= cols");
    if (m.rows > static_cast<std::size_t>(limit))
        throw UsageError("symbolic minor sweep limited to " + std::to_string(limit) +
                         " rows (matrix has " + std::to_string(m.rows) +
                         "); use the evaluated route");
    if (generic_rank(m, 0) != m.rows)
        throw Error(
            "matrix is not generically of full row rank; the acyclicity / base-locus "
            "hypothesis behind the representation matrix is unverified");
    std::vector<std::vector<MultiPoly>> dense = dense_poly_matrix(m);
    std::vector<std::size_t> sel(m.rows);
    std::iota(sel.begin(), sel.end(), 0);
    MultiPoly g = MultiPoly::zero(m.x_roster);
    int stable = 0;
    while (true) {
        std::vector<std::vector<MultiPoly>> minor_mat(
            m.rows, std::vector<MultiPoly>(m.rows, MultiPoly::zero(m.x_roster)));
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.rows; ++j) minor_mat[i][j] = dense[i][sel[j]];
        MultiPoly minor = det_poly(std::move(minor_mat), m.x_roster);
        if (!minor.is_zero()) {
            MultiPoly g2 = g.is_zero() ? poly_normalize(minor)
                                       : poly_normalize(poly_gcd(g, minor));
            if (!g.is_zero() && g2 == g)
                ++stable;
            else
                stable = 0;
            g = std::move(g2);
            if (g.is_constant() || stable >= 5) break;
        }
        if (!next_combination(sel, m.cols)) break;
    }
    if (g.is_zero()) throw Error("every maximal minor vanishes identically");
    return g;
}

MultiPoly det_symbolic(const LinearFormMatrix& m) {
    if (m.rows != m.cols) throw UsageError("symbolic determinant needs a square matrix");
    return det_poly(dense_poly_matrix(m), m.x_roster);
}

namespace {

using DetFn = std::function<std::optional<Rat>(const std::vector<Rat>&)>;

ImplicitReport ratio_protocol(const DetFn& det_at, std::size_t nvars,
                              const MultiPoly& H, int k, const MultiPoly& G,
                              std::uint64_t seed, int trials) {
    if (trials < 3) throw UsageError("ratio constancy needs at least 3 trial points");
    if (k < 1) throw UsageError("exponent k must be positive");
    ImplicitReport rep;
    rep.mode = "evaluated";
    rep.k = k;
    rep.seed = seed;
    Rng rng(seed ^ kVerifySalt);
    int attempts = 0;
    const int max_attempts = trials * 20;
    while (static_cast<int>(rep.evidence.size()) < trials && attempts < max_attempts) {
        ++attempts;
        std::vector<Rat> x = rng.point(nvars);
        Rat cand = rat_pow(poly_eval(H, x), k) * poly_eval(G, x);
        if (cand == 0) continue;  // cannot witness the ratio here
        std::optional<Rat> d = det_at(x);
        if (!d) continue;  // singular denominator block; resample
        Rat ratio = *d / cand;
        rep.evidence.push_back({std::move(x), *d, std::move(cand), std::move(ratio)});
    }
    if (static_cast<int>(rep.evidence.size()) < trials)
        throw Error(
            "candidate H^k*G vanishes (or the strand degenerates) at almost every "
            "sampled point; candidates look degenerate");
    bool equal = true;
    for (const EvidenceRow& row : rep.evidence)
        if (row.ratio != rep.evidence.front().ratio) equal = false;
    if (!equal)
        rep.detail = "ratios disagree across evaluation points";
    else if (rep.evidence.front().ratio == 0)
        rep.detail = "determinant vanishes at every evidence point";
    else
        rep.pass = true;
    return rep;
}

}  // namespace

ImplicitReport verify_factorization(const KoszulStrand& strand, const MultiPoly& H,
                                    int k, const MultiPoly& G, std::uint64_t seed,
                                    int trials) {
    DetComplexPlan plan = plan_det_complex(strand, seed);
    DetFn det_at = [&](const std::vector<Rat>& x) -> std::optional<Rat> {
        try {
            return det_complex_at_point(strand, plan, x);
        } catch (const SingularBlock&) {
            return std::nullopt;
        }
    };
    return ratio_protocol(det_at, strand.maps[0].x_roster->size(), H, k, G, seed,
                          trials);
}

ImplicitReport verify_factorization(const LinearFormMatrix& m, const MultiPoly& H,
                                    int k, const MultiPoly& G, std::uint64_t seed,
                                    int trials) {
    if (m.rows != m.cols)
        throw UsageError("evaluated determinant verification needs a square matrix");
    DetFn det_at = [&](const std::vector<Rat>& x) -> std::optional<Rat> {
        return det_exact(m.evaluate(x));
    };
    return ratio_protocol(det_at, m.x_roster->size(), H, k, G, seed, trials);
}

ImplicitReport verify_factorization_symbolic(const LinearFormMatrix& m,
                                             const MultiPoly& H, int k,
                                             const MultiPoly& G) {
    ImplicitReport rep;
    rep.mode = "symbolic";
    rep.k = k;
    if (k < 1) throw UsageError("exponent k must be positive");
    MultiPoly cand = poly_mul(poly_pow(H, k), G);
    if (cand.is_zero()) throw UsageError("candidate H^k*G is the zero polynomial");
    MultiPoly d = det_symbolic(m);
    std::optional<MultiPoly> q = poly_try_divexact(d, cand);
    if (q && q->is_constant() && !q->is_zero()) {
        rep.pass = true;
    } else if (d.is_zero()) {
        rep.detail = "symbolic determinant is identically zero";
    } else {
        rep.detail = "H^k*G does not divide the determinant with a constant quotient";
    }
    return rep;
}

bool membership(const LinearFormMatrix& m, const std::vector<Rat>& x,
                std::uint64_t seed) {
    if (x.size() != m.x_roster->size())
        throw UsageError("point has " + std::to_string(x.size()) +
                         " coordinates; the matrix lives in " +
                         std::to_string(m.x_roster->size()) + " target variables");
    if (generic_rank(m, seed) != m.rows)
        throw Error(
            "matrix is not generically of full row rank; the acyclicity / base-locus "
            "hypothesis behind the representation matrix is unverified");
    return rank_hybrid(m.evaluate(x)) < m.rows;
}

int degree_of_map(const KoszulStrand& strand, const MultiPoly& H, const MultiPoly& G,
                  std::uint64_t seed, int trials) {
    if (trials < 3) throw UsageError("ratio constancy needs at least 3 trial points");
    DetComplexPlan plan = plan_det_complex(strand, seed);
    std::size_t nvars = strand.maps[0].x_roster->size();
    Rng rng(seed ^ kVerifySalt);
    struct Sample {
        Rat d, h, g;
    };
    std::vector<Sample> samples;
    int attempts = 0;
    const int max_attempts = trials * 20;
    while (static_cast<int>(samples.size()) < trials && attempts < max_attempts) {
        ++attempts;
        std::vector<Rat> x = rng.point(nvars);
        Rat h = poly_eval(H, x);
        Rat g = poly_eval(G, x);
        if (h == 0 || g == 0) continue;
        try {
            samples.push_back({det_complex_at_point(strand, plan, x), h, g});
        } catch (const SingularBlock&) {
            continue;
        }
    }
    if (static_cast<int>(samples.size()) < trials)
        throw Error("H or G vanishes (or the strand degenerates) at almost every "
                    "sampled point");
    for (int k = 1; k <= 8; ++k) {
        Rat first = samples[0].d / (rat_pow(samples[0].h, k) * samples[0].g);
        if (first == 0) continue;
        bool all_equal = true;
        for (const Sample& s : samples)
            if (s.d / (rat_pow(s.h, k) * s.g) != first) all_equal = false;
        if (all_equal) return k;
    }
    throw Error(
        "no exponent k <= 8 makes D / (H^k G) a nonzero constant; the "
        "extraneous-factor hypothesis is unverified");
}

namespace {

/// Degree in t of det(block(a + t b)) mod p, read from finite differences of
/// size+1 samples; -1 when the determinant vanishes at every sample.
int block_degree_mod(const LinearFormMatrix& map, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols, const std::vector<Rat>& a,
                     const std::vector<Rat>& b, std::uint64_t p) {
    std::size_t n = rows.size();
    std::vector<std::size_t> inv = inverse_index(map.rows, rows);
    std::vector<std::uint64_t> uflat(n * n, 0), vflat(n * n, 0);
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
        for (const auto& [r, form] : map.columns[cols[cj]]) {
            if (inv[r] == map.rows) continue;
            std::size_t idx = inv[r] * n + cj;
            uflat[idx] = rat_mod_prime(form.eval(a), p);
            vflat[idx] = rat_mod_prime(form.eval(b), p);
        }
    std::vector<std::uint64_t> vals(n + 1);
    std::vector<std::uint64_t> flat(n * n);
    for (std::size_t t = 0; t <= n; ++t) {
        for (std::size_t i = 0; i < n * n; ++i)
            flat[i] = (uflat[i] +
                       static_cast<std::uint64_t>(
                           static_cast<unsigned __int128>(vflat[i]) * t % p)) %
                      p;
        vals[t] = det_mod_prime(flat, n, p);
    }
    int deg = -1;
    std::vector<std::uint64_t> cur = std::move(vals);
    for (std::size_t level = 0; level <= n && !cur.empty(); ++level) {
        bool nonzero = false;
        for (std::uint64_t v : cur)
            if (v != 0) nonzero = true;
        if (!nonzero) break;
        deg = static_cast<int>(level);
        std::vector<std::uint64_t> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            next[i] = (cur[i + 1] + p - cur[i]) % p;
        cur = std::move(next);
    }
    return deg;
}

}  // namespace

int degree_probe(const KoszulStrand& strand, const DetComplexPlan& plan,
                 std::uint64_t seed) {
    std::size_t nvars = strand.maps[0].x_roster->size();
    Rng rng(seed ^ kProbeSalt);
    std::vector<int> totals;
    for (int line_try = 0; line_try < 8 && totals.size() < 2; ++line_try) {
        std::vector<Rat> a, b;
        for (std::size_t i = 0; i < nvars; ++i) {
            a.emplace_back(rng.int_in(-40, 40));
            b.emplace_back(rng.nonzero_int_in(-40, 40));
        }
        for (std::size_t pi = 0; pi < 2; ++pi) {
            std::uint64_t p = modular_prime(pi);
            int total = 0;
            bool good = true;
            try {
                for (std::size_t bi = 0; bi < plan.block_sizes.size() && good; ++bi) {
                    int deg = block_degree_mod(strand.maps[bi], plan.block_rows[bi],
                                               plan.block_cols[bi], a, b, p);
                    if (deg < 0)
                        good = false;  // block determinant vanished along this line
                    else
                        total += (bi % 2 == 0) ? deg : -deg;
                }
            } catch (const PrimeClash&) {
                continue;
            }
            if (good) {
                totals.push_back(total);
                break;
            }
        }
    }
    if (totals.empty())
        throw Error("degree probe failed: block determinants vanish along every "
                    "sampled line");
    return *std::max_element(totals.begin(), totals.end());
}

}  // namespace toric
