#include "toric/qlinalg.hpp"

#include <algorithm>
#include <utility>

namespace toric {
namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u64 rat_mod(const Rat& q, u64 p) {
    u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) throw PrimeClash("denominator divisible by modulus");
    u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

std::vector<std::vector<u64>> reduce_matrix(const QMat& m, u64 p) {
    std::vector<std::vector<u64>> r(m.rows, std::vector<u64>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i][j] = rat_mod(m.at(i, j), p);
    return r;
}

// Row echelon elimination over GF(p); returns the pivot columns.
std::vector<std::size_t> eliminate_mod(std::vector<std::vector<u64>>& a, u64 p) {
    std::vector<std::size_t> pivots;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[row], a[pr]);
        u64 inv = invmod(a[row][col], p);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            u64 f = mulmod(a[i][col], inv, p);
            a[i][col] = 0;
            for (std::size_t j = col + 1; j < cols; ++j)
                if (a[row][j] != 0)
                    a[i][j] = (a[i][j] + p - mulmod(f, a[row][j], p)) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t best = m.rows;
        Int best_h;
        for (std::size_t i = row; i < m.rows; ++i) {
            const Rat& v = m.at(i, col);
            if (v == 0) continue;
            Int h = rat_height(v);
            if (best == m.rows || h > best_h) {
                best = i;
                best_h = h;
            }
        }
        if (best == m.rows) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(row, j), m.at(best, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank_exact(QMat m) { return rref(m).size(); }

std::vector<std::vector<Rat>> kernel_basis(QMat m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat det_exact(const QMat& m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int den_all = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            Int d(m.at(i, j).get_den());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            a[i][j] = scaled.get_num();
        }
        den_all *= l;
    }
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = k;
        while (pr < n && a[pr][k] == 0) ++pr;
        if (pr == n) return Rat(0);
        if (pr != k) {
            std::swap(a[pr], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det = make_rat(a[n - 1][n - 1], den_all);
    return sign > 0 ? det : -det;
}

std::uint64_t modular_prime(std::size_t index) {
    static const u64 primes[4] = {2308984601867283787ULL, 2308561291042153003ULL,
                                  2307257222776067083ULL, 2307575060021262869ULL};
    if (index >= 4) throw Error("modular prime index out of range");
    return primes[index];
}

std::size_t rank_mod_prime(const QMat& m, std::uint64_t p) {
    auto a = reduce_matrix(m, p);
    return eliminate_mod(a, p).size();
}

std::uint64_t rat_mod_prime(const Rat& q, std::uint64_t p) { return rat_mod(q, p); }

std::uint64_t det_mod_prime(std::vector<std::uint64_t> a, std::size_t n,
                            std::uint64_t p) {
    if (a.size() != n * n) throw Error("determinant of a non-square matrix");
    u64 det = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = k;
        while (pr < n && a[pr * n + k] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pr * n + j]);
            negate = !negate;
        }
        det = mulmod(det, a[k * n + k], p);
        u64 inv = invmod(a[k * n + k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k] == 0) continue;
            u64 f = mulmod(a[i * n + k], inv, p);
            for (std::size_t j = k; j < n; ++j)
                if (a[k * n + j] != 0)
                    a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[k * n + j], p)) % p;
        }
    }
    return negate ? (p - det) % p : det;
}

std::vector<std::size_t> pivot_columns_mod_prime(const QMat& m, std::uint64_t p) {
    auto a = reduce_matrix(m, p);
    return eliminate_mod(a, p);
}

std::size_t rank_modular(const QMat& m) {
    std::size_t full = std::min(m.rows, m.cols);
    std::size_t best = 0;
    std::size_t good = 0;
    for (std::size_t i = 0; i < 4 && good < 2; ++i) {
        std::size_t r;
        try {
            r = rank_mod_prime(m, modular_prime(i));
        } catch (const PrimeClash&) {
            continue;
        }
        ++good;
        best = std::max(best, r);
        if (best == full) return best;
    }
    if (good == 0) throw Error("all moduli clashed with matrix denominators");
    return best;
}

std::size_t rank_hybrid(const QMat& m) {
    if (m.rows <= 20 && m.cols <= 40) return rank_exact(m);
    return rank_modular(m);
}

MultiPoly det_poly(std::vector<std::vector<MultiPoly>> m, const RosterPtr& roster) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return MultiPoly::constant(roster, Rat(1));
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(roster, Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = k;
        while (pr < n && m[pr][k].is_zero()) ++pr;
        if (pr == n) return MultiPoly::zero(roster);
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly t =
                    poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j]));
                m[i][j] = t.is_zero() ? t : poly_divexact(t, prev);
            }
            m[i][k] = MultiPoly::zero(roster);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return sign > 0 ? det : poly_neg(det);
}

}  // namespace toric
