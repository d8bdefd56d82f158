/// @file multipoly.hpp
/// @brief Sparse multivariate polynomials over the rationals.
///
/// Terms live in a map ordered by descending graded lexicographic order, so
/// iteration starts at the leading term and printing is canonical.  No zero
/// coefficients are ever stored.  Every polynomial carries a variable roster;
/// binary operations require equal rosters.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

using Roster = std::vector<std::string>;
using RosterPtr = std::shared_ptr<const Roster>;

inline RosterPtr make_roster(std::vector<std::string> names) {
    return std::make_shared<const Roster>(std::move(names));
}

/// Exponent vector; length equals the roster size of the owning polynomial.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    explicit Monomial(std::size_t n) : e(n, 0) {}

    int total() const {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Quotient of exact monomial division; caller checks divides() first.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
};

/// Graded lex: total degree first, then exponents left to right.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

/// Raised by poly_divexact when the division is not exact; doubles as the
/// negative answer of a divisibility test.
struct InexactDivision : Error {
    InexactDivision() : Error("polynomial division is not exact") {}
};

class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(RosterPtr roster) : roster_(std::move(roster)) {}

    static MultiPoly zero(RosterPtr roster) { return MultiPoly(std::move(roster)); }
    static MultiPoly constant(RosterPtr roster, const Rat& c);
    static MultiPoly monomial(RosterPtr roster, Monomial m, const Rat& c);
    static MultiPoly variable(RosterPtr roster, int var);

    const RosterPtr& roster() const { return roster_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return roster_ ? roster_->size() : 0; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(int var) const;

    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;

    /// Coefficient of a monomial, zero if absent.
    Rat coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rat& c);

    bool operator==(const MultiPoly& q) const;
    bool operator!=(const MultiPoly& q) const { return !(*this == q); }

    std::string str() const;

  private:
    RosterPtr roster_;
    TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const MultiPoly& a);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const MultiPoly& a, const Rat& c);
MultiPoly poly_pow(const MultiPoly& a, int e);

/// Quotient a/b when it is exact; throws InexactDivision otherwise.
MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b);
std::optional<MultiPoly> poly_try_divexact(const MultiPoly& a, const MultiPoly& b);

/// Primitive gcd: integer coprime coefficients, positive leading coefficient.
/// gcd(p, 0) is the normalization of p; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

Rat poly_eval(const MultiPoly& a, const std::vector<Rat>& x);

/// Divides by the rational content and flips sign so the leading coefficient
/// is positive.  Identity on zero.
MultiPoly poly_normalize(const MultiPoly& a);

/// Equality up to a nonzero rational scalar.
bool poly_proportional(const MultiPoly& a, const MultiPoly& b);

/// Homogenizes by raising hvar to pad every term to the total degree of a.
/// hvar must not occur in a.
MultiPoly poly_homogenize(const MultiPoly& a, int hvar);

}  // namespace toric
