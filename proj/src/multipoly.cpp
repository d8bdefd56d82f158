#include "toric/multipoly.hpp"

#include <cassert>
#include <sstream>

#include "toric/rng.hpp"

namespace toric {

namespace {

void require_same_roster(const MultiPoly& a, const MultiPoly& b) {
    if (!a.roster() || !b.roster()) throw Error("polynomial without a roster");
    if (a.roster() != b.roster() && *a.roster() != *b.roster())
        throw Error("variable roster mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(RosterPtr roster, const Rat& c) {
    MultiPoly p(std::move(roster));
    if (c != 0) p.add_term(Monomial(p.nvars()), c);
    return p;
}

MultiPoly MultiPoly::monomial(RosterPtr roster, Monomial m, const Rat& c) {
    MultiPoly p(std::move(roster));
    if (m.e.size() != p.nvars()) throw Error("monomial length does not match roster");
    if (c != 0) p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::variable(RosterPtr roster, int var) {
    MultiPoly p(std::move(roster));
    Monomial m(p.nvars());
    m.e.at(var) = 1;
    p.add_term(m, 1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.e.at(var) > d) d = m.e[var];
    return terms_.empty() ? -1 : d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (m.e.size() != nvars()) throw Error("monomial length does not match roster");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::operator==(const MultiPoly& q) const {
    require_same_roster(*this, q);
    return terms_ == q.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.total() > 0;
        if (!has_vars || a != 1) out << rat_str(a);
        bool need_star = !has_vars || a != 1;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << (*roster_)[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
        }
    }
    return out.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    require_same_roster(a, b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

MultiPoly poly_neg(const MultiPoly& a) {
    MultiPoly r(a.roster());
    for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
    return r;
}

MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) { return poly_add(a, poly_neg(b)); }

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    require_same_roster(a, b);
    MultiPoly r(a.roster());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly poly_scale(const MultiPoly& a, const Rat& c) {
    MultiPoly r(a.roster());
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms()) r.add_term(m, k * c);
    return r;
}

MultiPoly poly_pow(const MultiPoly& a, int e) {
    if (e < 0) throw Error("negative polynomial power");
    MultiPoly r = MultiPoly::constant(a.roster(), 1);
    for (int i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
    require_same_roster(a, b);
    if (b.is_zero()) throw Error("division by zero polynomial");
    MultiPoly q(a.roster());
    MultiPoly r = a;
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!b.leading_monomial().divides(lm)) throw InexactDivision();
        Monomial qm = lm / b.leading_monomial();
        Rat qc = r.leading_coeff() / b.leading_coeff();
        q.add_term(qm, qc);
        MultiPoly t = poly_mul(MultiPoly::monomial(a.roster(), qm, qc), b);
        r = poly_sub(r, t);
        // The leading monomial strictly decreases, so this terminates.
    }
    return q;
}

std::optional<MultiPoly> poly_try_divexact(const MultiPoly& a, const MultiPoly& b) {
    try {
        return poly_divexact(a, b);
    } catch (const InexactDivision&) {
        return std::nullopt;
    }
}

Rat poly_eval(const MultiPoly& a, const std::vector<Rat>& x) {
    if (x.size() != a.nvars()) throw Error("evaluation point has wrong length");
    Rat sum = 0;
    for (const auto& [m, c] : a.terms()) {
        Rat t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) t *= rat_pow(x[i], static_cast<unsigned long>(m.e[i]));
        sum += t;
    }
    return sum;
}

MultiPoly poly_normalize(const MultiPoly& a) {
    if (a.is_zero()) return a;
    Int den_lcm = 1;
    for (const auto& [m, c] : a.terms()) {
        Int d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    Int num_gcd = 0;
    for (const auto& [m, c] : a.terms()) {
        Int n = c.get_num() * (den_lcm / c.get_den());
        num_gcd = gcd(num_gcd, n);
    }
    Rat scale = make_rat(den_lcm, num_gcd);
    if (a.leading_coeff() < 0) scale = -scale;
    return poly_scale(a, scale);
}

bool poly_proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return poly_normalize(a) == poly_normalize(b);
}

MultiPoly poly_homogenize(const MultiPoly& a, int hvar) {
    if (a.is_zero()) return a;
    if (a.degree_in(hvar) > 0) throw Error("homogenization variable already occurs");
    int d = a.total_degree();
    MultiPoly r(a.roster());
    for (const auto& [m, c] : a.terms()) {
        Monomial h = m;
        h.e.at(hvar) = d - m.total();
        r.add_term(h, c);
    }
    return r;
}

// --- gcd -------------------------------------------------------------------
//
// Content / primitive-part recursion on the last occurring variable, with a
// primitive pseudo-remainder sequence for the univariate step.  Before the
// sequence runs, a seeded specialization of all other variables may prove the
// primitive parts coprime outright: if both leading coefficients survive the
// specialization and the specialized univariate gcd is constant, the true gcd
// has degree zero in the main variable.

namespace {

// View of p as a univariate polynomial in variable v with MultiPoly
// coefficients (each of v-degree zero).
std::map<int, MultiPoly> univariate_view(const MultiPoly& p, int v) {
    std::map<int, MultiPoly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        int d = m.e.at(v);
        Monomial rest = m;
        rest.e[v] = 0;
        auto it = coeffs.find(d);
        if (it == coeffs.end()) it = coeffs.emplace(d, MultiPoly(p.roster())).first;
        it->second.add_term(rest, c);
    }
    return coeffs;
}

int last_variable(const MultiPoly& a, const MultiPoly& b) {
    for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

MultiPoly shift_in_var(const MultiPoly& p, int v, int k) {
    MultiPoly r(p.roster());
    for (const auto& [m, c] : p.terms()) {
        Monomial s = m;
        s.e.at(v) += k;
        r.add_term(s, c);
    }
    return r;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a mod b.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int v) {
    int db = b.degree_in(v);
    auto bview = univariate_view(b, v);
    const MultiPoly& lb = bview.rbegin()->second;
    MultiPoly r = a;
    int da = r.degree_in(v);
    while (!r.is_zero() && (da = r.degree_in(v)) >= db) {
        auto rview = univariate_view(r, v);
        MultiPoly lr = rview.rbegin()->second;
        // r := lb*r - lr*x_v^(da-db)*b  kills the degree-da coefficient.
        r = poly_sub(poly_mul(lb, r), shift_in_var(poly_mul(lr, b), v, da - db));
    }
    return r;
}

MultiPoly content_in_var(const MultiPoly& p, int v) {
    auto view = univariate_view(p, v);
    MultiPoly c(p.roster());
    for (const auto& [d, q] : view) c = poly_gcd(c, q);
    return c;
}

int univariate_degree(const std::vector<Rat>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

int univariate_gcd_degree(std::vector<Rat> r0, std::vector<Rat> r1) {
    while (univariate_degree(r1) >= 0) {
        int d1 = univariate_degree(r1);
        while (univariate_degree(r0) >= d1) {
            int d0 = univariate_degree(r0);
            Rat f = r0[d0] / r1[d1];
            for (int i = 0; i <= d1; ++i) r0[d0 - d1 + i] -= f * r1[i];
        }
        std::swap(r0, r1);
    }
    return univariate_degree(r0);
}

// Proves the primitive parts coprime via one univariate specialization, or
// returns false when the attempt is inconclusive.  Sound because a common
// factor of positive v-degree would either drop its leading coefficient at
// the sample (excluded by the leading-coefficient checks) or force a
// positive-degree specialized gcd.
bool coprime_by_specialization(const MultiPoly& a, const MultiPoly& b, int v) {
    auto av = univariate_view(a, v);
    auto bv = univariate_view(b, v);
    Rng rng(0x5eedc0ffeeULL ^ (static_cast<std::uint64_t>(v) << 32));
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rat> x(a.nvars(), Rat(0));
        for (auto& xi : x) xi = Rat(rng.nonzero_int_in(-19, 19));
        x[v] = 0;
        if (poly_eval(av.rbegin()->second, x) == 0) continue;
        if (poly_eval(bv.rbegin()->second, x) == 0) continue;
        std::vector<Rat> pa(av.rbegin()->first + 1, Rat(0));
        std::vector<Rat> pb(bv.rbegin()->first + 1, Rat(0));
        for (const auto& [d, q] : av) pa[d] = poly_eval(q, x);
        for (const auto& [d, q] : bv) pb[d] = poly_eval(q, x);
        return univariate_gcd_degree(std::move(pa), std::move(pb)) == 0;
    }
    return false;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return poly_normalize(b);
    if (b.is_zero()) return poly_normalize(a);
    require_same_roster(a, b);
    int v = last_variable(a, b);
    if (v < 0) return MultiPoly::constant(a.roster(), 1);
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // One side is free of v; gcd divides the other side's content.
        MultiPoly ca = a.degree_in(v) == 0 ? a : content_in_var(a, v);
        MultiPoly cb = b.degree_in(v) == 0 ? b : content_in_var(b, v);
        return poly_gcd(ca, cb);
    }
    MultiPoly ca = content_in_var(a, v);
    MultiPoly cb = content_in_var(b, v);
    MultiPoly cg = poly_gcd(ca, cb);
    MultiPoly pa = poly_divexact(a, ca);
    MultiPoly pb = poly_divexact(b, cb);
    if (coprime_by_specialization(pa, pb, v)) return poly_normalize(cg);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = poly_divexact(r, content_in_var(r, v));
        }
    }
    return poly_normalize(poly_mul(cg, pa));
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.roster());
    return poly_normalize(poly_divexact(poly_mul(a, b), poly_gcd(a, b)));
}

}  // namespace toric
