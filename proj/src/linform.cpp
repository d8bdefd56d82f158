#include "toric/linform.hpp"

#include <algorithm>

namespace toric {

void LinearForm::add(int var, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(
        terms.begin(), terms.end(), var,
        [](const std::pair<int, Rat>& t, int v) { return t.first < v; });
    if (it != terms.end() && it->first == var) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    } else {
        terms.insert(it, {var, c});
    }
}

Rat LinearForm::eval(const std::vector<Rat>& x) const {
    Rat s(0);
    for (const auto& [v, c] : terms) s += c * x.at(v);
    return s;
}

MultiPoly LinearForm::to_poly(const RosterPtr& roster) const {
    MultiPoly p(roster);
    for (const auto& [v, c] : terms) {
        Monomial m(roster->size());
        m.e.at(v) = 1;
        p.add_term(m, c);
    }
    return p;
}

QMat LinearFormMatrix::evaluate(const std::vector<Rat>& x) const {
    QMat m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [r, form] : columns[c]) m.at(r, c) = form.eval(x);
    return m;
}

MultiPoly LinearFormMatrix::cell_poly(std::size_t r, std::size_t c) const {
    for (const auto& [row, form] : columns.at(c))
        if (row == r) return form.to_poly(x_roster);
    return MultiPoly::zero(x_roster);
}

}  // namespace toric
