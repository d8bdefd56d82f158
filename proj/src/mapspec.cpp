#include "toric/mapspec.hpp"

#include <fstream>
#include <sstream>

#include "toric/parser.hpp"
#include "toric/strands.hpp"

namespace toric {
namespace {

void collect_support(const MultiPoly& p, std::vector<Point>& out) {
    for (const auto& [m, c] : p.terms()) out.emplace_back(m.e.begin(), m.e.end());
}

/// Smallest k >= 0 with every point inside k*base; the supports always fit
/// inside factor*base, so the scan is bounded.
int min_fit(const std::vector<Point>& pts, const LatticePolytope& base, int bound) {
    for (int k = 0; k <= bound; ++k) {
        bool ok = true;
        for (const Point& x : pts)
            if (!contains_dilated(base, k, x)) {
                ok = false;
                break;
            }
        if (ok) return k;
    }
    throw Error("support does not fit any bounded dilation");
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string target_str(Target t) {
    return t == Target::projective ? "projective" : "multiprojective";
}

RosterPtr projective_x_roster(int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back("X" + std::to_string(i));
    return make_roster(std::move(names));
}

RosterPtr multiprojective_x_roster(int n_coords) {
    std::vector<std::string> names;
    for (int i = 1; i <= n_coords; ++i) {
        names.push_back("X" + std::to_string(i));
        names.push_back("Y" + std::to_string(i));
    }
    return make_roster(std::move(names));
}

RouteData build_route(const MapSpec& spec, Target target) {
    RouteData route;
    route.target = target;
    int n = spec.n;
    std::vector<Point> support;

    if (target == Target::multiprojective) {
        for (int i = 0; i < n; ++i) {
            collect_support(spec.nums[i], support);
            collect_support(spec.dens[i], support);
        }
        route.newton = make_polytope(support);
        if (!route.newton.full_dimensional())
            throw HypothesisError(
                "Newton polytope is not full-dimensional in the parameter space");
        Contraction c = contract(route.newton);
        route.base = c.base;
        route.factor = c.factor;
        route.ring = make_ring(route.base);
        route.gamma = gamma(route.base);
        for (int i = 0; i < n; ++i) {
            std::vector<Point> pair_pts;
            collect_support(spec.nums[i], pair_pts);
            collect_support(spec.dens[i], pair_pts);
            int di = min_fit(pair_pts, route.base, route.factor);
            if (di == 0)
                throw HypothesisError("coordinate " + std::to_string(i + 1) +
                                      " is constant");
            route.degrees.push_back(di);
        }
        for (int i = 0; i < n; ++i) {
            route.elems.push_back(
                homogenize(route.ring, spec.nums[i], route.degrees[i]));
            route.elems.push_back(
                homogenize(route.ring, spec.dens[i], route.degrees[i]));
        }
        route.x_roster = multiprojective_x_roster(n);
        route.nu0 = nu0_multiprojective(route.degrees, route.gamma);
        return route;
    }

    // Projective target: common denominator g = lcm(g_i), h_i = f_i g / g_i,
    // h_{n+1} = g, all divided by their overall gcd.
    MultiPoly g = spec.dens[0];
    for (int i = 1; i < n; ++i) g = poly_lcm(g, spec.dens[i]);
    std::vector<MultiPoly> h;
    for (int i = 0; i < n; ++i)
        h.push_back(poly_mul(spec.nums[i], poly_divexact(g, spec.dens[i])));
    h.push_back(g);
    MultiPoly common = h[0];
    for (std::size_t i = 1; i < h.size(); ++i) common = poly_gcd(common, h[i]);
    if (!common.is_constant())
        for (MultiPoly& hi : h) hi = poly_divexact(hi, common);

    for (const MultiPoly& hi : h) collect_support(hi, support);
    route.newton = make_polytope(support);
    if (!route.newton.full_dimensional())
        throw HypothesisError(
            "Newton polytope is not full-dimensional in the parameter space");
    Contraction c = contract(route.newton);
    route.base = c.base;
    route.factor = c.factor;
    route.ring = make_ring(route.base);
    route.gamma = gamma(route.base);
    route.degrees = {route.factor};
    for (const MultiPoly& hi : h)
        route.elems.push_back(homogenize(route.ring, hi, route.factor));
    route.x_roster = projective_x_roster(n + 1);
    route.nu0 = nu0_projective(n, route.factor, route.gamma);
    return route;
}

MapSpec make_map_spec(RosterPtr vars, Target target, std::vector<MultiPoly> nums,
                      std::vector<MultiPoly> dens) {
    if (!vars || vars->empty()) throw UsageError("need at least one variable");
    if (nums.size() != dens.size())
        throw UsageError("numerator/denominator count mismatch");
    if (nums.size() != vars->size() + 1)
        throw UsageError("not a hypersurface parametrization: need exactly " +
                         std::to_string(vars->size() + 1) + " coordinates for " +
                         std::to_string(vars->size()) + " variable(s)");
    MapSpec spec;
    spec.vars = std::move(vars);
    spec.target = target;
    spec.n = static_cast<int>(nums.size());
    for (int i = 0; i < spec.n; ++i) {
        if (nums[i].is_zero())
            throw UsageError("numerator " + std::to_string(i + 1) + " is zero");
        if (dens[i].is_zero())
            throw UsageError("denominator " + std::to_string(i + 1) + " is zero");
        MultiPoly d = poly_gcd(nums[i], dens[i]);
        if (!d.is_constant()) {
            nums[i] = poly_divexact(nums[i], d);
            dens[i] = poly_divexact(dens[i], d);
        }
    }
    spec.nums = std::move(nums);
    spec.dens = std::move(dens);
    spec.route = build_route(spec, target);
    return spec;
}

MapSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open spec file: " + path);
    RosterPtr vars;
    std::optional<Target> target;
    std::vector<MultiPoly> nums, dens;
    std::optional<std::uint64_t> seed;
    std::optional<int> nu, limit;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": expected 'key: value'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        try {
            if (key == "vars") {
                std::istringstream vs(value);
                std::vector<std::string> names;
                std::string name;
                while (vs >> name) names.push_back(name);
                if (names.empty()) throw UsageError("empty variable list");
                vars = make_roster(std::move(names));
            } else if (key == "target") {
                if (value == "projective")
                    target = Target::projective;
                else if (value == "multiprojective")
                    target = Target::multiprojective;
                else
                    throw UsageError("unknown target '" + value + "'");
            } else if (key == "coord") {
                if (!vars) throw UsageError("'coord' before 'vars'");
                std::size_t bar = value.find('|');
                std::string numtext =
                    bar == std::string::npos ? value : value.substr(0, bar);
                std::string dentext =
                    bar == std::string::npos ? "1" : value.substr(bar + 1);
                nums.push_back(parse_poly(trim(numtext), vars));
                dens.push_back(parse_poly(trim(dentext), vars));
            } else if (key == "seed") {
                seed = std::stoull(value);
            } else if (key == "nu") {
                nu = std::stoi(value);
            } else if (key == "limit") {
                limit = std::stoi(value);
            } else {
                throw UsageError("unknown key '" + key + "'");
            }
        } catch (const UsageError&) {
            throw;
        } catch (const Error& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!vars) throw UsageError(path + ": missing 'vars'");
    if (!target) throw UsageError(path + ": missing 'target'");
    MapSpec spec = make_map_spec(vars, *target, std::move(nums), std::move(dens));
    spec.seed = seed;
    spec.nu = nu;
    spec.limit = limit;
    return spec;
}

MultiPoly load_poly(const std::string& path, const RosterPtr& roster) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open polynomial file: " + path);
    std::string text, line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!text.empty()) text += " ";
        text += line;
    }
    if (text.empty()) throw UsageError(path + ": no polynomial expression found");
    try {
        return parse_poly(text, roster);
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::optional<std::vector<Rat>> push_forward(const RouteData& route,
                                             const RosterPtr& vars,
                                             const std::vector<Rat>& params) {
    std::vector<Rat> values;
    for (const GradedElement& e : route.elems)
        values.push_back(poly_eval(dehomogenize(e, vars), params));
    if (route.target == Target::projective) {
        bool all_zero = true;
        for (const Rat& v : values)
            if (v != 0) all_zero = false;
        if (all_zero) return std::nullopt;
    } else {
        for (std::size_t i = 0; i + 1 < values.size(); i += 2)
            if (values[i] == 0 && values[i + 1] == 0) return std::nullopt;
    }
    return values;
}

}  // namespace toric
