#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toric/implicit.hpp"
#include "toric/lattice.hpp"
#include "toric/mapspec.hpp"
#include "toric/oracle.hpp"
#include "toric/strands.hpp"

namespace toric {
namespace {

struct Emitter {
    std::ostringstream& os;
    bool machine = false;

    void kv(const std::string& key, const std::string& value) {
        if (machine)
            os << key << '\t' << value << '\n';
        else
            os << key << ": " << value << '\n';
    }
    void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
    void raw(const std::string& line) { os << line << '\n'; }
};

Target parse_target(const std::string& name) {
    if (name == "projective") return Target::projective;
    if (name == "multiprojective") return Target::multiprojective;
    throw UsageError("unknown target '" + name + "' (projective | multiprojective)");
}

/// Route for the requested target, reusing the one built at load time.
RouteData route_for(const MapSpec& spec, const std::optional<std::string>& target) {
    if (!target) return spec.route;
    Target t = parse_target(*target);
    if (t == spec.target) return spec.route;
    return build_route(spec, t);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const MapSpec& spec) {
    if (flag) return *flag;
    if (spec.seed) return *spec.seed;
    return 0;
}

int resolve_nu(const std::optional<int>& flag, const MapSpec& spec, const RouteData& route) {
    if (flag) return *flag;
    if (spec.nu) return *spec.nu;
    return route.nu0;
}

int resolve_limit(const std::optional<int>& flag, const MapSpec& spec) {
    if (flag) return *flag;
    if (spec.limit) return *spec.limit;
    return 12;
}

LinearFormMatrix matrix_for(const RouteData& route, int nu) {
    if (route.target == Target::projective)
        return build_matrix_projective(route.elems, nu, route.x_roster);
    return build_koszul_strand(route.elems, nu, route.x_roster).maps[0];
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<Rat> parse_point_list(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        std::size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) throw UsageError("empty coordinate in point list");
        std::size_t b = cur.find_last_not_of(" \t");
        out.push_back(parse_rat(cur.substr(a, b - a + 1)));
    }
    if (out.empty()) throw UsageError("empty point list");
    return out;
}

/// A polytope argument is either a `vertices: (a,b) ...` file or a map
/// specification, in which case the Newton polytope of its target is used.
LatticePolytope load_polytope_arg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::string line, vertex_line;
    bool has_vertices = false;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        if (line.compare(a, 9, "vertices:") == 0) {
            vertex_line = line.substr(a + 9);
            has_vertices = true;
            break;
        }
    }
    if (!has_vertices) return load_spec(path).route.newton;
    std::vector<Point> pts;
    std::size_t i = 0;
    while (i < vertex_line.size()) {
        if (vertex_line[i] != '(') {
            if (vertex_line[i] != ' ' && vertex_line[i] != '\t')
                throw UsageError(path + ": expected '(' in vertex list");
            ++i;
            continue;
        }
        std::size_t close = vertex_line.find(')', i);
        if (close == std::string::npos) throw UsageError(path + ": unbalanced '(' in vertex list");
        std::istringstream ps(vertex_line.substr(i + 1, close - i - 1));
        Point p;
        std::string coord;
        while (std::getline(ps, coord, ','))
            try {
                p.push_back(std::stoi(coord));
            } catch (const std::exception&) {
                throw UsageError(path + ": bad vertex coordinate '" + coord + "'");
            }
        if (p.empty()) throw UsageError(path + ": empty vertex");
        pts.push_back(std::move(p));
        i = close + 1;
    }
    if (pts.empty()) throw UsageError(path + ": no vertices listed");
    for (const Point& p : pts)
        if (p.size() != pts[0].size())
            throw UsageError(path + ": vertices of mixed dimension");
    return make_polytope(std::move(pts));
}

std::string vertices_str(const LatticePolytope& p) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += " ";
        s += point_str(p.vertices[i]);
    }
    return s;
}

void emit_evidence(Emitter& em, const ImplicitReport& rep) {
    for (std::size_t i = 0; i < rep.evidence.size(); ++i) {
        const EvidenceRow& row = rep.evidence[i];
        std::string tag = std::to_string(i);
        em.kv("point_" + tag, join_rats(row.x));
        em.kv("det_" + tag, rat_str(row.det_value));
        em.kv("cand_" + tag, rat_str(row.candidate_value));
        em.kv("ratio_" + tag, rat_str(row.ratio));
    }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream os;

    CLI::App app{"exact implicitization of rational hypersurface parametrizations "
                 "via toric representation matrices"};
    app.require_subcommand(1);

    std::string format = "text";
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> nu_flag, limit_flag;
    int trials = 5;
    std::optional<std::string> target_flag;
    std::string file, h_path, g_path, point_text;
    int kmax = 5, kexp = 1, mlevel = 2;
    bool probe = false;

    std::function<int(Emitter&)> action;

    auto add_common = [&](CLI::App* sub, bool with_target) {
        sub->add_option("--format", format, "output format: text | machine")
            ->check(CLI::IsMember({"text", "machine"}));
        if (with_target)
            sub->add_option("--target", target_flag,
                            "override the file's target compactification");
    };

    CLI::App* polytope = app.add_subcommand(
        "polytope", "Newton polytope, contraction, gamma, Ehrhart counts");
    polytope->add_option("file", file, "map spec or `vertices:` file")->required();
    polytope->add_option("--kmax", kmax, "largest dilation to count (default 5)");
    add_common(polytope, false);
    polytope->callback([&] {
        action = [&](Emitter& em) {
            LatticePolytope p = load_polytope_arg(file);
            Contraction c = contract(p);
            em.kv("vertices", vertices_str(p));
            em.kv("dim", static_cast<long long>(p.dim));
            em.kv("affine_dim", static_cast<long long>(p.affine_dim));
            em.kv("factor", static_cast<long long>(c.factor));
            em.kv("base_vertices", vertices_str(c.base));
            if (p.full_dimensional()) em.kv("gamma", static_cast<long long>(gamma(p)));
            em.kv("normal", is_normal(p));
            for (int k = 1; k <= kmax; ++k)
                em.kv("E(" + std::to_string(k) + ")",
                      static_cast<long long>(ehrhart(p, k)));
            for (int k = 1; k <= kmax; ++k)
                em.kv("Eint(" + std::to_string(k) + ")",
                      static_cast<long long>(ehrhart_interior(p, k)));
            return 0;
        };
    });

    CLI::App* bounds = app.add_subcommand(
        "bounds", "saturation bound nu0 for both target compactifications");
    bounds->add_option("file", file, "map spec file")->required();
    add_common(bounds, false);
    bounds->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            RouteData proj = build_route(spec, Target::projective);
            RouteData multi = build_route(spec, Target::multiprojective);
            em.kv("target", target_str(spec.target));
            em.kv("degree_projective", static_cast<long long>(proj.factor));
            em.kv("gamma_projective", static_cast<long long>(proj.gamma));
            em.kv("nu0_projective", static_cast<long long>(proj.nu0));
            em.kv("degrees_multiprojective", join_ints(multi.degrees));
            em.kv("gamma_multiprojective", static_cast<long long>(multi.gamma));
            em.kv("nu0_multiprojective", static_cast<long long>(multi.nu0));
            return 0;
        };
    });

    CLI::App* matrix = app.add_subcommand(
        "matrix", "representation matrix M_nu, sparse column-major entries");
    matrix->add_option("file", file, "map spec file")->required();
    matrix->add_option("--nu", nu_flag, "grading (default: file nu, else nu0)");
    add_common(matrix, true);
    matrix->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            RouteData route = route_for(spec, target_flag);
            int nu = resolve_nu(nu_flag, spec, route);
            LinearFormMatrix m = matrix_for(route, nu);
            em.raw(std::to_string(m.rows) + " " + std::to_string(m.cols));
            char sep = em.machine ? '\t' : ' ';
            for (std::size_t c = 0; c < m.cols; ++c) {
                auto cells = m.columns[c];
                std::sort(cells.begin(), cells.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                for (const auto& [r, form] : cells)
                    em.raw(std::to_string(r) + sep + std::to_string(c) + sep +
                           form.to_poly(m.x_roster).str());
            }
            return 0;
        };
    });

    CLI::App* implicit = app.add_subcommand(
        "implicit", "implicit equation as the gcd of maximal minors of M_nu0");
    implicit->add_option("file", file, "map spec file")->required();
    implicit->add_option("--nu", nu_flag, "grading (default: file nu, else nu0)");
    implicit->add_option("--limit", limit_flag,
                         "largest row count the symbolic sweep accepts (default 12)");
    add_common(implicit, true);
    implicit->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            RouteData route = route_for(spec, target_flag);
            int nu = resolve_nu(nu_flag, spec, route);
            LinearFormMatrix m = matrix_for(route, nu);
            em.kv("target", target_str(route.target));
            em.kv("nu", static_cast<long long>(nu));
            em.kv("rows", static_cast<long long>(m.rows));
            em.kv("cols", static_cast<long long>(m.cols));
            MultiPoly g = gcd_maximal_minors(m, resolve_limit(limit_flag, spec));
            em.kv("implicit", g.str());
            return 0;
        };
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "check det of the matrix/strand against H^k * G at random points");
    verify->add_option("file", file, "map spec file")->required();
    verify->add_option("--H", h_path, "implicit-equation candidate file")->required();
    verify->add_option("--G", g_path, "extraneous-factor candidate file (default 1)");
    verify->add_option("--k", kexp, "exponent of H (default 1)");
    verify->add_option("--trials", trials, "evidence points (default 5)");
    verify->add_option("--nu", nu_flag, "grading (default: file nu, else nu0)");
    verify->add_option("--seed", seed_flag, "evaluation seed (default: file seed, else 0)");
    verify->add_flag("--probe-degree", probe,
                     "also report the degree of det via modular probing");
    add_common(verify, true);
    verify->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            RouteData route = route_for(spec, target_flag);
            int nu = resolve_nu(nu_flag, spec, route);
            std::uint64_t seed = resolve_seed(seed_flag, spec);
            MultiPoly H = load_poly(h_path, route.x_roster);
            MultiPoly G = g_path.empty()
                              ? MultiPoly::constant(route.x_roster, Rat(1))
                              : load_poly(g_path, route.x_roster);
            em.kv("target", target_str(route.target));
            em.kv("nu", static_cast<long long>(nu));
            em.kv("seed", std::to_string(seed));
            em.kv("k", static_cast<long long>(kexp));
            em.kv("trials", static_cast<long long>(trials));
            ImplicitReport rep;
            if (route.target == Target::multiprojective) {
                KoszulStrand strand =
                    build_koszul_strand(route.elems, nu, route.x_roster);
                rep = verify_factorization(strand, H, kexp, G, seed, trials);
                if (probe) {
                    DetComplexPlan plan = plan_det_complex(strand, seed);
                    em.kv("probe_degree",
                          static_cast<long long>(degree_probe(strand, plan, seed)));
                }
            } else {
                if (probe)
                    throw UsageError(
                        "--probe-degree needs the multiprojective strand");
                LinearFormMatrix m =
                    build_matrix_projective(route.elems, nu, route.x_roster);
                rep = verify_factorization(m, H, kexp, G, seed, trials);
            }
            em.kv("mode", rep.mode);
            emit_evidence(em, rep);
            em.kv("result", std::string(rep.pass ? "PASS" : "FAIL"));
            if (!rep.pass && !rep.detail.empty()) em.kv("detail", rep.detail);
            return rep.pass ? 0 : 1;
        };
    });

    CLI::App* member = app.add_subcommand(
        "membership", "does a target point lie on the parametrized hypersurface?");
    member->add_option("file", file, "map spec file")->required();
    member->add_option("--point", point_text, "comma-separated rational coordinates")
        ->required();
    member->add_option("--nu", nu_flag, "grading (default: file nu, else nu0)");
    member->add_option("--seed", seed_flag, "rank-check seed (default: file seed, else 0)");
    add_common(member, true);
    member->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            RouteData route = route_for(spec, target_flag);
            int nu = resolve_nu(nu_flag, spec, route);
            std::uint64_t seed = resolve_seed(seed_flag, spec);
            LinearFormMatrix m = matrix_for(route, nu);
            std::vector<Rat> x = parse_point_list(point_text);
            em.kv("target", target_str(route.target));
            em.kv("nu", static_cast<long long>(nu));
            em.kv("seed", std::to_string(seed));
            em.kv("rows", static_cast<long long>(m.rows));
            em.kv("member", membership(m, x, seed));
            return 0;
        };
    });

    CLI::App* oracle = app.add_subcommand(
        "oracle", "independent cross-checks (resultant implicitization, sumset normality)");
    oracle->require_subcommand(1);

    CLI::App* oimp = oracle->add_subcommand(
        "implicit", "curve implicit equation by resultant elimination");
    oimp->add_option("file", file, "map spec file (1 parameter, 2 coordinates)")
        ->required();
    add_common(oimp, true);
    oimp->callback([&] {
        action = [&](Emitter& em) {
            MapSpec spec = load_spec(file);
            Target t = target_flag ? parse_target(*target_flag) : spec.target;
            em.kv("target", target_str(t));
            em.kv("implicit", curve_implicit(spec, t).str());
            return 0;
        };
    });

    CLI::App* onorm = oracle->add_subcommand(
        "normality", "m-fold sumset of lattice points vs lattice points of m*P");
    onorm->add_option("file", file, "map spec or `vertices:` file")->required();
    onorm->add_option("--m", mlevel, "dilation level (default 2)");
    add_common(onorm, false);
    onorm->callback([&] {
        action = [&](Emitter& em) {
            LatticePolytope p = load_polytope_arg(file);
            em.kv("vertices", vertices_str(p));
            em.kv("m", static_cast<long long>(mlevel));
            em.kv("sumset_normal", normality_sumset(p, mlevel));
            return 0;
        };
    });

    std::vector<const char*> argv;
    argv.push_back("toricimp");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        Emitter em{os, format == "machine"};
        int code = action(em);
        return {code, os.str()};
    } catch (const CLI::CallForHelp&) {
        os << app.help();
        return {0, os.str()};
    } catch (const CLI::CallForAllHelp&) {
        os << app.help("", CLI::AppFormatMode::All);
        return {0, os.str()};
    } catch (const CLI::ParseError& e) {
        os << "error: " << e.what() << "\n";
        return {2, os.str()};
    } catch (const Error& e) {
        os << "error: " << e.what() << "\n";
        return {2, os.str()};
    }
}

}  // namespace toric
