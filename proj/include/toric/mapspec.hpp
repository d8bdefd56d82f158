/// @file mapspec.hpp
/// @brief Parsed rational hypersurface parametrizations and the per-target
///        derived data (Newton polytope, contraction, toric ring, graded
///        coordinates, saturation bound).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/multipoly.hpp"
#include "toric/toricring.hpp"

namespace toric {

enum class Target { projective, multiprojective };

std::string target_str(Target t);

/// Everything one compactification needs.  For the multiprojective target
/// the Newton polytope is the hull of all numerator/denominator supports and
/// elems lists f_1,g_1,...,f_n,g_n at degrees d_1,...,d_n.  For the
/// projective target the coordinates are first brought over the common
/// denominator g = lcm(g_i) and reduced; the polytope is the hull of the
/// supports of h_1..h_{n+1} = (f_1 g/g_1, ..., f_n g/g_n, g), the common
/// degree d is its contraction factor, and elems lists h_1..h_{n+1}
/// (denominator last, matching X-roster order).
struct RouteData {
    Target target = Target::multiprojective;
    LatticePolytope newton;
    LatticePolytope base;  // newton = factor * base
    int factor = 1;
    RingPtr ring;          // over base; construction certifies normality
    int gamma = 0;
    std::vector<int> degrees;
    std::vector<GradedElement> elems;
    RosterPtr x_roster;
    int nu0 = 0;
};

struct MapSpec {
    RosterPtr vars;
    Target target = Target::multiprojective;
    std::vector<MultiPoly> nums;  // reduced: gcd(num_i, den_i) divided out
    std::vector<MultiPoly> dens;
    int n = 0;  // coordinate count = #vars + 1
    std::optional<std::uint64_t> seed;  // optional file-level overrides
    std::optional<int> nu;
    std::optional<int> limit;
    RouteData route;  // built for `target`
};

/// Validates counts, reduces pairs, and derives the route for the target.
MapSpec make_map_spec(RosterPtr vars, Target target, std::vector<MultiPoly> nums,
                      std::vector<MultiPoly> dens);

/// Derives the other compactification's data on demand.
RouteData build_route(const MapSpec& spec, Target target);

/// Reads the `vars:` / `target:` / `coord: num | den` fixture format.
MapSpec load_spec(const std::string& path);

/// Reads one polynomial expression over the roster; `#` starts a comment and
/// the remaining non-empty lines are concatenated into a single expression.
MultiPoly load_poly(const std::string& path, const RosterPtr& roster);

/// Coordinates of the image of an affine parameter point, listed in X-roster
/// order: h_1..h_{n+1} values (projective) or f_1,g_1,...,f_n,g_n values
/// (multiprojective).  Empty when the point hits the base locus (every h_i
/// zero, or some pair (f_i, g_i) both zero), where no image point exists.
std::optional<std::vector<Rat>> push_forward(const RouteData& route,
                                             const RosterPtr& vars,
                                             const std::vector<Rat>& params);

RosterPtr projective_x_roster(int count);
RosterPtr multiprojective_x_roster(int n_coords);

}  // namespace toric
