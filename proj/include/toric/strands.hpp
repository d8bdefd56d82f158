/// @file strands.hpp
/// @brief Representation matrices: syzygy matrix for the projective target,
///        Koszul strand for the multiprojective one, and their saturation
///        bounds nu0.

#pragma once

#include <cstdint>
#include <vector>

#include "toric/linform.hpp"
#include "toric/toricring.hpp"

namespace toric {

/// Saturation bound for the P^n target: max{(n-2)d, (n-1)d - gamma}.
int nu0_projective(int n, int d, int gamma);

/// Saturation bound for the (P^1)^n target: sum(d_i) - gamma.
int nu0_multiprojective(const std::vector<int>& degrees, int gamma);

/// Basis of { (a_1,...,a_m) in (A_nu)^m : sum a_i h_i = 0 }, computed as the
/// reduced-echelon kernel of the multiplication matrix
/// A_nu^m -> A_{nu+d}; deterministic across runs.  All h_i share one degree.
std::vector<std::vector<GradedElement>> syzygy_basis(
    const std::vector<GradedElement>& h, int nu);

/// Representation matrix over P^n: rows = basis of A_nu, one column per
/// syzygy (a_1,...,a_{n+1}), entry at row w being sum_i coeff_w(a_i) X_i.
/// The X-roster pairs X_i with h_i (denominator last).
LinearFormMatrix build_matrix_projective(const std::vector<GradedElement>& h,
                                         int nu, const RosterPtr& x_roster);

/// Degree-nu strand of the Koszul complex on L_i = Y_i f_i - X_i g_i.
/// terms[p] = dim (K_p)_nu for p = 0..n; maps[p] : (K_{p+1})_nu -> (K_p)_nu,
/// so maps[0] is the representation matrix M_nu.
struct KoszulStrand {
    int nu = 0;
    std::vector<long> terms;
    std::vector<LinearFormMatrix> maps;
};

/// fg lists f_1,g_1,...,f_n,g_n with matching degrees per pair; the X-roster
/// is X_1,Y_1,...,X_n,Y_n.
KoszulStrand build_koszul_strand(const std::vector<GradedElement>& fg, int nu,
                                 const RosterPtr& x_roster);

/// Rank at seeded random X-points (3 points, max); equals the generic rank
/// with overwhelming probability, and never exceeds it.
std::size_t generic_rank(const LinearFormMatrix& m, std::uint64_t seed);

}  // namespace toric
