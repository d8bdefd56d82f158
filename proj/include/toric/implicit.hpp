/// @file implicit.hpp
/// @brief Implicit-equation extraction and verification: gcd of maximal
///        minors, determinant of the strand as an alternating product of
///        block determinants, ratio-constancy factorization checks, the
///        rank-drop membership predicate, and degree probing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/linform.hpp"
#include "toric/strands.hpp"

namespace toric {

/// A block chosen as a denominator evaluated to a singular matrix at the
/// requested point; the caller retries with another point.
struct SingularBlock : Error {
    explicit SingularBlock(const std::string& what) : Error(what) {}
};

/// Nested square blocks of the strand differentials whose alternating
/// determinant product is the determinant of the strand.  block_rows[p]
/// indexes into K_p (the rows of maps[p]), block_cols[p] into K_{p+1}; the
/// sizes telescope: the rows of block p+1 are exactly the columns of K_{p+1}
/// left unused by block p.
struct DetComplexPlan {
    std::uint64_t seed = 0;    // seed that produced the planning point
    std::vector<Rat> point;    // X-point certifying invertibility
    std::vector<std::vector<std::size_t>> block_rows;
    std::vector<std::vector<std::size_t>> block_cols;
    std::vector<std::size_t> block_sizes;
};

/// Greedy staircase selection at a seeded random X-point.  Every selected
/// square block is certified invertible over the rationals by a nonzero
/// determinant modulo a 62-bit prime.  Retries with fresh points up to 10
/// times before reporting a hypothesis failure.
DetComplexPlan plan_det_complex(const KoszulStrand& strand, std::uint64_t seed);

/// Alternating product det(B_0) * det(B_2) * ... / (det(B_1) * ...) of the
/// plan's blocks evaluated at x.  Throws SingularBlock when a denominator
/// block degenerates at x; a zero numerator block simply yields 0.
Rat det_complex_at_point(const KoszulStrand& strand, const DetComplexPlan& plan,
                         const std::vector<Rat>& x);

/// Gcd over a deterministic lexicographic sweep of all maximal minors,
/// early-stopping once the running gcd is nonzero and unchanged for 5
/// consecutive minors (or constant).  Requires rows <= cols, rows <= limit,
/// and generic full row rank.
MultiPoly gcd_maximal_minors(const LinearFormMatrix& m, int limit = 12);

/// Fraction-free symbolic determinant of a square matrix of linear forms.
MultiPoly det_symbolic(const LinearFormMatrix& m);

struct EvidenceRow {
    std::vector<Rat> x;
    Rat det_value;        // D at x
    Rat candidate_value;  // H^k * G at x
    Rat ratio;            // det_value / candidate_value
};

struct ImplicitReport {
    bool pass = false;
    std::string mode;  // "evaluated" or "symbolic"
    int k = 1;
    std::uint64_t seed = 0;
    std::vector<EvidenceRow> evidence;
    std::string detail;  // reason when pass is false
};

/// Evaluated check that D = c * H^k * G for a single nonzero constant c:
/// samples `trials` seeded X-points (numerators and denominators bounded by
/// 97), records (D, H^k G, ratio) evidence, and passes iff all ratios agree
/// and are nonzero.  Points where a denominator block is singular or the
/// candidate vanishes are resampled; if no usable points exist the
/// candidates are degenerate and an Error is raised.
ImplicitReport verify_factorization(const KoszulStrand& strand, const MultiPoly& H,
                                    int k, const MultiPoly& G, std::uint64_t seed,
                                    int trials = 5);

/// Same protocol with D = det of a square representation matrix.
ImplicitReport verify_factorization(const LinearFormMatrix& m, const MultiPoly& H,
                                    int k, const MultiPoly& G, std::uint64_t seed,
                                    int trials = 5);

/// Symbolic check on a small square matrix: D = det_symbolic(m) must equal
/// a nonzero constant times H^k * G as an exact polynomial identity.
ImplicitReport verify_factorization_symbolic(const LinearFormMatrix& m,
                                             const MultiPoly& H, int k,
                                             const MultiPoly& G);

/// True iff the evaluated matrix drops below full row rank at x.  Requires
/// generic full row rank (checked at seeded random points).
bool membership(const LinearFormMatrix& m, const std::vector<Rat>& x,
                std::uint64_t seed = 0);

/// The unique exponent k in 1..8 for which D / (H^k G) is a nonzero
/// constant across the sampled points; Error when none fits.
int degree_of_map(const KoszulStrand& strand, const MultiPoly& H, const MultiPoly& G,
                  std::uint64_t seed, int trials = 5);

/// Total X-degree of the determinant of the strand, measured along a seeded
/// random line x = a + t*b: each block determinant restricted to the line is
/// a univariate polynomial whose degree is read off finite differences
/// modulo a 62-bit prime, and the alternating sum of block degrees is the
/// degree of D.  Two independent lines are probed and the maximum returned.
int degree_probe(const KoszulStrand& strand, const DetComplexPlan& plan,
                 std::uint64_t seed);

}  // namespace toric
