/// @file qlinalg.hpp
/// @brief Exact linear algebra over the rationals, plus modular rank bounds.

#pragma once

#include <cstdint>
#include <vector>

#include "toric/multipoly.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Dense row-major rational matrix.
struct QMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> data;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Reduces m to reduced row echelon form in place and returns the pivot
/// columns in increasing order (their count is the rank).  Within a column
/// the pivot row is the first untouched row of maximal absolute height, a
/// deterministic choice; the RREF itself is unique regardless.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank_exact(QMat m);

/// Canonical kernel basis read off the RREF: one vector per free column,
/// with a 1 in that free column and the negated reduced entries in the pivot
/// columns.  Vectors are ordered by free column index.
std::vector<std::vector<Rat>> kernel_basis(QMat m);

/// Exact determinant of a square matrix via fraction-free Bareiss
/// elimination on a common-denominator integer scaling of each row.
Rat det_exact(const QMat& m);

/// Fixed 62-bit primes used for modular rank bounds; index must be < 4.
std::uint64_t modular_prime(std::size_t index);

/// Thrown when a prime divides a denominator (or otherwise cannot reduce
/// the matrix); callers retry with the next prime.
struct PrimeClash : Error {
    explicit PrimeClash(const std::string& what) : Error(what) {}
};

/// Rank of m over GF(p).  Requires no denominator divisible by p
/// (PrimeClash otherwise).
std::size_t rank_mod_prime(const QMat& m, std::uint64_t p);

/// Residue num * den^{-1} mod p; PrimeClash when p divides the denominator.
std::uint64_t rat_mod_prime(const Rat& q, std::uint64_t p);

/// Determinant over GF(p) of a dense row-major n x n matrix whose entries
/// are already reduced mod p; returns 0 when singular.
std::uint64_t det_mod_prime(std::vector<std::uint64_t> a, std::size_t n,
                            std::uint64_t p);

/// Column indices (size = rank mod p, increasing) whose square submatrix on
/// the first `rank` elimination rows is invertible over GF(p).  Since a
/// nonzero determinant mod p is nonzero over the rationals, the selected
/// columns are certified independent over Q.
std::vector<std::size_t> pivot_columns_mod_prime(const QMat& m, std::uint64_t p);

/// Lower bound on rank over Q: the max of the rank over two distinct good
/// primes.  Always <= the true rank; equality can fail only when both primes
/// divide the same maximal nonzero minor.
std::size_t rank_modular(const QMat& m);

/// Rank used on evaluated representation matrices: exact Gaussian
/// elimination when the matrix is small, otherwise rank_modular with an
/// early exit when the first prime already certifies full rank.
std::size_t rank_hybrid(const QMat& m);

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination (divisions are exact polynomial divisions).
MultiPoly det_poly(std::vector<std::vector<MultiPoly>> m, const RosterPtr& roster);

}  // namespace toric
