/// @file rational.hpp
/// @brief Exact rational scalars backed by GMP.
///
/// Invariants relied on everywhere: values are canonical (lowest terms,
/// positive denominator, zero is 0/1).  gmp keeps arithmetic results
/// canonical as long as inputs are canonical, so construction goes through
/// the factories below.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Usage or input-format problem (CLI exit code 2).
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// A hypothesis of the method fails on the given input (CLI exit code 2).
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Parses "n" or "n/d" with optional leading minus; arbitrary precision.
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(text), Int(1));
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + text);
    }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Height used by deterministic pivoting: max(|num|, den).
inline Int rat_height(const Rat& q) {
    Int n = abs(q.get_num());
    const Int& d = q.get_den();
    return n > d ? n : d;
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

}  // namespace toric
