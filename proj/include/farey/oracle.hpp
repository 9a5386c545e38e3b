#pragma once

// Brute-force reference implementations. Nothing here calls into the
// generation, cycle or sieve code; the equivalence tests depend on that.

#include <cstdint>
#include <vector>

#include "farey/fraction.hpp"

namespace farey::oracle {

struct OracleConfig {
    Int max_order = 2000;
    Int max_n = 10'000'000;
};

struct TwinPair {
    Int p = 0;
    Int q = 0;

    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Every reduced n/d with 0 <= n <= d <= m, sorted by value.
std::vector<Fraction> naive_farey(Int m, const OracleConfig& cfg = {});

/// Smallest fraction of F_m strictly greater than f, by scanning every
/// denominator. f must be below 1.
Fraction naive_successor(const Fraction& f, Int m, const OracleConfig& cfg = {});

/// Number of orders after m until some fraction appears between f and its
/// F_m successor.
Int naive_s(const Fraction& f, Int m, const OracleConfig& cfg = {});

Int naive_totient(Int k);

bool trial_division_is_prime(Int n);

/// Twin pairs (p, p + 2) with p + 2 <= limit.
std::vector<TwinPair> naive_twins(Int limit, const OracleConfig& cfg = {});

/// First `count` odd primes.
std::vector<Int> naive_odd_primes(std::size_t count);

/// First `count` twin pairs.
std::vector<TwinPair> naive_first_twins(std::size_t count);

}  // namespace farey::oracle
