#include <doctest.h>

#include <sstream>

#include "farey/oracle.hpp"
#include "farey/primes.hpp"

using namespace farey;

namespace {

std::vector<TwinPair> to_pairs(const std::vector<oracle::TwinPair>& v) {
    std::vector<TwinPair> out;
    for (const auto& t : v) out.push_back({t.p, t.q});
    return out;
}

}  // namespace

TEST_CASE("is_prime_farey examples") {
    CHECK(is_prime_farey(7));
    CHECK_FALSE(is_prime_farey(9));
    CHECK(is_prime_farey(2));
    CHECK(is_prime_farey(3));
    CHECK_FALSE(is_prime_farey(4));
    CHECK_THROWS_AS(is_prime_farey(1), InvariantError);
    CHECK_THROWS_AS(is_prime_farey_divisibility(0), InvariantError);
}

TEST_CASE("is_lesser_twin_farey examples") {
    CHECK(is_lesser_twin_farey(5));
    CHECK_FALSE(is_lesser_twin_farey(7));
    CHECK(is_lesser_twin_farey(3));
    CHECK(is_lesser_twin_farey(11));
    CHECK_FALSE(is_lesser_twin_farey(9));
    CHECK_THROWS_AS(is_lesser_twin_farey(2), InvariantError);
}

TEST_CASE("sieve predicates agree with trial division") {
    CycleSetCache cache;
    for (Int p = 2; p <= 2000; ++p) {
        const bool prime = oracle::trial_division_is_prime(p);
        REQUIRE(is_prime_farey(p, cache) == prime);
        REQUIRE(is_prime_farey_divisibility(p, cache) == prime);
        if (p >= 3) REQUIRE(is_lesser_twin_farey(p, cache) == (prime && oracle::trial_division_is_prime(p + 2)));
    }
}

TEST_CASE("prime_stream") {
    CHECK(prime_stream(4) == std::vector<Int>{3, 5, 7, 11});
    CHECK(prime_stream(1) == std::vector<Int>{3});
    CHECK(prime_stream(25) == oracle::naive_odd_primes(25));
    CHECK(prime_stream(120, {.strict = true}) == prime_stream(120));
    CHECK_THROWS_AS(prime_stream(0), InvariantError);
    CHECK_THROWS_AS(prime_stream(30, {.strict = false, .scan_cap = 1}), CapExceeded);
}

TEST_CASE("twin_stream") {
    CHECK(twin_stream(4) == std::vector<TwinPair>{{3, 5}, {5, 7}, {11, 13}, {17, 19}});
    CHECK(twin_stream(1) == std::vector<TwinPair>{{3, 5}});
    CHECK(twin_stream(3)[2] == TwinPair{11, 13});
    CHECK(twin_stream(30) == to_pairs(oracle::naive_first_twins(30)));
    CHECK_THROWS_AS(twin_stream(0), InvariantError);
}

TEST_CASE("SieveAccumulator") {
    SieveAccumulator acc;
    acc.add(cycle_set_for_denominator(2, 1));
    acc.add(cycle_set_for_denominator(3, 1));
    CHECK(acc.min(100) == 4);
    CHECK(acc.predicates().size() == 2);
    acc.raise_floor(5);
    CHECK(acc.floor() == 5);
    CHECK(acc.min(100) == 6);
    CHECK(acc.contains(4));  // the floor only bounds min()
    CHECK_FALSE(acc.contains(5));
    CHECK_THROWS_AS(acc.raise_floor(3), InvariantError);
    CHECK_THROWS_AS(acc.min(1), CapExceeded);
}

TEST_CASE("TruncatedCycleSet reproduces ems") {
    for (Int d = 1; d <= 30; ++d) {
        for (Int c = 1; c <= d; ++c) {
            for (Int k : {1, 2, 5}) {
                const TruncatedCycleSet t(d, c, k);
                const auto values = t.values();
                REQUIRE(values == ems(d, c, k));
                for (Int m = 0; m <= (k + 3) * d; ++m) {
                    CHECK(t.contains(m) == std::binary_search(values.begin(), values.end(), m));
                }
                // below the horizon the truncation is invisible
                const auto full = cycle_set_for_denominator(d, c);
                for (Int m = 0; m <= t.horizon(); ++m) CHECK(t.contains(m) == full.contains(m));
            }
        }
    }
    CHECK_THROWS_AS(TruncatedCycleSet(3, 1, 0), InvariantError);
}

TEST_CASE("twin_primes_report") {
    CHECK(twin_primes_report(3, 50) == std::vector<TwinPair>{{3, 5}, {5, 7}, {11, 13}});
    CHECK(twin_primes_report(1, 1) == std::vector<TwinPair>{{3, 5}});
    CHECK(twin_primes_report(10, 10'000) == to_pairs(oracle::naive_first_twins(10)));
    CHECK(twin_primes_report(35, 10'000) == to_pairs(oracle::naive_first_twins(35)));
    CHECK_THROWS_AS(twin_primes_report(0, 5), InvariantError);
    CHECK_THROWS_AS(twin_primes_report(2, 0), InvariantError);
}

TEST_CASE("twin_primes_report either matches the oracle or reports exhaustion") {
    for (Int k : {1, 2, 3, 5, 10}) {
        for (std::size_t count : {2, 4, 8, 20}) {
            try {
                const auto pairs = twin_primes_report(count, k);
                CHECK(pairs == to_pairs(oracle::naive_first_twins(count)));
            } catch (const TruncationExhausted&) {
                // a larger k certifies at least as many pairs
                CHECK(twin_primes_report(count, 10'000) == to_pairs(oracle::naive_first_twins(count)));
            }
        }
    }
    CHECK_THROWS_AS(twin_primes_report(3, 1), TruncationExhausted);
}

TEST_CASE("write_twin_report") {
    std::ostringstream os;
    const std::vector<TwinPair> pairs{{3, 5}, {5, 7}};
    write_twin_report(os, pairs);
    CHECK(os.str() == "Twin Pair #1: {3, 5}\nTwin Pair #2: {5, 7}\n");
}
