#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "farey/cycles.hpp"

namespace farey {

struct TwinPair {
    Int p = 0;
    Int q = 0;

    friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Memo of the per-denominator cycle sets used by the sieve predicates.
/// Entries are built on first use and never modified; lookups and inserts
/// are serialized by an internal mutex, so one cache may be shared.
class CycleSetCache {
public:
    /// Compact form of M_c(d).
    const ResidueMask& cycle_mask(Int d, Int c);
    /// Bit r set when some fraction of denominator d has s_f = r (mod d).
    const std::vector<bool>& initial_residues(Int d);

private:
    std::mutex mutex_;
    std::map<std::pair<Int, Int>, std::unique_ptr<ResidueMask>> masks_;
    std::map<Int, std::unique_ptr<std::vector<bool>>> initial_;
};

/// p - 1 lies in M_1(d) for every d = 1..p-1.
bool is_prime_farey(Int p, CycleSetCache& cache);
bool is_prime_farey(Int p);

/// The same sieve phrased through initial countdowns: for every d = 1..p-1
/// some fraction of denominator d has d | (p - s_f).
bool is_prime_farey_divisibility(Int p, CycleSetCache& cache);
bool is_prime_farey_divisibility(Int p);

/// p - 1 lies in M_1(d) for every d = 1..p-1 and in M_3(d) for every
/// d = 3..p-1 (a countdown of 3 cannot occur below denominator 3).
bool is_lesser_twin_farey(Int p, CycleSetCache& cache);
bool is_lesser_twin_farey(Int p);

/// The running intersection m_i of the prime and twin recursions.
class SieveAccumulator {
public:
    explicit SieveAccumulator(Int floor = 1) : floor_(floor) {}

    void add(ResidueClassSet predicate) { predicates_.push_back(std::move(predicate)); }
    bool contains(Int m) const noexcept;

    /// Smallest member not below floor(); scans at most `scan_cap` candidates.
    Int min(Int scan_cap) const;

    Int floor() const noexcept { return floor_; }
    void raise_floor(Int m);

    std::span<const ResidueClassSet> predicates() const noexcept { return predicates_; }

private:
    std::vector<ResidueClassSet> predicates_;
    Int floor_;
};

struct StreamOptions {
    /// Intersect M_1(d) for every d up to the newest prime instead of only
    /// at the primes already emitted.
    bool strict = false;
    /// Candidates examined per minimum extraction before CapExceeded.
    Int scan_cap = 10'000'000;
};

/// Odd primes 3, 5, 7, 11, ... from m_{i+1} = m_i ∩ M_1(d_i),
/// d_{i+1} = 1 + min m_{i+1}, seeded with M_1(2) and d = 3.
std::vector<Int> prime_stream(std::size_t count, const StreamOptions& options = {});

/// Twin pairs from the incremental recursion seeded with M_1(3) ∩ M_3(3).
std::vector<TwinPair> twin_stream(std::size_t count, const StreamOptions& options = {});

/// The finite set Ems[d, c, k_max] held by its progressions; iterating it
/// yields ems(d, c, k_max).
class TruncatedCycleSet {
public:
    TruncatedCycleSet(Int d, Int c, Int k_max);

    bool contains(Int m) const noexcept;
    /// Every member of M_c(d) up to this bound is present.
    Int horizon() const noexcept { return horizon_; }
    std::vector<Int> values() const;

private:
    ResidueClassSet exact_;
    Int span_;
    Int horizon_;
};

/// Replays the truncated-set twin prime program: explicit intersections of
/// Ems sets, one min per pair. Throws TruncationExhausted when the
/// truncated sets can no longer certify the next pair.
std::vector<TwinPair> twin_primes_report(std::size_t count, Int k_max);

/// `Twin Pair #i: {p, q}` lines.
void write_twin_report(std::ostream& os, std::span<const TwinPair> pairs);

}  // namespace farey
