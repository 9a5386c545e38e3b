#include "farey/primes.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

namespace farey {

const ResidueMask& CycleSetCache::cycle_mask(Int d, Int c) {
    std::lock_guard lock(mutex_);
    auto& slot = masks_[{d, c}];
    if (!slot) slot = std::make_unique<ResidueMask>(cycle_set_for_denominator(d, c));
    return *slot;
}

const std::vector<bool>& CycleSetCache::initial_residues(Int d) {
    std::lock_guard lock(mutex_);
    auto& slot = initial_[d];
    if (!slot) {
        slot = std::make_unique<std::vector<bool>>(d, false);
        for (const auto& [frac, s_f] : s_initial_for_denominator(d)) (*slot)[s_f % d] = true;
    }
    return *slot;
}

namespace {

CycleSetCache& shared_cache() {
    static CycleSetCache cache;
    return cache;
}

}  // namespace

bool is_prime_farey(Int p, CycleSetCache& cache) {
    if (p < 2) throw InvariantError("is_prime_farey needs p >= 2");
    for (Int d = 1; d < p; ++d) {
        if (!cache.cycle_mask(d, 1).contains(p - 1)) return false;
    }
    return true;
}

bool is_prime_farey(Int p) { return is_prime_farey(p, shared_cache()); }

bool is_prime_farey_divisibility(Int p, CycleSetCache& cache) {
    if (p < 2) throw InvariantError("is_prime_farey_divisibility needs p >= 2");
    for (Int d = 1; d < p; ++d) {
        // s_f < d < p, so d | (p - s_f) iff p = s_f (mod d)
        if (!cache.initial_residues(d)[p % d]) return false;
    }
    return true;
}

bool is_prime_farey_divisibility(Int p) { return is_prime_farey_divisibility(p, shared_cache()); }

bool is_lesser_twin_farey(Int p, CycleSetCache& cache) {
    if (p < 3) throw InvariantError("is_lesser_twin_farey needs p >= 3");
    for (Int d = 1; d < p; ++d) {
        if (!cache.cycle_mask(d, 1).contains(p - 1)) return false;
        if (d >= 3 && !cache.cycle_mask(d, 3).contains(p - 1)) return false;
    }
    return true;
}

bool is_lesser_twin_farey(Int p) { return is_lesser_twin_farey(p, shared_cache()); }

bool SieveAccumulator::contains(Int m) const noexcept {
    return std::all_of(predicates_.begin(), predicates_.end(),
                       [m](const ResidueClassSet& s) { return s.contains(m); });
}

Int SieveAccumulator::min(Int scan_cap) const {
    Int m = floor_;
    for (Int scanned = 0; scanned < scan_cap; ++scanned, m = checked::add(m, 1)) {
        if (contains(m)) return m;
    }
    throw CapExceeded("no member of the sieve intersection within " + std::to_string(scan_cap) +
                      " candidates of " + std::to_string(floor_));
}

void SieveAccumulator::raise_floor(Int m) {
    if (m < floor_) throw InvariantError("sieve floor cannot decrease");
    floor_ = m;
}

std::vector<Int> prime_stream(std::size_t count, const StreamOptions& options) {
    if (count == 0) throw InvariantError("prime_stream needs count >= 1");
    SieveAccumulator acc;
    acc.add(cycle_set_for_denominator(2, 1));
    Int d = 3;
    Int sieved_through = 2;
    std::vector<Int> out{d};
    while (out.size() < count) {
        if (options.strict) {
            for (Int k = sieved_through + 1; k <= d; ++k) acc.add(cycle_set_for_denominator(k, 1));
        } else {
            acc.add(cycle_set_for_denominator(d, 1));
        }
        sieved_through = d;
        const Int m = acc.min(options.scan_cap);
        acc.raise_floor(m);
        d = checked::add(m, 1);
        out.push_back(d);
    }
    return out;
}

std::vector<TwinPair> twin_stream(std::size_t count, const StreamOptions& options) {
    if (count == 0) throw InvariantError("twin_stream needs count >= 1");
    SieveAccumulator acc;
    acc.add(cycle_set_for_denominator(3, 1));
    acc.add(cycle_set_for_denominator(3, 3));
    Int d = 3;
    std::vector<TwinPair> out{{3, 5}};
    while (out.size() < count) {
        const Int m = acc.min(options.scan_cap);
        acc.raise_floor(m);
        const Int next = checked::add(m, 1);
        for (Int k = d + 1; k <= next; ++k) {
            acc.add(cycle_set_for_denominator(k, 1));
            acc.add(cycle_set_for_denominator(k, 3));
        }
        d = next;
        out.push_back({d, checked::add(d, 2)});
    }
    return out;
}

TruncatedCycleSet::TruncatedCycleSet(Int d, Int c, Int k_max)
    : exact_(cycle_set_for_denominator(d, c)), span_(0), horizon_(0) {
    if (k_max == 0) throw InvariantError("truncated cycle set needs k_max >= 1");
    if (!exact_.canonical()) throw InvariantError("cycle set is not canonical");
    // progression with residue r runs d + r, 2d + r, ..., k_max d + r
    span_ = checked::mul(k_max, d);
    horizon_ = std::numeric_limits<Int>::max();
    for (const auto& p : exact_.progressions()) {
        horizon_ = std::min(horizon_, checked::add(span_, p.min_element) - 1);
    }
}

bool TruncatedCycleSet::contains(Int m) const noexcept {
    return exact_.contains(m) && m <= span_ + m % exact_.modulus();
}

std::vector<Int> TruncatedCycleSet::values() const {
    std::vector<Int> out;
    const Int d = exact_.modulus();
    for (const auto& p : exact_.progressions()) {
        for (Int m = p.min_element; m < span_ + p.min_element; m += d) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class TruncatedIntersection {
public:
    TruncatedIntersection(const TruncatedCycleSet& a, const TruncatedCycleSet& b)
        : horizon_(std::min(a.horizon(), b.horizon())) {
        for (Int m : a.values()) {
            if (b.contains(m)) members_.push_back(m);
        }
    }

    void intersect(const TruncatedCycleSet& set) {
        horizon_ = std::min(horizon_, set.horizon());
        std::erase_if(members_, [&](Int m) { return !set.contains(m); });
    }

    Int certified_min(std::size_t pairs_so_far) const {
        if (members_.empty()) {
            throw TruncationExhausted("truncated intersection is empty after " + std::to_string(pairs_so_far) +
                                      " pair(s); raise k");
        }
        if (members_.front() > horizon_) {
            throw TruncationExhausted("truncated minimum " + std::to_string(members_.front()) +
                                      " lies beyond the certified horizon " + std::to_string(horizon_) +
                                      " after " + std::to_string(pairs_so_far) + " pair(s); raise k");
        }
        return members_.front();
    }

private:
    std::vector<Int> members_;
    Int horizon_;
};

}  // namespace

std::vector<TwinPair> twin_primes_report(std::size_t count, Int k_max) {
    if (count == 0) throw InvariantError("twin_primes_report needs count >= 1");
    if (k_max == 0) throw InvariantError("twin_primes_report needs k >= 1");
    TruncatedIntersection l(TruncatedCycleSet(3, 1, k_max), TruncatedCycleSet(3, 3, k_max));
    Int p = 3;
    std::vector<TwinPair> pairs{{p, p + 2}};
    while (pairs.size() < count) {
        const Int q = l.certified_min(pairs.size()) + 1;
        pairs.push_back({q, q + 2});
        if (pairs.size() == count) break;
        for (Int j = p + 1; j <= q; ++j) {
            l.intersect(TruncatedCycleSet(j, 1, k_max));
            l.intersect(TruncatedCycleSet(j, 3, k_max));
        }
        p = q;
    }
    return pairs;
}

void write_twin_report(std::ostream& os, std::span<const TwinPair> pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        os << "Twin Pair #" << i + 1 << ": {" << pairs[i].p << ", " << pairs[i].q << "}\n";
    }
}

}  // namespace farey
