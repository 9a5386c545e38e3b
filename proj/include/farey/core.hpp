#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

/// Orders above this are refused by the materializing generators; use
/// `for_each_triple` to scan larger orders.
inline constexpr Int kDefaultMaxOrder = 10000;

/// F_m with the per-element countdown state.
struct FareySequence {
    Int order = 1;
    std::vector<FareyTriple> entries;

    std::size_t size() const noexcept { return entries.size(); }
    std::vector<Fraction> fractions() const;

    friend bool operator==(const FareySequence&, const FareySequence&) = default;
};

/// A mediant born in the transition F_{d-1} -> F_d.
///
/// `s_f` is the successor's denominator at birth and `i_f` the 1-based
/// position in the birth sequence. The seed 0/1 is represented with
/// birth_order 1, s_f = 1, i_f = 1.
struct CreatedFraction {
    Fraction fraction;
    Int s_f = 0;
    Int i_f = 0;
    Int birth_order = 0;

    friend bool operator==(const CreatedFraction&, const CreatedFraction&) = default;
};

/// The registry entry used for the seed 0/1.
CreatedFraction seed_zero();

/// (a.n + b.n, a.d + b.d). Throws InvariantError unless a < b and the
/// result is already reduced (i.e. a and b were Farey neighbors).
Fraction mediant(const Fraction& a, const Fraction& b);

/// Successor of `curr` in F_m given its predecessor `prev`.
Fraction next_term(const Fraction& prev, const Fraction& curr, Int m);

/// F_m as plain fractions via the two-term recurrence seeded with 0/1, 1/m.
std::vector<Fraction> generate_classic(Int m, Int max_order = kDefaultMaxOrder);

/// F_1 = [(0,1,1), (1,1,0)]; one step of the triple recursion gives the
/// F_2 = [(0,1,1), (1,2,1), (1,1,0)] seed.
FareySequence base_sequence();

/// F_2 = [(0,1,1), (1,2,1), (1,1,0)].
FareySequence initial_sequence();

/// Cheap structural validation applied before stepping; throws InvariantError.
void validate(const FareySequence& seq);

/// Builds F_{m+1} from F_m into `next`, reusing its storage, and writes the
/// created fractions C_m into `created`. The input is not validated.
void step_into(const FareySequence& seq, FareySequence& next, std::vector<CreatedFraction>& created);

/// F_{m+1} and C_m. Validates `seq` first.
std::pair<FareySequence, std::vector<CreatedFraction>> step(const FareySequence& seq);

/// F_m with full triple annotations.
FareySequence generate(Int m, Int max_order = kDefaultMaxOrder);

/// C_m: the fractions created in the transition F_m -> F_{m+1}, in order.
std::vector<CreatedFraction> created(Int m, Int max_order = kDefaultMaxOrder);

/// Visits the triples of F_m in order without materializing the sequence.
///
/// Uses the two-term recurrence for the fractions; the countdown of an
/// element with successor denominator e is d + e - m, the order at which
/// their mediant is born.
void for_each_triple(Int m, const std::function<void(const FareyTriple&)>& visit);

/// Iterates F_1, F_2, ... by repeated stepping with double-buffered storage.
class SequenceSweep {
public:
    SequenceSweep();
    explicit SequenceSweep(FareySequence start);

    const FareySequence& current() const noexcept { return current_; }
    Int order() const noexcept { return current_.order; }

    /// Steps once; returns the fractions created in that transition.
    std::span<const CreatedFraction> advance();

    /// Steps until current().order == m (no-op when already there).
    void advance_to(Int m);

private:
    FareySequence current_;
    FareySequence scratch_;
    std::vector<CreatedFraction> created_;
};

Int totient(Int k);
Int totient_summatory(Int m);

// JSON-lines interchange: a header {"order":m,"len":L} followed by one
// {"n":..,"d":..,"s":..} object per triple.
void write_jsonl(std::ostream& os, const FareySequence& seq);
FareySequence read_jsonl(std::istream& is);

}  // namespace farey
