#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "farey/core.hpp"

namespace farey {

/// Outcome of checking one structural property of F_m.
///
/// A counterexample is one or two triples. Where the witness is a fraction
/// that should be present but is missing, it is reported with s = 0.
struct PropertyReport {
    int property_id = 0;
    Int order = 0;
    bool holds = true;
    std::optional<std::vector<FareyTriple>> counterexample;
};

/// Checks property `id` (1..7) exhaustively over F_m, m >= 2.
///
///  1. C_m is exactly the reduced n/(m+1) with n < m+1, and F_{m+1} is a
///     Farey sequence.
///  2. Triples sharing a denominator have distinct s.
///  3. A triple with m >= d - 1 + s_f reappears unchanged in F_{m+d}.
///  4. s = d - ((m - s_f) mod d).
///  5. s = 1 iff (m - s_f + 1) mod d = 0.
///  6. Triples with s = 1 have distinct denominators.
///  7. m + 1 is prime iff every denominator 1..m carries an s = 1 triple.
PropertyReport check_property(int id, Int m);

std::string to_json(const PropertyReport& report);

/// Creation metadata (s_f, i_f) for every fraction up to some order,
/// including the seeds 0/1 (s_f = 1, i_f = 1) and 1/1 (s_f = 0, i_f = 2).
class CreationRegistry {
public:
    static CreationRegistry build(Int max_order);

    Int max_order() const noexcept { return max_order_; }
    const CreatedFraction& at(const Fraction& f) const;
    const CreatedFraction* find(const Fraction& f) const noexcept;
    const std::vector<CreatedFraction>& entries() const noexcept { return entries_; }

private:
    Int max_order_ = 1;
    std::vector<CreatedFraction> entries_;
    std::unordered_map<Fraction, std::size_t> index_;
};

/// Distance from cf.fraction to its successor in F_m:
/// 1 / (floor((m - s_f) / d) d^2 + s_f d).
Fraction gap(const CreatedFraction& cf, Int m);

/// 1-based position of f in F_m from creation metadata alone:
/// i_f + sum over g < f in F_m of max(0, floor((m - s_g)/d_g)) - max(0, floor((d_f - s_g)/d_g)).
Int order_index(const Fraction& f, Int m, const CreationRegistry& registry);

/// Sum over F_m of (I/(Phi(m)+1) - f)^2 with I the 1-based position.
double franel_statistic(Int m);

/// The same statistic with every I taken from the order-index formula.
double franel_statistic_by_formula(Int m);

/// Walks F_1, F_2, ... and exposes both index paths for the current order.
///
/// The subtracted part of the order-index sum only involves fractions of
/// F_{d_f}, so it is fixed at the birth of f and stored; the rest is a
/// prefix sum over the current sequence.
class FranelSweep {
public:
    FranelSweep();

    const FareySequence& current() const noexcept { return sweep_.current(); }
    Int order() const noexcept { return sweep_.order(); }
    void advance();

    /// Order indices of the current sequence evaluated by the formula.
    std::vector<Int> formula_indices() const;

    double positional_statistic() const;
    double formula_statistic() const;

private:
    struct Meta {
        Int s_f;
        Int i_f;
        Int birth_offset;
    };

    SequenceSweep sweep_;
    std::unordered_map<Fraction, Meta> meta_;
};

struct FranelRow {
    Int order = 0;
    double statistic = 0.0;
    Int count = 0;
};

std::vector<FranelRow> franel_table(Int m_max);

/// `m,statistic,count` with the statistic at 15 significant digits.
void write_franel_csv(std::ostream& os, const std::vector<FranelRow>& rows);

}  // namespace farey
