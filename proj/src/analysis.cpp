#include "farey/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <span>

#include <json.hpp>

#include "farey/oracle.hpp"

namespace farey {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

// Creations immediately after g in the transitions out of F_{d_g}, ..., F_{upto - 1}.
Int creations_before(Int upto, Int s_g, Int d_g) {
    const auto v = floor_div(static_cast<std::int64_t>(upto) - static_cast<std::int64_t>(s_g),
                             static_cast<std::int64_t>(d_g));
    return v > 0 ? static_cast<Int>(v) : 0;
}

// Neumaier-compensated sum of squared deviations.
double deviation_sum(std::span<const FareyTriple> entries, std::span<const Int> indices) {
    const long double len = static_cast<long double>(entries.size());
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const long double x = static_cast<long double>(indices[i]) / len - entries[i].fraction().value();
        const long double term = x * x;
        const long double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return static_cast<double>(sum + comp);
}

struct Tracked {
    SequenceSweep sweep;
    std::unordered_map<Fraction, Int> s_f{{{0, 1}, 1}};

    void advance() {
        for (const auto& cf : sweep.advance()) s_f[cf.fraction] = cf.s_f;
    }
    void advance_to(Int m) {
        while (sweep.order() < m) advance();
    }
};

PropertyReport fail(PropertyReport r, std::vector<FareyTriple> witness) {
    r.holds = false;
    r.counterexample = std::move(witness);
    return r;
}

PropertyReport check_created_characterization(PropertyReport r, const FareySequence& seq) {
    FareySequence next;
    std::vector<CreatedFraction> cm;
    step_into(seq, next, cm);
    const Int d = seq.order + 1;
    std::vector<Fraction> expected;
    for (Int n = 1; n < d; ++n) {
        if (gcd(n, d) == 1) expected.push_back({n, d});
    }
    std::size_t j = 0;
    for (const auto& cf : cm) {
        const FareyTriple t{cf.fraction.n, cf.fraction.d, cf.s_f};
        if (cf.fraction.d != d || cf.fraction.n >= d || gcd(cf.fraction.n, d) != 1) return fail(r, {t});
        if (j >= expected.size() || !(expected[j] == cf.fraction)) {
            const Fraction missing = j < expected.size() ? expected[j] : cf.fraction;
            return fail(r, {{missing.n, missing.d, 0}});
        }
        ++j;
    }
    if (j != expected.size()) return fail(r, {{expected[j].n, expected[j].d, 0}});
    const auto& e = next.entries;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        const auto lhs = static_cast<unsigned __int128>(e[i + 1].n) * e[i].d;
        const auto rhs = static_cast<unsigned __int128>(e[i].n) * e[i + 1].d;
        if (lhs <= rhs || lhs - rhs != 1) return fail(r, {e[i], e[i + 1]});
    }
    return r;
}

PropertyReport check_periodicity(PropertyReport r, Tracked& tracked) {
    const Int m = tracked.sweep.order();
    // expected[d] holds the triples of F_m with denominator d that must
    // reappear in F_{m+d}
    std::vector<std::vector<FareyTriple>> expected(m + 1);
    for (const auto& t : tracked.sweep.current().entries) {
        if (t.terminal()) continue;
        if (m + 1 >= t.d + tracked.s_f.at(t.fraction())) expected[t.d].push_back(t);
    }
    for (Int j = 1; j <= m; ++j) {
        tracked.advance();
        if (expected[j].empty()) continue;
        std::unordered_map<Fraction, Int> found;
        for (const auto& t : tracked.sweep.current().entries) {
            if (t.d == j) found[t.fraction()] = t.s;
        }
        for (const auto& t : expected[j]) {
            const auto it = found.find(t.fraction());
            const Int s = it == found.end() ? 0 : it->second;
            if (s != t.s) return fail(r, {t, {t.n, t.d, s}});
        }
    }
    return r;
}

}  // namespace

PropertyReport check_property(int id, Int m) {
    if (id < 1 || id > 7) throw InvariantError("property id must be in 1..7");
    if (m < 2) throw InvariantError("properties are checked for m >= 2");
    PropertyReport r{id, m, true, std::nullopt};
    Tracked tracked;
    tracked.advance_to(m);
    const auto& entries = tracked.sweep.current().entries;

    switch (id) {
        case 1:
            return check_created_characterization(r, tracked.sweep.current());
        case 2: {
            std::unordered_map<Int, std::unordered_map<Int, FareyTriple>> seen;
            for (const auto& t : entries) {
                auto [it, inserted] = seen[t.d].emplace(t.s, t);
                if (!inserted) return fail(r, {it->second, t});
            }
            return r;
        }
        case 3:
            return check_periodicity(r, tracked);
        case 4:
        case 5:
            for (const auto& t : entries) {
                if (t.terminal()) continue;
                const Int s_f = tracked.s_f.at(t.fraction());
                const bool ok = id == 4 ? t.s == t.d - (m - s_f) % t.d
                                        : (t.s == 1) == ((m - s_f + 1) % t.d == 0);
                if (!ok) return fail(r, {t});
            }
            return r;
        case 6: {
            std::unordered_map<Int, FareyTriple> seen;
            for (const auto& t : entries) {
                if (t.s != 1) continue;
                auto [it, inserted] = seen.emplace(t.d, t);
                if (!inserted) return fail(r, {it->second, t});
            }
            return r;
        }
        default: {
            std::vector<bool> covered(m + 1, false);
            const FareyTriple* first_one = nullptr;
            for (const auto& t : entries) {
                if (t.s != 1) continue;
                covered[t.d] = true;
                if (first_one == nullptr) first_one = &t;
            }
            const bool prime = oracle::trial_division_is_prime(m + 1);
            for (Int d = 1; d <= m; ++d) {
                if (covered[d]) continue;
                if (!prime) return r;
                const auto it = std::find_if(entries.begin(), entries.end(),
                                             [d](const FareyTriple& t) { return t.d == d; });
                return fail(r, {*it});
            }
            return prime ? r : fail(r, {*first_one});
        }
    }
}

std::string to_json(const PropertyReport& report) {
    nlohmann::ordered_json j;
    j["property"] = report.property_id;
    j["order"] = report.order;
    j["holds"] = report.holds;
    if (report.counterexample) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& t : *report.counterexample) {
            nlohmann::ordered_json o;
            o["n"] = t.n;
            o["d"] = t.d;
            o["s"] = t.s;
            arr.push_back(std::move(o));
        }
        j["counterexample"] = std::move(arr);
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

CreationRegistry CreationRegistry::build(Int max_order) {
    if (max_order == 0) throw InvariantError("registry order must be positive");
    if (max_order > kDefaultMaxOrder) throw CapExceeded("registry order exceeds the configured cap");
    CreationRegistry reg;
    reg.max_order_ = max_order;
    reg.entries_.push_back(seed_zero());
    reg.entries_.push_back({{1, 1}, 0, 2, 1});
    SequenceSweep sweep;
    while (sweep.order() < max_order) {
        for (const auto& cf : sweep.advance()) reg.entries_.push_back(cf);
    }
    reg.index_.reserve(reg.entries_.size());
    for (std::size_t i = 0; i < reg.entries_.size(); ++i) reg.index_.emplace(reg.entries_[i].fraction, i);
    return reg;
}

const CreatedFraction* CreationRegistry::find(const Fraction& f) const noexcept {
    const auto it = index_.find(f);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const CreatedFraction& CreationRegistry::at(const Fraction& f) const {
    const auto* cf = find(f);
    if (cf == nullptr) throw InvariantError(to_string(f) + " is not in the registry");
    return *cf;
}

Fraction gap(const CreatedFraction& cf, Int m) {
    const Int d = cf.fraction.d;
    if (cf.fraction.n >= d) throw InvariantError("1/1 has no successor");
    if (m < cf.birth_order || m < d) throw InvariantError("gap: order precedes the birth of the fraction");
    const Int periods = (m - cf.s_f) / d;
    const Int den = checked::add(checked::mul(periods, checked::mul(d, d)), checked::mul(cf.s_f, d));
    return {1, den};
}

Int order_index(const Fraction& f, Int m, const CreationRegistry& registry) {
    if (!f.valid() || f.d > m) throw InvariantError(to_string(f) + " is not in F_" + std::to_string(m));
    if (m > registry.max_order()) throw InvariantError("registry does not cover F_" + std::to_string(m));
    const auto& cf = registry.at(f);
    std::int64_t index = static_cast<std::int64_t>(cf.i_f);
    for (const auto& g : registry.entries()) {
        if (g.fraction.d > m || !(g.fraction < f)) continue;
        index += static_cast<std::int64_t>(creations_before(m, g.s_f, g.fraction.d));
        index -= static_cast<std::int64_t>(creations_before(f.d, g.s_f, g.fraction.d));
    }
    return static_cast<Int>(index);
}

double franel_statistic(Int m) {
    const auto seq = generate(m);
    std::vector<Int> positions(seq.size());
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i + 1;
    return deviation_sum(seq.entries, positions);
}

double franel_statistic_by_formula(Int m) {
    if (m == 0) throw InvariantError("order must be positive");
    if (m > kDefaultMaxOrder) throw CapExceeded("order exceeds the configured cap");
    FranelSweep sweep;
    while (sweep.order() < m) sweep.advance();
    return sweep.formula_statistic();
}

FranelSweep::FranelSweep() {
    meta_.emplace(Fraction{0, 1}, Meta{1, 1, 0});
    meta_.emplace(Fraction{1, 1}, Meta{0, 2, 0});
}

void FranelSweep::advance() {
    sweep_.advance();
    const Int order = sweep_.order();
    const auto& entries = sweep_.current().entries;
    Int running = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& t = entries[i];
        if (t.d == order) {
            // born now: s_f is the successor's denominator, i_f the position
            meta_.emplace(t.fraction(), Meta{t.s, i + 1, running});
            continue;
        }
        const auto& meta = meta_.at(t.fraction());
        running += creations_before(order, meta.s_f, t.d);
    }
}

std::vector<Int> FranelSweep::formula_indices() const {
    const Int m = sweep_.order();
    const auto& entries = sweep_.current().entries;
    std::vector<Int> out;
    out.reserve(entries.size());
    Int prefix = 0;
    for (const auto& t : entries) {
        const auto& meta = meta_.at(t.fraction());
        out.push_back(meta.i_f + prefix - meta.birth_offset);
        if (!t.terminal()) prefix += creations_before(m, meta.s_f, t.d);
    }
    return out;
}

double FranelSweep::positional_statistic() const {
    const auto& entries = sweep_.current().entries;
    std::vector<Int> positions(entries.size());
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i + 1;
    return deviation_sum(entries, positions);
}

double FranelSweep::formula_statistic() const {
    const auto indices = formula_indices();
    return deviation_sum(sweep_.current().entries, indices);
}

std::vector<FranelRow> franel_table(Int m_max) {
    if (m_max == 0) throw InvariantError("franel_table needs m_max >= 1");
    if (m_max > kDefaultMaxOrder) throw CapExceeded("order exceeds the configured cap");
    std::vector<FranelRow> rows;
    rows.reserve(m_max);
    FranelSweep sweep;
    while (true) {
        rows.push_back({sweep.order(), sweep.positional_statistic(), sweep.current().size()});
        if (sweep.order() == m_max) break;
        sweep.advance();
    }
    return rows;
}

void write_franel_csv(std::ostream& os, const std::vector<FranelRow>& rows) {
    const auto flags = os.flags();
    const auto precision = os.precision();
    os << "m,statistic,count\n" << std::setprecision(15);
    for (const auto& row : rows) os << row.order << ',' << row.statistic << ',' << row.count << '\n';
    os.flags(flags);
    os.precision(precision);
}

}  // namespace farey
