#include "farey/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "farey/core.hpp"

namespace farey {

namespace {

// Inverse of a modulo d for gcd(a, d) = 1, d >= 2.
Int inverse_mod(Int a, Int d) {
    std::int64_t r0 = static_cast<std::int64_t>(d), r1 = static_cast<std::int64_t>(a % d);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (r0 != 1) throw InvariantError("inverse_mod: arguments are not coprime");
    const auto md = static_cast<std::int64_t>(d);
    return static_cast<Int>(((t0 % md) + md) % md);
}

Int closed_form_s(const Fraction& f) {
    if (f.d == 1) return 1;
    return f.d - inverse_mod(f.n, f.d);
}

void check_fraction(const Fraction& f) {
    if (!f.valid()) throw InvariantError("not an irreducible fraction in [0, 1]: " + to_string(f));
    if (f.n == f.d) throw InvariantError("1/1 has no initial countdown");
}

void check_c(const Fraction& f, Int c) {
    if (c < 1 || c > f.d) {
        throw InvariantError("countdown c = " + std::to_string(c) + " outside [1, " + std::to_string(f.d) +
                             "] for denominator " + std::to_string(f.d));
    }
}

Int m_c_with(Int d, Int s_f, Int c, Int k) {
    if (k == 0) throw InvariantError("m_c: k must be positive");
    // c <= s_f: k d + s_f - c; otherwise (k + 1) d + s_f - c
    const Int periods = c <= s_f ? k : checked::add(k, 1);
    return checked::sub(checked::add(checked::mul(periods, d), s_f), c);
}

Progression progression_with(Int d, Int s_f, Int c) {
    return {d, (s_f + d - c) % d, m_c_with(d, s_f, c, 1)};
}

}  // namespace

ResidueClassSet::ResidueClassSet(Int modulus, std::vector<Progression> progressions)
    : modulus_(modulus), progressions_(std::move(progressions)) {
    if (modulus == 0) throw InvariantError("residue class modulus must be positive");
    present_.assign(modulus_, false);
    std::sort(progressions_.begin(), progressions_.end(),
              [](const Progression& a, const Progression& b) { return a.residue < b.residue; });
    for (const auto& p : progressions_) {
        if (p.modulus != modulus_ || p.residue >= modulus_ || p.min_element == 0 ||
            p.min_element % modulus_ != p.residue) {
            throw InvariantError("progression does not match the set modulus");
        }
        if (present_[p.residue]) throw InvariantError("duplicate residue in residue class set");
        present_[p.residue] = true;
        max_min_ = std::max(max_min_, p.min_element);
    }
}

const Progression& ResidueClassSet::find(Int residue) const noexcept {
    return *std::lower_bound(progressions_.begin(), progressions_.end(), residue,
                             [](const Progression& p, Int r) { return p.residue < r; });
}

Int ResidueClassSet::min_element() const {
    if (progressions_.empty()) throw InvariantError("empty residue class set has no minimum");
    Int best = progressions_.front().min_element;
    for (const auto& p : progressions_) best = std::min(best, p.min_element);
    return best;
}

bool ResidueClassSet::canonical() const noexcept {
    return std::all_of(progressions_.begin(), progressions_.end(),
                       [&](const Progression& p) { return p.min_element == modulus_ + p.residue; });
}

ResidueMask::ResidueMask(const ResidueClassSet& set) : modulus_(set.modulus()), present_(set.modulus(), false) {
    if (!set.canonical()) throw InvariantError("residue mask requires a canonical residue class set");
    for (const auto& p : set.progressions()) present_[p.residue] = true;
}

std::vector<std::pair<Fraction, Int>> s_initial_for_denominator(Int d, SfMethod method) {
    if (d == 0) throw InvariantError("denominator must be positive");
    std::vector<std::pair<Fraction, Int>> out;
    if (d == 1) {
        out.push_back({{0, 1}, 1});
        return out;
    }
    if (method == SfMethod::recorded) {
        for (const auto& cf : created(d - 1, d)) out.push_back({cf.fraction, cf.s_f});
        return out;
    }
    for (Int n = 1; n < d; ++n) {
        if (gcd(n, d) == 1) out.push_back({{n, d}, closed_form_s({n, d})});
    }
    return out;
}

Int s_initial(const Fraction& f, SfMethod method) {
    check_fraction(f);
    if (f.d == 1) return 1;
    if (method == SfMethod::closed_form) return closed_form_s(f);
    for (const auto& [frac, s] : s_initial_for_denominator(f.d, SfMethod::recorded)) {
        if (frac == f) return s;
    }
    throw InvariantError("no recorded creation for " + to_string(f));
}

Int m_c(const Fraction& f, Int c, Int k, SfMethod method) {
    check_fraction(f);
    check_c(f, c);
    return m_c_with(f.d, s_initial(f, method), c, k);
}

Progression cycle_set(const Fraction& f, Int c, SfMethod method) {
    check_fraction(f);
    check_c(f, c);
    return progression_with(f.d, s_initial(f, method), c);
}

ResidueClassSet cycle_set_for_denominator(Int d, Int c, SfMethod method) {
    if (d == 0 || c < 1 || c > d) {
        throw InvariantError("cycle set needs 1 <= c <= d (d = " + std::to_string(d) +
                             ", c = " + std::to_string(c) + ")");
    }
    std::vector<Progression> progs;
    for (const auto& [frac, s_f] : s_initial_for_denominator(d, method)) {
        progs.push_back(progression_with(d, s_f, c));
    }
    return {d, std::move(progs)};
}

std::vector<Int> ems(Int d, Int c, Int k_max) {
    if (d == 0 || c < 1 || c > d) throw InvariantError("ems needs 1 <= c <= d");
    if (k_max == 0) throw InvariantError("ems needs k_max >= 1");
    std::vector<Int> out;
    for (const auto& [frac, s_f] : s_initial_for_denominator(d)) {
        for (Int k = 1; k <= k_max; ++k) out.push_back(m_c_with(d, s_f, c, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string render(const ResidueClassSet& set, Int c) {
    std::ostringstream os;
    os << "d=" << set.modulus() << " c=" << c << " :: ";
    bool first = true;
    for (const auto& p : set.progressions()) {
        if (!first) os << " ∪ ";
        first = false;
        os << "{m ≡ " << p.residue << " (mod " << p.modulus << "), m ≥ " << p.min_element << "}";
    }
    if (first) os << "∅";
    return os.str();
}

}  // namespace farey
