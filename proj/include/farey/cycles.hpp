#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "farey/fraction.hpp"

namespace farey {

/// How s_f is obtained.
enum class SfMethod {
    /// Step the triple recursion to the birth order and read the recorded
    /// creation. Source of truth; O(Phi(d)) work per denominator.
    recorded,
    /// (-n^{-1}) mod d. Derived closed form, checked against `recorded`
    /// by the test suite.
    closed_form,
};

/// {m >= min_element : m = residue (mod modulus)}.
struct Progression {
    Int modulus = 1;
    Int residue = 0;
    Int min_element = 1;

    bool contains(Int m) const noexcept { return m >= min_element && m % modulus == residue; }

    friend bool operator==(const Progression&, const Progression&) = default;
};

/// A union of progressions sharing one modulus with pairwise distinct
/// residues.
class ResidueClassSet {
public:
    ResidueClassSet() = default;
    ResidueClassSet(Int modulus, std::vector<Progression> progressions);

    Int modulus() const noexcept { return modulus_; }
    /// Sorted by residue.
    const std::vector<Progression>& progressions() const noexcept { return progressions_; }

    bool contains(Int m) const noexcept {
        if (!present_[m % modulus_]) return false;
        return m >= max_min_ || find(m % modulus_).contains(m);
    }

    /// Smallest member; throws on an empty set.
    Int min_element() const;

    /// True when every progression starts at modulus + residue, the first
    /// member not below the modulus. Sets built from cycle_set are canonical.
    bool canonical() const noexcept;

    friend bool operator==(const ResidueClassSet& a, const ResidueClassSet& b) {
        return a.modulus_ == b.modulus_ && a.progressions_ == b.progressions_;
    }

private:
    const Progression& find(Int residue) const noexcept;

    Int modulus_ = 1;
    std::vector<Progression> progressions_;
    std::vector<bool> present_ = std::vector<bool>(1, false);
    Int max_min_ = 0;
};

/// Compact membership form of a canonical ResidueClassSet: one bit per
/// residue, members are the marked residues at or above the modulus.
class ResidueMask {
public:
    ResidueMask() = default;
    explicit ResidueMask(const ResidueClassSet& set);

    Int modulus() const noexcept { return modulus_; }
    bool contains(Int m) const noexcept { return m >= modulus_ && present_[m % modulus_]; }
    bool has_residue(Int r) const noexcept { return present_[r % modulus_]; }

private:
    Int modulus_ = 1;
    std::vector<bool> present_ = std::vector<bool>(1, false);
};

inline bool contains(const Progression& p, Int m) noexcept { return p.contains(m); }
inline bool contains(const ResidueClassSet& s, Int m) noexcept { return s.contains(m); }

/// Initial countdown s_f of a fraction at its birth. The seeds 0/1 and 1/2
/// return 1; 1/1 has no s_f.
Int s_initial(const Fraction& f, SfMethod method = SfMethod::closed_form);

/// s_f of every fraction with denominator d, in increasing fraction order.
std::vector<std::pair<Fraction, Int>> s_initial_for_denominator(Int d,
                                                                SfMethod method = SfMethod::closed_form);

/// The k-th order (k >= 1) at which f carries countdown c.
Int m_c(const Fraction& f, Int c, Int k, SfMethod method = SfMethod::closed_form);

/// All orders at which f carries countdown c.
Progression cycle_set(const Fraction& f, Int c, SfMethod method = SfMethod::closed_form);

/// All orders at which some fraction of denominator d carries countdown c.
ResidueClassSet cycle_set_for_denominator(Int d, Int c, SfMethod method = SfMethod::closed_form);

/// The truncated union {m_c(f, k) : d_f = d, 1 <= k <= k_max}, ascending.
std::vector<Int> ems(Int d, Int c, Int k_max);

/// `d=3 c=1 :: {m ≡ 0 (mod 3), m ≥ 3} ∪ {m ≡ 1 (mod 3), m ≥ 4}`
std::string render(const ResidueClassSet& set, Int c);

}  // namespace farey
