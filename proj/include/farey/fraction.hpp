#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "farey/errors.hpp"

namespace farey {

using Int = std::uint64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer underflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace checked

Int gcd(Int a, Int b) noexcept;

/// A rational n/d in [0, 1], stored as the ordered pair (n, d).
///
/// Construction through `Fraction::make` enforces gcd(n, d) = 1 and
/// 0 <= n <= d; the aggregate form is left open for hot loops that already
/// know their inputs are reduced.
struct Fraction {
    Int n = 0;
    Int d = 1;

    static Fraction make(Int n, Int d);

    bool valid() const noexcept { return d != 0 && n <= d && gcd(n, d) == 1; }

    long double value() const noexcept {
        return static_cast<long double>(n) / static_cast<long double>(d);
    }

    friend bool operator==(const Fraction&, const Fraction&) = default;

    /// Rational order by cross multiplication (exact, 128-bit).
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
        const auto lhs = static_cast<unsigned __int128>(a.n) * b.d;
        const auto rhs = static_cast<unsigned __int128>(b.n) * a.d;
        return lhs <=> rhs;
    }
};

std::string to_string(const Fraction& f);
std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Parses "n/d" (also accepts a bare "0" or "1").
Fraction parse_fraction(const std::string& text);

/// A Farey sequence element (n, d, s): the fraction plus the number of
/// following orders until a new fraction appears right after it.
/// s = 0 marks the terminal 1/1.
struct FareyTriple {
    Int n = 0;
    Int d = 1;
    Int s = 0;

    Fraction fraction() const noexcept { return {n, d}; }
    bool terminal() const noexcept { return n == 1 && d == 1; }

    friend bool operator==(const FareyTriple&, const FareyTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const FareyTriple& t);

/// Exact difference b - a of two fractions with a <= b, reduced.
Fraction difference(const Fraction& a, const Fraction& b);

}  // namespace farey

template <>
struct std::hash<farey::Fraction> {
    std::size_t operator()(const farey::Fraction& f) const noexcept {
        return std::hash<std::uint64_t>{}(f.n * 0x9E3779B97F4A7C15ULL ^ (f.d + (f.n << 32)));
    }
};
