#include "farey/fraction.hpp"

#include <charconv>
#include <ostream>

namespace farey {

Int gcd(Int a, Int b) noexcept {
    while (b != 0) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Fraction Fraction::make(Int n, Int d) {
    const Fraction f{n, d};
    if (!f.valid()) {
        throw InvariantError("not an irreducible fraction in [0, 1]: " + std::to_string(n) + "/" +
                             std::to_string(d));
    }
    return f;
}

std::string to_string(const Fraction& f) {
    return std::to_string(f.n) + "/" + std::to_string(f.d);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.n << '/' << f.d; }

std::ostream& operator<<(std::ostream& os, const FareyTriple& t) {
    return os << '(' << t.n << ',' << t.d << ',' << t.s << ')';
}

namespace {

Int parse_uint(std::string_view text, const std::string& whole) {
    Int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw InvariantError("malformed fraction '" + whole + "'");
    }
    return value;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Fraction::make(parse_uint(text, text), 1);
    const std::string_view view(text);
    return Fraction::make(parse_uint(view.substr(0, slash), text),
                          parse_uint(view.substr(slash + 1), text));
}

Fraction difference(const Fraction& a, const Fraction& b) {
    const Int lhs = checked::mul(b.n, a.d);
    const Int rhs = checked::mul(a.n, b.d);
    if (lhs < rhs) throw InvariantError("difference: expected a <= b");
    Int num = lhs - rhs;
    Int den = checked::mul(a.d, b.d);
    if (num == 0) return {0, 1};
    const Int g = gcd(num, den);
    return {num / g, den / g};
}

}  // namespace farey
