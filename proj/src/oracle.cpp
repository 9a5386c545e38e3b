#include "farey/oracle.hpp"

#include <algorithm>
#include <string>

namespace farey::oracle {

namespace {

Int euclid(Int a, Int b) {
    return b == 0 ? a : euclid(b, a % b);
}

bool less_by_value(const Fraction& a, const Fraction& b) {
    return static_cast<unsigned __int128>(a.n) * b.d < static_cast<unsigned __int128>(b.n) * a.d;
}

void cap(Int value, Int limit, const char* what) {
    if (value > limit) {
        throw CapExceeded(std::string("oracle ") + what + " cap exceeded: " + std::to_string(value) + " > " +
                          std::to_string(limit));
    }
}

}  // namespace

std::vector<Fraction> naive_farey(Int m, const OracleConfig& cfg) {
    if (m == 0) throw InvariantError("naive_farey: order must be positive");
    cap(m, cfg.max_order, "order");
    std::vector<Fraction> out;
    for (Int d = 1; d <= m; ++d) {
        for (Int n = 0; n <= d; ++n) {
            if (euclid(n, d) == 1) out.push_back({n, d});
        }
    }
    std::sort(out.begin(), out.end(), less_by_value);
    return out;
}

Fraction naive_successor(const Fraction& f, Int m, const OracleConfig& cfg) {
    if (f.n >= f.d) throw InvariantError("naive_successor: 1/1 has no successor");
    cap(m, cfg.max_n, "order");
    Fraction best{1, 1};
    for (Int q = 1; q <= m; ++q) {
        const Int p = f.n * q / f.d + 1;  // smallest p with p/q > f
        if (p > q) continue;
        const Fraction cand{p, q};
        if (less_by_value(cand, best)) best = cand;
    }
    const Int g = euclid(best.n, best.d);
    return {best.n / g, best.d / g};
}

Int naive_s(const Fraction& f, Int m, const OracleConfig& cfg) {
    const Fraction succ = naive_successor(f, m, cfg);
    // F_{m+k} differs from F_m only by the denominators m+1..m+k, so it is
    // enough to look for a fraction of each new denominator inside (f, succ).
    for (Int q = m + 1;; ++q) {
        cap(q, cfg.max_n, "scan");
        const Int p = f.n * q / f.d + 1;
        if (less_by_value({p, q}, succ)) return q - m;
    }
}

Int naive_totient(Int k) {
    if (k == 0) throw InvariantError("naive_totient: zero");
    Int count = 0;
    for (Int i = 1; i <= k; ++i) {
        if (euclid(i, k) == 1) ++count;
    }
    return count;
}

bool trial_division_is_prime(Int n) {
    if (n < 2) return false;
    for (Int k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

std::vector<TwinPair> naive_twins(Int limit, const OracleConfig& cfg) {
    cap(limit, cfg.max_n, "limit");
    std::vector<TwinPair> out;
    for (Int p = 2; p + 2 <= limit; ++p) {
        if (trial_division_is_prime(p) && trial_division_is_prime(p + 2)) out.push_back({p, p + 2});
    }
    return out;
}

std::vector<Int> naive_odd_primes(std::size_t count) {
    std::vector<Int> out;
    for (Int n = 3; out.size() < count; n += 2) {
        if (trial_division_is_prime(n)) out.push_back(n);
    }
    return out;
}

std::vector<TwinPair> naive_first_twins(std::size_t count) {
    std::vector<TwinPair> out;
    for (Int p = 3; out.size() < count; p += 2) {
        if (trial_division_is_prime(p) && trial_division_is_prime(p + 2)) out.push_back({p, p + 2});
    }
    return out;
}

}  // namespace farey::oracle
