#include "farey/core.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace farey {

namespace {

void require_order(Int m, Int max_order) {
    if (m == 0) throw InvariantError("order must be positive");
    if (m > max_order) {
        throw CapExceeded("order " + std::to_string(m) + " exceeds the configured cap " +
                          std::to_string(max_order));
    }
}

// c.n * b.d - b.n * c.d == 1, evaluated without leaving 128 bits.
bool unimodular(const Fraction& b, const Fraction& c) noexcept {
    const auto lhs = static_cast<unsigned __int128>(c.n) * b.d;
    const auto rhs = static_cast<unsigned __int128>(b.n) * c.d;
    return lhs > rhs && lhs - rhs == 1;
}

}  // namespace

std::vector<Fraction> FareySequence::fractions() const {
    std::vector<Fraction> out;
    out.reserve(entries.size());
    for (const auto& t : entries) out.push_back(t.fraction());
    return out;
}

CreatedFraction seed_zero() { return {{0, 1}, 1, 1, 1}; }

Fraction mediant(const Fraction& a, const Fraction& b) {
    if (!(a < b)) throw InvariantError("mediant: expected " + to_string(a) + " < " + to_string(b));
    const Fraction m{checked::add(a.n, b.n), checked::add(a.d, b.d)};
    if (gcd(m.n, m.d) != 1) {
        throw InvariantError("mediant of " + to_string(a) + " and " + to_string(b) +
                             " is not reduced; inputs are not Farey neighbors");
    }
    return m;
}

Fraction next_term(const Fraction& prev, const Fraction& curr, Int m) {
    if (curr.d == 0) throw InvariantError("next_term: zero denominator");
    const Int q = checked::add(prev.d, m) / curr.d;
    const Int qn = checked::mul(q, curr.n);
    const Int qd = checked::mul(q, curr.d);
    if (qn < prev.n || qd < prev.d) {
        throw InvariantError("next_term: inputs are not consecutive in F_" + std::to_string(m));
    }
    const Fraction next{qn - prev.n, qd - prev.d};
    if (next.d == 0 || next.d > m || next.n > next.d || !unimodular(curr, next)) {
        throw InvariantError("next_term: inputs are not consecutive in F_" + std::to_string(m));
    }
    return next;
}

std::vector<Fraction> generate_classic(Int m, Int max_order) {
    require_order(m, max_order);
    std::vector<Fraction> out;
    out.reserve(totient_summatory(m) + 1);
    out.push_back({0, 1});
    if (m == 1) {
        out.push_back({1, 1});
        return out;
    }
    out.push_back({1, m});
    while (!(out.back() == Fraction{1, 1})) {
        out.push_back(next_term(out[out.size() - 2], out.back(), m));
    }
    return out;
}

FareySequence base_sequence() { return {1, {{0, 1, 1}, {1, 1, 0}}}; }

FareySequence initial_sequence() { return {2, {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}}}; }

void validate(const FareySequence& seq) {
    const auto& e = seq.entries;
    if (seq.order == 0) throw InvariantError("sequence order must be positive");
    if (e.size() < 2) throw InvariantError("sequence has fewer than two entries");
    if (!(e.front() == FareyTriple{0, 1, 1})) throw InvariantError("sequence must start with (0,1,1)");
    if (!(e.back() == FareyTriple{1, 1, 0})) throw InvariantError("sequence must end with (1,1,0)");
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        const auto& t = e[i];
        if (t.d > seq.order) {
            throw InvariantError("entry " + std::to_string(i + 1) + " has denominator above the order");
        }
        if (t.s < 1 || t.s > t.d) {
            throw InvariantError("entry " + std::to_string(i + 1) + " has s outside [1, d]");
        }
        if (!unimodular(t.fraction(), e[i + 1].fraction())) {
            throw InvariantError("entries " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                 " are not Farey neighbors");
        }
    }
    if (e.size() != totient_summatory(seq.order) + 1) {
        throw InvariantError("sequence length does not match the order");
    }
}

void step_into(const FareySequence& seq, FareySequence& next, std::vector<CreatedFraction>& created) {
    const auto& in = seq.entries;
    next.order = checked::add(seq.order, 1);
    next.entries.clear();
    created.clear();
    next.entries.reserve(in.size() + seq.order + 1);
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
        const auto& t = in[i];
        if (t.s > 1) {
            next.entries.push_back({t.n, t.d, t.s - 1});
        } else if (t.s == 1) {
            const auto& succ = in[i + 1];
            next.entries.push_back({t.n, t.d, t.d});
            const Int n = checked::add(t.n, succ.n);
            const Int d = checked::add(t.d, succ.d);
            next.entries.push_back({n, d, succ.d});
            created.push_back({{n, d}, succ.d, next.entries.size(), d});
        } else {
            throw InvariantError("non-terminal entry with s = 0");
        }
    }
    next.entries.push_back({1, 1, 0});
}

std::pair<FareySequence, std::vector<CreatedFraction>> step(const FareySequence& seq) {
    validate(seq);
    std::pair<FareySequence, std::vector<CreatedFraction>> out;
    step_into(seq, out.first, out.second);
    return out;
}

FareySequence generate(Int m, Int max_order) {
    require_order(m, max_order);
    SequenceSweep sweep;
    sweep.advance_to(m);
    return sweep.current();
}

std::vector<CreatedFraction> created(Int m, Int max_order) {
    require_order(m, max_order);
    SequenceSweep sweep;
    sweep.advance_to(m);
    const auto c = sweep.advance();
    return {c.begin(), c.end()};
}

void for_each_triple(Int m, const std::function<void(const FareyTriple&)>& visit) {
    if (m == 0) throw InvariantError("order must be positive");
    if (m == 1) {
        visit({0, 1, 1});
        visit({1, 1, 0});
        return;
    }
    Fraction prev{0, 1};
    Fraction curr{1, m};
    while (true) {
        visit({prev.n, prev.d, prev.d + curr.d - m});
        if (curr == Fraction{1, 1}) break;
        const Fraction next = next_term(prev, curr, m);
        prev = curr;
        curr = next;
    }
    visit({1, 1, 0});
}

SequenceSweep::SequenceSweep() : current_(base_sequence()) {}

SequenceSweep::SequenceSweep(FareySequence start) : current_(std::move(start)) { validate(current_); }

std::span<const CreatedFraction> SequenceSweep::advance() {
    step_into(current_, scratch_, created_);
    std::swap(current_, scratch_);
    return created_;
}

void SequenceSweep::advance_to(Int m) {
    if (m < current_.order) throw InvariantError("sweep cannot move backwards");
    while (current_.order < m) advance();
}

Int totient(Int k) {
    if (k == 0) throw InvariantError("totient of zero");
    Int result = k;
    for (Int p = 2; p <= k / p; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

Int totient_summatory(Int m) {
    if (m == 0) throw InvariantError("totient summatory of zero");
    Int sum = 0;
    for (Int k = 1; k <= m; ++k) sum = checked::add(sum, totient(k));
    return sum;
}

void write_jsonl(std::ostream& os, const FareySequence& seq) {
    os << "{\"order\":" << seq.order << ",\"len\":" << seq.entries.size() << "}\n";
    for (const auto& t : seq.entries) {
        os << "{\"n\":" << t.n << ",\"d\":" << t.d << ",\"s\":" << t.s << "}\n";
    }
}

namespace {

Int field(const nlohmann::json& obj, const char* key, std::size_t line) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_unsigned()) {
        throw InvariantError("line " + std::to_string(line) + ": missing or invalid \"" + key + "\"");
    }
    return it->get<Int>();
}

}  // namespace

FareySequence read_jsonl(std::istream& is) {
    FareySequence seq;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    Int expected = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvariantError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!obj.is_object()) throw InvariantError("line " + std::to_string(lineno) + ": expected an object");
        if (!have_header) {
            seq.order = field(obj, "order", lineno);
            expected = field(obj, "len", lineno);
            have_header = true;
            continue;
        }
        seq.entries.push_back({field(obj, "n", lineno), field(obj, "d", lineno), field(obj, "s", lineno)});
    }
    if (!have_header) throw InvariantError("missing {\"order\",\"len\"} header line");
    if (seq.entries.size() != expected) {
        throw InvariantError("header announces " + std::to_string(expected) + " triples, found " +
                             std::to_string(seq.entries.size()));
    }
    return seq;
}

}  // namespace farey
