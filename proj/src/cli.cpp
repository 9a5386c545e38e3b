#include "farey/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "farey/analysis.hpp"
#include "farey/core.hpp"
#include "farey/cycles.hpp"
#include "farey/oracle.hpp"
#include "farey/primes.hpp"

namespace farey::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Emits triples in one of the output formats, one element at a time.
class TripleWriter {
public:
    TripleWriter(std::ostream& os, std::string format, Int order, Int length, bool with_s)
        : os_(os), format_(std::move(format)), with_s_(with_s) {
        if (format_ == "triples-jsonl") {
            os_ << "{\"order\":" << order << ",\"len\":" << length << "}\n";
        } else if (format_ == "csv") {
            os_ << (with_s_ ? "n,d,s\n" : "n,d\n");
        } else if (format_ == "report-text") {
            os_ << "F_" << order << " =";
        }
    }

    void operator()(const FareyTriple& t) {
        if (format_ == "triples-jsonl") {
            os_ << "{\"n\":" << t.n << ",\"d\":" << t.d << ",\"s\":" << t.s << "}\n";
        } else if (format_ == "fractions") {
            os_ << t.n << '/' << t.d << '\n';
        } else if (format_ == "csv") {
            os_ << t.n << ',' << t.d;
            if (with_s_) os_ << ',' << t.s;
            os_ << '\n';
        } else {
            os_ << (first_ ? " " : " || ");
            if (with_s_) {
                os_ << t;
            } else {
                os_ << '(' << t.n << ',' << t.d << ')';
            }
        }
        first_ = false;
    }

    void finish() {
        if (format_ == "report-text") os_ << '\n';
    }

private:
    std::ostream& os_;
    std::string format_;
    bool with_s_;
    bool first_ = true;
};

void write_list(std::ostream& os, const std::vector<Int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    os << '\n';
}

// One named check of the self test.
struct SelfTest {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, const std::function<std::string()>& body) {
        std::string problem;
        try {
            problem = body();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            out << "ok   " << name << '\n';
        } else {
            ++failures;
            out << "FAIL " << name << ": " << problem << '\n';
        }
    }
};

int selftest(Int max_order, std::ostream& out) {
    SelfTest t{out};
    t.check("sequences match enumeration", [&]() -> std::string {
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m, sweep.advance()) {
            const auto fr = sweep.current().fractions();
            if (fr != oracle::naive_farey(m, {max_order, 10'000'000})) return "F_" + std::to_string(m);
            if (fr != generate_classic(m)) return "classic F_" + std::to_string(m);
        }
        return {};
    });
    t.check("countdowns match successor scan", [&]() -> std::string {
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m, sweep.advance()) {
            for (const auto& e : sweep.current().entries) {
                if (!e.terminal() && e.s != oracle::naive_s(e.fraction(), m)) {
                    return "F_" + std::to_string(m) + " at " + to_string(e.fraction());
                }
            }
        }
        return {};
    });
    t.check("created counts equal totient", [&]() -> std::string {
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m) {
            if (sweep.advance().size() != oracle::naive_totient(m + 1)) return "C_" + std::to_string(m);
        }
        return {};
    });
    t.check("properties 1-7", [&]() -> std::string {
        for (Int m = 2; m <= max_order; ++m) {
            for (int id = 1; id <= 7; ++id) {
                const auto r = check_property(id, m);
                if (!r.holds) return to_json(r);
            }
        }
        return {};
    });
    t.check("gap formula", [&]() -> std::string {
        const auto reg = CreationRegistry::build(max_order);
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m, sweep.advance()) {
            const auto& e = sweep.current().entries;
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                const auto diff = difference(e[i].fraction(), e[i + 1].fraction());
                if (!(gap(reg.at(e[i].fraction()), m) == diff)) return "F_" + std::to_string(m);
            }
        }
        return {};
    });
    t.check("order index formula", [&]() -> std::string {
        const auto reg = CreationRegistry::build(max_order);
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m, sweep.advance()) {
            const auto& e = sweep.current().entries;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (order_index(e[i].fraction(), m, reg) != i + 1) return "F_" + std::to_string(m);
            }
        }
        return {};
    });
    t.check("initial countdown closed form", [&]() -> std::string {
        SequenceSweep sweep;
        for (Int d = 2; d <= max_order; ++d) {
            for (const auto& cf : sweep.advance()) {
                if (s_initial(cf.fraction) != cf.s_f) return to_string(cf.fraction);
            }
        }
        return {};
    });
    t.check("cycle sets match generated countdowns", [&]() -> std::string {
        const Int dmax = std::min<Int>(max_order, 30);
        std::vector<std::vector<ResidueClassSet>> sets(dmax + 1);
        for (Int d = 1; d <= dmax; ++d) {
            for (Int c = 1; c <= d; ++c) sets[d].push_back(cycle_set_for_denominator(d, c));
        }
        SequenceSweep sweep;
        for (Int m = 1; m <= max_order; ++m, sweep.advance()) {
            std::vector<std::vector<bool>> seen(dmax + 1);
            for (Int d = 1; d <= dmax; ++d) seen[d].assign(d + 1, false);
            for (const auto& e : sweep.current().entries) {
                if (!e.terminal() && e.d <= dmax) seen[e.d][e.s] = true;
            }
            for (Int d = 1; d <= dmax; ++d) {
                for (Int c = 1; c <= d; ++c) {
                    if (sets[d][c - 1].contains(m) != seen[d][c]) {
                        return "d=" + std::to_string(d) + " c=" + std::to_string(c) + " m=" + std::to_string(m);
                    }
                }
            }
        }
        return {};
    });
    t.check("prime and twin sieves", [&]() -> std::string {
        const Int limit = std::max<Int>(10 * max_order, 100);
        for (Int p = 2; p <= limit; ++p) {
            if (is_prime_farey(p) != oracle::trial_division_is_prime(p)) return "p=" + std::to_string(p);
            if (p >= 3 && is_lesser_twin_farey(p) != (oracle::trial_division_is_prime(p) &&
                                                      oracle::trial_division_is_prime(p + 2))) {
                return "twin p=" + std::to_string(p);
            }
        }
        if (prime_stream(25) != oracle::naive_odd_primes(25)) return "prime_stream";
        const auto twins = twin_stream(10);
        const auto expected = oracle::naive_first_twins(10);
        for (std::size_t i = 0; i < twins.size(); ++i) {
            if (twins[i].p != expected[i].p || twins[i].q != expected[i].q) return "twin_stream";
        }
        return {};
    });
    out << (t.failures == 0 ? "selftest passed" : "selftest FAILED") << " (max order " << max_order << ")\n";
    return t.failures == 0 ? kSuccess : kCheckFailed;
}

void fraction_order_guard(const Fraction& f, Int m) {
    if (f.d > m) throw UsageError(to_string(f) + " is not in F_" + std::to_string(m));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Farey sequence sequence toolkit", "farey"};
    app.require_subcommand(1);

    Int order = 0;
    std::string format = "triples-jsonl";
    bool classic = false;
    bool stream = false;
    auto* gen = app.add_subcommand("gen", "Generate F_M");
    gen->add_option("--order", order, "Order M")->required()->check(CLI::PositiveNumber);
    auto* format_opt = gen->add_option("--format", format, "Output format")
                           ->check(CLI::IsMember({"triples-jsonl", "fractions", "csv", "report-text"}));
    gen->add_flag("--classic", classic, "Use the two-term recurrence (fractions only)");
    gen->add_flag("--stream", stream, "Scan without materializing the sequence");

    std::string input;
    auto* step_cmd = app.add_subcommand("step", "Read F_M as JSON lines and write F_{M+1}");
    step_cmd->add_option("--input", input, "Input file (default: standard input)");

    auto* created_cmd = app.add_subcommand("created", "Fractions created in the transition F_M -> F_{M+1}");
    created_cmd->add_option("--order", order, "Order M")->required()->check(CLI::PositiveNumber);

    int only = 0;
    auto* props = app.add_subcommand("props", "Check the structural properties of F_M");
    props->add_option("--order", order, "Order M (>= 2)")->required()->check(CLI::Range(Int{2}, kDefaultMaxOrder));
    props->add_option("--only", only, "Check a single property")->check(CLI::Range(1, 7));

    std::string frac_text;
    auto* gap_cmd = app.add_subcommand("gap", "Distance to the successor in F_M");
    gap_cmd->add_option("--frac", frac_text, "Fraction N/D")->required();
    gap_cmd->add_option("--order", order, "Order M")->required()->check(CLI::PositiveNumber);

    auto* index_cmd = app.add_subcommand("index", "Order index of a fraction in F_M");
    index_cmd->add_option("--frac", frac_text, "Fraction N/D")->required();
    index_cmd->add_option("--order", order, "Order M")->required()->check(CLI::PositiveNumber);

    std::string out_path;
    auto* franel = app.add_subcommand("franel", "Franel-Landau statistic table as CSV");
    franel->add_option("--max-order", order, "Largest order")->required()->check(CLI::PositiveNumber);
    franel->add_option("--out", out_path, "CSV file (default: standard output)");

    Int denominator = 0;
    Int c = 0;
    Int ems_k = 0;
    auto* cycles = app.add_subcommand("cycles", "Orders at which a denominator carries countdown C");
    cycles->add_option("--denominator", denominator, "Denominator D")->required()->check(CLI::PositiveNumber);
    cycles->add_option("--c", c, "Countdown C")->required()->check(CLI::PositiveNumber);
    auto* ems_opt = cycles->add_option("--ems", ems_k, "Print the truncated set with K terms per fraction")
                        ->check(CLI::PositiveNumber);

    std::size_t count = 0;
    bool strict = false;
    auto* primes = app.add_subcommand("primes", "Odd primes from the cycle-set recursion");
    primes->add_option("--count", count, "Number of primes")->required()->check(CLI::PositiveNumber);
    primes->add_flag("--strict", strict, "Intersect every denominator, not only emitted primes");

    Int truncation_k = 0;
    auto* twins = app.add_subcommand("twins", "Twin prime pairs from the cycle-set recursion");
    twins->add_option("--count", count, "Number of pairs")->required()->check(CLI::PositiveNumber);
    auto* truncation_k_opt = twins->add_option("--paper-k", truncation_k, "Replay the truncated program with K terms")
                            ->check(CLI::PositiveNumber);

    auto* self = app.add_subcommand("selftest", "Run the oracle equivalence checks");
    self->add_option("--max-order", order, "Largest order")->required()->check(CLI::Range(Int{1}, Int{2000}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force F_M for fixture regeneration");
    oracle_cmd->group("");
    oracle_cmd->add_option("--order", order, "Order M")->required()->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"farey"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "farey: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            if (classic && stream) throw UsageError("--classic and --stream are exclusive");
            if (classic) {
                if (format_opt->count() == 0) format = "fractions";
                if (format == "triples-jsonl") throw UsageError("--classic produces fractions without s");
                const auto fr = generate_classic(order);
                TripleWriter w(out, format, order, fr.size(), false);
                for (const auto& f : fr) w({f.n, f.d, 0});
                w.finish();
            } else if (stream) {
                TripleWriter w(out, format, order, totient_summatory(order) + 1, true);
                for_each_triple(order, std::ref(w));
                w.finish();
            } else {
                const auto seq = generate(order);
                TripleWriter w(out, format, order, seq.size(), true);
                for (const auto& t : seq.entries) w(t);
                w.finish();
            }
        } else if (step_cmd->parsed()) {
            FareySequence seq;
            if (input.empty()) {
                seq = read_jsonl(in);
            } else {
                std::ifstream file(input);
                if (!file) throw UsageError("cannot open " + input);
                seq = read_jsonl(file);
            }
            write_jsonl(out, step(seq).first);
        } else if (created_cmd->parsed()) {
            for (const auto& cf : created(order)) {
                out << "{\"n\":" << cf.fraction.n << ",\"d\":" << cf.fraction.d << ",\"s_f\":" << cf.s_f
                    << ",\"i_f\":" << cf.i_f << "}\n";
            }
        } else if (props->parsed()) {
            bool all = true;
            for (int id = 1; id <= 7; ++id) {
                if (only != 0 && id != only) continue;
                const auto r = check_property(id, order);
                all = all && r.holds;
                out << to_json(r) << '\n';
            }
            return all ? kSuccess : kCheckFailed;
        } else if (gap_cmd->parsed()) {
            const auto f = parse_fraction(frac_text);
            fraction_order_guard(f, order);
            if (f.n == f.d) throw UsageError("1/1 has no successor");
            const CreatedFraction cf{f, s_initial(f, SfMethod::recorded), 0, f.d};
            out << gap(cf, order) << '\n';
        } else if (index_cmd->parsed()) {
            const auto f = parse_fraction(frac_text);
            fraction_order_guard(f, order);
            out << order_index(f, order, CreationRegistry::build(order)) << '\n';
        } else if (franel->parsed()) {
            const auto rows = franel_table(order);
            if (out_path.empty()) {
                write_franel_csv(out, rows);
            } else {
                std::ofstream file(out_path);
                if (!file) throw UsageError("cannot write " + out_path);
                write_franel_csv(file, rows);
            }
        } else if (cycles->parsed()) {
            if (c > denominator) throw UsageError("--c must not exceed --denominator");
            if (ems_opt->count() > 0) {
                write_list(out, ems(denominator, c, ems_k));
            } else {
                out << render(cycle_set_for_denominator(denominator, c), c) << '\n';
            }
        } else if (primes->parsed()) {
            StreamOptions opts;
            opts.strict = strict;
            write_list(out, prime_stream(count, opts));
        } else if (twins->parsed()) {
            if (truncation_k_opt->count() > 0) {
                const auto pairs = twin_primes_report(count, truncation_k);
                write_twin_report(out, pairs);
            } else {
                for (const auto& pair : twin_stream(count)) out << pair.p << ' ' << pair.q << '\n';
            }
        } else if (self->parsed()) {
            return selftest(order, out);
        } else if (oracle_cmd->parsed()) {
            for (const auto& f : oracle::naive_farey(order, {order, order})) out << f << '\n';
        }
    } catch (const UsageError& e) {
        err << "farey: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        err << "farey: " << e.what() << '\n';
        return kUsage;
    } catch (const TruncationExhausted& e) {
        err << "farey: truncation exhausted: " << e.what() << '\n';
        return kTruncationExhausted;
    } catch (const CapExceeded& e) {
        err << "farey: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const OverflowError& e) {
        err << "farey: " << e.what() << '\n';
        return kCapExceeded;
    }
    return kSuccess;
}

}  // namespace farey::cli
