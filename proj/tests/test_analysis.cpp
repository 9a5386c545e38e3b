#include <doctest.h>

#include <cmath>
#include <sstream>

#include "farey/analysis.hpp"
#include "farey/oracle.hpp"

using namespace farey;

namespace {

Int position(const std::vector<Fraction>& seq, const Fraction& f) {
    return static_cast<Int>(std::find(seq.begin(), seq.end(), f) - seq.begin()) + 1;
}

// The index sum evaluated with plain floors (no clamping) over a chosen range.
std::int64_t raw_index(const Fraction& f, Int m, Int range_order, const CreationRegistry& reg) {
    auto fl = [](std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    std::int64_t idx = static_cast<std::int64_t>(reg.at(f).i_f);
    for (const auto& g : reg.entries()) {
        if (g.fraction.d > range_order || !(g.fraction < f)) continue;
        const auto s = static_cast<std::int64_t>(g.s_f);
        const auto d = static_cast<std::int64_t>(g.fraction.d);
        idx += fl(static_cast<std::int64_t>(m) - s, d) - fl(static_cast<std::int64_t>(f.d) - s, d);
    }
    return idx;
}

}  // namespace

TEST_CASE("check_property examples") {
    const auto r4 = check_property(4, 5);
    CHECK(r4.holds);
    CHECK_FALSE(r4.counterexample.has_value());
    // (1,3,3) in F_5 with s_f = 2: 3 - (5 - 2) mod 3 = 3
    const auto f5 = generate(5);
    CHECK(std::find(f5.entries.begin(), f5.entries.end(), FareyTriple{1, 3, 3}) != f5.entries.end());
    CHECK(created(2)[0].s_f == 2);

    CHECK(check_property(7, 4).holds);
    CHECK(check_property(2, 2).holds);
    CHECK_THROWS_AS(check_property(0, 5), InvariantError);
    CHECK_THROWS_AS(check_property(8, 5), InvariantError);
    CHECK_THROWS_AS(check_property(1, 1), InvariantError);
}

TEST_CASE("every property holds for small orders") {
    for (Int m = 2; m <= 40; ++m) {
        for (int id = 1; id <= 7; ++id) {
            const auto r = check_property(id, m);
            INFO("property ", id, " m=", m, " ", to_json(r));
            CHECK(r.holds);
        }
    }
}

TEST_CASE("property 7 covers both directions") {
    // m + 1 composite: some denominator lacks an s = 1 triple
    for (Int m : {3, 5, 7, 8, 9, 11, 14, 20}) {
        const auto seq = generate(m);
        std::vector<bool> covered(m + 1, false);
        for (const auto& t : seq.entries) {
            if (t.s == 1) covered[t.d] = true;
        }
        const bool all = std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; });
        CHECK(all == oracle::trial_division_is_prime(m + 1));
        CHECK(check_property(7, m).holds);
    }
}

TEST_CASE("PropertyReport JSON") {
    CHECK(to_json(check_property(2, 3)) == R"({"property":2,"order":3,"holds":true,"counterexample":null})");
    PropertyReport r{6, 9, false, std::vector<FareyTriple>{{1, 3, 1}, {2, 3, 1}}};
    CHECK(to_json(r) ==
          R"({"property":6,"order":9,"holds":false,"counterexample":[{"n":1,"d":3,"s":1},{"n":2,"d":3,"s":1}]})");
}

TEST_CASE("gap formula examples") {
    const auto reg = CreationRegistry::build(10);
    const auto& third = reg.at({1, 3});
    CHECK(third.s_f == 2);
    CHECK(gap(third, 4) == Fraction{1, 6});
    CHECK(gap(third, 5) == Fraction{1, 15});
    CHECK(gap(seed_zero(), 7) == Fraction{1, 7});
    CHECK_THROWS_AS(gap(third, 2), InvariantError);
    CHECK_THROWS_AS(gap(reg.at({1, 1}), 5), InvariantError);

    // successor differences read off the enumeration
    const auto f4 = oracle::naive_farey(4);
    const auto f5 = oracle::naive_farey(5);
    CHECK(difference(f4[position(f4, {1, 3}) - 1], f4[position(f4, {1, 3})]) == Fraction{1, 6});
    CHECK(difference(f5[position(f5, {1, 3}) - 1], f5[position(f5, {1, 3})]) == Fraction{1, 15});
}

TEST_CASE("gap matches successor differences") {
    const Int max_m = 60;
    const auto reg = CreationRegistry::build(max_m);
    for (Int m = 1; m <= max_m; ++m) {
        const auto f = oracle::naive_farey(m);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            REQUIRE(gap(reg.at(f[i]), m) == difference(f[i], f[i + 1]));
        }
    }
}

TEST_CASE("order index examples") {
    const auto reg = CreationRegistry::build(10);
    CHECK(position(oracle::naive_farey(7), {1, 2}) == 10);
    CHECK(order_index({1, 2}, 7, reg) == 10);
    CHECK(position(oracle::naive_farey(5), {2, 3}) == 8);
    CHECK(order_index({2, 3}, 5, reg) == 8);
    CHECK(order_index({1, 2}, 2, reg) == 2);
    CHECK(reg.at({1, 2}).i_f == 2);
    CHECK(order_index({0, 1}, 9, reg) == 1);
    CHECK(order_index({1, 1}, 9, reg) == totient_summatory(9) + 1);
    CHECK_THROWS_AS(order_index({1, 8}, 7, reg), InvariantError);
    CHECK_THROWS_AS(order_index({1, 2}, 11, reg), InvariantError);
}

TEST_CASE("order index needs the F_m range and clamped floors") {
    const auto reg = CreationRegistry::build(10);
    // summing only over F_{d_f} undercounts
    CHECK(raw_index({1, 2}, 7, 2, reg) == 7);
    // unclamped floors overcount via fractions born after F_{d_f}
    CHECK(raw_index({1, 2}, 4, 4, reg) == 5);
    CHECK(order_index({1, 2}, 4, reg) == 4);
}

TEST_CASE("order index equals position in the enumeration") {
    const Int max_m = 40;
    const auto reg = CreationRegistry::build(max_m);
    for (Int m = 1; m <= max_m; ++m) {
        const auto f = oracle::naive_farey(m);
        for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(order_index(f[i], m, reg) == i + 1);
    }
}

TEST_CASE("sweep indices equal the literal order index") {
    const Int max_m = 60;
    const auto reg = CreationRegistry::build(max_m);
    FranelSweep sweep;
    for (Int m = 1; m <= max_m; ++m) {
        const auto idx = sweep.formula_indices();
        const auto& e = sweep.current().entries;
        for (std::size_t i = 0; i < e.size(); ++i) REQUIRE(idx[i] == order_index(e[i].fraction(), m, reg));
        if (m < max_m) sweep.advance();
    }
}

TEST_CASE("Franel statistic") {
    CHECK(franel_statistic(1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(franel_statistic(1) - 0.25) <= 1e-15);
    CHECK(std::abs(franel_statistic(2) - 5.0 / 36.0) <= 1e-15);
    CHECK(std::abs(franel_statistic_by_formula(2) - 5.0 / 36.0) <= 1e-15);

    // direct evaluation over F_3 from the enumeration: L = 5
    long double direct = 0;
    const auto f3 = oracle::naive_farey(3);
    for (std::size_t i = 0; i < f3.size(); ++i) {
        const long double x = (i + 1) / 5.0L - f3[i].value();
        direct += x * x;
    }
    CHECK(std::abs(franel_statistic(3) - static_cast<double>(direct)) <= 1e-15);

    for (Int m = 1; m <= 60; ++m) {
        const double a = franel_statistic(m);
        const double b = franel_statistic_by_formula(m);
        CHECK(a >= 0.0);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), 1e-300));
    }
}

TEST_CASE("Franel table and CSV") {
    const auto rows = franel_table(2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].order == 1);
    CHECK(rows[0].count == 2);
    CHECK(rows[0].statistic == 0.25);
    CHECK(rows[1].order == 2);
    CHECK(rows[1].count == 3);
    CHECK(franel_table(1).size() == 1);
    CHECK(franel_table(17).size() == 17);

    std::ostringstream os;
    write_franel_csv(os, rows);
    CHECK(os.str() == "m,statistic,count\n1,0.25,2\n2,0.138888888888889,3\n");
    CHECK_THROWS_AS(franel_table(0), InvariantError);
}
