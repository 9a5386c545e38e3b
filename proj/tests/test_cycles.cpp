#include <doctest.h>

#include <set>

#include "farey/core.hpp"
#include "farey/cycles.hpp"

using namespace farey;

namespace {

// does F_m contain a triple (., d, c)?
bool generated_has(const FareySequence& seq, Int d, Int c) {
    return std::any_of(seq.entries.begin(), seq.entries.end(),
                       [&](const FareyTriple& t) { return !t.terminal() && t.d == d && t.s == c; });
}

Int s_in(const FareySequence& seq, const Fraction& f) {
    for (const auto& t : seq.entries) {
        if (t.fraction() == f) return t.s;
    }
    FAIL("fraction not present");
    return 0;
}

}  // namespace

TEST_CASE("s_initial examples on both paths") {
    for (auto method : {SfMethod::recorded, SfMethod::closed_form}) {
        CHECK(s_initial({1, 3}, method) == 2);
        CHECK(s_initial({2, 5}, method) == 2);
        CHECK(s_initial({3, 5}, method) == 3);
        CHECK(s_initial({4, 5}, method) == 1);
        CHECK(s_initial({1, 5}, method) == 4);
        CHECK(s_initial({0, 1}, method) == 1);
        CHECK(s_initial({1, 2}, method) == 1);
        CHECK_THROWS_AS(s_initial({1, 1}, method), InvariantError);
        CHECK_THROWS_AS(s_initial({2, 4}, method), InvariantError);
    }
}

TEST_CASE("closed-form s_f agrees with recorded creations") {
    SequenceSweep sweep;
    for (Int d = 2; d <= 300; ++d) {
        for (const auto& cf : sweep.advance()) REQUIRE(s_initial(cf.fraction) == cf.s_f);
        CHECK(s_initial_for_denominator(d, SfMethod::closed_form) ==
              s_initial_for_denominator(d, SfMethod::recorded));
    }
}

TEST_CASE("m_c examples") {
    CHECK(m_c({1, 3}, 1, 1) == 4);
    CHECK(m_c({1, 3}, 3, 1) == 5);
    CHECK(m_c({1, 3}, 2, 1) == 3);
    CHECK(m_c({1, 3}, 1, 2) == 7);
    CHECK_THROWS_AS(m_c({1, 3}, 4, 1), InvariantError);
    CHECK_THROWS_AS(m_c({1, 3}, 0, 1), InvariantError);
    CHECK_THROWS_AS(m_c({1, 3}, 1, 0), InvariantError);
}

TEST_CASE("generated countdown at m_c(f, c, k) is c") {
    const Int dmax = 15;
    const Int kmax = 4;
    const auto big = generate(dmax * (kmax + 2));
    SequenceSweep sweep;
    for (Int m = 1; m <= big.order; ++m, sweep.advance()) {
        for (const auto& t : sweep.current().entries) {
            if (t.terminal() || t.d > dmax) continue;
            for (Int c = 1; c <= t.d; ++c) {
                for (Int k = 1; k <= kmax; ++k) {
                    if (m_c(t.fraction(), c, k) == m) CHECK(t.s == c);
                }
            }
        }
    }
    CHECK(s_in(big, {2, 7}) == 7 - (big.order - s_initial({2, 7})) % 7);
}

TEST_CASE("cycle_set examples") {
    CHECK(cycle_set({1, 3}, 1) == Progression{3, 1, 4});
    CHECK(cycle_set({2, 3}, 1) == Progression{3, 0, 3});
    CHECK(cycle_set({0, 1}, 1) == Progression{1, 0, 1});
    const auto f = generate(10);
    CHECK(s_in(generate(4), {1, 3}) == 1);
    CHECK(s_in(generate(7), {1, 3}) == 1);
    CHECK(s_in(f, {1, 3}) == 1);
    CHECK(s_in(generate(6), {2, 3}) == 1);
}

TEST_CASE("cycle_set_for_denominator examples") {
    const auto m13 = cycle_set_for_denominator(3, 1);
    CHECK(m13.progressions() == std::vector<Progression>{{3, 0, 3}, {3, 1, 4}});
    const auto m34 = cycle_set_for_denominator(4, 3);
    CHECK(m34.progressions() == std::vector<Progression>{{4, 0, 4}, {4, 2, 6}});
    const auto m11 = cycle_set_for_denominator(1, 1);
    for (Int m = 1; m <= 20; ++m) CHECK(m11.contains(m));
    CHECK_FALSE(m11.contains(0));
    CHECK_THROWS_AS(cycle_set_for_denominator(3, 4), InvariantError);
    CHECK_THROWS_AS(cycle_set_for_denominator(0, 1), InvariantError);
}

TEST_CASE("contains examples") {
    const auto m13 = cycle_set_for_denominator(3, 1);
    CHECK(contains(m13, 4));
    CHECK_FALSE(contains(m13, 2));
    CHECK_FALSE(contains(cycle_set_for_denominator(5, 1), 9));
    CHECK(contains(Progression{3, 1, 4}, 7));
    CHECK_FALSE(contains(Progression{3, 1, 4}, 1));
    // F_9 has no denominator-5 triple with s = 1
    CHECK_FALSE(generated_has(generate(9), 5, 1));
}

TEST_CASE("cycle sets match generated countdowns") {
    const Int dmax = 20;
    SequenceSweep sweep;
    for (Int m = 1; m <= 150; ++m, sweep.advance()) {
        for (Int d = 1; d <= dmax; ++d) {
            for (Int c = 1; c <= d; ++c) {
                REQUIRE(cycle_set_for_denominator(d, c).contains(m) == generated_has(sweep.current(), d, c));
            }
        }
    }
}

TEST_CASE("cycle sets have phi(d) canonical progressions with distinct residues") {
    for (Int d = 1; d <= 120; ++d) {
        for (Int c = 1; c <= d; c += (d > 10 ? 7 : 1)) {
            const auto set = cycle_set_for_denominator(d, c);
            CHECK(set.progressions().size() == totient(d));
            std::set<Int> residues;
            for (const auto& p : set.progressions()) residues.insert(p.residue);
            CHECK(residues.size() == set.progressions().size());
            CHECK(set.canonical());
            const ResidueMask mask(set);
            for (Int m = 0; m <= 3 * d + 5; ++m) CHECK(mask.contains(m) == set.contains(m));
        }
    }
}

TEST_CASE("ResidueClassSet construction") {
    CHECK_THROWS_AS(ResidueClassSet(3, {{3, 1, 4}, {3, 1, 7}}), InvariantError);
    CHECK_THROWS_AS(ResidueClassSet(3, {{4, 1, 5}}), InvariantError);
    CHECK_THROWS_AS(ResidueClassSet(3, {{3, 1, 5}}), InvariantError);
    const ResidueClassSet late(3, {{3, 1, 10}, {3, 2, 2}});
    CHECK_FALSE(late.canonical());
    CHECK_THROWS_AS(ResidueMask{late}, InvariantError);
    CHECK_FALSE(late.contains(7));
    CHECK(late.contains(10));
    CHECK(late.contains(2));
    CHECK(late.min_element() == 2);
    CHECK_THROWS_AS(ResidueClassSet(3, {}).min_element(), InvariantError);
}

TEST_CASE("ems examples") {
    CHECK(ems(3, 1, 2) == std::vector<Int>{3, 4, 6, 7});
    CHECK(ems(1, 1, 3) == std::vector<Int>{1, 2, 3});
    CHECK(ems(4, 3, 1) == std::vector<Int>{4, 6});
    CHECK_THROWS_AS(ems(4, 5, 1), InvariantError);
    CHECK_THROWS_AS(ems(4, 1, 0), InvariantError);
}

TEST_CASE("ems lies inside the infinite set and has no duplicates") {
    for (Int d = 1; d <= 40; ++d) {
        for (Int c = 1; c <= d; ++c) {
            const auto set = cycle_set_for_denominator(d, c);
            const auto values = ems(d, c, 5);
            CHECK(values.size() == 5 * totient(d));
            CHECK(std::adjacent_find(values.begin(), values.end()) == values.end());
            for (Int m : values) CHECK(set.contains(m));
        }
    }
}

TEST_CASE("render") {
    CHECK(render(cycle_set_for_denominator(3, 1), 1) ==
          "d=3 c=1 :: {m ≡ 0 (mod 3), m ≥ 3} ∪ {m ≡ 1 (mod 3), m ≥ 4}");
    CHECK(render(cycle_set_for_denominator(1, 1), 1) == "d=1 c=1 :: {m ≡ 0 (mod 1), m ≥ 1}");
}
