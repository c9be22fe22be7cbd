#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "common.hpp"
#include "hsw/search.hpp"
#include "hsw/workbench.hpp"

using namespace hsw;

TEST_SUITE("search") {

TEST_CASE("mixed radix decoding")
{
    CHECK(decode_digits(5, 3, 3) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(decode_digits(26, 3, 3) == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(universe_size(3, 12) == 531441u);
    CHECK_FALSE(universe_size(2, 64).has_value());
}

TEST_CASE("universe sizes")
{
    const auto f = Field::prime(3);
    const auto sp = GradedSpace::with_dims(1, 1);
    CHECK(EvenMapUniverse(f, sp, sp).size() == 9);
    CHECK(AlgebraUniverse(Field::prime(2), sp, TwistMode::full, false).size() == 64);
    CHECK(AlgebraUniverse(Field::prime(2), sp, TwistMode::diagonal, true).size() == 32);
    CHECK(SkewTensorUniverse(AlgebraUniverse(f, sp, TwistMode::identity, true).at(0)).size() == 3);
}

TEST_CASE("parallel filter is independent of the worker count")
{
    auto pred = [](std::uint64_t i) { return (i * 7919) % 13 < 4; };
    const auto one = parallel_filter(1000, 1, pred);
    CHECK(one == parallel_filter(1000, 3, pred));
    CHECK(one == parallel_filter(1000, 7, pred));
    CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("cap is enforced")
{
    CHECK_THROWS_AS(require_within_cap(11, 10, "test"), UniverseTooLarge);
    CHECK_NOTHROW(require_within_cap(10, 10, "test"));
    SearchOptions tiny;
    tiny.cap = 4;
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    CHECK_THROWS_AS(find_o_operators(wb.rep("adj"), tiny), UniverseTooLarge);
}

TEST_CASE("environment override of the cap")
{
    ::setenv("HSW_MAX_UNIVERSE", "100", 1);
    CHECK(universe_cap() == 100);
    ::setenv("HSW_MAX_UNIVERSE", "999999999999", 1);
    CHECK(universe_cap() == 10000000);
    ::unsetenv("HSW_MAX_UNIVERSE");
    CHECK(universe_cap() == 531441);
}

TEST_CASE("searches need a prime field")
{
    const auto wb = load_workbench(testing::fixture("k3.alg"));
    CHECK_THROWS_AS(find_o_operators(wb.rep("adj")), Error);
}

TEST_CASE("O-operator and solution counts on the GF(3) fixture")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    CHECK(find_o_operators(wb.rep("adj")).count() == 1);
    CHECK(find_o_operators(wb.rep("coadj")).count() == 3);
    CHECK(find_ybe_solutions(wb.algebra("S")).count() == 3);
    CHECK(find_ybe_solutions(wb.algebra("T")).count() == 9);
    const auto e = o_operator_equivalence(wb.rep("coadj_tw"));
    CHECK(e.passed());
    CHECK(e.sets.size() == 6);
    CHECK(e.total == 9);
    const auto y = ybe_equivalence(wb.algebra("S_tw"));
    CHECK(y.passed());
}

TEST_CASE("a corrupted predicate shows up as a set difference")
{
    auto even = [](std::uint64_t i) { return i % 2 == 0; };
    auto broken = [](std::uint64_t i) { return i % 2 == 0 && i != 4; };
    const auto r = equivalence_over("toy", 10, {{"even", even}, {"broken", broken}},
                                    [](std::uint64_t i) { return std::to_string(i); });
    CHECK_FALSE(r.passed());
    REQUIRE(r.differences.size() == 1);
    REQUIRE(r.differences[0].elements.size() == 1);
    CHECK(r.differences[0].elements[0].first == 4);
}

TEST_CASE("module equivalence over GF(2)")
{
    const AlgebraUniverse bases(Field::prime(2), GradedSpace::with_dims(1, 1), TwistMode::diagonal, true);
    const auto r = module_equivalence(bases, GradedSpace::with_dims(1, 1), TwistMode::diagonal);
    CHECK(r.passed());
    CHECK(r.sets[0].second.size() == 491);
    CHECK(r.side_sets[0].second.size() == 957);
    CHECK(r.side_sets[1].second.size() == 80);
}

TEST_CASE("coadjoint survey")
{
    const auto s = coadjoint_survey(Field::prime(3), GradedSpace::with_dims(1, 1));
    CHECK(s.passed());
    CHECK(s.rules[0].premise.size() == 16);
}

TEST_CASE("transport survey on 1|1")
{
    const auto s = transport_survey(Field::prime(2), GradedSpace::with_dims(1, 1), TwistMode::full, TwistMode::full);
    CHECK(s.passed());
    REQUIRE(s.rules.size() == 5);
    CHECK(s.rules[0].premise.size() == 318);
    CHECK(s.rules[1].premise.size() == 45);
    CHECK(s.rules[2].premise.size() == 33);
}

TEST_CASE("hashes and fixture store")
{
    CHECK(spec_hash("") == "cbf29ce484222325");
    CHECK(spec_hash("a") == "af63dc4c8601ec8c");
    FixtureStore s;
    s.set("abc", "pred", 12);
    s.set("abc", "a => b", 7);
    const auto path = std::string("hsw_test_counts.txt");
    s.save(path);
    const auto t = FixtureStore::load(path);
    CHECK(t.get("abc", "pred") == 12u);
    CHECK(t.get("abc", "a => b") == 7u);
    CHECK_FALSE(t.get("abc", "other").has_value());
    std::remove(path.c_str());
    CHECK_FALSE(FixtureStore::load("does-not-exist.txt").get("abc", "pred").has_value());
}

} // TEST_SUITE
