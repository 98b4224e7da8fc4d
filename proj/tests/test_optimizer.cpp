#include "fdl/errors.hpp"
#include "fdl/optimizer.hpp"

#include "doctest.h"
#include "worked_examples.hpp"

#include <algorithm>

using fdl::OptimumCount;
using fdl::Profile;

namespace {

std::vector<std::vector<int>> top_down(const std::vector<Profile>& levels) {
    std::vector<std::vector<int>> out;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) out.push_back(it->parts());
    return out;
}

}  // namespace

TEST_CASE("design reproduces the worked chains") {
    for (const auto& w : fdl::testing::worked_designs()) {
        CAPTURE(w.m);
        CAPTURE(w.k);
        const auto d = fdl::design(w.m, w.k);
        CHECK(top_down(d.levels_n) == w.chain_n);
        CHECK(d.candidate_n.parts() == w.chain_n.back());
        if (w.chain_m.empty()) {
            CHECK_FALSE(d.candidate_m.has_value());
            CHECK(d.levels_m.empty());
            CHECK(d.candidates().size() == 1);
        } else {
            REQUIRE(d.candidate_m.has_value());
            CHECK(top_down(d.levels_m) == w.chain_m);
            CHECK(d.candidate_m->parts() == w.chain_m.back());
            CHECK(d.candidates().size() == 2);
        }
    }
}

TEST_CASE("design values and classification") {
    const auto d11 = fdl::design(11, 3);
    CHECK(d11.classification == OptimumCount::ExactlyOne);
    CHECK(d11.b_value == 129);

    const auto d16 = fdl::design(16, 6);
    CHECK(d16.classification == OptimumCount::ExactlyTwo);
    CHECK(d16.b_value == 4599);
    CHECK(d16.b_value_m == 4599);

    const auto d26 = fdl::design(26, 10);
    CHECK(d26.b_value == 1141023);
    CHECK(d26.b_value_m == 1141023);

    const auto d24 = fdl::design(24, 9);
    CHECK(d24.classification == OptimumCount::AtMostTwo);
    CHECK(d24.b_value == 330687);
    CHECK(d24.b_value_m == 330687);
}

TEST_CASE("degenerate ladders") {
    // k divides M: depth 1, the seed is the top level itself
    const auto d = fdl::design(6, 3);
    CHECK(d.trace.depth() == 1);
    CHECK(d.candidate_n.parts() == std::vector<int>{2, 2, 2});
    REQUIRE(d.candidate_m.has_value());
    CHECK(d.candidate_m->parts() == std::vector<int>{3, 2, 1});

    const auto single = fdl::design(7, 1);
    CHECK(single.candidate_n.parts() == std::vector<int>{7});
    CHECK(single.b_value == 7);

    const auto two = fdl::design(4, 2);
    CHECK(two.classification == OptimumCount::ExactlyTwo);
    CHECK(two.candidates().size() == 2);
}

TEST_CASE("classification follows the gcd") {
    CHECK(fdl::predicted_count(13, 5) == OptimumCount::ExactlyOne);
    CHECK(fdl::predicted_count(16, 6) == OptimumCount::ExactlyTwo);
    CHECK(fdl::predicted_count(24, 9) == OptimumCount::AtMostTwo);
    CHECK(fdl::predicted_count(9, 3) == OptimumCount::AtMostTwo);
    CHECK(fdl::to_string(OptimumCount::ExactlyTwo) == "ExactlyTwo");
    CHECK_THROWS_AS(fdl::predicted_count(3, 3), fdl::DomainError);
    CHECK_THROWS_AS(fdl::design(1, 1), fdl::DomainError);
}

TEST_CASE("every design candidate is a top-level profile") {
    for (int m = 2; m <= 60; ++m) {
        for (int k = 1; k < m; ++k) {
            const auto d = fdl::design(m, k);
            for (const auto& c : d.candidates()) {
                REQUIRE(c.size() == k);
                REQUIRE(c.total() == m);
                REQUIRE(c.at(1) >= 2);
            }
            REQUIRE(d.candidate_m.has_value() == (d.trace.gcd() >= 2));
            if (d.candidate_m) REQUIRE(*d.candidate_m != d.candidate_n);
        }
    }
}

TEST_CASE("lifting alternates left and right pre-sequences") {
    const fdl::EuclidTrace t(13, 5);
    const auto chain = fdl::lift_chain(t, 4, Profile({2}, 2));
    REQUIRE(chain.size() == 4);
    CHECK(chain[1].parts() == std::vector<int>{2, 1});
    CHECK(chain[2].parts() == std::vector<int>{1, 2, 2});
    CHECK(chain[3].parts() == std::vector<int>{3, 3, 2, 3, 2});
    CHECK(fdl::lift_to_top(t, 2, Profile({1, 2, 2}, 5)).parts() == std::vector<int>{3, 3, 2, 3, 2});
    CHECK(fdl::lift_to_top(t, 1, Profile({3, 3, 2, 3, 2}, 13)).parts() == std::vector<int>{3, 3, 2, 3, 2});
    CHECK_THROWS(fdl::lift_chain(t, 5, Profile({1}, 1)));
    CHECK_THROWS(fdl::lift_chain(t, 0, Profile({1}, 1)));
}

TEST_CASE("comparing profiles") {
    const auto a = Profile::top_level({3, 3, 2, 3, 3, 2});
    const auto b = Profile::top_level({3, 3, 3, 2, 3, 2});
    const auto c = Profile::top_level({3, 3, 2, 5, 1, 2});
    CHECK(fdl::compare_profiles(a, b) == std::strong_ordering::equal);
    CHECK(fdl::compare_profiles(a, c) == std::strong_ordering::greater);
    CHECK(fdl::compare_profiles(c, a) == std::strong_ordering::less);
    CHECK_THROWS_AS(fdl::compare_profiles(a, Profile::top_level({4, 4, 3})), fdl::DomainError);
}
