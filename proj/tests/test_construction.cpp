#include "fdl/construction.hpp"
#include "fdl/errors.hpp"
#include "fdl/profile.hpp"

#include "doctest.h"
#include "greedy_oracle.hpp"

using fdl::BigInt;
using fdl::Profile;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
    std::vector<BigInt> out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("greedy delays for small profiles") {
    const auto c21 = fdl::build_construction(Profile::top_level({2, 1}));
    CHECK(c21.delays == big({1, 2, 4}));
    CHECK(c21.max_representable() == 6);
    CHECK(c21.block_bounds == std::vector<int>{0, 2, 3});

    const auto c443 = fdl::build_construction(Profile::top_level({4, 4, 3}));
    CHECK(c443.delays == big({1, 2, 3, 4, 8, 13, 18, 23, 46, 74, 102}));
    CHECK(c443.block_B == big({4, 27, 129}));
    CHECK(c443.delay(5) == 8);

    CHECK(fdl::build_construction(Profile::top_level({3, 1})).delays == big({1, 2, 3, 6}));
    CHECK(fdl::build_construction(Profile::top_level({2, 2})).delays == big({1, 2, 4, 7}));
    CHECK(fdl::max_representable(Profile::top_level({3, 1})) == 9);
    CHECK(fdl::max_representable(Profile::top_level({2, 2})) == 9);
    CHECK(fdl::max_representable(Profile::top_level({3, 3, 2, 5, 1, 2})) == 3607);
}

TEST_CASE("first part below two is rejected") {
    CHECK_THROWS_AS(fdl::build_construction(Profile({1, 2}, 3)), fdl::DomainError);
    CHECK_THROWS_AS(fdl::max_representable(Profile({1, 2}, 3)), fdl::DomainError);
}

TEST_CASE("construction matches the subset definition") {
    for (int m = 2; m <= 10; ++m) {
        for (int k = 1; k < m; ++k) {
            for (const auto& n : fdl::enumerate_profiles(m, k)) {
                CAPTURE(n.to_string());
                const auto c = fdl::build_construction(n);
                const auto expected = fdl::testing::greedy_by_definition(n.parts());
                REQUIRE(c.fibers() == m);
                for (int j = 1; j <= m; ++j) REQUIRE(c.delay(j) == expected[static_cast<std::size_t>(j - 1)]);
                std::vector<std::int64_t> plain(expected.begin(), expected.end());
                REQUIRE(c.max_representable() == fdl::testing::representable_by_subsets(plain, k));
                REQUIRE(fdl::max_representable(n) == c.max_representable());
            }
        }
    }
}

TEST_CASE("subset-sum bound agrees with the closed form") {
    for (int m = 2; m <= 13; ++m) {
        for (int k = 1; k < m; ++k) {
            for (const auto& n : fdl::enumerate_profiles(m, k)) {
                const auto c = fdl::build_construction(n);
                REQUIRE(BigInt(fdl::subset_sum_B(c.delays, k)) == c.max_representable());
            }
        }
    }
}

TEST_CASE("prefix bounds") {
    const auto n = Profile::top_level({4, 4, 3});
    CHECK(fdl::prefix_B(n, 1, 2) == 17);
    CHECK(fdl::prefix_B(n, 0, 3) == 3);
    CHECK(fdl::prefix_B(n, 1, 4) == fdl::build_construction(n).block_B[1]);
    CHECK(fdl::prefix_B(Profile::top_level({2, 1}), 1, 1) == 6);
    CHECK_THROWS_AS(fdl::prefix_B(n, 3, 1), fdl::IndexError);
    CHECK_THROWS_AS(fdl::prefix_B(n, -1, 1), fdl::IndexError);
    CHECK_THROWS_AS(fdl::prefix_B(n, 1, 0), fdl::IndexError);
    CHECK_THROWS_AS(fdl::prefix_B(n, 2, 4), fdl::IndexError);
    CHECK_THROWS_AS(fdl::prefix_B(n, 0, 5), fdl::IndexError);
}

TEST_CASE("subset-sum bound on raw delay lists") {
    CHECK(fdl::subset_sum_B(big({1, 2, 4}), 2) == 6);
    CHECK(fdl::subset_sum_B(big({1, 2, 4}), 1) == 2);
    CHECK(fdl::subset_sum_B(big({2, 3}), 2) == 0);
    CHECK(fdl::subset_sum_B(big({1, 2, 3, 6}), 2) == 9);
    CHECK_THROWS_AS(fdl::subset_sum_B(big({1, 1}), 2), fdl::DomainError);
    CHECK_THROWS_AS(fdl::subset_sum_B(big({0, 1}), 2), fdl::DomainError);
    CHECK_THROWS_AS(fdl::subset_sum_B(big({}), 2), fdl::DomainError);
    CHECK_THROWS_AS(fdl::subset_sum_B(big({1, 2}), 0), fdl::DomainError);
}

TEST_CASE("values stay exact beyond 64 bits") {
    std::vector<int> parts(60, 2);
    const auto n = Profile::top_level(parts);
    const BigInt b = fdl::max_representable(n);
    CHECK(b > BigInt(std::numeric_limits<std::uint64_t>::max()));
    CHECK(b == fdl::build_construction(n).max_representable());
}
