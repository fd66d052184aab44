#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cotsum/coeffs.hpp"

using namespace cotsum::coeffs;

TEST_CASE("recursive stream matches hand-unrolled sequences") {
    const std::vector<long> p3 = {1, 2, 3, 5, 7, 9};
    const auto got3 = b_recursive_stream(3, 5);
    REQUIRE(got3.size() == 6);
    for (std::size_t i = 0; i < p3.size(); ++i) CHECK(got3[i] == p3[i]);

    const std::vector<long> p2 = {1, 2, 4, 6};  // b_2 = b_0+3, b_3 = b_1+4
    const auto got2 = b_recursive_stream(2, 3);
    for (std::size_t i = 0; i < p2.size(); ++i) CHECK(got2[i] == p2[i]);

    const auto got100 = b_recursive_stream(100, 5);  // k < p branch only
    for (long k = 0; k <= 5; ++k) CHECK(got100[static_cast<std::size_t>(k)] == k + 1);
}

TEST_CASE("closed form at pinned points") {
    CHECK(b_closed(0, 5) == 1);
    CHECK(b_closed(1, 5) == 2);
    CHECK(b_closed(6, 3) == 12);  // convolution: 7 + 4 + 1
    for (long p : {2L, 3L, 7L, 41L}) CHECK(b_closed(p - 1, p) == p);
}

TEST_CASE("convolution oracle at pinned points") {
    CHECK(b_convolution(6, 3) == 12);
    CHECK(b_convolution(0, 7) == 1);
    CHECK(b_convolution(0, 2) == 1);
    CHECK(b_convolution(4, 5) == 5);  // only j = 0 contributes
}

TEST_CASE("block form at pinned points") {
    CHECK(b_block(1, 0, 3) == 5);  // b_{p+r} = p + 2r + 2
    for (long p : {2L, 5L, 9L})
        for (long r = 0; r < p; ++r) CHECK(b_block(0, r, p) == r + 1);
    // b_9 for p=4: recursion b_9 = b_5 + 10 = (b_1 + 6) + 10 = 18,
    // convolution 10 + 6 + 2 = 18, block (4*4 + 8*2 + 4)/2 = 18.
    CHECK(b_block(2, 1, 4) == 18);
    CHECK(b_closed(9, 4) == 18);
    CHECK(b_convolution(9, 4) == 18);
}

TEST_CASE("four routes agree exactly on a sampled grid") {
    for (long p : {2L, 3L, 5L, 17L, 50L}) {
        const auto stream = b_recursive_stream(p, 600);
        for (long k = 0; k <= 600; ++k) {
            const auto c = b_closed(k, p);
            CHECK(c == stream[static_cast<std::size_t>(k)]);
            CHECK(c == b_convolution(k, p));
            CHECK(c == b_block(k / p, k % p, p));
        }
    }

    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> pd(2, 50), kd(0, 5000);
    for (int iter = 0; iter < 200; ++iter) {
        const long p = pd(rng), k = kd(rng);
        const auto c = b_closed(k, p);
        CHECK(c == b_convolution(k, p));
        CHECK(c == b_block(k / p, k % p, p));
    }
}

TEST_CASE("first difference is floor(k/p)+1 and the sequence is strictly increasing") {
    for (long p : {2L, 3L, 11L}) {
        Coefficient prev = b_closed(0, p);
        CHECK(prev == 1);
        for (long k = 1; k <= 400; ++k) {
            const Coefficient cur = b_closed(k, p);
            CHECK(cur - prev == first_difference(k, p));
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("generating function self-test") {
    for (long p = 2; p <= 20; ++p) {
        const auto rep = generating_function_selftest(p, 200);
        CHECK(!rep.hard_failure());
    }
    CHECK(!generating_function_selftest(2, 0).hard_failure());   // constant term only
    CHECK(!generating_function_selftest(10, 500).hard_failure());
}

TEST_CASE("recurrence checks") {
    CHECK(!check_recurrences(3, 100).hard_failure());
    CHECK(!check_recurrences(2, 50).hard_failure());  // 2 <= k <= p-1 is empty
    CHECK(!check_recurrences(50, 200).hard_failure());
    CHECK_THROWS_AS(check_recurrences(7, 7), std::invalid_argument);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(b_closed(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(b_closed(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(b_block(0, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(b_block(0, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(b_block(-1, 0, 3), std::invalid_argument);
}
