#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "permlab/involution.hpp"
#include "permlab/lab.hpp"

using namespace permlab;

namespace {
const Permutation kExample = Permutation::parse("3 8 5 10 2 4 1 9 6 7");
}

TEST_CASE("decompose of the running example") {
    const PartialData data = decompose(kExample, 5);
    CHECK(data.tail_rows == std::vector<int>{9});
    // low squares are exactly the rank <= 2 squares of the diagram
    for (const auto& s : build_diagram(kExample).squares)
        CHECK(data.low_squares.count({s.row, s.col}) == (s.rank <= 2 ? 1u : 0u));
}

TEST_CASE("decompose of the identity at m=2") {
    const int n = 5;
    const PartialData data = decompose(Permutation::identity(n), 2);
    CHECK(data.low_squares.empty());
    std::vector<int> expected;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) expected.push_back(i);
    CHECK(data.tail_rows == expected);
}

TEST_CASE("decompose with m beyond n keeps everything") {
    const PartialData data = decompose(kExample, 12);
    CHECK(data.tail_rows.empty());
    CHECK(data.low_squares == build_diagram(kExample).square_set());
}

TEST_CASE("sorting routine") {
    CHECK(arrange_dots({4, 8, 9, 10}, {10, 9, 7, 6}, {0, 0, 1, 0}) ==
          std::vector<int>{10, 9, 6, 7});
    CHECK(arrange_dots({4, 8, 9, 10}, {10, 9, 7, 6}, {1, 2, 0, 0}) ==
          std::vector<int>{9, 6, 10, 7});
    CHECK(arrange_dots({1, 2, 3}, {3, 2, 1}, {0, 0, 0}) == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(arrange_dots({1, 2}, {2, 1}, {0, 2}), std::runtime_error);
    CHECK_THROWS_AS(arrange_dots({1, 2}, {2, 1}, {0}), std::invalid_argument);
}

TEST_CASE("reconstruction of the running example") {
    ReconstructTrace trace;
    CHECK(reconstruct(decompose(kExample, 5), &trace) == kExample);
    CHECK(trace.r == std::vector<int>{4, 8, 9, 10});
    CHECK(trace.c == std::vector<int>{10, 9, 7, 6});
    CHECK(trace.e == std::vector<int>{0, 0, 1, 0});
    CHECK(trace.c_prime == std::vector<int>{10, 9, 6, 7});
}

TEST_CASE("reconstruction round trip over S_6") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int m = 2; m <= n + 1; ++m)
                CHECK(reconstruct(decompose(pi, m)) == pi);
        });
}

TEST_CASE("empty partial data at n=3, m=3 recovers 132") {
    // 132 is the unique element of S_3 with no rank-0 square and no B_3 tail.
    PartialData data;
    data.n = 3;
    data.m = 3;
    CHECK(reconstruct(data) == make_permutation({1, 3, 2}));
    CHECK(decompose(make_permutation({1, 3, 2}), 3) == data);
}

TEST_CASE("reconstruct rejects non-image data") {
    PartialData data;
    data.n = 3;
    data.m = 3;
    data.tail_rows = {1};  // position 1 never exceeds anything on its left
    CHECK_THROWS_AS(reconstruct(data), std::runtime_error);
}

TEST_CASE("phi on the worked examples") {
    ReconstructTrace trace;
    CHECK(phi(kExample, 5, &trace) == Permutation::parse("3 8 5 9 2 4 1 6 10 7"));
    CHECK(trace.r == std::vector<int>{4, 8, 9, 10});
    CHECK(trace.c == std::vector<int>{10, 9, 7, 6});
    CHECK(trace.e == std::vector<int>{1, 2, 0, 0});
    CHECK(trace.c_prime == std::vector<int>{9, 6, 10, 7});

    CHECK(phi(Permutation::parse("2 6 7 1 3 4 5"), 4) ==
          Permutation::parse("2 6 7 1 5 4 3"));
}

TEST_CASE("phi at m=2 is the complement") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            const Permutation sigma = phi(pi, 2);
            for (int i = 1; i <= n; ++i) CHECK(sigma.at(i) == n + 1 - pi.at(i));
        });
}

TEST_CASE("phi is an involution exchanging the statistics") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int m = 2; m <= std::max(n, 2); ++m) {
                const Permutation sigma = phi(pi, m);
                CHECK(phi(sigma, m) == pi);
                CHECK(stat(pi, {m, PatternKind::A}) == stat(sigma, {m, PatternKind::B}));
                CHECK(stat(pi, {m, PatternKind::B}) == stat(sigma, {m, PatternKind::A}));
                if (stat(pi, {m, PatternKind::A}) == 0 &&
                    stat(pi, {m, PatternKind::B}) == 0)
                    CHECK(sigma == pi);
            }
        });
}

TEST_CASE("phi is the identity once m exceeds n") {
    // both statistics vanish, so every permutation is fixed
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int m = n + 1; m <= n + 3; ++m) CHECK(phi(pi, m) == pi);
        });
}

TEST_CASE("avoider fast path matches the general construction") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int m = 2; m <= std::max(n, 2); ++m)
                if (stat(pi, {m, PatternKind::A}) == 0)
                    CHECK(phi(pi, m) == oracle::avoider_image(pi, m));
        });
}

TEST_CASE("simion-schmidt map") {
    CHECK(simion_schmidt(Permutation::parse("4 3 5 2 6 1")) ==
          Permutation::parse("4 3 6 2 5 1"));
    CHECK(simion_schmidt(Permutation::identity(5)) ==
          Permutation::parse("1 5 4 3 2"));
    const Permutation reversal = make_permutation({5, 4, 3, 2, 1});
    CHECK(simion_schmidt(reversal) == reversal);
    CHECK_THROWS_AS(simion_schmidt(make_permutation({1, 3, 2})), std::invalid_argument);
}

TEST_CASE("phi at m=3 coincides with simion-schmidt on 132-avoiders") {
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            if (stat(pi, {3, PatternKind::A}) != 0) return;
            const Permutation image = simion_schmidt(pi);
            CHECK(phi(pi, 3) == image);
            CHECK(stat(image, {3, PatternKind::B}) == 0);
        });
}
