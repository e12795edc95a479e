#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "permlab/diagram.hpp"
#include "permlab/lab.hpp"
#include "permlab/verify.hpp"

using namespace permlab;

TEST_CASE("factorial, binomial, unranking") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(9) == 362880);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(29, 14) == 77558760);

    for (int n = 1; n <= 5; ++n) {
        unsigned long long rank = 0;
        for_each_permutation(n, [&](const Permutation& pi) {
            CHECK(nth_permutation(n, rank) == pi);
            ++rank;
        });
        CHECK(rank == factorial(n));
    }
    CHECK_THROWS_AS(nth_permutation(3, 6), std::invalid_argument);
}

TEST_CASE("distributions over S_3") {
    const CountTable a = distribution(3, 3, StatKind::A);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == CountRow{3, 3, StatKind::A, 0, 5});
    CHECK(a[1] == CountRow{3, 3, StatKind::A, 1, 1});

    const CountTable b = distribution(3, 3, StatKind::B);
    REQUIRE(b.size() == 2);
    CHECK(b[0].count == 5);
    CHECK(b[1].count == 1);

    const CountTable degenerate = distribution(4, 6, StatKind::A);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate[0] == CountRow{4, 6, StatKind::A, 0, 24});

    CHECK_THROWS_AS(distribution(10, 3, StatKind::A), std::invalid_argument);
}

TEST_CASE("distribution counts sum to n! and workers agree") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 2; m <= n; ++m) {
            const CountTable serial = distribution(n, m, StatKind::A, 1);
            long long total = 0;
            for (const auto& row : serial) total += row.count;
            CHECK(total == static_cast<long long>(factorial(n)));
            CHECK(serial == distribution(n, m, StatKind::A, 3));
        }
}

TEST_CASE("csv serialization") {
    CHECK(to_csv(distribution(3, 3, StatKind::A)) ==
          "n,m,stat,k,count\n3,3,a,0,5\n3,3,a,1,1\n");
}

TEST_CASE("closed-form evaluators") {
    CHECK(formula(FormulaName::Prop9, 5) == 36);
    CHECK(formula(FormulaName::Prop9, 3) == 1);
    CHECK(formula(FormulaName::Noonan, 4) == 6);
    CHECK(formula(FormulaName::Catalan, 4) == 14);
    CHECK(formula(FormulaName::Bona, 5) == 21);
    CHECK(formula(FormulaName::ReturnsTotal, 3) == 9);
    CHECK(formula(FormulaName::TunnelsTotal, 3) == 15);
    CHECK(formula_by_name("catalan") == FormulaName::Catalan);
    CHECK_THROWS_AS(formula_by_name("nope"), std::invalid_argument);
}

TEST_CASE("exact occurrence counting") {
    const Permutation p123 = make_permutation({1, 2, 3});
    const Permutation p132 = make_permutation({1, 3, 2});
    CHECK(count_exact_occurrences(3, p123, 1) == 1);
    CHECK(count_exact_occurrences(5, p132, 1) == formula(FormulaName::Bona, 5));
    for (int n = 3; n <= 6; ++n)
        CHECK(count_exact_occurrences(n, p132, 0) == formula(FormulaName::Catalan, n));
    CHECK_THROWS_AS(count_exact_occurrences(9, p123, 0), std::invalid_argument);
}

TEST_CASE("tunnel insertion at n=3") {
    const Permutation identity = Permutation::identity(3);
    const Tunnel qualifying{1, 5, 1};
    CHECK(prop9_forward(identity, qualifying) == make_permutation({1, 3, 2}));
    CHECK_THROWS_AS(prop9_forward(identity, Tunnel{0, 6, 0}), std::invalid_argument);
    CHECK_THROWS_AS(prop9_forward(identity, Tunnel{2, 4, 2}), std::invalid_argument);
    // (2,4,h2) is the length-2 apex tunnel: right shape, wrong length
}

TEST_CASE("tunnel insertion image for n=4") {
    std::set<Permutation> images;
    for_each_permutation(4, [&](const Permutation& pi) {
        if (stat(pi, {3, PatternKind::A}) != 0) return;
        for (const Tunnel& t : tunnels(boundary_path(pi))) {
            if (t.height < 1 || t.length() < 4) continue;
            const Permutation sigma = prop9_forward(pi, t);
            CHECK(stat(sigma, {3, PatternKind::A}) == 1);
            CHECK(images.insert(sigma).second);
        }
    });
    CHECK(static_cast<long long>(images.size()) == formula(FormulaName::Prop9, 4));
}

TEST_CASE("inserted square carries the rank encoded by the tunnel length") {
    for (int n = 3; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            if (stat(pi, {3, PatternKind::A}) != 0) return;
            for (const Tunnel& t : tunnels(boundary_path(pi))) {
                if (t.height < 1 || t.length() < 4) continue;
                const Permutation sigma = prop9_forward(pi, t);
                std::vector<RankedSquare> positive;
                for (const auto& s : build_diagram(sigma).squares)
                    if (s.rank >= 1) positive.push_back(s);
                REQUIRE(positive.size() == 1);
                CHECK(positive[0].rank == (t.length() - 2) / 2);
            }
        });
}

TEST_CASE("thomas pairs") {
    CHECK(thomas_pairs(make_permutation({1, 3, 2})) ==
          std::vector<TailPair>{{2, 3}});
    CHECK(thomas_pairs(make_permutation({3, 1, 2})).empty());
    CHECK(thomas_pairs(make_permutation({5, 4, 3, 2, 1})).empty());
    CHECK_THROWS_AS(thomas_pairs(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("thomas swap") {
    const Permutation sigma = make_permutation({1, 3, 2});
    const Permutation pi = thomas_map(sigma, {2, 3});
    CHECK(pi == Permutation::identity(3));
    CHECK(stat(pi, {3, PatternKind::B}) == 1);
    CHECK_THROWS_AS(thomas_map(sigma, TailPair{1, 2}), std::invalid_argument);

    std::set<Permutation> images;
    for_each_permutation(4, [&](const Permutation& s) {
        if (!occurrences(make_permutation({1, 2, 3}), s).empty()) return;
        for (const TailPair& p : thomas_pairs(s)) {
            const Permutation image = thomas_map(s, p);
            CHECK(stat(image, {3, PatternKind::B}) == 1);
            CHECK(images.insert(image).second);
        }
    });
    CHECK(static_cast<long long>(images.size()) == formula(FormulaName::Prop9, 4));
}

TEST_CASE("verification suites at small n") {
    std::ostringstream out;
    CHECK(verify::run_suite("all", 5, 2, out));
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK_THROWS_AS(verify::run_suite("bogus", 5, 1, out), std::invalid_argument);
    CHECK(verify::known_suite("prop9"));
    CHECK(verify::known_suite("all"));
    CHECK(!verify::known_suite("bogus"));
}
