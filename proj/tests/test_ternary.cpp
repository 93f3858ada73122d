#include <doctest.h>
#include <random>
#include <vector>
#include "floorsums/ternary.hpp"

using namespace fsum;

namespace {

// independent representability sieve: marks a x^2 + b y^2 + c z^2 <= N
std::vector<char> form_sieve(const FormTriple& t, i64 N) {
    std::vector<char> hit(N + 1, 0);
    for (i64 x = 0; t.a * x * x <= N; ++x)
        for (i64 y = 0; t.a * x * x + t.b * y * y <= N; ++y)
            for (i64 z = 0; t.a * x * x + t.b * y * y + t.c * z * z <= N; ++z)
                hit[t.a * x * x + t.b * y * y + t.c * z * z] = 1;
    return hit;
}

i64 wget(const Witness& w, const char* var) {
    for (auto& [k, v] : w)
        if (k == var) return v;
    REQUIRE(false);
    return 0;
}

} // namespace

TEST_SUITE("ternary") {

TEST_CASE("rep_count basics") {
    CHECK(rep_count({1, 1, 1}, 1) == 6);
    CHECK(rep_count({1, 1, 1}, 9) == 30);
    CHECK(rep_count({1, 1, 2}, 4) == 12);
    CHECK(rep_count({1, 1, 5}, 1) == 4);
    CHECK(rep_count({1, 1, 1}, 7) == 0);
    CHECK(rep_count({1, 1, 1}, 0) == 1);
}

TEST_CASE("rep_count permutation invariance") {
    std::mt19937 rng(7u);
    auto rnd = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int i = 0; i < 100; ++i) {
        i64 a = rnd(1, 8), b = rnd(1, 8), c = rnd(1, 8);
        i64 n = rnd(0, 10000);
        i64 r = rep_count({a, b, c}, n);
        CHECK(r == rep_count({b, a, c}, n));
        CHECK(r == rep_count({c, b, a}, n));
    }
}

TEST_CASE("rep_exists_constrained witnesses") {
    auto odd_y = CongruenceConstraint{"y", 2, {1}};
    auto w = rep_exists_constrained({5, 5, 1}, 11, {odd_y});
    REQUIRE(w.has_value());
    CHECK(wget(*w, "x") == 1);
    CHECK(wget(*w, "y") == 1);
    CHECK(wget(*w, "z") == 1);

    auto x13 = CongruenceConstraint{"x", 8, {1, 3}};
    std::array<VarDomain, 3> nat{VarDomain::Naturals, VarDomain::Naturals,
                                 VarDomain::Naturals};
    w = rep_exists_constrained({1, 1, 1}, 3, {x13}, nat);
    REQUIRE(w.has_value());
    CHECK(wget(*w, "x") == 1);
    CHECK(wget(*w, "y") == 1);
    CHECK(wget(*w, "z") == 1);

    CHECK_FALSE(rep_exists_constrained({1, 1, 1}, 7).has_value());
}

TEST_CASE("rep_exists_constrained deterministic order") {
    // first witness for 25 by three squares: smallest |x| first, + before -
    auto w = rep_exists_constrained({1, 1, 1}, 25);
    REQUIRE(w.has_value());
    CHECK(wget(*w, "x") == 0);
    CHECK(wget(*w, "y") == 0);
    CHECK(wget(*w, "z") == 5);
    // negative residues match after reduction
    auto xneg = CongruenceConstraint{"x", 8, {3, 5}};
    w = rep_exists_constrained({1, 1, 1}, 9, {xneg});
    REQUIRE(w.has_value());
    CHECK(wget(*w, "x") == 3); // |x|=3 first admissible magnitude, + sign first
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(1, 3) == 1);
    CHECK(legendre_symbol(2, 5) == -1);
    CHECK(legendre_symbol(5, 5) == 0);
    CHECK(legendre_symbol(-1, 3) == -1);
    CHECK(legendre_symbol(-14, 3) == 1);
    CHECK_THROWS_AS(legendre_symbol(1, 2), InvalidPrime);
    CHECK_THROWS_AS(legendre_symbol(1, 9), InvalidPrime);
    CHECK_THROWS_AS(legendre_symbol(1, 1), InvalidPrime);
}

TEST_CASE("h_value basics") {
    CHECK(h_value({1, 1, 1}, 1) == 1);
    CHECK(h_value({1, 1, 1}, 3) == 5);
    CHECK(h_value({1, 1, 2}, 2) == 1);
    CHECK(rep_count({1, 1, 1}, 9) / 6 == 5);
}

TEST_CASE("closed-form counts match brute force") {
    CHECK(hurwitz_sphere_count(1) == 6);
    CHECK(hurwitz_sphere_count(3) == 30);
    CHECK(hurwitz_sphere_count(5) == 30);
    CHECK(cooper_lam_count(1) == 4);
    CHECK(cooper_lam_count(2) == 12);
    CHECK(gpq_count(1) == 4);
    for (i64 n = 1; n <= 100; ++n) {
        CHECK(hurwitz_sphere_count(n) == rep_count({1, 1, 1}, n * n));
        CHECK(cooper_lam_count(n) == rep_count({1, 1, 2}, n * n));
        CHECK(gpq_count(n) == rep_count({1, 1, 5}, n * n));
    }
}

TEST_CASE("h lower bound") {
    for (auto& e : dickson_catalog()) {
        i64 abc = 2 * e.form.a * e.form.b * e.form.c;
        for (i64 n = 1; n <= 10000; ++n) {
            i64 bound = 1;
            for (auto [p, ex] : factorize(n)) {
                if (abc % p == 0) continue;
                for (int i = 0; i < ex; ++i) bound *= p;
            }
            CHECK(h_value(e.form, n) >= bound);
        }
    }
}

TEST_CASE("three squares predicate") {
    CHECK_FALSE(is_sum_of_three_squares(7));
    CHECK_FALSE(is_sum_of_three_squares(28));
    CHECK(is_sum_of_three_squares(33));
    CHECK(is_sum_of_three_squares(0));
    auto hit = form_sieve({1, 1, 1}, 100000);
    for (i64 n = 0; n <= 100000; ++n)
        CHECK(is_sum_of_three_squares(n) == (hit[n] != 0));
    for (i64 n = 0; n <= 2000; ++n)
        CHECK(is_sum_of_three_squares(n) == (rep_count({1, 1, 1}, n) > 0));
}

TEST_CASE("dickson exceptional sets match brute force") {
    CHECK(dickson_exceptional({1, 1, 5}, 3));
    CHECK_FALSE(dickson_exceptional({1, 1, 5}, 8));
    CHECK(dickson_exceptional({1, 2, 6}, 5));
    CHECK_THROWS_AS(dickson_exceptional({1, 1, 7}, 3), UnknownForm);
    for (auto& e : dickson_catalog()) {
        auto hit = form_sieve(e.form, 10000);
        for (i64 n = 0; n <= 10000; ++n)
            CHECK(dickson_exceptional(e.form, n) == (hit[n] == 0));
    }
    // permuted lookup works
    CHECK(dickson_exceptional({6, 2, 1}, 5));
}

TEST_CASE("sphere points") {
    auto w = sphere_point_proper(SphereKind::ThreeSquares, 3);
    CHECK(wget(w, "x") == 1);
    CHECK(wget(w, "y") == 2);
    CHECK(wget(w, "z") == 2);
    w = sphere_point_proper(SphereKind::TwoSquaresPlus2zSq, 3);
    CHECK(wget(w, "x") == 1);
    CHECK(wget(w, "y") == 0);
    CHECK(wget(w, "z") == 2);
    w = sphere_point_proper(SphereKind::TwoSquaresPlus5zSq, 3);
    CHECK(wget(w, "x") == 2);
    CHECK(wget(w, "y") == 0);
    CHECK(wget(w, "z") == 1);

    CHECK_THROWS_AS(sphere_point_proper(SphereKind::ThreeSquares, 8), HypothesisViolated);
    CHECK_THROWS_AS(sphere_point_proper(SphereKind::TwoSquaresPlus2zSq, 1), HypothesisViolated);
    CHECK_THROWS_AS(sphere_point_proper(SphereKind::TwoSquaresPlus5zSq, 16), HypothesisViolated);
}

TEST_CASE("sphere lemmas never exhaust for valid n up to 500") {
    for (i64 n = 1; n <= 500; ++n) {
        bool pow2 = (n & (n - 1)) == 0;
        if (!pow2) {
            auto w = sphere_point_proper(SphereKind::ThreeSquares, n);
            i64 x = wget(w, "x"), y = wget(w, "y"), z = wget(w, "z");
            CHECK(x * x + y * y + z * z == n * n);
            CHECK(std::max({x, y, z}) < n);
            w = sphere_point_proper(SphereKind::TwoSquaresPlus5zSq, n);
            x = wget(w, "x"); y = wget(w, "y"); z = wget(w, "z");
            CHECK(x * x + y * y + 5 * z * z == n * n);
            CHECK(std::max(x, y) < n);
        }
        if (n > 1) {
            auto w = sphere_point_proper(SphereKind::TwoSquaresPlus2zSq, n);
            i64 x = wget(w, "x"), y = wget(w, "y"), z = wget(w, "z");
            CHECK(x * x + y * y + 2 * z * z == n * n);
            CHECK(std::max(x, y) < n);
        }
    }
}

TEST_CASE("two-square rewrite avoiding 5") {
    CHECK(rewrite_two_squares_avoiding_5(1, 2) == std::pair<i64, i64>{1, 2});
    CHECK(rewrite_two_squares_avoiding_5(5, 0) == std::pair<i64, i64>{3, 4});
    CHECK(rewrite_two_squares_avoiding_5(0, 10) == std::pair<i64, i64>{6, 8});
    CHECK_THROWS_AS(rewrite_two_squares_avoiding_5(1, 1), HypothesisViolated);
    CHECK_THROWS_AS(rewrite_two_squares_avoiding_5(0, 0), HypothesisViolated);
    for (i64 u = 0; u * u <= 10000; ++u)
        for (i64 v = u; u * u + v * v <= 10000; ++v) {
            i64 N = u * u + v * v;
            if (N == 0 || N % 5) continue;
            auto [x, y] = rewrite_two_squares_avoiding_5(u, v);
            CHECK(x * x + y * y == N);
            CHECK(x % 5 != 0);
            CHECK(y % 5 != 0);
        }
}

TEST_CASE("binary rewrite avoiding divisor") {
    CHECK(rewrite_binary_avoiding_divisor(1, 2, 3, 3) == std::pair<i64, i64>{1, 1});
    CHECK(rewrite_binary_avoiding_divisor(1, 2, 9, 3) == std::pair<i64, i64>{1, 2});
    CHECK(rewrite_binary_avoiding_divisor(1, 2, 18, 3) == std::pair<i64, i64>{4, 1});
    CHECK_THROWS_AS(rewrite_binary_avoiding_divisor(1, 1, 3, 5), HypothesisViolated);
    CHECK_THROWS_AS(rewrite_binary_avoiding_divisor(1, 1, 4, 2), NoAdmissibleRewrite);
}

} // TEST_SUITE
