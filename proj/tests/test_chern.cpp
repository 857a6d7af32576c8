#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sv/chern.hpp"
#include "sv/rng.hpp"

using namespace sv;

namespace {

std::vector<Rational> rationals(std::vector<long long> v) {
    std::vector<Rational> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("truncated polynomial ring arithmetic") {
    auto a = CohomClass::from_coeffs(3, rationals({1, 2, 0, 0}));
    auto b = CohomClass::from_coeffs(3, rationals({1, -2, 4, -8}));
    // (1+2H)(1-2H+4H^2-8H^3) = 1 + 0H + 0H^2 + 0H^3 truncated
    CHECK(a * b == CohomClass::one(3));
    CHECK(a.inverse() == b);
    CHECK(b.inverse() == a);
    CHECK((a + b) - b == a);
    CHECK(a.pow(0) == CohomClass::one(3));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.scaled(Rational(3))[1] == Rational(6));
    CHECK_THROWS_AS(CohomClass::from_coeffs(3, rationals({0, 1, 0, 0})).inverse(),
                    UsageError);
    CHECK_THROWS_AS(CohomClass::h_power(3, -1, Rational(1)), UsageError);
    CHECK(CohomClass::h_power(3, 7, Rational(1)).is_zero());  // above H^n truncates
    CHECK(a.str() == "1 + 2*H");
    CHECK(CohomClass(3).str() == "0");
}

TEST_CASE("chern and segre totals of split bundles") {
    // O(2) + O(2) on P^3
    auto c = chern_total(SplitBundle{{2, 2}}, 3);
    CHECK(c == CohomClass::from_coeffs(3, rationals({1, 4, 4, 0})));
    auto s = segre_total(SplitBundle{{2, 2}}, 3);
    CHECK(s == CohomClass::from_coeffs(3, rationals({1, -4, 12, -32})));
    CHECK(c * s == CohomClass::one(3));
    CHECK_THROWS_AS(chern_total(SplitBundle{}, 3), UsageError);
}

TEST_CASE("chern and segre invert each other for random split bundles") {
    RandomSource rng(21);
    for (int i = 0; i < 50; ++i) {
        int n = 1 + static_cast<int>(rng.below(6));
        int rank = 1 + static_cast<int>(rng.below(4));
        std::vector<int> twists;
        for (int j = 0; j < rank; ++j) twists.push_back(1 + static_cast<int>(rng.below(5)));
        CHECK(chern_total(SplitBundle{twists}, n) * segre_total(SplitBundle{twists}, n) == CohomClass::one(n));
    }
}

TEST_CASE("segre class of a split regular embedding") {
    // two quadrics in P^3: s(Z) = 4H^2 - 16H^3
    auto s22 = segre_regular_embedding({2, 2}, 3);
    CHECK(s22 == CohomClass::h_power(3, 2, Rational(4)) +
                     CohomClass::h_power(3, 3, Rational(-16)));
    // one quadric in P^3: s(Z) = 2H - 4H^2 + 8H^3
    auto s2 = segre_regular_embedding({2}, 3);
    CHECK(s2 == CohomClass::from_coeffs(3, rationals({0, 2, -4, 8})));
    // a hyperplane in P^2
    auto s1 = segre_regular_embedding({1}, 2);
    CHECK(s1 == CohomClass::from_coeffs(2, rationals({0, 1, -1})));
    CHECK_THROWS_AS(segre_regular_embedding({}, 3), UsageError);
    CHECK_THROWS_AS(segre_regular_embedding({2, 2, 2, 2}, 3), UsageError);
    CHECK_THROWS_AS(segre_regular_embedding({0}, 3), UsageError);
}

TEST_CASE("transform from cycle degrees to segre degrees") {
    // twisted cubic: v = (0,0,3,2), d = 2 -> s = 3H^2 - 10H^3
    auto S = segre_from_sv(rationals({0, 0, 3, 2}), 2, 3);
    CHECK(S == CohomClass::from_coeffs(3, rationals({0, 0, 3, -10})));
    // complete intersection (2,2): v = (0,0,4,0) -> s = 4H^2 - 16H^3
    auto S2 = segre_from_sv(rationals({0, 0, 4, 0}), 2, 3);
    CHECK(S2 == segre_regular_embedding({2, 2}, 3));
    // the coordinate point in P^2: v = (0,0,1), d = 1 -> s = H^2
    auto S3 = segre_from_sv(rationals({0, 0, 1}), 1, 2);
    CHECK(S3 == CohomClass::h_power(2, 2, Rational(1)));
    CHECK_THROWS_AS(segre_from_sv(rationals({0, 0, 0, 0, 1}), 1, 3), UsageError);
}

TEST_CASE("transform from segre degrees back to cycle degrees") {
    auto S = CohomClass::from_coeffs(3, rationals({0, 0, 3, -10}));
    auto v = sv_from_segre(S, 2, 3);
    CHECK(v == rationals({0, 0, 3, 2}));
    // short cycles: mu_dim below n
    auto S2 = CohomClass::from_coeffs(3, rationals({0, 1, 0, 0}));
    auto v2 = sv_from_segre(S2, 1, 2);
    CHECK(v2.size() == 3);
    CHECK_THROWS_AS(sv_from_segre(S2, 2, 5), UsageError);
}

TEST_CASE("the two transforms are mutually inverse") {
    RandomSource rng(31);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng.below(5));
        int d = 1 + static_cast<int>(rng.below(3));
        std::vector<Rational> v;
        for (int j = 0; j <= n; ++j)
            v.emplace_back(rng.range(-1000000, 1000000),
                           1 + static_cast<long long>(rng.below(1000)));
        auto S = segre_from_sv(v, d, n);
        CHECK(sv_from_segre(S, d, n) == v);
    }
}

TEST_CASE("the transforms are triangular") {
    // v_j only influences S_k for k >= j, with unit diagonal
    for (int j = 0; j <= 3; ++j) {
        std::vector<Rational> v(4, Rational(0));
        v[static_cast<std::size_t>(j)] = Rational(1);
        auto S = segre_from_sv(v, 2, 3);
        for (int k = 0; k < j; ++k) CHECK(S[k].is_zero());
        CHECK(S[j] == Rational(1));
    }
}

TEST_CASE("gysin images") {
    // gysin(1) for two quadrics in P^3 is exactly 4H^2
    auto g = gysin_map(CohomClass::one(3), {2, 2}, 3);
    CHECK(g == CohomClass::h_power(3, 2, Rational(4)));
    // multiplying gamma by H shifts the image one step deeper
    auto gH = gysin_map(CohomClass::h_power(3, 1, Rational(1)), {2, 2}, 3);
    CHECK(gH == CohomClass::h_power(3, 3, Rational(4)));
    // pure classes: gysin(gamma) = (prod d_i) * H^kappa * gamma
    auto g3 = gysin_map(CohomClass::one(4), {2, 3}, 4);
    CHECK(g3 == CohomClass::h_power(4, 2, Rational(6)));
    CHECK_THROWS_AS(gysin_map(CohomClass::one(2), {2, 2}, 3), UsageError);
}

TEST_CASE("whitney factorization for split complete intersections") {
    CHECK(ci_product_check({2}, 2, 3));
    CHECK(ci_product_check({2, 3}, 1, 5));
    CHECK(ci_product_check({1, 1}, 1, 4));
    RandomSource rng(41);
    for (int i = 0; i < 25; ++i) {
        int n = 3 + static_cast<int>(rng.below(4));
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
        std::vector<int> twists;
        for (int j = 0; j < k; ++j) twists.push_back(1 + static_cast<int>(rng.below(4)));
        int extra = 1 + static_cast<int>(rng.below(4));
        CHECK(ci_product_check(twists, extra, n));
    }
    CHECK_THROWS_AS(ci_product_check({2, 2, 2}, 2, 3), UsageError);
}

TEST_CASE("truncation edge cases") {
    // a complete intersection of two hyperplanes in P^2: only H^2 survives
    auto s = segre_regular_embedding({1, 1}, 2);
    CHECK(s == CohomClass::h_power(2, 2, Rational(1)));
    // on P^1 a single hyperplane: s = H
    auto s1 = segre_regular_embedding({1}, 1);
    CHECK(s1 == CohomClass::h_power(1, 1, Rational(1)));
}

TEST_CASE("segre_from_sv accepts an sv result struct") {
    SVResult r;
    r.n = 3;
    r.d = 2;
    r.mu_dim = 3;
    r.v = {0, 0, 3, 2};
    auto S = segre_from_sv(r);
    CHECK(S == CohomClass::from_coeffs(3, rationals({0, 0, 3, -10})));
}
