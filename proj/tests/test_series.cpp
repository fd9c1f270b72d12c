#include <doctest.h>

#include <vector>

#include "invenum/count_report.hpp"
#include "invenum/partitions.hpp"
#include "invenum/series.hpp"

using namespace invenum;

namespace {

std::vector<mpz_class> coeffs(const TruncatedSeries& s) { return s.coefficients(); }

std::vector<mpz_class> nums(std::initializer_list<long> xs) {
    return std::vector<mpz_class>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("series arithmetic basics") {
    TruncatedSeries one_plus_x(8);
    one_plus_x.set(0, 1);
    one_plus_x.set(1, 1);
    CHECK(multiply(one_plus_x, one_plus_x).coefficient(1) == 2);
    CHECK(multiply(one_plus_x, one_plus_x).coefficient(2) == 1);
    CHECK(TruncatedSeries::monomial(3, 8).coefficient(3) == 1);
    CHECK(TruncatedSeries::monomial(3, 8).coefficient(2) == 0);
    CHECK(add(one_plus_x, TruncatedSeries::monomial(0, 8)).coefficient(0) == 2);
    CHECK_THROWS_AS(one_plus_x.coefficient(8), std::out_of_range);
    CHECK_THROWS_AS(TruncatedSeries(0), std::invalid_argument);

    // operands of unequal precision truncate to the smaller one
    TruncatedSeries wide(12);
    wide.set(0, 1);
    CHECK(multiply(one_plus_x, wide).precision() == 8);
    CHECK(add(one_plus_x, wide).precision() == 8);

    // commutative and associative at equal precision
    TruncatedSeries a(10), b(10), c(10);
    for (std::size_t i = 0; i < 10; ++i) {
        a.set(i, static_cast<long>(i * i + 1));
        b.set(i, static_cast<long>(7 - static_cast<long>(i)));
        c.set(i, static_cast<long>(2 * i));
    }
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("reciprocal inverts") {
    TruncatedSeries denom(16);
    denom.set(0, 1);
    denom.set(1, -1); // 1/(1-x) = all ones
    const TruncatedSeries r = reciprocal(denom);
    for (std::size_t k = 0; k < 16; ++k)
        CHECK(r.coefficient(k) == 1);
    CHECK(multiply(denom, r).coefficient(0) == 1);
    for (std::size_t k = 1; k < 16; ++k)
        CHECK(multiply(denom, r).coefficient(k) == 0);
}

TEST_CASE("squared triangular series") {
    const TruncatedSeries sq = triangular_series_squared(9);
    CHECK(coeffs(sq) == nums({1, 2, 1, 2, 2, 0, 3, 2, 0}));
}

TEST_CASE("rectangle-fountain series") {
    const TruncatedSeries s = gf_123_231(11);
    CHECK(coeffs(s) == nums({1, 1, 1, 1, 2, 1, 2, 2, 2, 3, 1}));
}

TEST_CASE("binomial-without-first-column series") {
    const TruncatedSeries s = gf_123_132(11);
    CHECK(coeffs(s) == nums({1, 2, 1, 3, 3, 1, 4, 6, 4, 1, 5}));
}

TEST_CASE("second-symmetric-function series") {
    const TruncatedSeries s = gf_132_213(11);
    CHECK(coeffs(s) == nums({1, 1, 2, 3, 3, 5, 5, 5, 7, 10, 5}));
}

TEST_CASE("second-symmetric-function series agrees with composition enumeration") {
    // e2 of a composition of s is at least s - 1 (witness (s-1, 1)), so the
    // coefficient of x^k only sees compositions of s <= k + 1
    const std::size_t K = 13;
    const TruncatedSeries s = gf_132_213(K);
    std::vector<long long> direct(K, 0);
    direct[0] = 1; // empty composition
    for (int total = 2; total <= static_cast<int>(K); ++total) {
        for (const Composition& c : compositions_of(total)) {
            if (c.parts.size() == 1)
                continue;
            long long e2 = 0, sum = 0;
            for (int m : c.parts) {
                e2 += m * sum;
                sum += m;
            }
            if (e2 < static_cast<long long>(K))
                ++direct[static_cast<std::size_t>(e2)];
        }
    }
    for (std::size_t k = 0; k < K; ++k)
        CHECK(s.coefficient(k) == to_mpz(direct[k]));
}

TEST_CASE("binomial-diagonal series") {
    const TruncatedSeries s = gf_123_132_213(13);
    CHECK(coeffs(s) == nums({1, 2, 1, 1, 3, 1, 0, 3, 4, 1, 0, 1, 6}));
}

TEST_CASE("sparse two-family series") {
    const TruncatedSeries s = gf_123_132_213_231(11);
    CHECK(coeffs(s) == nums({1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1}));
}

TEST_CASE("fountain continued fraction") {
    const TruncatedSeries s = gf_fountain(17);
    CHECK(coeffs(s) == nums({1, 1, 1, 2, 3, 5, 9, 15, 26, 45, 78, 135, 234, 406, 704,
                             1222, 2120}));
}

TEST_CASE("offset pinning") {
    const auto ref = nums({1, 1, 2, 1, 3, 3, 1, 4, 6, 4, 1}); // oracle 123,132 counts
    const OffsetReport r = pin_offset(gf_123_132(10), ref);
    REQUIRE(r.offset.has_value());
    CHECK(*r.offset == 1);

    const auto aligned = nums({1, 1, 1, 1, 2, 1, 2, 2, 2, 3, 1});
    const OffsetReport r0 = pin_offset(gf_123_231(11), aligned);
    REQUIRE(r0.offset.has_value());
    CHECK(*r0.offset == 0);

    const auto junk = nums({9, 9, 9, 9, 9, 9});
    CHECK_FALSE(pin_offset(gf_123_231(6), junk).offset.has_value());
    CHECK_FALSE(pin_offset(gf_123_231(6), nums({1, 1, 1})).offset.has_value());
}
