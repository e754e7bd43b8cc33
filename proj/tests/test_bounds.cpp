// Bounds layer: seating-class counts by enumeration, Burnside average, and
// the prime closed form; the exact per-genus bounds; the certified floor of
// (g-1)(2g-2)!/e^2 against the published column; and the CSV table.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "fillpair/bounds.hpp"
#include "fillpair/census.hpp"

using namespace fillpair;

TEST_CASE("seating class counts agree across counting methods", "[bounds]") {
    // Prime sizes take the closed form; compare with direct orbit counting.
    CHECK(seatingClassCount(5) == 5);
    CHECK(gilbertClasses(5).size() == 5);
    CHECK(seatingClassCount(7) == 87);
    CHECK(gilbertClasses(7).size() == 87);
    CHECK(seatingClassCount(11) == 444621);
    CHECK(gilbertClasses(11).size() == 444621);

    // Composite size: enumeration, double-checked by the rotation average.
    CHECK(seatingClassCount(9) == 4843);
    CHECK(gilbertClassCountByBurnside(9) == 4843);

    CHECK(seatingClassCount(13) == 59661265);

    CHECK_THROWS_AS(seatingClassCount(2), std::invalid_argument);
    // Composite and too large to enumerate.
    CHECK_THROWS_AS(seatingClassCount(15), std::invalid_argument);
}

TEST_CASE("exact bounds per genus", "[bounds]") {
    const auto b3 = exactBound(3);
    CHECK(b3.seatingClasses == 5);
    CHECK(b3.exactBound == 10);
    CHECK(b3.exactBoundExcl == 8);

    const auto b4 = exactBound(4);
    CHECK(b4.exactBound == 261);  // 3 x 87
    CHECK(b4.exactBoundExcl == 258);

    CHECK(exactBound(5).exactBound == 19372);   // 4 x 4843
    CHECK(exactBound(5).exactBoundExcl == 19368);
    CHECK(exactBound(6).exactBound == 2223105);  // 5 x 444621
    CHECK(exactBound(7).exactBound == 357967590);  // 6 x 59661265
    CHECK(exactBound(7).exactBoundExcl == 357967584);

    for (int g : {3, 4, 5, 6, 7, 9}) {  // genus 9 squares (17) are prime again
        const auto b = exactBound(g);
        CHECK(b.exactBoundExcl < b.exactBound);
        CHECK(b.exactBoundExcl > 0);
    }
    CHECK_THROWS_AS(exactBound(2), std::invalid_argument);
    CHECK_THROWS_AS(exactBound(8), std::invalid_argument);  // 15 chairs
}

TEST_CASE("asymptotic bound reproduces the published column", "[bounds]") {
    CHECK(asymptoticBound(3) == 6);
    CHECK(asymptoticBound(4) == 292);
    // Floor, not rounding: the true value here is just below 21827.
    CHECK(asymptoticBound(5) == 21826);
    CHECK(asymptoticBound(6) == 2455523);
    CHECK(asymptoticBound(7) == 388954903);
    CHECK_THROWS_AS(asymptoticBound(2), std::invalid_argument);
}

TEST_CASE("floor of the quotient is stable under precision doubling",
          "[bounds]") {
    for (int g = 3; g <= 12; ++g) {
        const BigInt N = BigInt(g - 1) * detail::factorialBig(2 * g - 2);
        const auto at128 = detail::floorDivBySquaredE(N, 128);
        const auto at256 = detail::floorDivBySquaredE(N, 256);
        REQUIRE(at128.has_value());
        REQUIRE(at256.has_value());
        CHECK(*at128 == *at256);
        CHECK(asymptoticBound(g) == *at128);
        if (const auto at64 = detail::floorDivBySquaredE(N, 64)) {
            CHECK(*at64 == *at128);
        }
    }
}

TEST_CASE("census counts stay under the bounds", "[bounds]") {
    const std::map<int, long long> counts{
        {3, enumerateBrute(3).count},
        {4, enumerateBrute(4).count},
        {5, enumerateBrute(5).count},
        {6, 23904},
        {7, 2448720},
    };
    for (const auto& [g, count] : counts) {
        const auto b = exactBound(g);
        CHECK(BigInt(count) <= b.exactBoundExcl);
        CHECK(BigInt(count) <= b.exactBound);
        CHECK(BigInt(count) <= asymptoticBound(g));
    }
}

TEST_CASE("class count approaches its factorial scale", "[bounds]") {
    // Ratio A(2g-1) * e^2 / (2g-2)!. The gap to 1 shrinks from genus 5 on
    // (the approach is not monotone before that: genus 4 slightly overshoots
    // genus 5), and the largest computable genus sits closest to 1.
    const double e2 = std::exp(2.0);
    std::map<int, double> gap;
    for (int g : {3, 4, 5, 6, 7}) {
        const double A = seatingClassCount(2 * g - 1).convert_to<double>();
        const double fact =
            detail::factorialBig(2 * g - 2).convert_to<double>();
        gap[g] = std::abs(1.0 - A * e2 / fact);
    }
    CHECK(gap[3] > gap[4]);
    CHECK(gap[5] > gap[6]);
    CHECK(gap[6] > gap[7]);
    for (int g : {3, 4, 5, 6}) CHECK(gap[7] < gap[g]);
}

TEST_CASE("bound table emits one CSV row per genus", "[bounds]") {
    const std::map<int, long long> counts{{3, 1}, {4, 8}, {5, 436},
                                          {6, 23904}, {7, 2448720}};
    const auto lines = boundTable(7, counts);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] ==
          "genus,squares,count,asymptotic_bound,exact_bound,"
          "exact_bound_excl_opposite");
    CHECK(lines[1] == "3,5,1,6,10,8");
    CHECK(lines[2] == "4,7,8,292,261,258");
    CHECK(lines[3] == "5,9,436,21826,19372,19368");
    CHECK(lines[4] == "6,11,23904,2455523,2223105,2223100");
    CHECK(lines[5] == "7,13,2448720,388954903,357967590,357967584");

    // Without counts the cell stays empty; genus 8 has no exact bound.
    const auto bare = boundTable(8);
    REQUIRE(bare.size() == 7);
    CHECK(bare[1] == "3,5,,6,10,8");
    CHECK(bare[6].substr(0, 5) == "8,15,");
    CHECK(bare[6].substr(bare[6].size() - 2) == ",,");

    CHECK_THROWS_AS(boundTable(2), std::invalid_argument);
}
