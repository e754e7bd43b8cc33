#pragma once
// Upper bounds on the number of filling-pair classes per genus.
//
// Exact bound: every class arises from a seating class and an offset, and
// offsets come in mirror pairs, so with A = number of seating classes at
// n = 2g-1 there are at most (2g-2)*A/2 = (g-1)*A classes; the all-opposite
// seating class never produces one, giving the sharper (g-1)*(A-1).
//
// Asymptotic bound: floor((g-1)*(2g-2)!/e^2), evaluated with exact integers
// and a certified enclosure of e so the floor is provably correct (the
// interval is tightened until both endpoints agree).

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fillpair/menage.hpp"

namespace fillpair {

namespace detail {

inline bool isPrime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline BigInt factorialBig(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Integer enclosure E_lo <= e * 10^digits <= E_hi from the series for e with
// tail bound sum_{k>m} 1/k! < 1/(m! * m).
inline std::pair<BigInt, BigInt> scaledEBounds(int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits + 5; ++i) scale *= 10;
    // Choose m with m! * m > 10^(digits+5).
    int m = 1;
    BigInt fact = 1;
    while (fact * m <= scale) {
        ++m;
        fact *= m;
    }
    // partial = sum_{k=0..m} 1/k! = series / m!, by series <- series*k + 1.
    BigInt series = 1;
    for (int k = 1; k <= m; ++k) series = series * k + 1;

    BigInt pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    const BigInt lo = (series * pow10) / fact;
    const BigInt hiNum = (series * m + 1) * pow10;
    const BigInt hiDen = fact * m;
    const BigInt hi = (hiNum + hiDen - 1) / hiDen;  // ceiling
    return {lo, hi};
}

// floor(N / e^2) bracketed through the enclosure of e at the given number of
// decimal digits; empty when the enclosure is still too loose to certify.
inline std::optional<BigInt> floorDivBySquaredE(const BigInt& N, int digits) {
    const auto [eLo, eHi] = scaledEBounds(digits);
    BigInt pow10sq = 1;
    for (int i = 0; i < 2 * digits; ++i) pow10sq *= 10;
    const BigInt lo = (N * pow10sq) / (eHi * eHi);
    const BigInt hi = (N * pow10sq) / (eLo * eLo);
    if (lo != hi) return std::nullopt;
    return lo;
}

}  // namespace detail

// Number of seating classes at n chairs (conjugation by rotations). Uses the
// orbit enumeration for sizes the scan can afford; for prime n the count has
// a closed form, because a seating commuting with a nontrivial rotation must
// itself be a rotation, and exactly n-2 rotations are seatings:
//   A(n) = (menageNumber(n) + (n-1)(n-2)) / n.
inline BigInt seatingClassCount(int n) {
    if (n < 3) throw std::invalid_argument("seatingClassCount: need n >= 3");
    if (detail::isPrime(n)) {
        const BigInt total = menageNumber(n) + BigInt(n - 1) * (n - 2);
        if (total % n != 0) {
            throw std::logic_error("seatingClassCount: class sum not divisible");
        }
        return total / n;
    }
    if (n <= 11) return BigInt(gilbertClasses(n).size());
    throw std::invalid_argument(
        "seatingClassCount: composite size over the enumeration limit");
}

struct BoundReport {
    int g = 0;
    BigInt seatingClasses;   // A = seating classes at n = 2g-1
    BigInt exactBound;       // (g-1) * A
    BigInt exactBoundExcl;   // (g-1) * (A-1): all-opposite class removed
};

inline BoundReport exactBound(int g) {
    if (g < 3) throw std::invalid_argument("exactBound: need genus >= 3");
    BoundReport r;
    r.g = g;
    r.seatingClasses = seatingClassCount(2 * g - 1);
    r.exactBound = BigInt(g - 1) * r.seatingClasses;
    r.exactBoundExcl = BigInt(g - 1) * (r.seatingClasses - 1);
    return r;
}

// floor((g-1) * (2g-2)! / e^2), exact at every genus: the enclosure of e is
// tightened until the floor is certified, starting at 64 digits (beyond the
// required 50).
inline BigInt asymptoticBound(int g) {
    if (g < 3) throw std::invalid_argument("asymptoticBound: need genus >= 3");
    const BigInt N = BigInt(g - 1) * detail::factorialBig(2 * g - 2);
    for (int digits = 64;; digits *= 2) {
        if (auto v = detail::floorDivBySquaredE(N, digits)) return *v;
        if (digits > 1 << 20) {
            throw std::logic_error("asymptoticBound: enclosure failed to close");
        }
    }
}

// CSV table of bounds per genus, with census counts filled in where the
// caller provides them and exact bounds where the class count is computable.
// Columns: genus,squares,count,asymptotic_bound,exact_bound,
// exact_bound_excl_opposite.
inline std::vector<std::string> boundTable(
    int gMax, const std::map<int, long long>& censusCounts = {}) {
    if (gMax < 3) throw std::invalid_argument("boundTable: need gMax >= 3");
    std::vector<std::string> lines;
    lines.push_back(
        "genus,squares,count,asymptotic_bound,exact_bound,"
        "exact_bound_excl_opposite");
    for (int g = 3; g <= gMax; ++g) {
        std::ostringstream os;
        os << g << ',' << 2 * g - 1 << ',';
        if (auto it = censusCounts.find(g); it != censusCounts.end()) {
            os << it->second;
        }
        os << ',' << asymptoticBound(g).str() << ',';
        try {
            const BoundReport r = exactBound(g);
            os << r.exactBound.str() << ',' << r.exactBoundExcl.str();
        } catch (const std::invalid_argument&) {
            os << ',';  // class count out of reach at this size
        }
        lines.push_back(os.str());
    }
    return lines;
}

}  // namespace fillpair
