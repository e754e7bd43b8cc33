#pragma once
// Ménage permutations and their rotation classes — step one of the
// constructive enumeration. A ménage permutation P on {0..n-1} satisfies
// P(i) != i and P(i) != i+1 mod n. Rotation conjugates of a ménage
// permutation are again ménage; the constructive pipeline works one
// conjugation class at a time.
//
// The class of the "all-opposite" permutation P(i) = i + (n+1)/2 mod n
// (n odd) is excluded: its induced polygon matching pairs every side with
// the antipodal one, which can never close up into a single disk.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <vector>

#include "fillpair/perm.hpp"

namespace fillpair {

using BigInt = boost::multiprecision::cpp_int;

inline bool isMenage(const Perm& P) {
    const int n = static_cast<int>(P.size());
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        if (P[i] == i || P[i] == (i + 1) % n) return false;
    }
    return true;
}

// Position-wise backtracking with the two forbidden values pruned per
// position; emits image sequences in increasing lexicographic order.
template <class Visit>
void enumerateMenage(int n, Visit&& visit) {
    if (n < 3) throw std::invalid_argument("enumerateMenage: need n >= 3");
    Perm P(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            visit(static_cast<const Perm&>(P));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || v == i || v == (i + 1) % n) continue;
            used[v] = 1;
            P[i] = v;
            self(self, i + 1);
            used[v] = 0;
        }
        P[i] = -1;
    };
    rec(rec, 0);
}

inline std::vector<Perm> allMenage(int n) {
    std::vector<Perm> out;
    enumerateMenage(n, [&](const Perm& P) { out.push_back(P); });
    return out;
}

// Closed-form count: sum over k of (-1)^k * 2n/(2n-k) * C(2n-k, k) * (n-k)!
// in exact integer arithmetic (the division is exact term by term).
inline BigInt menageNumber(int n) {
    if (n < 3) throw std::invalid_argument("menageNumber: need n >= 3");
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) {
        // C(2n-k, k)
        BigInt binom = 1;
        for (int j = 1; j <= k; ++j) {
            binom *= (2 * n - k - j + 1);
            binom /= j;
        }
        BigInt term = binom * (2 * n);
        term /= (2 * n - k);  // exact: 2n/(2n-k) * C(2n-k,k) is an integer
        for (int j = 2; j <= n - k; ++j) term *= j;  // (n-k)!
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

// Conjugation by the rotation i -> i+a: (C^-1 P C)(i) = P(i+a) - a mod n.
inline Perm conjugateByRotation(const Perm& P, int a) {
    const int n = static_cast<int>(P.size());
    Perm out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = ((P[(i + a) % n] - a) % n + n) % n;
    }
    return out;
}

// One conjugation class; the representative is the lexicographically
// smallest image sequence among the n rotation conjugates.
struct GilbertClass {
    Perm representative;
    int size = 0;

    bool operator==(const GilbertClass&) const = default;
};

inline std::vector<GilbertClass> gilbertClasses(int n) {
    std::map<Perm, int> classes;  // canonical representative -> orbit size
    enumerateMenage(n, [&](const Perm& P) {
        Perm best = P;
        for (int a = 1; a < n; ++a) {
            Perm c = conjugateByRotation(P, a);
            if (c < best) best = std::move(c);
        }
        if (best == P) {
            // Count the orbit once, from its canonical member.
            int size = 0;
            for (int a = 0; a < n; ++a) {
                if (conjugateByRotation(P, a) == P) ++size;
            }
            classes[P] = n / size;  // orbit size = n / stabilizer size
        }
    });
    std::vector<GilbertClass> out;
    out.reserve(classes.size());
    for (const auto& [rep, size] : classes) out.push_back({rep, size});
    return out;
}

// Independent class count: average number of conjugation-fixed ménage
// permutations over all n rotations.
inline long long gilbertClassCountByBurnside(int n) {
    long long fixedTotal = 0;
    enumerateMenage(n, [&](const Perm& P) {
        for (int a = 0; a < n; ++a) {
            if (conjugateByRotation(P, a) == P) ++fixedTotal;
        }
    });
    if (fixedTotal % n != 0) throw std::logic_error("Burnside sum not divisible");
    return fixedTotal / n;
}

// Slot positions of the polygon matching induced by P (2n boundary sides
// carrying the first curve, 0-based): copy i of the curve occupies slot 2i
// on one side class and slot 2*P(i)-1 mod 2n on the other. A matched pair at
// circular distance 1 is exactly a violation of the ménage condition, and
// parity makes every matched distance odd.
inline int matchedSlotOfCopy(const Perm& P, int i) {
    const int n = static_cast<int>(P.size());
    return ((2 * P[i] - 1) % (2 * n) + 2 * n) % (2 * n);
}

// Circular distance between two of the 2n slots; result in 1..n.
inline int slotDistance(int s, int t, int n) {
    int diff = std::abs(s - t) % (2 * n);
    return std::min(diff, 2 * n - diff);
}

// True iff every matched pair of the induced polygon matching sits at the
// maximal (antipodal) distance n; equivalently P(i) = i + (n+1)/2 mod n.
// Exactly one conjugation class satisfies this, and it is a singleton.
inline bool isAllOpposite(const Perm& P) {
    const int n = static_cast<int>(P.size());
    if (n % 2 == 0) throw std::invalid_argument("isAllOpposite: need odd n");
    for (int i = 0; i < n; ++i) {
        if (slotDistance(2 * i, matchedSlotOfCopy(P, i), n) != n) return false;
    }
    return true;
}

}  // namespace fillpair
