#pragma once
// Permutations of {0..n-1}: composition, cycle structure, commutators,
// n-cycle iteration in lexicographic order, and the difference-sequence
// encoding of an n-cycle used as the deduplication key everywhere else.
//
// Conventions: indices are 0-based internally; all text I/O is 1-based
// cycle notation "(a_1 a_2 ... a_n)". Cycle sequences are normalized to
// start at 0 so every n-cycle has a unique stored form.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fillpair {

// images[i] is the image of i; the vector length is n.
using Perm = std::vector<int>;

inline bool isPermutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline Perm identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

// The standard cycle i -> i+1 mod n (the horizontal gluing of every origami).
inline Perm standardCycle(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

// compose(p, q): apply q first, then p; i -> p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    const int n = static_cast<int>(p.size());
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = p[q[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    const int n = static_cast<int>(p.size());
    Perm r(n);
    for (int i = 0; i < n; ++i) r[p[i]] = i;
    return r;
}

// a o b o a^-1 o b^-1.
inline Perm commutator(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("commutator: size mismatch");
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

// Orbit partition; each cycle listed from its minimal element, cycles ordered
// by minimal element.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline int cycleCount(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
    }
    return count;
}

inline bool isNCycle(const Perm& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) return false;
    int j = 0, steps = 0;
    do {
        j = p[j];
        ++steps;
    } while (j != 0 && steps <= n);
    return steps == n;
}

// An n-cycle written as the entry sequence (a_0=0, a_1, ..., a_{n-1}) with
// a_{i+1} = p(a_i). Unique per n-cycle because the start is pinned to 0.
struct CycleSeq {
    std::vector<int> entries;

    int n() const { return static_cast<int>(entries.size()); }
    bool operator==(const CycleSeq&) const = default;
};

inline CycleSeq cycleSeqOf(const Perm& p) {
    if (!isNCycle(p)) throw std::invalid_argument("cycleSeqOf: not an n-cycle");
    const int n = static_cast<int>(p.size());
    CycleSeq c;
    c.entries.reserve(n);
    int j = 0;
    for (int k = 0; k < n; ++k) {
        c.entries.push_back(j);
        j = p[j];
    }
    return c;
}

inline Perm permFromCycleSeq(const CycleSeq& c) {
    const int n = c.n();
    Perm p(n);
    for (int i = 0; i < n; ++i) p[c.entries[i]] = c.entries[(i + 1) % n];
    return p;
}

// Cyclic difference sequence (d_0, ..., d_{n-1}), d_i = a_{i+1} - a_i mod n
// with wraparound; every d_i lies in 1..n-1. Determines the n-cycle uniquely.
struct DiffSeq {
    std::vector<int> diffs;

    int n() const { return static_cast<int>(diffs.size()); }
    bool operator==(const DiffSeq&) const = default;
    auto operator<=>(const DiffSeq&) const = default;
};

inline DiffSeq toDiffSeq(const CycleSeq& c) {
    const int n = c.n();
    DiffSeq d;
    d.diffs.reserve(n);
    for (int i = 0; i < n; ++i) {
        int diff = ((c.entries[(i + 1) % n] - c.entries[i]) % n + n) % n;
        d.diffs.push_back(diff);
    }
    return d;
}

// Rebuild the entry sequence from differences; fails (nullopt) when the
// partial sums collide, i.e. the differences do not describe an n-cycle.
inline std::optional<CycleSeq> fromDiffSeq(const DiffSeq& d) {
    const int n = d.n();
    CycleSeq c;
    c.entries.reserve(n);
    std::vector<char> seen(n, 0);
    int a = 0;
    for (int i = 0; i < n; ++i) {
        if (a < 0 || a >= n || seen[a]) return std::nullopt;
        seen[a] = 1;
        c.entries.push_back(a);
        a = (a + d.diffs[i]) % n;
    }
    if (a != 0) return std::nullopt;  // differences do not close the cycle
    return c;
}

// 1-based textual cycle notation, e.g. "(1 2 5 3 4)".
inline std::string formatCycle(const CycleSeq& c) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < c.n(); ++i) {
        if (i) os << ' ';
        os << c.entries[i] + 1;
    }
    os << ')';
    return os.str();
}

// Parse 1-based cycle notation; accepts any rotation of the entries and
// normalizes so the stored sequence starts at 0. Parentheses optional.
inline std::optional<CycleSeq> parseCycle(const std::string& text) {
    std::string body;
    body.reserve(text.size());
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ',') {
            body.push_back(' ');
        } else {
            body.push_back(ch);
        }
    }
    std::istringstream is(body);
    std::vector<int> vals;
    long long v = 0;
    while (is >> v) vals.push_back(static_cast<int>(v - 1));  // to 0-based
    if (vals.empty()) return std::nullopt;
    const int n = static_cast<int>(vals.size());
    std::vector<char> seen(n, 0);
    int zeroPos = -1;
    for (int i = 0; i < n; ++i) {
        if (vals[i] < 0 || vals[i] >= n || seen[vals[i]]) return std::nullopt;
        seen[vals[i]] = 1;
        if (vals[i] == 0) zeroPos = i;
    }
    CycleSeq c;
    c.entries.reserve(n);
    for (int i = 0; i < n; ++i) c.entries.push_back(vals[(zeroPos + i) % n]);
    return c;
}

// Visit all (n-1)! n-cycles in lexicographic order of (a_1, ..., a_{n-1}).
// `prefix` pins the first entries after a_0 = 0, so disjoint prefixes give
// disjoint, order-preserving partitions for parallel consumption.
template <class Visit>
void iterateNCycles(int n, Visit&& visit, std::span<const int> prefix = {}) {
    if (n < 1) throw std::invalid_argument("iterateNCycles: n must be positive");
    CycleSeq c;
    c.entries.assign(1, 0);
    c.entries.reserve(n);
    std::vector<char> used(n, 0);
    used[0] = 1;
    for (int v : prefix) {
        if (v <= 0 || v >= n || used[v])
            throw std::invalid_argument("iterateNCycles: bad prefix");
        used[v] = 1;
        c.entries.push_back(v);
    }
    // Depth-first over unused entries in increasing order = lexicographic.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(c.entries.size()) == n) {
            visit(static_cast<const CycleSeq&>(c));
            return;
        }
        for (int v = 1; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            c.entries.push_back(v);
            self(self);
            c.entries.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
}

}  // namespace fillpair
