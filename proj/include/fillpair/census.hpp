#pragma once
// Census of coherent minimally intersecting filling pairs per genus: scan
// all vertical gluings with n = 2g-1 squares (brute force), or assemble them
// class by class from seatings (construction), deduplicate by canonical
// difference sequence, and report sorted classes with scan statistics.
//
// The brute scan walks cycle sequences (0, a_1, ..., a_{n-1}) depth first,
// keeping the gluing and its inverse incrementally, and tests the
// single-vertex criterion in O(n) at each leaf. A valid gluing is recorded
// only when its difference sequence already equals its class-canonical form,
// so every class is emitted exactly once with no cross-worker coordination;
// the merged records are sorted, which fixes the output order regardless of
// the worker count.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fillpair/menage.hpp"
#include "fillpair/origami.hpp"
#include "fillpair/perm.hpp"
#include "fillpair/polygon.hpp"

namespace fillpair {

enum class CensusMethod { bruteForce, construction };

struct CensusResult {
    int genus = 0;
    int n = 0;                      // squares: 2g-1, or 4 for genus 2
    std::vector<PairClass> classes; // sorted by canonical difference sequence
    long long count = 0;            // = classes.size()
    CensusMethod method = CensusMethod::bruteForce;
    double elapsedSeconds = 0.0;
    // Scan statistics. Brute force: candidates are all (n-1)! cycles and
    // accepted are the ordered valid gluings. Construction: candidates are
    // the usable seating classes and accepted the assembled gluings.
    long long candidateCount = 0;
    long long acceptedCount = 0;
};

namespace detail {

// One difference sequence, fixed-width storage so records sort directly.
using DiffRecord = std::array<std::int8_t, 24>;
constexpr int kMaxBruteSize = 24;

inline DiffRecord packDiffs(const std::vector<int>& d) {
    DiffRecord r{};
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = static_cast<std::int8_t>(d[i]);
    return r;
}

// True iff d is the lexicographically smallest sequence among all rotations
// of d and of its entrywise negation. Allocation-free.
inline bool isCanonicalDiffs(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) {  // d vs rotation r of d
            const int v = d[(i + r) % n];
            if (v < d[i]) return false;
            if (v > d[i]) break;
        }
        for (int i = 0; i < n; ++i) {  // d vs rotation r of -d
            const int v = n - d[(i + r) % n];
            if (v < d[i]) return false;
            if (v > d[i]) break;
        }
    }
    return true;
}

struct BruteShard {
    std::vector<DiffRecord> records;
    long long scanned = 0;
    long long accepted = 0;
};

// Depth-first scan of all n-cycles whose cycle sequence starts (0, first),
// recorded as p/pinv images so the leaf test is array lookups only.
class BruteScanner {
  public:
    explicit BruteScanner(int n)
        : n_(n), p_(n, -1), pinv_(n, -1), seq_(n, -1), used_(n, 0), diffs_(n, 0) {
        seq_[0] = 0;
        used_[0] = 1;
    }

    void scanPrefix(int first, BruteShard& out) {
        place(1, first);
        descend(2, out);
        unplace(1, first);
    }

  private:
    void place(int depth, int v) {
        seq_[depth] = v;
        used_[v] = 1;
        p_[seq_[depth - 1]] = v;
        pinv_[v] = seq_[depth - 1];
    }

    void unplace(int depth, int v) {
        used_[v] = 0;
        seq_[depth] = -1;
    }

    void descend(int depth, BruteShard& out) {
        if (depth == n_) {
            leaf(out);
            return;
        }
        for (int v = 1; v < n_; ++v) {
            if (used_[v]) continue;
            place(depth, v);
            descend(depth + 1, out);
            unplace(depth, v);
        }
    }

    void leaf(BruteShard& out) {
        ++out.scanned;
        const int last = seq_[n_ - 1];
        p_[last] = 0;
        pinv_[0] = last;
        // Single-orbit walk of the commutator of the horizontal and vertical
        // gluings: c(i) = p(p^-1(i) - 1) + 1 mod n.
        int i = 0, steps = 0;
        do {
            i = (p_[(pinv_[i] + n_ - 1) % n_] + 1) % n_;
            ++steps;
        } while (i != 0 && steps <= n_);
        if (steps != n_) return;
        ++out.accepted;
        for (int k = 0; k < n_; ++k) {
            diffs_[k] = ((seq_[(k + 1) % n_] - seq_[k]) % n_ + n_) % n_;
        }
        if (isCanonicalDiffs(diffs_)) out.records.push_back(packDiffs(diffs_));
    }

    int n_;
    std::vector<int> p_, pinv_, seq_, used_;
    std::vector<int> diffs_;
};

// Scan every n-cycle, partitioned by the first step of the cycle sequence.
// Shards are merged in partition order, so the result does not depend on how
// partitions were assigned to threads.
inline BruteShard bruteScan(int n, int workers) {
    if (n < 3) throw std::invalid_argument("bruteScan: need n >= 3");
    if (n > kMaxBruteSize) throw std::invalid_argument("bruteScan: size over limit");
    const int tasks = n - 1;
    std::vector<BruteShard> shards(tasks);
    const int threadCount = std::max(1, std::min(workers, tasks));
    if (threadCount == 1) {
        BruteScanner scanner(n);
        for (int t = 0; t < tasks; ++t) scanner.scanPrefix(1 + t, shards[t]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threadCount);
        for (int w = 0; w < threadCount; ++w) {
            pool.emplace_back([&, w] {
                BruteScanner scanner(n);
                for (int t = w; t < tasks; t += threadCount) {
                    scanner.scanPrefix(1 + t, shards[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    BruteShard all;
    for (const auto& s : shards) {
        all.scanned += s.scanned;
        all.accepted += s.accepted;
        all.records.insert(all.records.end(), s.records.begin(), s.records.end());
    }
    std::sort(all.records.begin(), all.records.end());
    if (std::adjacent_find(all.records.begin(), all.records.end()) !=
        all.records.end()) {
        throw std::logic_error("bruteScan: duplicate canonical record");
    }
    return all;
}

inline PairClass classFromCanonicalDiffs(DiffSeq d, int genus) {
    PairClass pc;
    pc.orbitSize = classOrbitSize(d);
    pc.canonical = std::move(d);
    pc.genus = genus;
    pc.stratum = {2 * genus - 2};  // one vertex, cone order n = 2g-1
    return pc;
}

inline void checkGenusRange(int g, bool allowLong) {
    if (g < 3) throw std::invalid_argument("census: need genus >= 3");
    if (g >= 7 && !allowLong) {
        throw std::invalid_argument(
            "census: genus >= 7 scans at least 12! candidates; pass the "
            "long-run override to proceed");
    }
    if (2 * g - 1 > kMaxBruteSize) {
        throw std::invalid_argument("census: genus over the supported size");
    }
}

}  // namespace detail

struct CensusOptions {
    int workers = 1;
    bool allowLong = false;
};

// Scan all (n-1)! vertical gluings with n = 2g-1, keep the coherent
// minimally intersecting pairs, and deduplicate into sorted classes.
inline CensusResult enumerateBrute(int g, const CensusOptions& opt = {}) {
    detail::checkGenusRange(g, opt.allowLong);
    const auto start = std::chrono::steady_clock::now();
    const int n = 2 * g - 1;
    auto shard = detail::bruteScan(n, std::max(1, opt.workers));

    CensusResult res;
    res.genus = g;
    res.n = n;
    res.method = CensusMethod::bruteForce;
    res.candidateCount = shard.scanned;
    res.acceptedCount = shard.accepted;
    res.classes.reserve(shard.records.size());
    for (const auto& rec : shard.records) {
        DiffSeq d;
        d.diffs.assign(rec.begin(), rec.begin() + n);
        res.classes.push_back(detail::classFromCanonicalDiffs(std::move(d), g));
    }
    res.count = static_cast<long long>(res.classes.size());
    res.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

// Assemble pairs seating class by seating class and deduplicate into sorted
// classes; must agree with enumerateBrute on every genus.
inline CensusResult enumerateConstructive(int g, const CensusOptions& opt = {}) {
    detail::checkGenusRange(g, opt.allowLong);
    const auto start = std::chrono::steady_clock::now();
    const int n = 2 * g - 1;

    CensusResult res;
    res.genus = g;
    res.n = n;
    res.method = CensusMethod::construction;

    std::vector<detail::DiffRecord> records;
    for (const auto& c : gilbertClasses(n)) {
        if (isAllOpposite(c.representative)) continue;
        auto bl = propagateBetaLabels(alphaMatchingFromMenage(c.representative));
        if (!bl) continue;
        ++res.candidateCount;  // usable classes: a labeling exists
        for (int x = 1; x <= n; ++x) {
            auto r = resolveOffset(*bl, x);
            auto* o = std::get_if<Origami>(&r);
            if (!o) continue;
            ++res.acceptedCount;
            records.push_back(detail::packDiffs(canonicalForm(*o).diffs));
        }
    }
    std::sort(records.begin(), records.end());
    records.erase(std::unique(records.begin(), records.end()), records.end());
    res.classes.reserve(records.size());
    for (const auto& rec : records) {
        DiffSeq d;
        d.diffs.assign(rec.begin(), rec.begin() + n);
        res.classes.push_back(detail::classFromCanonicalDiffs(std::move(d), g));
    }
    res.count = static_cast<long long>(res.classes.size());
    res.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

// Genus 2 needs four squares and a two-vertex surface (Euler characteristic
// -2): scan the six 4-cycles and deduplicate the valid ones.
inline CensusResult genus2Census() {
    const auto start = std::chrono::steady_clock::now();
    CensusResult res;
    res.genus = 2;
    res.n = 4;
    res.method = CensusMethod::bruteForce;

    std::vector<detail::DiffRecord> records;
    iterateNCycles(4, [&](const CycleSeq& c) {
        ++res.candidateCount;
        const Origami o{permFromCycleSeq(c)};
        const SurfaceData s = vertexOrbits(o);
        if (s.eulerChar != -2) return;
        ++res.acceptedCount;
        records.push_back(detail::packDiffs(canonicalForm(o).diffs));
    });
    std::sort(records.begin(), records.end());
    records.erase(std::unique(records.begin(), records.end()), records.end());
    for (const auto& rec : records) {
        DiffSeq d;
        d.diffs.assign(rec.begin(), rec.begin() + 4);
        PairClass pc;
        pc.orbitSize = classOrbitSize(d);
        pc.canonical = std::move(d);
        pc.genus = 2;
        if (auto cs = fromDiffSeq(pc.canonical)) {
            pc.stratum = stratumSignature(Origami{permFromCycleSeq(*cs)});
        }
        res.classes.push_back(std::move(pc));
    }
    res.count = static_cast<long long>(res.classes.size());
    res.elapsedSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

// Ordered valid gluings on n squares (not deduplicated); n may be even, in
// which case the count is zero because a single vertex forces n odd.
inline long long countOrderedValid(int n, int workers = 1) {
    return detail::bruteScan(n, workers).accepted;
}

// Diagnostic report for one vertical gluing.
struct VerifyReport {
    int n = 0;
    Perm p;
    bool singleCycle = false;
    SurfaceData surface;
    bool validPair = false;       // single-vertex criterion
    bool traceAgrees = false;     // polygon-trace criterion gives the same answer
    DiffSeq canonical;            // empty unless singleCycle
    int orbitSize = 0;            // 0 unless validPair
    std::vector<int> stratum;
};

inline VerifyReport verifyOne(const Perm& p) {
    if (!isPermutation(p)) {
        throw std::invalid_argument("verifyOne: not a permutation");
    }
    VerifyReport r;
    r.n = static_cast<int>(p.size());
    r.p = p;
    const Origami o{p};
    r.singleCycle = isValidOrigami(o);
    r.surface = vertexOrbits(o);
    r.stratum = stratumSignature(o);
    r.validPair = isCoherentMinimalPair(o);
    r.traceAgrees = isValidPairViaTrace(o) == r.validPair;
    if (r.singleCycle) {
        r.canonical = canonicalForm(o);
        if (r.validPair) r.orbitSize = classOrbitSize(r.canonical);
    }
    return r;
}

// One census class as a JSON line.
inline std::string jsonlLine(const PairClass& pc) {
    std::ostringstream os;
    os << "{\"genus\": " << pc.genus << ", \"n\": " << pc.canonical.n()
       << ", \"canonical_diffs\": [";
    for (int i = 0; i < pc.canonical.n(); ++i) {
        if (i) os << ", ";
        os << pc.canonical.diffs[i];
    }
    os << "], \"orbit_size\": " << pc.orbitSize << ", \"stratum\": [";
    for (std::size_t i = 0; i < pc.stratum.size(); ++i) {
        if (i) os << ", ";
        os << pc.stratum[i];
    }
    os << "]}";
    return os.str();
}

}  // namespace fillpair
