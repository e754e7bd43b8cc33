#pragma once
// Square-tiled surfaces with one horizontal and one vertical annulus:
// n unit squares in a row, right edge of square i glued to the left edge of
// square i+1 mod n (so the horizontal gluing is always the standard cycle),
// and the top edge of square i glued to the bottom edge of square p(i) for a
// vertical gluing p that is a single n-cycle.
//
// This header computes the glued surface's vertex data (vertex count, cone
// orders, Euler characteristic, genus), the validity criterion for a
// coherent minimally intersecting filling pair (exactly one vertex, i.e. the
// complement of the two core curves is a single disk), the relabeling and
// reflection symmetries, and the canonical difference-sequence forms used to
// deduplicate equivalent surfaces.

#include <set>
#include <vector>

#include "fillpair/perm.hpp"

namespace fillpair {

struct Origami {
    Perm p;  // vertical gluing; horizontal gluing is standardCycle(n) implicitly

    int n() const { return static_cast<int>(p.size()); }
};

inline bool isValidOrigami(const Origami& o) { return isNCycle(o.p); }

struct SurfaceData {
    int vertexCount = 0;            // V: classes of glued square-corners
    std::vector<int> coneOrders;    // cycle lengths, ascending; sums to n
    int eulerChar = 0;              // V - n  (E = 2n, F = n)
    int genus = 0;                  // (2 - eulerChar) / 2
};

// Vertex data from the cycles of the commutator of the horizontal and
// vertical gluings. The cycle count is insensitive to orientation-convention
// choices (swapping or inverting the arguments preserves cycle type), and is
// cross-checked against a corner-walking oracle in the test suite.
inline SurfaceData vertexOrbits(const Origami& o) {
    const int n = o.n();
    SurfaceData s;
    auto cs = cycles(commutator(standardCycle(n), o.p));
    s.vertexCount = static_cast<int>(cs.size());
    for (const auto& c : cs) s.coneOrders.push_back(static_cast<int>(c.size()));
    std::sort(s.coneOrders.begin(), s.coneOrders.end());
    s.eulerChar = s.vertexCount - n;
    s.genus = (2 - s.eulerChar) / 2;
    return s;
}

// Orders of the cone points (vertices where more than four squares meet):
// one entry l-1 per vertex of cone order l > 1. For a valid filling pair on
// genus g this is the single entry 2g-2.
inline std::vector<int> stratumSignature(const Origami& o) {
    std::vector<int> sig;
    for (int l : vertexOrbits(o).coneOrders) {
        if (l > 1) sig.push_back(l - 1);
    }
    return sig;
}

// True iff the two core curves fill the surface with a single complement
// disk: exactly one vertex class. Forces n odd, n = 2g-1, and intersection
// number n, which is minimal; coherence is automatic because every square
// has the same orientation, so all crossings carry the same sign.
inline bool isCoherentMinimalPair(const Origami& o) {
    if (o.n() < 3 || !isValidOrigami(o)) return false;
    const int n = o.n();
    // Single-orbit walk of the commutator c = h p h^-1 p^-1 without
    // materializing it: c(i) = p(p^-1(i) - 1) + 1 (indices mod n).
    Perm pinv = inverse(o.p);
    int i = 0, steps = 0;
    do {
        i = (o.p[(pinv[i] + n - 1) % n] + 1) % n;
        ++steps;
    } while (i != 0 && steps <= n);
    return steps == n;
}

// Relabeling along the horizontal annulus: the only square relabelings that
// keep the horizontal gluing standard are its own powers.
inline Origami shift(const Origami& o) {
    const int n = o.n();
    Perm h = standardCycle(n);
    return {compose(inverse(h), compose(o.p, h))};
}

// Left-right reflection, renormalized so the horizontal gluing stays
// standard: conjugation by r(i) = -i mod n.
inline Origami mirrorH(const Origami& o) {
    const int n = o.n();
    Perm r(n);
    for (int i = 0; i < n; ++i) r[i] = (n - i) % n;
    return {compose(r, compose(o.p, r))};  // r is an involution
}

// Top-bottom reflection: inverts the vertical gluing.
inline Origami flipV(const Origami& o) { return {inverse(o.p)}; }

// Rotate a difference sequence left by r.
inline DiffSeq rotateDiffs(const DiffSeq& d, int r) {
    const int n = d.n();
    DiffSeq out;
    out.diffs.reserve(n);
    for (int i = 0; i < n; ++i) out.diffs.push_back(d.diffs[(i + r) % n]);
    return out;
}

// Entrywise negation mod n.
inline DiffSeq negateDiffs(const DiffSeq& d) {
    const int n = d.n();
    DiffSeq out;
    out.diffs.reserve(n);
    for (int v : d.diffs) out.diffs.push_back(n - v);
    return out;
}

inline DiffSeq reverseDiffs(const DiffSeq& d) {
    DiffSeq out = d;
    std::reverse(out.diffs.begin(), out.diffs.end());
    return out;
}

namespace detail {
inline void minOverRotations(const DiffSeq& d, DiffSeq& best) {
    const int n = d.n();
    for (int r = 0; r < n; ++r) {
        DiffSeq cand = rotateDiffs(d, r);
        if (best.diffs.empty() || cand.diffs < best.diffs) best = std::move(cand);
    }
}
}  // namespace detail

// Deduplication key: the lexicographically smallest sequence among all
// rotations of d and of -d, where d is the difference sequence of the
// vertical gluing. Relabeling along the horizontal annulus rotates d;
// left-right reflection negates it entrywise; so two surfaces are related by
// relabelings and the left-right reflection iff their keys are equal. This
// is the equivalence the census counts.
inline DiffSeq canonicalForm(const Origami& o) {
    DiffSeq d = toDiffSeq(cycleSeqOf(o.p));
    DiffSeq best;
    detail::minOverRotations(d, best);
    detail::minOverRotations(negateDiffs(d), best);
    return best;
}

// Wider key that additionally merges under the top-bottom reflection, whose
// action on d is reversal composed with negation (so the candidate set also
// includes rotations of reverse(d) and of -reverse(d)). Strictly coarser
// than canonicalForm on some surfaces with nine or more squares; kept
// separate so the census can report both groupings.
inline DiffSeq extendedCanonicalForm(const Origami& o) {
    DiffSeq d = toDiffSeq(cycleSeqOf(o.p));
    DiffSeq best;
    detail::minOverRotations(d, best);
    detail::minOverRotations(negateDiffs(d), best);
    detail::minOverRotations(reverseDiffs(d), best);
    detail::minOverRotations(negateDiffs(reverseDiffs(d)), best);
    return best;
}

// Orbit of the vertical gluing under the group generated by shift, mirrorH,
// and flipV (closure by breadth-first expansion; size divides 4n).
inline std::set<Perm> symmetryOrbit(const Origami& o) {
    std::set<Perm> orbit;
    std::vector<Perm> frontier{o.p};
    orbit.insert(o.p);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& q : frontier) {
            for (const Perm& img :
                 {shift({q}).p, mirrorH({q}).p, flipV({q}).p}) {
                if (orbit.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

// Size of the class {rotations of d} ∪ {rotations of -d}, i.e. the number of
// distinct vertical gluings equivalent under relabeling and left-right
// reflection. Distinct rotations of d number period(d); the two rotation
// families either coincide or are disjoint.
inline int classOrbitSize(const DiffSeq& d) {
    const int n = d.n();
    int period = n;
    for (int r = 1; r < n; ++r) {
        if (rotateDiffs(d, r) == d) {
            period = r;
            break;
        }
    }
    DiffSeq neg = negateDiffs(d);
    bool selfMirror = false;
    for (int r = 0; r < n; ++r) {
        if (rotateDiffs(neg, r) == d) {
            selfMirror = true;
            break;
        }
    }
    return period * (selfMirror ? 1 : 2);
}

// One deduplicated equivalence class of valid filling-pair surfaces.
struct PairClass {
    DiffSeq canonical;          // canonicalForm of every member
    int genus = 0;
    int orbitSize = 0;          // classOrbitSize(canonical)
    std::vector<int> stratum;   // stratumSignature of every member

    bool operator==(const PairClass&) const = default;

    // All vertical gluings in the class, materialized on demand.
    std::vector<Perm> representatives() const {
        std::set<Perm> reps;
        for (const DiffSeq& base : {canonical, negateDiffs(canonical)}) {
            for (int r = 0; r < canonical.n(); ++r) {
                if (auto c = fromDiffSeq(rotateDiffs(base, r))) {
                    reps.insert(permFromCycleSeq(*c));
                }
            }
        }
        return {reps.begin(), reps.end()};
    }
};

inline PairClass makePairClass(const Origami& o) {
    PairClass pc;
    pc.canonical = canonicalForm(o);
    SurfaceData s = vertexOrbits(o);
    pc.genus = s.genus;
    pc.orbitSize = classOrbitSize(pc.canonical);
    pc.stratum = stratumSignature(o);
    return pc;
}

}  // namespace fillpair
