#pragma once

#include "diffalg/diffpoly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace diffalg {

inline bool is_autoreduced(const std::vector<DiffPoly>& S, const Ranking& r) {
    for (const DiffPoly& f : S)
        if (f.in_K()) throw ConstantPolynomial("autoreduced sets live outside the ground field");
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = 0; j < S.size(); ++j)
            if (i != j && !is_reduced(S[i], S[j], r, ReducedMode::Fully)) return false;
    return true;
}

// Elements kept in order of increasing rank.
struct AutoreducedSet {
    std::vector<DiffPoly> elements;
    Ranking ranking;

    static AutoreducedSet make(std::vector<DiffPoly> elems, const Ranking& r) {
        if (!is_autoreduced(elems, r)) throw NotAutoreduced("set is not autoreduced");
        std::stable_sort(elems.begin(), elems.end(), [&](const DiffPoly& a, const DiffPoly& b) {
            return compare_poly_rank(a, b, r) == Cmp::LT;
        });
        return {std::move(elems), r};
    }

    size_t size() const { return elements.size(); }

    // every initial and separant, in element order
    std::vector<DiffPoly> h_set() const {
        std::vector<DiffPoly> hs;
        for (const DiffPoly& a : elements) {
            Decomposition d = decompose(a, ranking);
            hs.push_back(d.initial);
            hs.push_back(d.separant);
        }
        return hs;
    }
};

inline Cmp compare_set_rank(const AutoreducedSet& A, const AutoreducedSet& B) {
    if (!(A.ranking == B.ranking)) throw RankingMismatch("autoreduced sets use different rankings");
    size_t r = A.size(), s = B.size();
    for (size_t k = 0; k < std::min(r, s); ++k) {
        Cmp c = compare_poly_rank(A.elements[k], B.elements[k], A.ranking);
        if (c != Cmp::EQ) return c;
    }
    if (r == s) return Cmp::EQ;
    return r > s ? Cmp::LT : Cmp::GT; // longer set with equal prefix ranks lower
}

// Ritt's greedy candidate: repeatedly take the least-ranked element of F that
// is reduced w.r.t. everything already chosen.  Ties break on the canonical
// text form so the result is deterministic.
inline AutoreducedSet characteristic_candidate(const std::vector<DiffPoly>& F, const Ranking& r) {
    if (F.empty()) throw NotAutoreduced("empty generating set");
    for (const DiffPoly& f : F)
        if (f.in_K()) throw ConstantPolynomial("generators must lie outside the ground field");

    std::vector<DiffPoly> pool = F;
    std::sort(pool.begin(), pool.end(), [&](const DiffPoly& a, const DiffPoly& b) {
        Cmp c = compare_poly_rank(a, b, r);
        if (c != Cmp::EQ) return c == Cmp::LT;
        return a.to_string(r) < b.to_string(r);
    });
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<DiffPoly> chosen;
    for (const DiffPoly& f : pool) {
        bool ok = true;
        for (const DiffPoly& c : chosen)
            if (!is_reduced(f, c, r, ReducedMode::Fully)) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(f);
    }
    return AutoreducedSet::make(std::move(chosen), r);
}

// The shape under which the Rosenfeld lemma is applied here: an autoreduced
// set whose leaders lie in pairwise distinct indeterminates, so no cross
// conditions between leaders arise.  Non-autoreduced input yields false.
inline bool rosenfeld_applicable(const std::vector<DiffPoly>& C, const Ranking& r) {
    for (const DiffPoly& f : C)
        if (f.in_K()) return false;
    if (!is_autoreduced(C, r)) return false;
    std::vector<int> indets;
    for (const DiffPoly& f : C) {
        int i = leader_of(f, r).indet;
        if (std::find(indets.begin(), indets.end(), i) != indets.end()) return false;
        indets.push_back(i);
    }
    return true;
}

inline bool rosenfeld_applicable(const AutoreducedSet& C) {
    return rosenfeld_applicable(C.elements, C.ranking);
}

} // namespace diffalg
