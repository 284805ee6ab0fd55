#ifndef TOPOMODAL_TEST_UTIL_HPP
#define TOPOMODAL_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "topomodal/formula.hpp"
#include "topomodal/kripke.hpp"
#include "topomodal/semantics.hpp"

namespace tmtest {

using namespace topomodal;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % n); }

struct FormulaGen {
    std::vector<std::string> vars{"p", "q", "r"};
    bool with_diff = false;
    bool with_univ = false;

    Formula operator()(Rng& rng, int depth) const {
        if (depth <= 0 || pick(rng, 5) == 0) {
            int c = pick(rng, static_cast<int>(vars.size()) + 2);
            if (c == 0) return Bot();
            if (c == 1) return Top();
            return Var(vars[c - 2]);
        }
        std::vector<Kind> kinds{Kind::Not, Kind::And, Kind::Or,  Kind::Imp,
                                Kind::Iff, Kind::Box, Kind::Dia};
        if (with_diff) {
            kinds.push_back(Kind::DBox);
            kinds.push_back(Kind::DDia);
        }
        if (with_univ) {
            kinds.push_back(Kind::ABox);
            kinds.push_back(Kind::ADia);
        }
        Kind k = kinds[pick(rng, static_cast<int>(kinds.size()))];
        if (is_binary(k))
            return Formula::make(k, {(*this)(rng, depth - 1), (*this)(rng, depth - 1)});
        return Formula::make(k, {(*this)(rng, depth - 1)});
    }
};

inline Relation random_relation(Rng& rng, int n, int density_pct = 35) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pick(rng, 100) < density_pct) r.set(i, j);
    return r;
}

// Smallest weakly transitive relation containing r.
inline Relation weak_transitive_closure(Relation r) {
    for (;;) {
        bool changed = false;
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j) {
                if (!r.get(i, j)) continue;
                Bits s = r.succ[j] & ~(Bits{1} << i);
                if (s & ~r.succ[i]) {
                    r.succ[i] |= s;
                    changed = true;
                }
            }
        if (!changed) return r;
    }
}

inline Valuation random_valuation(Rng& rng, const std::vector<std::string>& vars, int n) {
    Valuation val;
    for (const auto& v : vars) val[v] = rng() & full_mask(n);
    return val;
}

// Random basic frame: weakly transitive R inside RD = inequality plus a
// random diagonal covering the R-loops.
inline BiFrame random_basic_frame(Rng& rng, int n) {
    Relation r = weak_transitive_closure(random_relation(rng, n, 25));
    Relation rd = neq_relation(n);
    for (int i = 0; i < n; ++i)
        if (r.get(i, i) || pick(rng, 2) == 0) rd.set(i, i);
    return make_frame_n(n, std::move(r), std::move(rd));
}

inline Relation random_quasi_order(Rng& rng, int n) {
    return relation_union(transitive_closure(random_relation(rng, n, 25)),
                          identity_relation(n));
}

}  // namespace tmtest

#endif  // TOPOMODAL_TEST_UTIL_HPP
