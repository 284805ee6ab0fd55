#ifndef TOPOMODAL_MORPHISM_HPP
#define TOPOMODAL_MORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "topomodal/kripke.hpp"
#include "topomodal/topospace.hpp"

namespace topomodal {

// Total map between carriers, stored as target index per source index.
struct PointMap {
    std::vector<int> to;

    int operator()(int i) const { return to[i]; }
    int size() const { return static_cast<int>(to.size()); }
    bool surjective_onto(int target_size) const;
    std::vector<int> fold_counts(int target_size) const;
    Bits preimage_of(int target) const;
};

// Builds the index map from id pairs; every source id must be mapped, every
// target id must exist.
PointMap make_point_map(const std::vector<std::string>& src_ids,
                        const std::vector<std::string>& dst_ids,
                        const std::map<std::string, std::string>& assignment);

struct MorphismReport {
    bool ok = false;
    std::string diagnostic;  // least witness of the first violated condition
};

// f(R(x)) = R'(f(x)) for every x, plus surjectivity.
MorphismReport is_p_morphism(const PointMap& h, const Relation& src, const Relation& dst);

// Both relation pairs of two biframes under one map.
MorphismReport is_p_morphism(const PointMap& h, const BiFrame& src, const BiFrame& dst);

// d f^-1(w) = f^-1(R^-1(w)) for every w. Target must be weakly transitive;
// surjectivity is required unless allow_non_surjective.
MorphismReport is_d_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f,
                             bool allow_non_surjective = false);

// C f^-1(w) = f^-1(R^-1(w)) for every w. Target must be a quasi-order.
MorphismReport is_c_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f);

struct DdReport {
    bool ok = false;
    MorphismReport d_clause;
    MorphismReport p_clause;          // (X, !=) onto (W, RD)
    std::vector<int> manifold;        // fold count per target world
    bool crosscheck_ran = false;      // manifold criterion on T1 sources
    bool crosscheck_agrees = true;
    std::string diagnostic;
};

// Clause (1): d-morphism onto (W, R). Clause (2): p-morphism from the
// source with literal inequality onto (W, RD). On T1 sources with targets
// satisfying the basic + AT1 conditions the manifold criterion (RD-reflexive
// iff manifold, at strictly R-minimal points) is cross-checked against
// clause (2).
DdReport is_dd_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f);

struct DMorphismPart {
    FiniteSpace space;
    PointMap map;
    BiFrame frame;
};

struct GluedMorphism {
    FiniteSpace space;  // disjoint union of the parts
    BiFrame frame;      // union of the target frames
    PointMap map;
};

// Glues verified d-morphisms over a disjoint union of open subspaces onto
// the union of their (generated) target frames. Rejects carrier overlap, a
// part failing its own check, and targets that are not generated subframes
// of the union.
GluedMorphism union_d_morphism(const std::vector<DMorphismPart>& parts);

struct RestrictedMorphism {
    FiniteSpace space;  // subspace on the open set
    PointMap map;
};

// Restriction of a verified d-morphism to a nonempty open subset; the result
// satisfies the d-morphism equation without surjectivity.
RestrictedMorphism restrict_to_open(const PointMap& h, const FiniteSpace& x, const BiFrame& f,
                                    Bits open_set);

}  // namespace topomodal

#endif  // TOPOMODAL_MORPHISM_HPP
