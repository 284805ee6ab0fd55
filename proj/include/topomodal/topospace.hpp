#ifndef TOPOMODAL_TOPOSPACE_HPP
#define TOPOMODAL_TOPOSPACE_HPP

#include <string>
#include <vector>

#include "topomodal/kripke.hpp"

namespace topomodal {

// Finite topological space: explicit family of open sets over an ordered
// point list. Point sets are bitmasks over the point index order.
struct FiniteSpace {
    std::vector<std::string> points;
    std::vector<Bits> opens;  // sorted ascending, deduplicated

    int size() const { return static_cast<int>(points.size()); }
    int index_of(const std::string& id) const;  // throws on unknown id
    bool is_open(Bits v) const;
};

// Validates that `opens` is a topology (contains the empty and full sets,
// closed under pairwise union and intersection). With complete_subbasis the
// given family is completed to the topology it generates instead.
FiniteSpace make_space(std::vector<std::string> points, std::vector<Bits> opens,
                       bool complete_subbasis = false);
// n points named x0..x{n-1}.
FiniteSpace make_space_n(int n, std::vector<Bits> opens, bool complete_subbasis = false);

FiniteSpace discrete_space(int n);
FiniteSpace indiscrete_space(int n);

// Opens are the R-upward-closed sets. Requires a quasi-order.
FiniteSpace from_preorder(const BiFrame& f);

// Specialization preorder: x R y iff y belongs to every open containing x.
// Inverse of from_preorder on quasi-orders.
BiFrame to_preorder(const FiniteSpace& x);

struct SetOperators {
    Bits interior;
    Bits closure;
    Bits derived;    // limit points
    Bits coderived;  // complement of derived of complement
    Bits boundary;
};

SetOperators operators(const FiniteSpace& x, Bits v);

Bits interior_of(const FiniteSpace& x, Bits v);
Bits closure_of(const FiniteSpace& x, Bits v);
Bits derived_of(const FiniteSpace& x, Bits v);
Bits coderived_of(const FiniteSpace& x, Bits v);

struct SpacePredicates {
    bool dense_in_itself;
    bool local_t1;
    bool t1;
    bool discrete;
    bool connected;
};

SpacePredicates predicates(const FiniteSpace& x);

// Both sides of the derived-set equality
//   d((V & d(-V)) | (-V & d V)) = d V & d(-V)
// evaluated and compared.
bool kuratowski_identity_holds(const FiniteSpace& x, Bits v);

// Subspace on a nonempty subset: relative opens.
FiniteSpace subspace(const FiniteSpace& x, Bits carrier);

// Disjoint union; point ids must not collide.
FiniteSpace disjoint_union(const std::vector<FiniteSpace>& parts);

}  // namespace topomodal

#endif  // TOPOMODAL_TOPOSPACE_HPP
