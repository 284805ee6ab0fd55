#include "topomodal/topospace.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace topomodal {

int FiniteSpace::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (points[i] == id) return i;
    throw std::invalid_argument("unknown point id '" + id + "'");
}

bool FiniteSpace::is_open(Bits v) const {
    return std::binary_search(opens.begin(), opens.end(), v);
}

FiniteSpace make_space(std::vector<std::string> points, std::vector<Bits> opens,
                       bool complete_subbasis) {
    if (points.empty()) throw std::invalid_argument("space must have at least one point");
    if (points.size() > 64) throw std::invalid_argument("space too large (max 64 points)");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("duplicate point id '" + points[i] + "'");

    Bits full = full_mask(static_cast<int>(points.size()));
    for (Bits v : opens)
        if (v & ~full) throw std::invalid_argument("open set mentions unknown points");

    std::set<Bits> family(opens.begin(), opens.end());
    family.insert(0);
    family.insert(full);
    if (complete_subbasis) {
        for (;;) {
            std::set<Bits> next = family;
            for (Bits a : family)
                for (Bits b : family) {
                    next.insert(a | b);
                    next.insert(a & b);
                }
            if (next.size() == family.size()) break;
            family.swap(next);
        }
    } else {
        for (Bits a : family)
            for (Bits b : family) {
                if (!family.count(a | b))
                    throw std::invalid_argument("opens not closed under union");
                if (!family.count(a & b))
                    throw std::invalid_argument("opens not closed under intersection");
            }
    }
    return FiniteSpace{std::move(points), std::vector<Bits>(family.begin(), family.end())};
}

FiniteSpace make_space_n(int n, std::vector<Bits> opens, bool complete_subbasis) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
    return make_space(std::move(ids), std::move(opens), complete_subbasis);
}

FiniteSpace discrete_space(int n) {
    std::vector<Bits> opens;
    for (Bits v = 0; v <= full_mask(n); ++v) opens.push_back(v);
    return make_space_n(n, std::move(opens));
}

FiniteSpace indiscrete_space(int n) { return make_space_n(n, {0, full_mask(n)}); }

FiniteSpace from_preorder(const BiFrame& f) {
    if (!is_reflexive(f.r) || !is_transitive(f.r))
        throw std::invalid_argument("from_preorder: relation is not a quasi-order");
    int n = f.size();
    std::vector<Bits> opens;
    for (Bits v = 0; v <= full_mask(n); ++v)
        if ((image(f.r, v) & ~v) == 0) opens.push_back(v);
    return FiniteSpace{f.worlds, std::move(opens)};
}

BiFrame to_preorder(const FiniteSpace& x) {
    int n = x.size();
    Relation r(n);
    for (int i = 0; i < n; ++i) {
        Bits inter = full_mask(n);
        for (Bits o : x.opens)
            if ((o >> i) & 1) inter &= o;
        r.succ[i] = inter;
    }
    return make_frame(x.points, std::move(r));
}

Bits interior_of(const FiniteSpace& x, Bits v) {
    Bits out = 0;
    for (Bits o : x.opens)
        if ((o & ~v) == 0) out |= o;
    return out;
}

Bits closure_of(const FiniteSpace& x, Bits v) {
    Bits full = full_mask(x.size());
    return full & ~interior_of(x, full & ~v);
}

Bits derived_of(const FiniteSpace& x, Bits v) {
    Bits out = 0;
    for (int i = 0; i < x.size(); ++i)
        if ((closure_of(x, v & ~(Bits{1} << i)) >> i) & 1) out |= Bits{1} << i;
    return out;
}

Bits coderived_of(const FiniteSpace& x, Bits v) {
    Bits full = full_mask(x.size());
    return full & ~derived_of(x, full & ~v);
}

SetOperators operators(const FiniteSpace& x, Bits v) {
    if (v & ~full_mask(x.size())) throw std::invalid_argument("operators: unknown points in set");
    SetOperators ops;
    ops.interior = interior_of(x, v);
    ops.closure = closure_of(x, v);
    ops.derived = derived_of(x, v);
    ops.coderived = coderived_of(x, v);
    ops.boundary = ops.closure & ~ops.interior;
    return ops;
}

SpacePredicates predicates(const FiniteSpace& x) {
    int n = x.size();
    Bits full = full_mask(n);
    SpacePredicates p{};
    p.dense_in_itself = (full & ~derived_of(x, full)) == 0;

    p.local_t1 = true;
    for (int i = 0; i < n; ++i) {
        Bits pt = Bits{1} << i;
        bool ok = false;
        for (Bits o : x.opens) {
            if (!((o >> i) & 1)) continue;
            // {i} closed in the subspace o: no other point of o lies in its closure.
            if ((closure_of(x, pt) & o) == pt) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            p.local_t1 = false;
            break;
        }
    }

    p.t1 = true;
    for (int i = 0; i < n; ++i)
        if (closure_of(x, Bits{1} << i) != (Bits{1} << i)) {
            p.t1 = false;
            break;
        }

    p.discrete = true;
    for (int i = 0; i < n; ++i)
        if (!x.is_open(Bits{1} << i)) {
            p.discrete = false;
            break;
        }

    p.connected = true;
    for (Bits o : x.opens)
        if (o != 0 && o != full && x.is_open(full & ~o)) {
            p.connected = false;
            break;
        }
    return p;
}

bool kuratowski_identity_holds(const FiniteSpace& x, Bits v) {
    Bits full = full_mask(x.size());
    if (v & ~full) throw std::invalid_argument("kuratowski_identity_holds: unknown points");
    Bits dv = derived_of(x, v);
    Bits dc = derived_of(x, full & ~v);
    Bits lhs = derived_of(x, (v & dc) | ((full & ~v) & dv));
    Bits rhs = dv & dc;
    return lhs == rhs;
}

FiniteSpace subspace(const FiniteSpace& x, Bits carrier) {
    if (!carrier) throw std::invalid_argument("subspace: empty carrier");
    std::vector<int> old_of;
    for (int i = 0; i < x.size(); ++i)
        if ((carrier >> i) & 1) old_of.push_back(i);
    std::vector<std::string> ids;
    for (int i : old_of) ids.push_back(x.points[i]);
    std::set<Bits> rel;
    for (Bits o : x.opens) {
        Bits cut = o & carrier;
        Bits packed = 0;
        for (std::size_t k = 0; k < old_of.size(); ++k)
            if ((cut >> old_of[k]) & 1) packed |= Bits{1} << k;
        rel.insert(packed);
    }
    return FiniteSpace{std::move(ids), std::vector<Bits>(rel.begin(), rel.end())};
}

FiniteSpace disjoint_union(const std::vector<FiniteSpace>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
    std::vector<std::string> ids;
    std::vector<int> offset;
    for (const auto& part : parts) {
        offset.push_back(static_cast<int>(ids.size()));
        for (const auto& id : part.points) {
            if (std::find(ids.begin(), ids.end(), id) != ids.end())
                throw std::invalid_argument("disjoint_union: point id collision '" + id + "'");
            ids.push_back(id);
        }
    }
    if (ids.size() > 64) throw std::invalid_argument("disjoint_union: too many points");
    // Opens: one choice of open per part, shifted and combined.
    std::set<Bits> family{0};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::set<Bits> next;
        for (Bits base : family)
            for (Bits o : parts[k].opens) next.insert(base | (o << offset[k]));
        family.swap(next);
    }
    return FiniteSpace{std::move(ids), std::vector<Bits>(family.begin(), family.end())};
}

}  // namespace topomodal
