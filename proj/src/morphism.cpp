#include "topomodal/morphism.hpp"

#include <algorithm>
#include <bit>

namespace topomodal {

bool PointMap::surjective_onto(int target_size) const {
    std::vector<bool> hit(target_size, false);
    for (int t : to) hit.at(t) = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<int> PointMap::fold_counts(int target_size) const {
    std::vector<int> counts(target_size, 0);
    for (int t : to) ++counts.at(t);
    return counts;
}

Bits PointMap::preimage_of(int target) const {
    Bits out = 0;
    for (int i = 0; i < size(); ++i)
        if (to[i] == target) out |= Bits{1} << i;
    return out;
}

PointMap make_point_map(const std::vector<std::string>& src_ids,
                        const std::vector<std::string>& dst_ids,
                        const std::map<std::string, std::string>& assignment) {
    PointMap h;
    h.to.reserve(src_ids.size());
    for (const auto& s : src_ids) {
        auto it = assignment.find(s);
        if (it == assignment.end())
            throw std::invalid_argument("map is not total: '" + s + "' unmapped");
        auto at = std::find(dst_ids.begin(), dst_ids.end(), it->second);
        if (at == dst_ids.end())
            throw std::invalid_argument("map targets unknown id '" + it->second + "'");
        h.to.push_back(static_cast<int>(at - dst_ids.begin()));
    }
    for (const auto& [key, value] : assignment)
        if (std::find(src_ids.begin(), src_ids.end(), key) == src_ids.end())
            throw std::invalid_argument("map mentions unknown source id '" + key + "'");
    return h;
}

MorphismReport is_p_morphism(const PointMap& h, const Relation& src, const Relation& dst) {
    if (h.size() != src.n) throw std::invalid_argument("is_p_morphism: map size mismatch");
    if (!h.surjective_onto(dst.n)) return {false, "map not surjective"};
    for (int x = 0; x < src.n; ++x) {
        // monotonicity
        Bits s = src.succ[x];
        while (s) {
            int y = std::countr_zero(s);
            s &= s - 1;
            if (!dst.get(h(x), h(y)))
                return {false, "monotonicity fails at (" + std::to_string(x) + "," +
                                   std::to_string(y) + ")"};
        }
        // lift
        Bits targets = dst.succ[h(x)];
        while (targets) {
            int z = std::countr_zero(targets);
            targets &= targets - 1;
            bool found = false;
            Bits ss = src.succ[x];
            while (ss) {
                int y = std::countr_zero(ss);
                ss &= ss - 1;
                if (h(y) == z) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return {false,
                        "lift fails at (" + std::to_string(x) + "," + std::to_string(z) + ")"};
        }
    }
    return {true, ""};
}

MorphismReport is_p_morphism(const PointMap& h, const BiFrame& src, const BiFrame& dst) {
    MorphismReport first = is_p_morphism(h, src.r, dst.r);
    if (!first.ok) return {false, "first relation: " + first.diagnostic};
    if (src.rd.has_value() != dst.rd.has_value())
        throw std::invalid_argument("is_p_morphism: second relation present on one side only");
    if (src.rd) {
        MorphismReport second = is_p_morphism(h, *src.rd, *dst.rd);
        if (!second.ok) return {false, "second relation: " + second.diagnostic};
    }
    return {true, ""};
}

MorphismReport is_d_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f,
                             bool allow_non_surjective) {
    if (h.size() != x.size()) throw std::invalid_argument("is_d_morphism: map size mismatch");
    if (!is_weakly_transitive(f.r))
        throw std::invalid_argument("is_d_morphism: target not weakly transitive");
    if (!allow_non_surjective && !h.surjective_onto(f.size()))
        return {false, "map not surjective"};
    Relation conv = converse(f.r);
    for (int w = 0; w < f.size(); ++w) {
        Bits fiber = h.preimage_of(w);
        Bits lhs = derived_of(x, fiber);
        Bits rhs = 0;
        Bits pre = conv.succ[w];
        while (pre) {
            int u = std::countr_zero(pre);
            pre &= pre - 1;
            rhs |= h.preimage_of(u);
        }
        if (lhs != rhs) {
            Bits diff = lhs ^ rhs;
            int pt = std::countr_zero(diff);
            return {false, "derived-set equation fails at world " + std::to_string(w) +
                               ", point " + std::to_string(pt)};
        }
    }
    return {true, ""};
}

MorphismReport is_c_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f) {
    if (h.size() != x.size()) throw std::invalid_argument("is_c_morphism: map size mismatch");
    if (!is_reflexive(f.r) || !is_transitive(f.r))
        throw std::invalid_argument("is_c_morphism: target not a quasi-order");
    if (!h.surjective_onto(f.size())) return {false, "map not surjective"};
    Relation conv = converse(f.r);
    for (int w = 0; w < f.size(); ++w) {
        Bits lhs = closure_of(x, h.preimage_of(w));
        Bits rhs = 0;
        Bits pre = conv.succ[w];
        while (pre) {
            int u = std::countr_zero(pre);
            pre &= pre - 1;
            rhs |= h.preimage_of(u);
        }
        if (lhs != rhs) {
            Bits diff = lhs ^ rhs;
            int pt = std::countr_zero(diff);
            return {false, "closure equation fails at world " + std::to_string(w) + ", point " +
                               std::to_string(pt)};
        }
    }
    return {true, ""};
}

DdReport is_dd_morphism(const PointMap& h, const FiniteSpace& x, const BiFrame& f) {
    if (!f.rd) throw std::invalid_argument("is_dd_morphism: second relation missing");
    DdReport rep;
    rep.manifold = h.fold_counts(f.size());
    rep.d_clause = is_d_morphism(h, x, BiFrame{f.worlds, f.r, std::nullopt});

    Relation src_neq = neq_relation(x.size());
    rep.p_clause = is_p_morphism(h, src_neq, *f.rd);
    rep.ok = rep.d_clause.ok && rep.p_clause.ok;
    if (!rep.d_clause.ok)
        rep.diagnostic = "d-morphism clause: " + rep.d_clause.diagnostic;
    else if (!rep.p_clause.ok)
        rep.diagnostic = "difference p-morphism clause: " + rep.p_clause.diagnostic;

    // Manifold criterion: on a T1 source with a basic AT1 target and a valid
    // d-morphism clause, clause (2) holds iff every strictly R-minimal world
    // is RD-reflexive exactly when its fiber has more than one point.
    bool target_ok = false;
    try {
        target_ok = is_basic(f) && at1_condition(f);
    } catch (const std::invalid_argument&) {
        target_ok = false;
    }
    if (predicates(x).t1 && target_ok && rep.d_clause.ok) {
        rep.crosscheck_ran = true;
        bool criterion = true;
        for (int v = 0; v < f.size(); ++v) {
            if (preimage(f.r, Bits{1} << v) != 0) continue;  // not strictly minimal
            bool rd_refl = f.rd->get(v, v);
            bool manifold = rep.manifold[v] > 1;
            if (rd_refl != manifold) {
                criterion = false;
                break;
            }
        }
        rep.crosscheck_agrees = (criterion == rep.p_clause.ok);
    }
    return rep;
}

GluedMorphism union_d_morphism(const std::vector<DMorphismPart>& parts) {
    if (parts.empty()) throw std::invalid_argument("union_d_morphism: no parts");
    for (const auto& part : parts) {
        MorphismReport rep = is_d_morphism(part.map, part.space, part.frame);
        if (!rep.ok)
            throw std::invalid_argument("union_d_morphism: part fails its check: " +
                                        rep.diagnostic);
    }

    FiniteSpace space = disjoint_union(
        [&] {
            std::vector<FiniteSpace> spaces;
            for (const auto& p : parts) spaces.push_back(p.space);
            return spaces;
        }());

    // Union frame over the union of target world ids.
    std::vector<std::string> world_ids;
    for (const auto& part : parts)
        for (const auto& id : part.frame.worlds)
            if (std::find(world_ids.begin(), world_ids.end(), id) == world_ids.end())
                world_ids.push_back(id);
    Relation r(static_cast<int>(world_ids.size()));
    auto union_index = [&](const std::string& id) {
        return static_cast<int>(std::find(world_ids.begin(), world_ids.end(), id) -
                                world_ids.begin());
    };
    for (const auto& part : parts)
        for (int i = 0; i < part.frame.size(); ++i)
            for (int j = 0; j < part.frame.size(); ++j)
                if (part.frame.r.get(i, j))
                    r.set(union_index(part.frame.worlds[i]), union_index(part.frame.worlds[j]));
    BiFrame frame = make_frame(world_ids, std::move(r));

    // Each part's target must sit inside the union as a generated subframe.
    for (const auto& part : parts) {
        Bits carrier = 0;
        for (const auto& id : part.frame.worlds) carrier |= Bits{1} << union_index(id);
        if (image(frame.r, carrier) & ~carrier)
            throw std::invalid_argument("union_d_morphism: part target not generated in union");
        for (int i = 0; i < frame.size(); ++i)
            for (int j = 0; j < frame.size(); ++j) {
                if (!((carrier >> i) & 1) || !((carrier >> j) & 1)) continue;
                bool in_union = frame.r.get(i, j);
                bool in_part = part.frame.r.get(part.frame.index_of(frame.worlds[i]),
                                                part.frame.index_of(frame.worlds[j]));
                if (in_union != in_part)
                    throw std::invalid_argument(
                        "union_d_morphism: part target is not the restriction of the union");
            }
    }

    PointMap glued;
    for (const auto& part : parts)
        for (int i = 0; i < part.space.size(); ++i)
            glued.to.push_back(union_index(part.frame.worlds[part.map(i)]));
    return GluedMorphism{std::move(space), std::move(frame), std::move(glued)};
}

RestrictedMorphism restrict_to_open(const PointMap& h, const FiniteSpace& x, const BiFrame& f,
                                    Bits open_set) {
    if (!open_set) throw std::invalid_argument("restrict_to_open: empty subset");
    if (!x.is_open(open_set)) throw std::invalid_argument("restrict_to_open: subset not open");
    MorphismReport rep = is_d_morphism(h, x, f);
    if (!rep.ok)
        throw std::invalid_argument("restrict_to_open: map is not a d-morphism: " +
                                    rep.diagnostic);
    RestrictedMorphism out{subspace(x, open_set), PointMap{}};
    for (int i = 0; i < x.size(); ++i)
        if ((open_set >> i) & 1) out.map.to.push_back(h(i));
    return out;
}

}  // namespace topomodal
