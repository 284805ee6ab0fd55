#include "topomodal/kripke.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace topomodal {

Relation identity_relation(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
}

Relation universal_relation(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.succ[i] = full_mask(n);
    return r;
}

Relation neq_relation(int n) {
    Relation r = universal_relation(n);
    for (int i = 0; i < n; ++i) r.clear(i, i);
    return r;
}

Relation relation_union(const Relation& a, const Relation& b) {
    Relation r(a.n);
    for (int i = 0; i < a.n; ++i) r.succ[i] = a.succ[i] | b.succ[i];
    return r;
}

Relation relation_minus(const Relation& a, const Relation& b) {
    Relation r(a.n);
    for (int i = 0; i < a.n; ++i) r.succ[i] = a.succ[i] & ~b.succ[i];
    return r;
}

Relation converse(const Relation& r) {
    Relation c(r.n);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (r.get(i, j)) c.set(j, i);
    return c;
}

Relation comparability(const Relation& r) {
    return relation_union(relation_union(r, converse(r)), identity_relation(r.n));
}

Relation transitive_closure(Relation r) {
    for (int k = 0; k < r.n; ++k)
        for (int i = 0; i < r.n; ++i)
            if (r.get(i, k)) r.succ[i] |= r.succ[k];
    return r;
}

bool is_reflexive(const Relation& r) {
    for (int i = 0; i < r.n; ++i)
        if (!r.get(i, i)) return false;
    return true;
}

bool is_irreflexive(const Relation& r) {
    for (int i = 0; i < r.n; ++i)
        if (r.get(i, i)) return false;
    return true;
}

bool is_transitive(const Relation& r) {
    for (int i = 0; i < r.n; ++i) {
        Bits hop = 0;
        Bits s = r.succ[i];
        while (s) {
            int j = std::countr_zero(s);
            s &= s - 1;
            hop |= r.succ[j];
        }
        if (hop & ~r.succ[i]) return false;
    }
    return true;
}

bool is_weakly_transitive(const Relation& r) {
    for (int i = 0; i < r.n; ++i) {
        Bits hop = 0;
        Bits s = r.succ[i];
        while (s) {
            int j = std::countr_zero(s);
            s &= s - 1;
            hop |= r.succ[j];
        }
        if (hop & ~(r.succ[i] | (Bits{1} << i))) return false;
    }
    return true;
}

bool is_serial(const Relation& r) {
    for (int i = 0; i < r.n; ++i)
        if (!r.succ[i]) return false;
    return true;
}

bool is_symmetric(const Relation& r) {
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (r.get(i, j) != r.get(j, i)) return false;
    return true;
}

bool subset_of(const Relation& a, const Relation& b) {
    for (int i = 0; i < a.n; ++i)
        if (a.succ[i] & ~b.succ[i]) return false;
    return true;
}

Bits reach(const Relation& r, Bits start) {
    Bits seen = start;
    for (;;) {
        Bits next = seen;
        Bits s = seen;
        while (s) {
            int i = std::countr_zero(s);
            s &= s - 1;
            next |= r.succ[i];
        }
        if (next == seen) return seen;
        seen = next;
    }
}

Bits preimage(const Relation& r, Bits s) {
    Bits out = 0;
    for (int i = 0; i < r.n; ++i)
        if (r.succ[i] & s) out |= Bits{1} << i;
    return out;
}

Bits image(const Relation& r, Bits s) {
    Bits out = 0;
    while (s) {
        int i = std::countr_zero(s);
        s &= s - 1;
        out |= r.succ[i];
    }
    return out;
}

int BiFrame::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (worlds[i] == id) return i;
    throw std::invalid_argument("unknown world id '" + id + "'");
}

BiFrame make_frame(std::vector<std::string> worlds, Relation r, std::optional<Relation> rd) {
    if (worlds.empty()) throw std::invalid_argument("frame must have at least one world");
    if (worlds.size() > 64) throw std::invalid_argument("frame too large (max 64 worlds)");
    for (std::size_t i = 0; i < worlds.size(); ++i)
        for (std::size_t j = i + 1; j < worlds.size(); ++j)
            if (worlds[i] == worlds[j])
                throw std::invalid_argument("duplicate world id '" + worlds[i] + "'");
    if (r.n != static_cast<int>(worlds.size()))
        throw std::invalid_argument("relation size mismatch");
    if (rd && rd->n != static_cast<int>(worlds.size()))
        throw std::invalid_argument("second relation size mismatch");
    return BiFrame{std::move(worlds), std::move(r), std::move(rd)};
}

BiFrame make_frame_n(int n, Relation r, std::optional<Relation> rd) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (int i = 0; i < n; ++i) ids.push_back("w" + std::to_string(i));
    return make_frame(std::move(ids), std::move(r), std::move(rd));
}

BiFrame make_phi(int m, int l) {
    if (m <= 0 || l < 0) throw std::invalid_argument("make_phi: need m > 0, l >= 0");
    int n = m + l;
    Relation r(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.set(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = m; j < n; ++j) r.set(i, j);
    for (int j = m; j < n; ++j) r.set(j, j);
    std::vector<std::string> ids;
    for (int i = 0; i < m; ++i) ids.push_back("b" + std::to_string(i));
    for (int j = 0; j < l; ++j) ids.push_back("a" + std::to_string(j));
    return make_frame(std::move(ids), std::move(r));
}

BiFrame make_psi(int l) {
    if (l < 0) throw std::invalid_argument("make_psi: need l >= 0");
    int n = 1 + l;
    Relation r(n);
    for (int j = 1; j < n; ++j) {
        r.set(0, j);
        r.set(j, j);
    }
    std::vector<std::string> ids;
    ids.push_back("b");
    for (int j = 0; j < l; ++j) ids.push_back("a" + std::to_string(j));
    return make_frame(std::move(ids), std::move(r));
}

namespace {

Relation both_relations(const BiFrame& f) {
    return f.rd ? relation_union(f.r, *f.rd) : f.r;
}

std::optional<int> find_root(const BiFrame& f) {
    Relation all = both_relations(f);
    Bits everyone = full_mask(f.size());
    for (int u = 0; u < f.size(); ++u)
        if (reach(all, Bits{1} << u) == everyone) return u;
    return std::nullopt;
}

}  // namespace

FrameReport analyze(const BiFrame& f) {
    FrameReport rep;
    rep.reflexive = is_reflexive(f.r);
    rep.irreflexive = is_irreflexive(f.r);
    rep.transitive = is_transitive(f.r);
    rep.weakly_transitive = is_weakly_transitive(f.r);
    rep.serial = is_serial(f.r);
    rep.quasi_order = rep.reflexive && rep.transitive;
    if (auto root = find_root(f)) {
        rep.rooted = true;
        rep.root = f.worlds[*root];
    }
    return rep;
}

BiFrame reflexive_closure(const BiFrame& f) {
    BiFrame g = f;
    g.r = relation_union(f.r, identity_relation(f.size()));
    return g;
}

BiFrame strip_diagonal(const BiFrame& f) {
    BiFrame g = f;
    g.r = relation_minus(f.r, identity_relation(f.size()));
    return g;
}

std::vector<Bits> clusters(const BiFrame& f) {
    if (!is_transitive(f.r)) throw std::invalid_argument("clusters: relation not transitive");
    int n = f.size();
    Relation conv = converse(f.r);
    std::vector<Bits> out;
    Bits assigned = 0;
    for (int i = 0; i < n; ++i) {
        if ((assigned >> i) & 1) continue;
        Bits c = (f.r.succ[i] & conv.succ[i]) | (Bits{1} << i);
        out.push_back(c);
        assigned |= c;
    }
    return out;
}

std::vector<Bits> maximal_clusters(const BiFrame& f) {
    Relation rbar = relation_union(f.r, identity_relation(f.size()));
    std::vector<Bits> out;
    for (Bits c : clusters(f))
        if (image(rbar, c) == c) out.push_back(c);
    return out;
}

bool is_degenerate_cluster(const BiFrame& f, Bits cluster) {
    if (std::popcount(cluster) != 1) return false;
    int i = std::countr_zero(cluster);
    return !f.r.get(i, i);
}

Bits cone_mask(const BiFrame& f, int x) { return reach(both_relations(f), Bits{1} << x); }

BiFrame restrict_frame(const BiFrame& f, Bits keep) {
    if (!keep) throw std::invalid_argument("restrict_frame: empty carrier");
    std::vector<int> old_of;
    std::vector<int> new_of(f.size(), -1);
    for (int i = 0; i < f.size(); ++i)
        if ((keep >> i) & 1) {
            new_of[i] = static_cast<int>(old_of.size());
            old_of.push_back(i);
        }
    int m = static_cast<int>(old_of.size());
    std::vector<std::string> ids;
    ids.reserve(m);
    for (int i : old_of) ids.push_back(f.worlds[i]);
    auto shrink = [&](const Relation& rel) {
        Relation out(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (rel.get(old_of[i], old_of[j])) out.set(i, j);
        return out;
    };
    std::optional<Relation> rd;
    if (f.rd) rd = shrink(*f.rd);
    return make_frame(std::move(ids), shrink(f.r), std::move(rd));
}

BiFrame cone(const BiFrame& f, const std::string& x) {
    return restrict_frame(f, cone_mask(f, f.index_of(x)));
}

bool is_basic(const BiFrame& f) {
    if (!f.rd) throw std::invalid_argument("is_basic: second relation missing");
    if (!find_root(f)) throw std::invalid_argument("is_basic: frame not rooted");
    return is_weakly_transitive(f.r) && subset_of(neq_relation(f.size()), *f.rd) &&
           subset_of(f.r, *f.rd);
}

bool at1_condition(const BiFrame& f) {
    if (!is_basic(f)) throw std::invalid_argument("at1_condition: frame not basic");
    const Relation& rd = *f.rd;
    for (int x = 0; x < f.size(); ++x) {
        Bits via = image(f.r, rd.succ[x]);  // RD then R
        if (via & ~rd.succ[x]) return false;
    }
    return true;
}

bool subset_connected(const Relation& r, Bits subset) {
    if (!subset) return true;
    Relation cmp = comparability(r);
    // Restrict comparability to the subset before closing.
    Relation restr(r.n);
    for (int i = 0; i < r.n; ++i)
        if ((subset >> i) & 1) restr.succ[i] = cmp.succ[i] & subset;
    int start = std::countr_zero(subset);
    return reach(restr, Bits{1} << start) == subset;
}

bool is_connected(const BiFrame& f) {
    if (!is_transitive(f.r)) throw std::invalid_argument("is_connected: relation not transitive");
    return subset_connected(f.r, full_mask(f.size()));
}

bool ku_frame_condition(const BiFrame& f) {
    if (!is_transitive(f.r))
        throw std::invalid_argument("ku_frame_condition: relation not transitive");
    for (int x = 0; x < f.size(); ++x) {
        if (f.r.get(x, x)) continue;
        if (!subset_connected(f.r, f.r.succ[x])) return false;
    }
    return true;
}

bool dt1ck_frame_class(const BiFrame& f) {
    if (!f.rd) return false;
    if (!find_root(f)) return false;
    if (!is_transitive(f.r) || !is_serial(f.r)) return false;
    if (!subset_of(neq_relation(f.size()), *f.rd) || !subset_of(f.r, *f.rd)) return false;
    if (!at1_condition(f)) return false;
    if (!ku_frame_condition(f)) return false;
    return is_connected(f);
}

bool path_is_valid(const BiFrame& f, const Path& p) {
    if (p.empty()) return false;
    Relation cmp = comparability(f.r);
    int prev = f.index_of(p[0]);
    for (std::size_t k = 1; k < p.size(); ++k) {
        int cur = f.index_of(p[k]);
        if (!cmp.get(prev, cur)) return false;
        prev = cur;
    }
    return true;
}

bool path_is_global(const BiFrame& f, const Path& p) {
    if (!path_is_valid(f, p)) return false;
    Relation rbar = relation_union(f.r, identity_relation(f.size()));
    Bits covered = 0;
    for (const auto& id : p) covered |= rbar.succ[f.index_of(id)];
    return covered == full_mask(f.size());
}

namespace {

// Shortest comparability path between two members of `allowed`, neighbors
// visited in index order. Returns indices including both endpoints.
std::vector<int> bfs_path(const Relation& cmp, Bits allowed, int from, int to) {
    std::vector<int> parent(cmp.n, -1);
    std::deque<int> queue;
    queue.push_back(from);
    parent[from] = from;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        Bits nb = cmp.succ[cur] & allowed;
        while (nb) {
            int j = std::countr_zero(nb);
            nb &= nb - 1;
            if (parent[j] == -1) {
                parent[j] = cur;
                queue.push_back(j);
            }
        }
    }
    if (parent[to] == -1)
        throw std::invalid_argument("no connecting path between the requested worlds");
    std::vector<int> rev;
    for (int cur = to; cur != from; cur = parent[cur]) rev.push_back(cur);
    rev.push_back(from);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace

Path global_path(const BiFrame& f, const std::string& w, const std::string& v) {
    if (!is_transitive(f.r)) throw std::invalid_argument("global_path: relation not transitive");
    if (!is_connected(f)) throw std::invalid_argument("global_path: frame not connected");
    int from = f.index_of(w);
    int target = f.index_of(v);
    Relation cmp = comparability(f.r);
    Relation rbar = relation_union(f.r, identity_relation(f.size()));
    Bits allowed = full_mask(f.size());

    std::vector<int> path{from};
    Bits covered = rbar.succ[from];
    int cur = from;
    for (int u = 0; u < f.size(); ++u) {
        if ((covered >> u) & 1) continue;
        std::vector<int> leg = bfs_path(cmp, allowed, cur, u);
        for (std::size_t k = 1; k < leg.size(); ++k) {
            path.push_back(leg[k]);
            covered |= rbar.succ[leg[k]];
        }
        cur = u;
    }
    std::vector<int> leg = bfs_path(cmp, allowed, cur, target);
    for (std::size_t k = 1; k < leg.size(); ++k) path.push_back(leg[k]);

    Path out;
    out.reserve(path.size());
    for (int i : path) out.push_back(f.worlds[i]);
    return out;
}

Path reduced_global_path(const BiFrame& f, const std::string& w1, const std::string& w2) {
    if (!dt1ck_frame_class(f))
        throw std::invalid_argument("reduced_global_path: frame outside the required class");
    int a = f.index_of(w1);
    int b = f.index_of(w2);
    const Relation& rd = *f.rd;
    if (!rd.get(a, a) || !rd.get(b, b))
        throw std::invalid_argument("reduced_global_path: endpoints must be RD-reflexive");

    int n = f.size();
    Bits reflexive_rd = 0;
    for (int i = 0; i < n; ++i)
        if (rd.get(i, i)) reflexive_rd |= Bits{1} << i;
    Bits irr = full_mask(n) & ~reflexive_rd;

    Relation cmp = comparability(f.r);
    Relation rbar = relation_union(f.r, identity_relation(n));

    std::vector<int> path{a};
    Bits covered = rbar.succ[a];
    int cur = a;
    auto walk_to = [&](int goal, Bits allowed) {
        std::vector<int> leg = bfs_path(cmp, allowed, cur, goal);
        for (std::size_t k = 1; k < leg.size(); ++k) {
            path.push_back(leg[k]);
            covered |= rbar.succ[leg[k]];
        }
        cur = goal;
    };

    // Visit each RD-irreflexive point once, in index order, stepping out of
    // it into its (connected, RD-reflexive) successor set.
    Bits todo = irr;
    while (todo) {
        int u = std::countr_zero(todo);
        todo &= todo - 1;
        // Approach u through RD-reflexive points, then enter it directly:
        // u's successors are RD-reflexive, so some neighbor of u lies there.
        Bits entry = f.r.succ[u];  // strictly minimal: no predecessors
        if (!entry) throw std::logic_error("reduced_global_path: serial frame expected");
        int gate = std::countr_zero(entry);
        walk_to(gate, reflexive_rd);
        path.push_back(u);
        covered |= rbar.succ[u];
        // Step back out through a successor.
        int exit_gate = std::countr_zero(f.r.succ[u]);
        path.push_back(exit_gate);
        covered |= rbar.succ[exit_gate];
        cur = exit_gate;
    }

    // Covering loop through RD-reflexive points, ending at w2.
    Bits miss = full_mask(n) & ~covered;
    while (miss) {
        int u = std::countr_zero(miss);
        walk_to(u, reflexive_rd);
        miss = full_mask(n) & ~covered;
    }
    walk_to(b, reflexive_rd);

    Path out;
    out.reserve(path.size());
    for (int i : path) out.push_back(f.worlds[i]);
    return out;
}

UnfoldResult unfold(const BiFrame& f) {
    if (!is_basic(f)) throw std::invalid_argument("unfold: frame not basic");
    const Relation& rd = *f.rd;
    int n = f.size();

    std::vector<int> to_original;
    std::vector<std::string> ids;
    for (int w = 0; w < n; ++w) {
        if (rd.get(w, w)) {
            ids.push_back(f.worlds[w] + ".0");
            to_original.push_back(w);
            ids.push_back(f.worlds[w] + ".1");
            to_original.push_back(w);
        } else {
            ids.push_back(f.worlds[w]);
            to_original.push_back(w);
        }
    }
    int m = static_cast<int>(ids.size());
    Relation r_new(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && f.r.get(to_original[i], to_original[j])) r_new.set(i, j);

    BiFrame out = make_frame(std::move(ids), std::move(r_new), neq_relation(m));
    return UnfoldResult{std::move(out), std::move(to_original), f.worlds};
}

}  // namespace topomodal
