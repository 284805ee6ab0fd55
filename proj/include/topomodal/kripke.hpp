#ifndef TOPOMODAL_KRIPKE_HPP
#define TOPOMODAL_KRIPKE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topomodal {

// Sets of worlds/points as bitmasks; carriers are capped at 64 elements.
using Bits = std::uint64_t;

inline Bits full_mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

// Binary relation on {0..n-1}, one successor bitmask per element.
struct Relation {
    int n = 0;
    std::vector<Bits> succ;

    Relation() = default;
    explicit Relation(int size) : n(size), succ(size, 0) {}

    bool get(int i, int j) const { return (succ[i] >> j) & 1; }
    void set(int i, int j) { succ[i] |= Bits{1} << j; }
    void clear(int i, int j) { succ[i] &= ~(Bits{1} << j); }

    bool operator==(const Relation& o) const = default;
};

Relation identity_relation(int n);
Relation universal_relation(int n);
Relation neq_relation(int n);
Relation relation_union(const Relation& a, const Relation& b);
Relation relation_minus(const Relation& a, const Relation& b);
Relation converse(const Relation& r);
// Comparability: r | r^-1 | identity.
Relation comparability(const Relation& r);
Relation transitive_closure(Relation r);

bool is_reflexive(const Relation& r);
bool is_irreflexive(const Relation& r);
bool is_transitive(const Relation& r);
// r o r included in r | identity.
bool is_weakly_transitive(const Relation& r);
bool is_serial(const Relation& r);
bool is_symmetric(const Relation& r);
bool subset_of(const Relation& a, const Relation& b);

// Elements reachable from `start` by the reflexive-transitive closure of r.
Bits reach(const Relation& r, Bits start);
// Predecessors of the elements in `s`.
Bits preimage(const Relation& r, Bits s);
// Successors of the elements in `s`.
Bits image(const Relation& r, Bits s);

// Finite biframe. The second relation is optional; operations that need it
// say so. World ids are distinct, nonempty.
struct BiFrame {
    std::vector<std::string> worlds;
    Relation r;
    std::optional<Relation> rd;

    int size() const { return static_cast<int>(worlds.size()); }
    int index_of(const std::string& id) const;  // throws on unknown id
    bool has_rd() const { return rd.has_value(); }
};

BiFrame make_frame(std::vector<std::string> worlds, Relation r,
                   std::optional<Relation> rd = std::nullopt);
// n worlds named w0..w{n-1}.
BiFrame make_frame_n(int n, Relation r, std::optional<Relation> rd = std::nullopt);

// Quasi-tree of height 2: an m-element root cluster below l reflexive
// singleton maximal points (just the cluster when l = 0). Worlds b0..b{m-1},
// a0..a{l-1}.
BiFrame make_phi(int m, int l);
// Irreflexive root b below l reflexive points a0..a{l-1}.
BiFrame make_psi(int l);

struct FrameReport {
    bool reflexive = false;
    bool irreflexive = false;
    bool transitive = false;
    bool weakly_transitive = false;
    bool serial = false;
    bool quasi_order = false;
    bool rooted = false;
    std::optional<std::string> root;
};

// Structural flags of the first relation; rootedness closes over both
// relations when the second is present.
FrameReport analyze(const BiFrame& f);

BiFrame reflexive_closure(const BiFrame& f);
BiFrame strip_diagonal(const BiFrame& f);

// Partition by (R & R^-1) | identity, ordered by least member. Requires a
// transitive first relation.
std::vector<Bits> clusters(const BiFrame& f);
// Clusters C with the reflexive closure of R mapping C into itself.
std::vector<Bits> maximal_clusters(const BiFrame& f);
bool is_degenerate_cluster(const BiFrame& f, Bits cluster);

// Generated subframe rooted at x, closing over both relations.
BiFrame cone(const BiFrame& f, const std::string& x);
Bits cone_mask(const BiFrame& f, int x);
BiFrame restrict_frame(const BiFrame& f, Bits keep);

// Rooted, first relation weakly transitive, inequality and R below RD.
// Rejects frames without RD or without a root.
bool is_basic(const BiFrame& f);

// RD o R included in RD; equivalently every RD-irreflexive point has an
// empty R-preimage. Rejects non-basic frames.
bool at1_condition(const BiFrame& f);

// Undirected reachability over comparability spans all worlds. Requires a
// transitive first relation.
bool is_connected(const BiFrame& f);
bool subset_connected(const Relation& r, Bits subset);

// Every R-irreflexive x has R(x) connected in the subframe on R(x); empty
// successor sets count as connected. Requires a transitive first relation.
bool ku_frame_condition(const BiFrame& f);

// Structural description of the frames the bounded decision procedure for
// the strongest registered logic searches: basic, transitive, serial,
// AT1 condition, Ku condition, connected.
bool dt1ck_frame_class(const BiFrame& f);

// Non-oriented path; consecutive members are comparability-related.
using Path = std::vector<std::string>;

bool path_is_valid(const BiFrame& f, const Path& p);
// Every world lies in the reflexive closure of R applied to some member.
bool path_is_global(const BiFrame& f, const Path& p);

// Deterministic global path from w to v in a connected transitive frame.
Path global_path(const BiFrame& f, const std::string& w, const std::string& v);

// Global path between RD-reflexive endpoints in which every RD-irreflexive
// world occurs exactly once. Requires the dt1ck frame class.
Path reduced_global_path(const BiFrame& f, const std::string& w1, const std::string& w2);

struct UnfoldResult {
    BiFrame frame;                 // both relations irreflexive, second is inequality
    std::vector<int> to_original;  // new world index -> original world index
    std::vector<std::string> original_ids;
};

// Duplicates every RD-reflexive world into two copies; the returned map is a
// p-morphism from the unfolded frame onto the input for both relation pairs.
// Rejects non-basic input.
UnfoldResult unfold(const BiFrame& f);

}  // namespace topomodal

#endif  // TOPOMODAL_KRIPKE_HPP
