#include "topomodal/semantics.hpp"

#include <bit>

#include "topomodal/logics.hpp"

namespace topomodal {

std::uint64_t default_budget() { return std::uint64_t{1} << 24; }

namespace {

Bits lookup(const Valuation& val, const std::string& name) {
    auto it = val.find(name);
    return it == val.end() ? 0 : it->second;
}

// [!=] over an explicit relation is ordinary box; these two cover the
// literal-inequality reading shared by the topological side.
Bits literal_dbox(Bits arg, int n) {
    Bits full = full_mask(n);
    Bits missing = full & ~arg;
    if (!missing) return full;
    if (std::popcount(missing) == 1) return missing;
    return 0;
}

Bits literal_ddia(Bits arg, int n) {
    Bits full = full_mask(n);
    int count = std::popcount(arg);
    if (count >= 2) return full;
    if (count == 1) return full & ~arg;
    return 0;
}

Bits box_over(const Relation& r, Bits arg) {
    Bits out = 0;
    for (int i = 0; i < r.n; ++i)
        if ((r.succ[i] & ~arg) == 0) out |= Bits{1} << i;
    return out;
}

Bits dia_over(const Relation& r, Bits arg) {
    Bits out = 0;
    for (int i = 0; i < r.n; ++i)
        if (r.succ[i] & arg) out |= Bits{1} << i;
    return out;
}

}  // namespace

Bits kripke_truth_set(const BiFrame& f, const Valuation& val, const Formula& a) {
    int n = f.size();
    Bits full = full_mask(n);
    switch (a.kind()) {
        case Kind::Var: return lookup(val, a.var_name()) & full;
        case Kind::Bot: return 0;
        case Kind::Top: return full;
        case Kind::Not: return full & ~kripke_truth_set(f, val, a.child(0));
        case Kind::And:
            return kripke_truth_set(f, val, a.child(0)) & kripke_truth_set(f, val, a.child(1));
        case Kind::Or:
            return kripke_truth_set(f, val, a.child(0)) | kripke_truth_set(f, val, a.child(1));
        case Kind::Imp:
            return (full & ~kripke_truth_set(f, val, a.child(0))) |
                   kripke_truth_set(f, val, a.child(1));
        case Kind::Iff: {
            Bits l = kripke_truth_set(f, val, a.child(0));
            Bits r = kripke_truth_set(f, val, a.child(1));
            return (l & r) | (full & ~l & ~r);
        }
        case Kind::Box: return box_over(f.r, kripke_truth_set(f, val, a.child(0)));
        case Kind::Dia: return dia_over(f.r, kripke_truth_set(f, val, a.child(0)));
        case Kind::DBox: {
            Bits arg = kripke_truth_set(f, val, a.child(0));
            return f.rd ? box_over(*f.rd, arg) : literal_dbox(arg, n);
        }
        case Kind::DDia: {
            Bits arg = kripke_truth_set(f, val, a.child(0));
            return f.rd ? dia_over(*f.rd, arg) : literal_ddia(arg, n);
        }
        case Kind::ABox: return kripke_truth_set(f, val, a.child(0)) == full ? full : 0;
        case Kind::ADia: return kripke_truth_set(f, val, a.child(0)) != 0 ? full : 0;
    }
    return 0;
}

bool kripke_truth(const BiFrame& f, const Valuation& val, const std::string& world,
                  const Formula& a) {
    int w = f.index_of(world);
    return (kripke_truth_set(f, val, a) >> w) & 1;
}

Bits topo_truth_set(const FiniteSpace& x, const Valuation& val, const Formula& a, TopoMode mode) {
    int n = x.size();
    Bits full = full_mask(n);
    switch (a.kind()) {
        case Kind::Var: return lookup(val, a.var_name()) & full;
        case Kind::Bot: return 0;
        case Kind::Top: return full;
        case Kind::Not: return full & ~topo_truth_set(x, val, a.child(0), mode);
        case Kind::And:
            return topo_truth_set(x, val, a.child(0), mode) &
                   topo_truth_set(x, val, a.child(1), mode);
        case Kind::Or:
            return topo_truth_set(x, val, a.child(0), mode) |
                   topo_truth_set(x, val, a.child(1), mode);
        case Kind::Imp:
            return (full & ~topo_truth_set(x, val, a.child(0), mode)) |
                   topo_truth_set(x, val, a.child(1), mode);
        case Kind::Iff: {
            Bits l = topo_truth_set(x, val, a.child(0), mode);
            Bits r = topo_truth_set(x, val, a.child(1), mode);
            return (l & r) | (full & ~l & ~r);
        }
        case Kind::Box: {
            Bits arg = topo_truth_set(x, val, a.child(0), mode);
            return mode == TopoMode::C ? interior_of(x, arg) : coderived_of(x, arg);
        }
        case Kind::Dia: {
            Bits arg = topo_truth_set(x, val, a.child(0), mode);
            return mode == TopoMode::C ? closure_of(x, arg) : derived_of(x, arg);
        }
        case Kind::DBox: return literal_dbox(topo_truth_set(x, val, a.child(0), mode), n);
        case Kind::DDia: return literal_ddia(topo_truth_set(x, val, a.child(0), mode), n);
        case Kind::ABox: return topo_truth_set(x, val, a.child(0), mode) == full ? full : 0;
        case Kind::ADia: return topo_truth_set(x, val, a.child(0), mode) != 0 ? full : 0;
    }
    return 0;
}

bool topo_truth(const FiniteSpace& x, const Valuation& val, const std::string& point,
                const Formula& a, TopoMode mode) {
    int p = x.index_of(point);
    return (topo_truth_set(x, val, a, mode) >> p) & 1;
}

namespace {

// Shared valuation sweep for both validity checkers. `eval` maps a valuation
// to the truth set of the formula.
template <typename Eval>
ValidityResult validity_sweep(const std::vector<std::string>& vars, int n,
                              const std::vector<std::string>& ids, std::uint64_t budget,
                              Eval eval) {
    std::size_t k = vars.size();
    if (k * n >= 63 || (std::uint64_t{1} << (k * n)) > budget)
        throw BudgetExceeded("valuation enumeration exceeds budget");
    std::uint64_t total = std::uint64_t{1} << (k * n);
    Bits full = full_mask(n);
    for (std::uint64_t c = 0; c < total; ++c) {
        Valuation val;
        for (std::size_t i = 0; i < k; ++i) {
            int shift = static_cast<int>((k - 1 - i) * n);
            val[vars[i]] = (c >> shift) & full;
        }
        Bits truth = eval(val);
        if (truth != full) {
            int w = std::countr_zero(full & ~truth);
            return ValidityResult{false, Countermodel{std::move(val), w, ids[w]}};
        }
    }
    return ValidityResult{true, std::nullopt};
}

}  // namespace

ValidityResult kripke_valid(const BiFrame& f, const Formula& a, std::uint64_t budget) {
    return validity_sweep(variables(a), f.size(), f.worlds, budget,
                          [&](const Valuation& val) { return kripke_truth_set(f, val, a); });
}

ValidityResult topo_valid(const FiniteSpace& x, const Formula& a, TopoMode mode,
                          std::uint64_t budget) {
    return validity_sweep(variables(a), x.size(), x.points, budget,
                          [&](const Valuation& val) { return topo_truth_set(x, val, a, mode); });
}

bool logic_valid(const BiFrame& f, const LogicSpec& logic, std::uint64_t budget) {
    for (const auto& ax : logic.axioms)
        if (!kripke_valid(f, ax.formula, budget).valid) return false;
    return true;
}

bool logic_valid(const FiniteSpace& x, const LogicSpec& logic, TopoMode mode,
                 std::uint64_t budget) {
    for (const auto& ax : logic.axioms)
        if (!topo_valid(x, ax.formula, mode, budget).valid) return false;
    return true;
}

}  // namespace topomodal
