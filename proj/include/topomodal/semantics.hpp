#ifndef TOPOMODAL_SEMANTICS_HPP
#define TOPOMODAL_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "topomodal/formula.hpp"
#include "topomodal/kripke.hpp"
#include "topomodal/topospace.hpp"

namespace topomodal {

// Variable name -> set of worlds/points. Missing variables default to the
// empty set.
using Valuation = std::map<std::string, Bits>;

enum class TopoMode { C, D };

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget();  // 2^24

// Truth set of f: box over R, [!=] over RD when present else over literal
// inequality, [A] always universal.
Bits kripke_truth_set(const BiFrame& f, const Valuation& val, const Formula& a);
bool kripke_truth(const BiFrame& f, const Valuation& val, const std::string& world,
                  const Formula& a);

// Truth set under c-semantics (box = interior, dia = closure) or
// d-semantics (box = coderived, dia = derived); [!=] over literal
// inequality, [A] universal.
Bits topo_truth_set(const FiniteSpace& x, const Valuation& val, const Formula& a, TopoMode mode);
bool topo_truth(const FiniteSpace& x, const Valuation& val, const std::string& point,
                const Formula& a, TopoMode mode);

struct Countermodel {
    Valuation valuation;
    int witness = 0;
    std::string witness_id;
};

struct ValidityResult {
    bool valid = true;
    std::optional<Countermodel> countermodel;
};

// Exhaustive over all valuations of the formula's variables (first-occurrence
// order, subsets counted in binary order, earlier variables more significant)
// and all witnesses in index order; the first failure is returned. Throws
// BudgetExceeded when 2^(vars * size) exceeds the budget.
ValidityResult kripke_valid(const BiFrame& f, const Formula& a,
                            std::uint64_t budget = default_budget());
ValidityResult topo_valid(const FiniteSpace& x, const Formula& a, TopoMode mode,
                          std::uint64_t budget = default_budget());

struct LogicSpec;  // logics.hpp

// All axioms of the logic valid in the structure.
bool logic_valid(const BiFrame& f, const LogicSpec& logic,
                 std::uint64_t budget = default_budget());
bool logic_valid(const FiniteSpace& x, const LogicSpec& logic, TopoMode mode,
                 std::uint64_t budget = default_budget());

}  // namespace topomodal

#endif  // TOPOMODAL_SEMANTICS_HPP
