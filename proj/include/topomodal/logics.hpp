#ifndef TOPOMODAL_LOGICS_HPP
#define TOPOMODAL_LOGICS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "topomodal/formula.hpp"
#include "topomodal/kripke.hpp"
#include "topomodal/semantics.hpp"

namespace topomodal {

// Registry of named axioms; unknown names are rejected.
Formula axiom(const std::string& name);
std::vector<std::string> axiom_names();

// Kuratowski-style axiom in variables p0..pn.
Formula generalized_ku(int n);

enum class FmpStatus { ProvedInPaper, Unknown };

// How the second relation of a class frame is shaped; used to prune
// enumeration without changing the canonical order.
enum class RdShape { Absent, SupersetOfNeq, ExactlyUniversal };

struct NamedAxiom {
    std::string name;
    Formula formula;
};

struct LogicSpec {
    std::string name;
    std::vector<NamedAxiom> axioms;
    std::function<bool(const BiFrame&)> frame_class;  // expects rooted input
    RdShape shape = RdShape::Absent;
    bool r_within_rd = false;  // class forces the first relation below RD
    bool two_modal = false;
    FmpStatus fmp_status = FmpStatus::Unknown;
};

const LogicSpec& get_logic(const std::string& name);
std::vector<std::string> logic_names();

struct FiltrationResult {
    BiFrame frame;
    Valuation valuation;
    std::vector<int> projection;  // world index -> class index
    int class_count = 0;
};

// Quotient by truth-profile equivalence over a subformula-closed set. The
// first relation is closed transitively when the input one is transitive;
// the second relation is the plain image relation.
FiltrationResult filtrate(const BiFrame& f, const Valuation& val, const std::set<Formula>& psi);

inline constexpr int kEnumerationCap = 6;

// Yields every rooted biframe on n worlds satisfying the class predicate, in
// a fixed order (second relation mask descending, first ascending). With
// modulo_iso only the first frame of each isomorphism class is yielded.
// Returning false from the callback stops the stream.
void enumerate_biframes(const LogicSpec& logic, int n, bool modulo_iso,
                        const std::function<bool(const BiFrame&)>& yield);

std::uint64_t count_biframes(const LogicSpec& logic, int n, bool modulo_iso);

struct DecideResult {
    bool found = false;
    int searched_up_to = 0;
    // Set when found:
    BiFrame frame = BiFrame{{"w0"}, Relation(1), std::nullopt};
    Countermodel countermodel;
};

// Scans all class frames of size 1..max_size for a countermodel. A hit
// certifies non-theoremhood; exhausting the bound proves nothing beyond it.
DecideResult decide_bounded(const LogicSpec& logic, const Formula& a, int max_size,
                            bool modulo_iso = false, std::uint64_t budget = default_budget());

}  // namespace topomodal

#endif  // TOPOMODAL_LOGICS_HPP
