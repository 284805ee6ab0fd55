#ifndef TOPOMODAL_FORMULA_HPP
#define TOPOMODAL_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace topomodal {

// Node kinds of the bimodal language. Box/Dia are the first modality,
// DBox/DDia the difference modality, ABox/ADia the universal modality.
// Top, Dia, DDia, ADia, Or, Iff are genuine nodes, not sugar, so printed
// output matches user input.
enum class Kind : std::uint8_t {
    Var,
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Box,
    Dia,
    DBox,
    DDia,
    ABox,
    ADia,
};

const char* kind_name(Kind k) noexcept;
bool is_unary(Kind k) noexcept;
bool is_binary(Kind k) noexcept;
bool is_modal(Kind k) noexcept;

struct FormulaNode;

// Immutable formula handle with structural equality. Copies are cheap
// (shared subtrees); all operations below are pure.
class Formula {
public:
    Formula() = delete;

    Kind kind() const noexcept;
    const std::string& var_name() const;  // Var nodes only
    std::size_t arity() const noexcept;
    const Formula& child(std::size_t i) const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }
    // Total structural order, used for deterministic sets of formulas.
    bool operator<(const Formula& other) const;

    std::size_t hash() const noexcept;

    static Formula make(Kind k, std::vector<Formula> kids, std::string name = {});

private:
    explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const FormulaNode> node_;
};

// Constructors named after the node kinds.
Formula Var(std::string name);
Formula Bot();
Formula Top();
Formula Not(Formula f);
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Imp(Formula a, Formula b);
Formula Iff(Formula a, Formula b);
Formula Box(Formula f);
Formula Dia(Formula f);
Formula DBox(Formula f);
Formula DDia(Formula f);
Formula ABox(Formula f);
Formula ADia(Formula f);

// Which modalities a formula may use. BOX_ONLY is the least element,
// FULL the greatest; BOX_ALL and BOX_DIFF are incomparable.
enum class Signature : std::uint8_t { BOX_ONLY, BOX_ALL, BOX_DIFF, FULL };

Signature signature_of(const Formula& f);

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Concrete syntax. Precedence low to high: <->, -> (right-assoc), |, &,
// unary {~ [] <> [!=] <!=> [A] <E>}, atoms. All binaries parse
// right-associatively. Unicode glyphs are accepted on input only.
Formula parse(const std::string& text);

// Minimal-parenthesis rendering; parse(print(f)) == f.
std::string print(const Formula& f);

// Rewrites every box subformula: box B becomes box B' & B' with B' the
// translation of B. First-modality diamonds are normalized to ~[]~ first;
// everything else maps homomorphically.
Formula sharp(const Formula& f);

// Translates universal-modality formulas into the difference language:
// [A]B becomes [!=]B' & B'. Rejects input containing [!=]/<!=>.
// <E> is normalized to ~[A]~ first.
Formula u_translate(const Formula& f);

// Least superset closed under immediate subformulas.
std::set<Formula> subformula_closure(const std::set<Formula>& fs);

// Simultaneous replacement of every occurrence of a variable.
Formula substitute(const Formula& f, const std::string& var, const Formula& g);

// Variable names in first-occurrence order.
std::vector<std::string> variables(const Formula& f);

}  // namespace topomodal

#endif  // TOPOMODAL_FORMULA_HPP
