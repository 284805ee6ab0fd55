#include "topomodal/logics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace topomodal {

namespace {

Formula barbox(Formula a) { return And(Box(a), a); }

std::map<std::string, Formula> build_axioms() {
    Formula p = Var("p");
    std::map<std::string, Formula> ax;
    ax.emplace("K4", Imp(Box(p), Box(Box(p))));
    ax.emplace("K4o", Imp(And(p, Box(p)), Box(Box(p))));
    ax.emplace("T", Imp(Box(p), p));
    ax.emplace("D", Dia(Top()));
    ax.emplace("GL", Imp(Box(Imp(Box(p), p)), Box(p)));
    ax.emplace("Ver", Box(Bot()));
    ax.emplace("DL", Imp(Dia(Box(p)), p));
    ax.emplace("w4_diff", Imp(And(p, DBox(p)), DBox(DBox(p))));
    ax.emplace("sym_diff", Imp(DDia(DBox(p)), p));
    ax.emplace("T_univ", Imp(ABox(p), p));
    ax.emplace("four_univ", Imp(ABox(p), ABox(ABox(p))));
    ax.emplace("B_univ", Imp(p, ABox(ADia(p))));
    ax.emplace("bridge_Dplus", Imp(DBox(p), Box(p)));
    ax.emplace("bridge_D", Imp(And(DBox(p), p), Box(p)));
    ax.emplace("bridge_U", Imp(ABox(p), Box(p)));
    ax.emplace("AT1", Imp(DBox(p), DBox(Box(p))));
    Formula ac = Imp(ABox(Or(Box(p), Box(Not(p)))), Or(ABox(p), ABox(Not(p))));
    ax.emplace("AC", ac);
    ax.emplace("AC_sharp", sharp(ac));
    ax.emplace("AC_sharp_u", u_translate(sharp(ac)));
    ax.emplace("DS", Imp(DBox(p), Dia(p)));
    ax.emplace("Ku", Imp(Box(Or(barbox(p), barbox(Not(p)))), Or(Box(p), Box(Not(p)))));
    ax.emplace("Ku_prime", Iff(Dia(Or(And(p, Dia(Not(p))), And(Not(p), Dia(p)))),
                               And(Dia(p), Dia(Not(p)))));
    ax.emplace("Ku1", generalized_ku(1));
    ax.emplace("Ku2", generalized_ku(2));
    ax.emplace("G1C", Imp(DBox(Or(barbox(p), barbox(Not(p)))), Or(DBox(p), DBox(Not(p)))));
    return ax;
}

const std::map<std::string, Formula>& axiom_table() {
    static const std::map<std::string, Formula> table = build_axioms();
    return table;
}

}  // namespace

Formula axiom(const std::string& name) {
    const auto& table = axiom_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown axiom '" + name + "'");
    return it->second;
}

std::vector<std::string> axiom_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : axiom_table()) names.push_back(name);
    return names;
}

Formula generalized_ku(int n) {
    if (n < 1) throw std::invalid_argument("generalized_ku: need n >= 1");
    std::vector<Formula> vars;
    for (int k = 0; k <= n; ++k) vars.push_back(Var("p" + std::to_string(k)));
    auto q = [&](int k) {
        std::optional<Formula> others;
        for (int j = n; j >= 0; --j) {
            if (j == k) continue;
            others = others ? And(Not(vars[j]), *others) : Not(vars[j]);
        }
        return And(vars[k], *others);
    };
    std::optional<Formula> premise_dis, conclusion_dis;
    for (int k = n; k >= 0; --k) {
        Formula bq = barbox(q(k));
        premise_dis = premise_dis ? Or(bq, *premise_dis) : bq;
        Formula nq = Box(Not(q(k)));
        conclusion_dis = conclusion_dis ? Or(nq, *conclusion_dis) : nq;
    }
    return Imp(Box(*premise_dis), *conclusion_dis);
}

// ── Logic registry ───────────────────────────────────────────────────────

namespace {

bool at1_raw(const BiFrame& f) {
    const Relation& rd = *f.rd;
    for (int x = 0; x < f.size(); ++x)
        if (image(f.r, rd.succ[x]) & ~rd.succ[x]) return false;
    return true;
}

bool basic_raw(const BiFrame& f) {
    // Rootedness is the enumerator's responsibility.
    return f.rd.has_value() && is_weakly_transitive(f.r) &&
           subset_of(neq_relation(f.size()), *f.rd) && subset_of(f.r, *f.rd);
}

std::vector<NamedAxiom> named(const std::vector<std::string>& names) {
    std::vector<NamedAxiom> out;
    for (const auto& n : names) out.push_back({n, axiom(n)});
    return out;
}

std::map<std::string, LogicSpec> build_logics() {
    std::map<std::string, LogicSpec> reg;
    auto add = [&](LogicSpec spec) { reg.emplace(spec.name, std::move(spec)); };

    add({"K4o", named({"K4o"}),
         [](const BiFrame& f) { return is_weakly_transitive(f.r); }, RdShape::Absent, false,
         false, FmpStatus::Unknown});
    add({"K4", named({"K4"}), [](const BiFrame& f) { return is_transitive(f.r); },
         RdShape::Absent, false, false, FmpStatus::Unknown});
    add({"D4", named({"K4", "D"}),
         [](const BiFrame& f) { return is_transitive(f.r) && is_serial(f.r); }, RdShape::Absent,
         false, false, FmpStatus::Unknown});
    add({"S4", named({"K4", "T"}),
         [](const BiFrame& f) { return is_transitive(f.r) && is_reflexive(f.r); },
         RdShape::Absent, false, false, FmpStatus::Unknown});
    add({"GL", named({"GL"}),
         [](const BiFrame& f) { return is_transitive(f.r) && is_irreflexive(f.r); },
         RdShape::Absent, false, false, FmpStatus::Unknown});
    add({"Ver", named({"Ver"}),
         [](const BiFrame& f) {
             for (Bits s : f.r.succ)
                 if (s) return false;
             return true;
         },
         RdShape::Absent, false, false, FmpStatus::Unknown});
    add({"DL", named({"K4o", "DL"}),
         [](const BiFrame& f) { return is_weakly_transitive(f.r) && is_symmetric(f.r); },
         RdShape::Absent, false, false, FmpStatus::Unknown});
    add({"D4K", named({"K4", "D", "Ku"}),
         [](const BiFrame& f) {
             return is_transitive(f.r) && is_serial(f.r) && ku_frame_condition(f);
         },
         RdShape::Absent, false, false, FmpStatus::ProvedInPaper});

    add({"K4oD+", named({"K4o", "w4_diff", "sym_diff", "bridge_Dplus"}), basic_raw,
         RdShape::SupersetOfNeq, true, true, FmpStatus::Unknown});
    add({"KT1", named({"K4o", "w4_diff", "sym_diff", "bridge_Dplus", "AT1"}),
         [](const BiFrame& f) { return basic_raw(f) && at1_raw(f); }, RdShape::SupersetOfNeq,
         true, true, FmpStatus::ProvedInPaper});
    add({"DT1", named({"K4", "D", "w4_diff", "sym_diff", "bridge_Dplus", "AT1"}),
         [](const BiFrame& f) {
             return is_transitive(f.r) && is_serial(f.r) && basic_raw(f) && at1_raw(f);
         },
         RdShape::SupersetOfNeq, true, true, FmpStatus::ProvedInPaper});
    add({"DT1C", named({"K4", "D", "w4_diff", "sym_diff", "bridge_Dplus", "AT1", "AC_sharp_u"}),
         [](const BiFrame& f) {
             return is_transitive(f.r) && is_serial(f.r) && basic_raw(f) && at1_raw(f) &&
                    is_connected(f);
         },
         RdShape::SupersetOfNeq, true, true, FmpStatus::Unknown});
    add({"DT1K", named({"K4", "D", "w4_diff", "sym_diff", "bridge_Dplus", "AT1", "Ku"}),
         [](const BiFrame& f) {
             return is_transitive(f.r) && is_serial(f.r) && basic_raw(f) && at1_raw(f) &&
                    ku_frame_condition(f);
         },
         RdShape::SupersetOfNeq, true, true, FmpStatus::ProvedInPaper});
    add({"DT1CK",
         named({"K4", "D", "w4_diff", "sym_diff", "bridge_Dplus", "AT1", "Ku", "AC_sharp_u"}),
         [](const BiFrame& f) {
             return is_transitive(f.r) && is_serial(f.r) && basic_raw(f) && at1_raw(f) &&
                    ku_frame_condition(f) && is_connected(f);
         },
         RdShape::SupersetOfNeq, true, true, FmpStatus::ProvedInPaper});

    add({"S4D", named({"K4", "T", "w4_diff", "sym_diff", "bridge_D"}),
         [](const BiFrame& f) {
             return f.rd.has_value() && is_transitive(f.r) && is_reflexive(f.r) &&
                    subset_of(neq_relation(f.size()), *f.rd);
         },
         RdShape::SupersetOfNeq, false, true, FmpStatus::Unknown});
    add({"S4U", named({"K4", "T", "T_univ", "four_univ", "B_univ", "bridge_U"}),
         [](const BiFrame& f) {
             return f.rd.has_value() && is_transitive(f.r) && is_reflexive(f.r) &&
                    *f.rd == universal_relation(f.size());
         },
         RdShape::ExactlyUniversal, false, true, FmpStatus::Unknown});
    add({"K4oU", named({"K4o", "T_univ", "four_univ", "B_univ", "bridge_U"}),
         [](const BiFrame& f) {
             return f.rd.has_value() && is_weakly_transitive(f.r) &&
                    *f.rd == universal_relation(f.size());
         },
         RdShape::ExactlyUniversal, false, true, FmpStatus::Unknown});
    return reg;
}

const std::map<std::string, LogicSpec>& logic_table() {
    static const std::map<std::string, LogicSpec> table = build_logics();
    return table;
}

}  // namespace

const LogicSpec& get_logic(const std::string& name) {
    const auto& table = logic_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown logic '" + name + "'");
    return it->second;
}

std::vector<std::string> logic_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : logic_table()) names.push_back(name);
    return names;
}

// ── Filtration ───────────────────────────────────────────────────────────

FiltrationResult filtrate(const BiFrame& f, const Valuation& val, const std::set<Formula>& psi) {
    if (subformula_closure(psi) != psi)
        throw std::invalid_argument("filtrate: formula set not closed under subformulas");
    int n = f.size();
    Bits full = full_mask(n);

    std::vector<Formula> members(psi.begin(), psi.end());
    std::vector<Bits> truth;
    truth.reserve(members.size());
    for (const auto& a : members) truth.push_back(kripke_truth_set(f, val, a));

    // Truth-profile classes, numbered by first occurrence in world order.
    std::vector<int> cls(n, -1);
    std::vector<std::vector<bool>> profiles;
    for (int w = 0; w < n; ++w) {
        std::vector<bool> profile(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) profile[i] = (truth[i] >> w) & 1;
        auto at = std::find(profiles.begin(), profiles.end(), profile);
        if (at == profiles.end()) {
            profiles.push_back(std::move(profile));
            cls[w] = static_cast<int>(profiles.size()) - 1;
        } else {
            cls[w] = static_cast<int>(at - profiles.begin());
        }
    }
    int k = static_cast<int>(profiles.size());

    Relation under(k);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.r.get(x, y)) under.set(cls[x], cls[y]);
    Relation r_prime = is_transitive(f.r) ? transitive_closure(under) : under;

    std::optional<Relation> rd_prime;
    if (f.rd) {
        Relation rd_under(k);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (f.rd->get(x, y)) rd_under.set(cls[x], cls[y]);
        rd_prime = std::move(rd_under);
    }

    Valuation quotient_val;
    for (const auto& a : members) {
        if (a.kind() != Kind::Var) continue;
        Bits mask = 0;
        Bits worlds = val.count(a.var_name()) ? (val.at(a.var_name()) & full) : 0;
        while (worlds) {
            int w = std::countr_zero(worlds);
            worlds &= worlds - 1;
            mask |= Bits{1} << cls[w];
        }
        quotient_val[a.var_name()] = mask;
    }

    std::vector<std::string> ids;
    for (int c = 0; c < k; ++c) ids.push_back("c" + std::to_string(c));
    BiFrame quotient = make_frame(std::move(ids), std::move(r_prime), std::move(rd_prime));
    return FiltrationResult{std::move(quotient), std::move(quotient_val), std::move(cls), k};
}

// ── Enumeration ──────────────────────────────────────────────────────────

namespace {

std::uint64_t relation_mask(const Relation& r) {
    std::uint64_t mask = 0;
    for (int i = 0; i < r.n; ++i) mask |= r.succ[i] << (i * r.n);
    return mask;
}

void set_relation_from_mask(Relation& r, std::uint64_t mask) {
    Bits full = full_mask(r.n);
    for (int i = 0; i < r.n; ++i) r.succ[i] = (mask >> (i * r.n)) & full;
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm, int n) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((mask >> (i * n + j)) & 1) out |= std::uint64_t{1} << (perm[i] * n + perm[j]);
    return out;
}

std::pair<std::uint64_t, std::uint64_t> canonical_form(const BiFrame& f) {
    int n = f.size();
    std::uint64_t r = relation_mask(f.r);
    std::uint64_t rd = f.rd ? relation_mask(*f.rd) : 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::pair<std::uint64_t, std::uint64_t> best{~std::uint64_t{0}, ~std::uint64_t{0}};
    do {
        std::pair<std::uint64_t, std::uint64_t> cand{permute_mask(r, perm, n),
                                                     permute_mask(rd, perm, n)};
        if (cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool frame_rooted(const BiFrame& f) {
    Relation all = f.rd ? relation_union(f.r, *f.rd) : f.r;
    Bits everyone = full_mask(f.size());
    for (int u = 0; u < f.size(); ++u)
        if (reach(all, Bits{1} << u) == everyone) return true;
    return false;
}

}  // namespace

void enumerate_biframes(const LogicSpec& logic, int n, bool modulo_iso,
                        const std::function<bool(const BiFrame&)>& yield) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("enumerate_biframes: size outside 1.." +
                                    std::to_string(kEnumerationCap));
    std::uint64_t r_limit = std::uint64_t{1} << (n * n);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

    BiFrame frame = make_frame_n(n, Relation(n));
    if (logic.shape != RdShape::Absent) frame.rd = Relation(n);

    auto emit_r_range = [&](std::uint64_t rd_mask) {
        // Rootedness: a second relation covering inequality makes every
        // world a root; only the 1-modal shape needs a reachability check.
        bool auto_rooted = logic.shape != RdShape::Absent && n >= 1 &&
                           (n == 1 || subset_of(neq_relation(n), *frame.rd));
        auto try_one = [&](std::uint64_t r_mask) {
            set_relation_from_mask(frame.r, r_mask);
            if (!auto_rooted && !frame_rooted(frame)) return true;
            if (!logic.frame_class(frame)) return true;
            if (modulo_iso && !seen.insert(canonical_form(frame)).second) return true;
            return yield(frame);
        };
        if (logic.r_within_rd) {
            std::uint64_t m = rd_mask;
            std::uint64_t s = 0;
            do {
                if (!try_one(s)) return false;
                s = (s - m) & m;
            } while (s != 0);
            return true;
        }
        for (std::uint64_t r_mask = 0; r_mask < r_limit; ++r_mask)
            if (!try_one(r_mask)) return false;
        return true;
    };

    switch (logic.shape) {
        case RdShape::Absent: {
            emit_r_range(0);
            break;
        }
        case RdShape::ExactlyUniversal: {
            frame.rd = universal_relation(n);
            emit_r_range(relation_mask(*frame.rd));
            break;
        }
        case RdShape::SupersetOfNeq: {
            Bits neq_mask = relation_mask(neq_relation(n));
            for (std::int64_t d = (std::int64_t{1} << n) - 1; d >= 0; --d) {
                std::uint64_t rd_mask = neq_mask;
                for (int i = 0; i < n; ++i)
                    if ((d >> i) & 1) rd_mask |= std::uint64_t{1} << (i * n + i);
                set_relation_from_mask(*frame.rd, rd_mask);
                if (!emit_r_range(rd_mask)) return;
            }
            break;
        }
    }
}

std::uint64_t count_biframes(const LogicSpec& logic, int n, bool modulo_iso) {
    std::uint64_t count = 0;
    enumerate_biframes(logic, n, modulo_iso, [&](const BiFrame&) {
        ++count;
        return true;
    });
    return count;
}

DecideResult decide_bounded(const LogicSpec& logic, const Formula& a, int max_size,
                            bool modulo_iso, std::uint64_t budget) {
    if (max_size < 1 || max_size > kEnumerationCap)
        throw std::invalid_argument("decide_bounded: bound outside 1.." +
                                    std::to_string(kEnumerationCap));
    DecideResult result;
    result.searched_up_to = max_size;
    for (int n = 1; n <= max_size && !result.found; ++n) {
        enumerate_biframes(logic, n, modulo_iso, [&](const BiFrame& f) {
            ValidityResult v = kripke_valid(f, a, budget);
            if (!v.valid) {
                result.found = true;
                result.frame = f;
                result.countermodel = *v.countermodel;
                return false;
            }
            return true;
        });
    }
    return result;
}

}  // namespace topomodal
