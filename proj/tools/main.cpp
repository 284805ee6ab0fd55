// Command-line front end. Every invocation prints a single JSON document on
// stdout; exit code 0 means valid/holds, 1 means countermodel/fails/
// unknown-above-bound, 2 means error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "topomodal/io.hpp"
#include "topomodal/logics.hpp"
#include "topomodal/morphism.hpp"
#include "topomodal/semantics.hpp"

namespace tmod = topomodal;
using tmod::Json;

namespace {

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("TOPOMODAL_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("TOPOMODAL_BUDGET must be an integer");
        }
    }
    return tmod::default_budget();
}

int emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
    std::string status = j.at("status").get<std::string>();
    return (status == "valid" || status == "holds") ? 0 : 1;
}

Json countermodel_json(const tmod::BiFrame& frame, const tmod::Countermodel& cm) {
    Json j;
    j["frame"] = tmod::frame_to_json(frame);
    j["valuation"] = tmod::valuation_to_json(cm.valuation, frame.worlds);
    j["witness"] = cm.witness_id;
    return j;
}

int cmd_parse(const std::string& text, const std::string& emit_kind) {
    tmod::Formula f = tmod::parse(text);
    Json j;
    j["status"] = "holds";
    if (emit_kind == "ast")
        j["ast"] = tmod::formula_to_json(f);
    else
        j["pretty"] = tmod::print(f);
    return emit(j);
}

int cmd_translate(bool do_sharp, const std::string& text) {
    tmod::Formula f = tmod::parse(text);
    tmod::Formula out = do_sharp ? tmod::sharp(f) : tmod::u_translate(f);
    Json j;
    j["status"] = "holds";
    j["pretty"] = tmod::print(out);
    return emit(j);
}

int cmd_check(const std::string& structure_path, const std::string& formula_text,
              const std::string& semantics, const std::string& at) {
    Json file = tmod::load_json_file(structure_path);
    tmod::Structure s = tmod::structure_from_json(file);
    tmod::Valuation val = tmod::valuation_from_json(file, s);
    tmod::Formula f = tmod::parse(formula_text);
    bool truth;
    if (semantics == "kripke") {
        if (!s.is_frame()) throw std::invalid_argument("kripke semantics needs a frame file");
        truth = tmod::kripke_truth(s.frame(), val, at, f);
    } else {
        if (s.is_frame()) throw std::invalid_argument("topological semantics needs a space file");
        tmod::TopoMode mode = semantics == "topo-d" ? tmod::TopoMode::D : tmod::TopoMode::C;
        truth = tmod::topo_truth(s.space(), val, at, f, mode);
    }
    Json j;
    j["status"] = truth ? "holds" : "fails";
    j["at"] = at;
    return emit(j);
}

int cmd_valid(const std::string& structure_path, const std::string& formula_text,
              const std::string& semantics) {
    Json file = tmod::load_json_file(structure_path);
    tmod::Structure s = tmod::structure_from_json(file);
    tmod::Formula f = tmod::parse(formula_text);
    std::uint64_t budget = budget_from_env();
    Json j;
    if (semantics == "kripke") {
        if (!s.is_frame()) throw std::invalid_argument("kripke semantics needs a frame file");
        tmod::ValidityResult r = tmod::kripke_valid(s.frame(), f, budget);
        if (r.valid) {
            j["status"] = "valid";
        } else {
            j["status"] = "countermodel";
            j["countermodel"] = countermodel_json(s.frame(), *r.countermodel);
        }
    } else {
        if (s.is_frame()) throw std::invalid_argument("topological semantics needs a space file");
        tmod::TopoMode mode = semantics == "topo-d" ? tmod::TopoMode::D : tmod::TopoMode::C;
        tmod::ValidityResult r = tmod::topo_valid(s.space(), f, mode, budget);
        if (r.valid) {
            j["status"] = "valid";
        } else {
            j["status"] = "countermodel";
            Json cm;
            cm["space"] = tmod::space_to_json(s.space());
            cm["valuation"] = tmod::valuation_to_json(r.countermodel->valuation, s.space().points);
            cm["witness"] = r.countermodel->witness_id;
            j["countermodel"] = cm;
        }
    }
    return emit(j);
}

int cmd_decide(const std::string& logic_name, const std::string& formula_text, int bound,
               bool iso) {
    const tmod::LogicSpec& logic = tmod::get_logic(logic_name);
    tmod::Formula f = tmod::parse(formula_text);
    tmod::DecideResult r = tmod::decide_bounded(logic, f, bound, iso, budget_from_env());
    Json j;
    j["logic"] = logic_name;
    j["formula"] = tmod::print(f);
    j["bound"] = bound;
    if (r.found) {
        j["status"] = "countermodel";
        j["countermodel"] = countermodel_json(r.frame, r.countermodel);
    } else {
        j["status"] = "unknown-above-bound";
        j["note"] = "no countermodel up to the bound; this is not a validity proof";
    }
    // Keep "status" first for readability.
    Json ordered;
    ordered["status"] = j["status"];
    for (const auto& [key, value] : j.items())
        if (key != "status") ordered[key] = value;
    return emit(ordered);
}

int cmd_morphism(const std::string& kind, const std::string& map_path,
                 const std::string& src_path, const std::string& dst_path,
                 bool allow_non_surjective) {
    auto assignment = tmod::map_from_json(tmod::load_json_file(map_path));
    Json src_file = tmod::load_json_file(src_path);
    Json dst_file = tmod::load_json_file(dst_path);
    Json j;
    if (kind == "p") {
        tmod::BiFrame src = tmod::frame_from_json(src_file);
        tmod::BiFrame dst = tmod::frame_from_json(dst_file);
        tmod::PointMap h = tmod::make_point_map(src.worlds, dst.worlds, assignment);
        tmod::MorphismReport rep = tmod::is_p_morphism(h, src, dst);
        j["status"] = rep.ok ? "holds" : "fails";
        if (!rep.ok) j["diagnostic"] = rep.diagnostic;
    } else if (kind == "c" || kind == "d") {
        tmod::FiniteSpace src = tmod::space_from_json(src_file);
        tmod::BiFrame dst = tmod::frame_from_json(dst_file);
        tmod::PointMap h = tmod::make_point_map(src.points, dst.worlds, assignment);
        tmod::MorphismReport rep = kind == "d"
                                     ? tmod::is_d_morphism(h, src, dst, allow_non_surjective)
                                     : tmod::is_c_morphism(h, src, dst);
        j["status"] = rep.ok ? "holds" : "fails";
        if (!rep.ok) j["diagnostic"] = rep.diagnostic;
    } else {  // dd
        tmod::FiniteSpace src = tmod::space_from_json(src_file);
        tmod::BiFrame dst = tmod::frame_from_json(dst_file);
        tmod::PointMap h = tmod::make_point_map(src.points, dst.worlds, assignment);
        tmod::DdReport rep = tmod::is_dd_morphism(h, src, dst);
        j["status"] = rep.ok ? "holds" : "fails";
        if (!rep.ok) j["diagnostic"] = rep.diagnostic;
        Json manifold = Json::object();
        for (int w = 0; w < dst.size(); ++w) manifold[dst.worlds[w]] = rep.manifold[w];
        j["manifold"] = manifold;
        if (rep.crosscheck_ran) j["manifold_criterion_agrees"] = rep.crosscheck_agrees;
    }
    return emit(j);
}

int cmd_filtrate(const std::string& model_path, const std::string& formulas_path,
                 const std::string& out_path) {
    Json file = tmod::load_json_file(model_path);
    tmod::Structure s = tmod::structure_from_json(file);
    if (!s.is_frame()) throw std::invalid_argument("filtrate needs a frame-based model");
    tmod::Valuation val = tmod::valuation_from_json(file, s);

    std::ifstream in(formulas_path);
    if (!in) throw std::invalid_argument("cannot open file '" + formulas_path + "'");
    std::set<tmod::Formula> generators;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        generators.insert(tmod::parse(line));
    }
    std::set<tmod::Formula> psi = tmod::subformula_closure(generators);
    tmod::FiltrationResult r = tmod::filtrate(s.frame(), val, psi);

    Json out = tmod::frame_to_json(r.frame);
    out["valuation"] = tmod::valuation_to_json(r.valuation, r.frame.worlds);
    tmod::save_json_file(out_path, out);

    Json j;
    j["status"] = "holds";
    j["classes"] = r.class_count;
    Json projection = Json::object();
    for (int w = 0; w < s.frame().size(); ++w)
        projection[s.frame().worlds[w]] = r.frame.worlds[r.projection[w]];
    j["projection"] = projection;
    j["out"] = out_path;
    return emit(j);
}

int cmd_enumerate(const std::string& class_name, int size, bool iso, bool count_only) {
    const tmod::LogicSpec& logic = tmod::get_logic(class_name);
    Json j;
    j["status"] = "holds";
    j["class"] = class_name;
    j["size"] = size;
    if (count_only) {
        j["count"] = tmod::count_biframes(logic, size, iso);
    } else {
        Json frames = Json::array();
        std::uint64_t count = 0;
        tmod::enumerate_biframes(logic, size, iso, [&](const tmod::BiFrame& f) {
            frames.push_back(tmod::frame_to_json(f));
            ++count;
            return true;
        });
        j["count"] = count;
        j["frames"] = frames;
    }
    return emit(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topomodal logic toolkit"};
    app.require_subcommand(1);

    std::string formula_text, emit_kind = "pretty", structure_path, semantics = "kripke";
    std::string at_point, logic_name, map_path, src_path, dst_path, kind;
    std::string model_path, formulas_path, out_path, class_name;
    int bound = 1, size = 1;
    bool iso = false, count_only = false, allow_non_surjective = false;
    bool do_sharp = false, do_u = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse a formula and re-emit it");
    parse_cmd->add_option("--formula", formula_text)->required();
    parse_cmd->add_option("--emit", emit_kind)->check(CLI::IsMember({"ast", "pretty"}));

    auto* check_cmd = app.add_subcommand("check", "truth at a point of a model");
    check_cmd->add_option("--structure", structure_path)->required();
    check_cmd->add_option("--formula", formula_text)->required();
    check_cmd->add_option("--semantics", semantics)
        ->check(CLI::IsMember({"kripke", "topo-d", "topo-c"}));
    check_cmd->add_option("--at", at_point)->required();

    auto* valid_cmd = app.add_subcommand("valid", "validity over a structure");
    valid_cmd->add_option("--structure", structure_path)->required();
    valid_cmd->add_option("--formula", formula_text)->required();
    valid_cmd->add_option("--semantics", semantics)
        ->check(CLI::IsMember({"kripke", "topo-d", "topo-c"}));

    auto* decide_cmd = app.add_subcommand("decide", "bounded countermodel search");
    decide_cmd->add_option("--logic", logic_name)->required();
    decide_cmd->add_option("--formula", formula_text)->required();
    decide_cmd->add_option("--bound", bound)->required();
    decide_cmd->add_flag("--iso", iso);

    auto* translate_cmd = app.add_subcommand("translate", "formula translations");
    translate_cmd->add_flag("--sharp", do_sharp);
    translate_cmd->add_flag("--u", do_u);
    translate_cmd->add_option("--formula", formula_text)->required();

    auto* morphism_cmd = app.add_subcommand("morphism", "verify a morphism");
    morphism_cmd->add_option("--kind", kind)->required()->check(
        CLI::IsMember({"p", "c", "d", "dd"}));
    morphism_cmd->add_option("--map", map_path)->required();
    morphism_cmd->add_option("--src", src_path)->required();
    morphism_cmd->add_option("--dst", dst_path)->required();
    morphism_cmd->add_flag("--allow-non-surjective", allow_non_surjective);

    auto* filtrate_cmd = app.add_subcommand("filtrate", "filtration of a model");
    filtrate_cmd->add_option("--model", model_path)->required();
    filtrate_cmd->add_option("--formulas", formulas_path)->required();
    filtrate_cmd->add_option("--out", out_path)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate class frames");
    enumerate_cmd->add_option("--class", class_name)->required();
    enumerate_cmd->add_option("--size", size)->required();
    enumerate_cmd->add_flag("--iso", iso);
    enumerate_cmd->add_flag("--count-only", count_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*parse_cmd) return cmd_parse(formula_text, emit_kind);
        if (*check_cmd) return cmd_check(structure_path, formula_text, semantics, at_point);
        if (*valid_cmd) return cmd_valid(structure_path, formula_text, semantics);
        if (*decide_cmd) return cmd_decide(logic_name, formula_text, bound, iso);
        if (*translate_cmd) {
            if (do_sharp == do_u)
                throw std::invalid_argument("translate needs exactly one of --sharp, --u");
            return cmd_translate(do_sharp, formula_text);
        }
        if (*morphism_cmd)
            return cmd_morphism(kind, map_path, src_path, dst_path, allow_non_surjective);
        if (*filtrate_cmd) return cmd_filtrate(model_path, formulas_path, out_path);
        if (*enumerate_cmd) return cmd_enumerate(class_name, size, iso, count_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
