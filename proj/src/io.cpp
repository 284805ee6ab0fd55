#include "topomodal/io.hpp"

#include <fstream>

namespace topomodal {

namespace {

Relation relation_from_pairs(const Json& pairs, const std::vector<std::string>& ids,
                             const char* which) {
    Relation r(static_cast<int>(ids.size()));
    if (!pairs.is_array()) throw std::invalid_argument(std::string(which) + " must be an array");
    auto index = [&](const std::string& id) {
        auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end())
            throw std::invalid_argument(std::string(which) + " mentions unknown id '" + id + "'");
        return static_cast<int>(it - ids.begin());
    };
    for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument(std::string(which) + " entries must be pairs");
        r.set(index(pair[0].get<std::string>()), index(pair[1].get<std::string>()));
    }
    return r;
}

Json relation_to_pairs(const Relation& r, const std::vector<std::string>& ids) {
    Json out = Json::array();
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (r.get(i, j)) out.push_back(Json::array({ids[i], ids[j]}));
    return out;
}

Bits point_set_from_json(const Json& j, const std::vector<std::string>& ids, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    Bits mask = 0;
    for (const auto& entry : j) {
        std::string id = entry.get<std::string>();
        auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end())
            throw std::invalid_argument(std::string(what) + " mentions unknown id '" + id + "'");
        mask |= Bits{1} << (it - ids.begin());
    }
    return mask;
}

Json point_set_to_json(Bits mask, const std::vector<std::string>& ids) {
    Json out = Json::array();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if ((mask >> i) & 1) out.push_back(ids[i]);
    return out;
}

}  // namespace

BiFrame frame_from_json(const Json& j) {
    if (!j.contains("worlds")) throw std::invalid_argument("frame file needs \"worlds\"");
    std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
    Relation r = j.contains("R") ? relation_from_pairs(j.at("R"), worlds, "R")
                                 : Relation(static_cast<int>(worlds.size()));
    std::optional<Relation> rd;
    if (j.contains("RD")) rd = relation_from_pairs(j.at("RD"), worlds, "RD");
    return make_frame(std::move(worlds), std::move(r), std::move(rd));
}

Json frame_to_json(const BiFrame& f) {
    Json j;
    j["worlds"] = f.worlds;
    j["R"] = relation_to_pairs(f.r, f.worlds);
    if (f.rd) j["RD"] = relation_to_pairs(*f.rd, f.worlds);
    return j;
}

FiniteSpace space_from_json(const Json& j) {
    if (!j.contains("points")) throw std::invalid_argument("space file needs \"points\"");
    std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
    std::vector<Bits> opens;
    if (j.contains("opens"))
        for (const auto& o : j.at("opens"))
            opens.push_back(point_set_from_json(o, points, "opens"));
    bool complete = j.value("complete_subbasis", false);
    return make_space(std::move(points), std::move(opens), complete);
}

Json space_to_json(const FiniteSpace& x) {
    Json j;
    j["points"] = x.points;
    Json opens = Json::array();
    for (Bits o : x.opens) opens.push_back(point_set_to_json(o, x.points));
    j["opens"] = opens;
    return j;
}

const std::vector<std::string>& Structure::ids() const {
    return is_frame() ? frame().worlds : space().points;
}

Structure structure_from_json(const Json& j) {
    if (j.contains("worlds")) return Structure{frame_from_json(j)};
    if (j.contains("points")) return Structure{space_from_json(j)};
    throw std::invalid_argument("structure file needs \"worlds\" or \"points\"");
}

Valuation valuation_from_json(const Json& j, const Structure& s) {
    Valuation val;
    if (!j.contains("valuation")) return val;
    const Json& v = j.at("valuation");
    if (!v.is_object()) throw std::invalid_argument("\"valuation\" must be an object");
    for (const auto& [name, members] : v.items())
        val[name] = point_set_from_json(members, s.ids(), "valuation");
    return val;
}

Json valuation_to_json(const Valuation& val, const std::vector<std::string>& ids) {
    Json j = Json::object();
    for (const auto& [name, mask] : val) j[name] = point_set_to_json(mask, ids);
    return j;
}

std::map<std::string, std::string> map_from_json(const Json& j) {
    if (!j.contains("map") || !j.at("map").is_object())
        throw std::invalid_argument("map file needs a \"map\" object");
    std::map<std::string, std::string> out;
    for (const auto& [src, dst] : j.at("map").items()) out[src] = dst.get<std::string>();
    return out;
}

Json formula_to_json(const Formula& f) {
    Json j;
    j["op"] = kind_name(f.kind());
    if (f.kind() == Kind::Var) j["name"] = f.var_name();
    if (f.arity() > 0) {
        Json args = Json::array();
        for (std::size_t i = 0; i < f.arity(); ++i) args.push_back(formula_to_json(f.child(i)));
        j["args"] = args;
    }
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace topomodal
