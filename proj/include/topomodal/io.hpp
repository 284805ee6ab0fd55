#ifndef TOPOMODAL_IO_HPP
#define TOPOMODAL_IO_HPP

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "topomodal/kripke.hpp"
#include "topomodal/semantics.hpp"
#include "topomodal/topospace.hpp"

namespace topomodal {

using Json = nlohmann::ordered_json;

// Frame file: {"worlds":["w0",...], "R":[["w0","w1"],...], "RD":[...]}.
// RD optional; unknown ids are errors, duplicate pairs ignored.
BiFrame frame_from_json(const Json& j);
Json frame_to_json(const BiFrame& f);

// Space file: {"points":["x0",...], "opens":[[],["x0"],...]}, with optional
// "complete_subbasis": bool.
FiniteSpace space_from_json(const Json& j);
Json space_to_json(const FiniteSpace& x);

// Model file: frame or space file plus {"valuation": {"p": ["w0","w2"]}}.
struct Structure {
    std::variant<BiFrame, FiniteSpace> carrier;

    bool is_frame() const { return std::holds_alternative<BiFrame>(carrier); }
    const BiFrame& frame() const { return std::get<BiFrame>(carrier); }
    const FiniteSpace& space() const { return std::get<FiniteSpace>(carrier); }
    const std::vector<std::string>& ids() const;
};

Structure structure_from_json(const Json& j);
Valuation valuation_from_json(const Json& j, const Structure& s);
Json valuation_to_json(const Valuation& val, const std::vector<std::string>& ids);

// Map file: {"map": {"x0": "w1", ...}}.
std::map<std::string, std::string> map_from_json(const Json& j);

Json formula_to_json(const Formula& f);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace topomodal

#endif  // TOPOMODAL_IO_HPP
