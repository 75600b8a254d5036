#ifndef REEB_IO_HPP
#define REEB_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "reeb/graph.hpp"

namespace reeb {

// DOT subset: `digraph name { a -> b; c; }`. Node statements and single
// edge statements only; parallel statements encode multi-edges. Edge ids
// are assigned e0, e1, ... in statement order.
OrientedMultigraph parse_dot(const std::string& text);
std::string to_dot(const OrientedMultigraph& g, const std::string& name = "g");

// {"vertices":[...], "edges":[{"id","src","dst"}]}, sorted by id.
OrientedMultigraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const OrientedMultigraph& g);

// Dispatch on leading '{' (JSON) vs anything else (DOT).
OrientedMultigraph parse_graph(const std::string& text);

std::string read_file(const std::string& path);

} // namespace reeb

#endif
