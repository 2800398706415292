#pragma once

#include "tourney/tournament.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tourney {

enum class ExportFormat { Text, Dot, Json };

/// Canonical text format: the decimal order n on the first line, then one
/// "u v" line per arc (u -> v) sorted ascending by u, then v; LF endings.
std::string to_text(const Tournament& t);

/// Parses the text format into an edge list. Arc lines may come in any
/// order; structural problems (missing or duplicate pairs) are left for
/// from_edge_list. Throws ParseError on malformed input.
EdgeList parse_text(std::string_view text);

Tournament tournament_from_text(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]} with edges in text-format order.
nlohmann::json to_json(const Tournament& t);
Tournament tournament_from_json(const nlohmann::json& j);

/// One digraph with an edge statement per arc. Arcs listed in `highlight`
/// are drawn bold red.
std::string to_dot(const Tournament& t, const std::vector<std::pair<VertexId, VertexId>>& highlight = {});

std::string export_tournament(const Tournament& t, ExportFormat format);

} // namespace tourney
