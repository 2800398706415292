#include "tourney/format.hpp"

#include "tourney/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tourney {

std::string to_text(const Tournament& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& [u, v] : t.edge_list().edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Whitespace-separated unsigned decimal fields.
std::vector<std::size_t> parse_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    if (i == line.size())
      break;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || consumed == 0 ||
        (i + consumed < line.size() && line[i + consumed] != ' ' && line[i + consumed] != '\t'))
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected unsigned integers, got '" +
                                        std::string(line) + "'");
    fields.push_back(value);
    i += consumed;
  }
  return fields;
}

} // namespace

EdgeList parse_text(std::string_view text) {
  EdgeList list;
  bool have_header = false;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    const auto fields = parse_fields(line, line_no);
    if (fields.empty())
      continue;
    if (!have_header) {
      if (fields.size() != 1)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": header must be the single order n");
      list.n = fields[0];
      have_header = true;
      continue;
    }
    if (fields.size() != 2)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": arc lines are 'u v'");
    list.edges.emplace_back(fields[0], fields[1]);
  }
  if (!have_header)
    throw Error(Errc::ParseError, "empty input");
  return list;
}

Tournament tournament_from_text(std::string_view text) { return from_edge_list(parse_text(text)); }

nlohmann::json to_json(const Tournament& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : t.edge_list().edges)
    edges.push_back({u, v});
  return {{"n", t.order()}, {"edges", std::move(edges)}};
}

Tournament tournament_from_json(const nlohmann::json& j) {
  try {
    EdgeList list;
    list.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw Error(Errc::ParseError, "edge entries must be [u, v] with non-negative integers");
      list.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return from_edge_list(list);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, std::string("tournament json: ") + ex.what());
  }
}

std::string to_dot(const Tournament& t, const std::vector<std::pair<VertexId, VertexId>>& highlight) {
  std::ostringstream out;
  out << "digraph tournament {\n";
  for (VertexId v = 0; v < t.order(); ++v)
    out << "  " << v << ";\n";
  for (const auto& arc : t.edge_list().edges) {
    out << "  " << arc.first << " -> " << arc.second;
    if (std::find(highlight.begin(), highlight.end(), arc) != highlight.end())
      out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_tournament(const Tournament& t, ExportFormat format) {
  switch (format) {
  case ExportFormat::Text: return to_text(t);
  case ExportFormat::Dot: return to_dot(t);
  case ExportFormat::Json: return to_json(t).dump() + "\n";
  }
  return {};
}

} // namespace tourney
