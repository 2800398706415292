#include "tourney/certificate.hpp"

#include "tourney/error.hpp"
#include "tourney/format.hpp"

namespace tourney {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedCertificate, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

VertexId read_vertex(const json& j, const char* what) {
  if (!j.is_number_unsigned())
    malformed(std::string(what) + " must be a non-negative integer");
  return j.get<VertexId>();
}

std::vector<VertexId> read_vertices(const json& j, const char* what) {
  if (!j.is_array())
    malformed(std::string(what) + " must be an array");
  std::vector<VertexId> out;
  out.reserve(j.size());
  for (const auto& v : j)
    out.push_back(read_vertex(v, what));
  return out;
}

} // namespace

json to_json(const Certificate& cert) {
  const CycleChain& c = cert.chain;
  json cycles = json::array();
  for (const auto& cycle : c.cycles)
    cycles.push_back(cycle.vertices);
  json insertions = json::array();
  for (const auto& r : c.insertions)
    insertions.push_back({{"x", r.x}, {"y", r.y}, {"z", r.z}});
  json j;
  j["n"] = cert.tournament.order();
  j["king"] = c.king;
  j["A"] = c.context.out_set;
  j["B"] = c.context.in_set;
  j["reid_blocks"] = c.reid.blocks;
  j["a_star"] = c.exit.a_star;
  j["b_star"] = c.exit.b_star;
  j["spine"] = c.spine.vertices;
  j["cycles"] = std::move(cycles);
  j["insertions"] = std::move(insertions);
  j["tournament"] = to_json(cert.tournament);
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  try {
    cert.tournament = tournament_from_json(field(j, "tournament"));
  } catch (const Error& e) {
    malformed(std::string("embedded tournament: ") + e.what());
  }
  if (read_vertex(field(j, "n"), "n") != cert.tournament.order())
    malformed("n disagrees with the embedded tournament");

  CycleChain& c = cert.chain;
  c.king = read_vertex(field(j, "king"), "king");
  c.context.king = c.king;
  c.context.out_set = read_vertices(field(j, "A"), "A");
  c.context.in_set = read_vertices(field(j, "B"), "B");
  const json& blocks = field(j, "reid_blocks");
  if (!blocks.is_array())
    malformed("reid_blocks must be an array");
  for (const auto& b : blocks)
    c.reid.blocks.push_back(read_vertices(b, "reid block"));
  c.exit.a_star = read_vertex(field(j, "a_star"), "a_star");
  c.exit.b_star = read_vertex(field(j, "b_star"), "b_star");
  c.spine.vertices = read_vertices(field(j, "spine"), "spine");
  const json& cycles = field(j, "cycles");
  if (!cycles.is_array())
    malformed("cycles must be an array");
  for (const auto& cy : cycles)
    c.cycles.push_back(Cycle{read_vertices(cy, "cycle")});
  const json& insertions = field(j, "insertions");
  if (!insertions.is_array())
    malformed("insertions must be an array");
  for (const auto& r : insertions)
    c.insertions.push_back({read_vertex(field(r, "x"), "x"), read_vertex(field(r, "y"), "y"),
                            read_vertex(field(r, "z"), "z")});
  return cert;
}

std::string certificate_to_string(const Certificate& cert) { return to_json(cert).dump(2) + "\n"; }

Certificate certificate_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

} // namespace tourney
