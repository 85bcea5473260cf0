#include "geocover/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "geocover/errors.hpp"

namespace geocover {

namespace {

using Json = nlohmann::ordered_json;

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json direction_json(const Direction& d) { return Json::array({d.dx(), d.dy()}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

// Every accessor below runs inside guarded(), which turns nlohmann type and
// key errors into InputError.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("edge must be a pair [u, v]");
  const int u = j[0].get<int>();
  const int v = j[1].get<int>();
  if (u == v) throw InputError("edge with equal endpoints");
  return Edge(u, v);
}

Direction direction_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("direction must be a pair [dx, dy]");
  return Direction(j[0].get<Coord>(), j[1].get<Coord>());
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const Json& e : j) out.push_back(edge_from(e));
  return out;
}

Json cover_body(const Cover& cover) {
  Json j;
  j["pointset_hash"] = cover.pointset_hash;
  Json pieces = Json::array();
  for (const Piece& p : cover.pieces) {
    Json pj;
    pj["kind"] = to_string(p.kind);
    if (const PathPiece* path = p.path()) {
      pj["vertices"] = path->vertices;
    } else {
      pj["edges"] = edges_json(p.matching()->edges);
    }
    if (p.witness) pj["witness"] = direction_json(*p.witness);
    if (p.block >= 0) pj["block"] = p.block;
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  if (!cover.blocks.empty()) j["blocks"] = cover.blocks;
  return j;
}

Cover cover_from(const Json& j) {
  Cover cover;
  cover.pointset_hash = field(j, "pointset_hash").get<std::string>();
  for (const Json& pj : field(j, "pieces")) {
    const PieceKind kind = piece_kind_from_string(field(pj, "kind").get<std::string>());
    std::optional<Direction> witness;
    if (pj.contains("witness")) witness = direction_from(pj.at("witness"));
    Piece piece = is_path_kind(kind) ? make_path_piece(kind, field(pj, "vertices").get<std::vector<int>>(), witness)
                                     : make_matching_piece(kind, edges_from(field(pj, "edges")), witness);
    if (pj.contains("block")) piece.block = pj.at("block").get<int>();
    cover.pieces.push_back(std::move(piece));
  }
  if (j.contains("blocks")) cover.blocks = j.at("blocks").get<std::vector<std::array<int, 6>>>();
  for (const Piece& p : cover.pieces) {
    if (p.block >= static_cast<int>(cover.blocks.size())) throw InputError("piece refers to a missing block");
  }
  return cover;
}

Group group_from(const std::string& s) {
  if (s == "A") return Group::kA;
  if (s == "B") return Group::kB;
  if (s == "C") return Group::kC;
  throw InputError("unknown group label: " + s);
}

}  // namespace

std::string to_json(const PointSet& ps) {
  Json j;
  j["n"] = ps.size();
  Json prov;
  prov["generator"] = ps.provenance.generator;
  prov["params"] = Json::object();
  for (const auto& [k, v] : ps.provenance.params) prov["params"][k] = v;
  prov["seed"] = ps.provenance.seed;
  j["provenance"] = std::move(prov);
  Json pts = Json::array();
  for (const Point& p : ps.points) pts.push_back(Json::array({p.x, p.y}));
  j["points"] = std::move(pts);
  if (ps.groups) {
    Json g = Json::array();
    for (Group x : *ps.groups) g.push_back(std::string(1, group_letter(x)));
    j["groups"] = std::move(g);
  }
  return dump(j);
}

PointSet pointset_from_json(std::string_view text) {
  const Json j = parse(text, "point set");
  return guarded("point set", [&] {
    std::vector<std::pair<Coord, Coord>> coords;
    for (const Json& p : field(j, "points")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw InputError("point must be an integer pair [x, y]");
      }
      coords.emplace_back(p[0].get<Coord>(), p[1].get<Coord>());
    }
    Provenance prov;
    if (j.contains("provenance")) {
      const Json& pj = j.at("provenance");
      prov.generator = pj.value("generator", std::string());
      prov.seed = pj.value("seed", std::uint64_t{0});
      if (pj.contains("params")) {
        for (const auto& [k, v] : pj.at("params").items()) prov.params[k] = v.get<std::string>();
      }
    }
    PointSet ps = make_point_set(coords, std::move(prov));
    if (j.contains("n") && j.at("n").get<int>() != ps.size()) {
      throw InputError("field n = " + std::to_string(j.at("n").get<int>()) + " but " + std::to_string(ps.size()) + " points");
    }
    if (j.contains("groups")) {
      std::vector<Group> groups;
      for (const Json& g : j.at("groups")) groups.push_back(group_from(g.get<std::string>()));
      if (groups.size() != ps.points.size()) throw InputError("groups and points differ in length");
      ps.groups = std::move(groups);
    }
    return ps;
  });
}

std::string to_json(const Cover& cover, const CoverStats* stats, const std::string& algorithm) {
  Json j = cover_body(cover);
  if (stats) {
    Json s;
    if (!algorithm.empty()) s["algorithm"] = algorithm;
    s["directions"] = stats->directions;
    s["pieces_phase1"] = stats->pieces_phase1;
    s["residual_edges"] = stats->residual_edges;
    s["pieces_phase2"] = stats->pieces_phase2;
    s["pieces"] = stats->pieces;
    if (stats->blocks > 0 || stats->leftover_edges > 0) {
      s["blocks"] = stats->blocks;
      s["leftover_edges"] = stats->leftover_edges;
    }
    if (stats->budget > 0) {
      s["budget"] = stats->budget;
      s["alpha"] = stats->alpha;
    }
    if (stats->wall_time_ms) s["wall_time_ms"] = *stats->wall_time_ms;
    j["stats"] = std::move(s);
  }
  return dump(j);
}

Cover cover_from_json(std::string_view text) {
  const Json j = parse(text, "cover");
  return guarded("cover", [&] { return cover_from(j); });
}

std::string to_json(const VerificationReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["n"] = report.n;
  j["total_edges"] = report.total_edges;
  j["covered_edges"] = report.covered_edges;
  j["pieces"] = report.pieces.size();
  Json counts = Json::object();
  for (const auto& [kind, count] : report.counts) counts[to_string(kind)] = count;
  j["counts"] = std::move(counts);
  j["failed_pieces"] = report.failed_pieces();
  Json failures = Json::array();
  for (const PieceVerdict& v : report.pieces) {
    if (v.pass) continue;
    Json f;
    f["index"] = v.index;
    f["failure"] = v.failure;
    if (v.crossing) f["crossing"] = Json::array({edge_json(v.crossing->first), edge_json(v.crossing->second)});
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  j["uncovered"] = edges_json(report.uncovered);
  return dump(j);
}

std::string to_json(const LowerBoundCertificate& cert, const ConditionReport* conditions) {
  Json j;
  j["n"] = cert.n;
  j["e0_edges"] = cert.e0_edges;
  j["cells"] = cert.cells;
  j["max_e0"] = cert.max_e0;
  j["bound"] = cert.bound;
  j["witness"] = cert.witness.vertices;
  j["witness_direction"] = direction_json(cert.witness_direction);
  Json hist = Json::array();
  for (const auto& [value, count] : cert.histogram) hist.push_back(Json::array({value, count}));
  j["histogram"] = std::move(hist);
  if (conditions) {
    Json c;
    c["walk"] = conditions->walk;
    c["no_triangle_cycle"] = conditions->no_triangle_cycle;
    c["no_two_reversed_types"] = conditions->no_two_reversed_types;
    c["pair_limits"] = conditions->pair_limits;
    c["violations"] = conditions->violations;
    j["conditions"] = std::move(c);
  }
  return dump(j);
}

LowerBoundCertificate certificate_from_json(std::string_view text) {
  const Json j = parse(text, "certificate");
  return guarded("certificate", [&] {
    LowerBoundCertificate cert;
    cert.n = field(j, "n").get<int>();
    cert.e0_edges = field(j, "e0_edges").get<std::size_t>();
    cert.cells = field(j, "cells").get<std::size_t>();
    cert.max_e0 = field(j, "max_e0").get<int>();
    cert.bound = field(j, "bound").get<std::size_t>();
    cert.witness.vertices = field(j, "witness").get<std::vector<int>>();
    cert.witness_direction = direction_from(field(j, "witness_direction"));
    for (const Json& h : field(j, "histogram")) cert.histogram[h.at(0).get<int>()] = h.at(1).get<std::size_t>();
    return cert;
  });
}

std::string to_json(const OracleResult& result) {
  Json j;
  j["kind"] = to_string(result.kind);
  j["optimum"] = result.optimum;
  j["candidates"] = result.candidates;
  j["nodes"] = result.nodes;
  j["cover"] = cover_body(result.cover);
  return dump(j);
}

OracleResult oracle_result_from_json(std::string_view text) {
  const Json j = parse(text, "oracle result");
  return guarded("oracle result", [&] {
    OracleResult r;
    r.kind = piece_kind_from_string(field(j, "kind").get<std::string>());
    r.optimum = field(j, "optimum").get<int>();
    r.candidates = field(j, "candidates").get<std::size_t>();
    r.nodes = field(j, "nodes").get<std::uint64_t>();
    r.cover = cover_from(field(j, "cover"));
    return r;
  });
}

std::string to_json(const PackingPlan& plan) {
  Json j;
  j["n"] = plan.n;
  j["blocks"] = plan.blocks;
  j["leftover"] = edges_json(plan.leftover);
  return dump(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace geocover
