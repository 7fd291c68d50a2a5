#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vrhom/closure.hpp"
#include "vrhom/complex.hpp"
#include "vrhom/homology.hpp"
#include "vrhom/relations.hpp"
#include "vrhom/semiuniform.hpp"

namespace vrhom {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct DistanceDocument {
  std::vector<std::string> labels;
  std::vector<double> distances;  // row-major
  friend bool operator==(const DistanceDocument&, const DistanceDocument&) = default;
};

struct GraphDocument {
  std::vector<std::string> labels;
  std::vector<IndexPair> edges;
  bool directed = false;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

struct ClosureDocument {
  std::vector<std::string> labels;
  std::vector<IndexSet> neighborhoods;
  std::vector<std::vector<IndexSet>> covers;
  friend bool operator==(const ClosureDocument&, const ClosureDocument&) = default;
};

struct ComplexDocument {
  std::vector<std::string> labels;
  std::vector<Simplex> maximal;
  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

using SpaceDocument = std::variant<DistanceDocument, GraphDocument, ClosureDocument, ComplexDocument>;

enum class SpaceFormat { csv_dist, edge_list, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Cell {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Cell> split_csv(std::string_view line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    const std::string_view cell = trim(raw);
    const std::size_t offset = cell.empty() ? 0 : static_cast<std::size_t>(cell.data() - raw.data());
    cells.push_back({cell, start + offset + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

/// Non-blank lines with `#` comments removed.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == text.npos ? text.npos : end - start);
    ++number;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    if (!trim(line).empty()) out.push_back({line, number});
    if (end == text.npos) break;
    start = end + 1;
  }
  return out;
}

inline double parse_decimal(const Cell& cell, std::size_t line) {
  double value = 0.0;
  const char* first = cell.text.data();
  const char* last = first + cell.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(ErrorKind::syntax, line, cell.column, "'" + std::string(cell.text) + "' is not a decimal number");
  }
  return value;
}

inline std::string format_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

inline void require_distinct(const std::vector<std::string>& labels, std::size_t line, const std::vector<std::size_t>& columns) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j]) {
        throw ParseError(ErrorKind::duplicate_label, line, columns.empty() ? 0 : columns[i],
                         "label '" + labels[i] + "' appears twice");
      }
}

}  // namespace detail

/// CSV distance matrix: a header row of labels (an empty leading corner cell is
/// allowed), then one row per point: its label followed by the decimal entries.
inline DistanceDocument parse_distance_csv(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::syntax, 1, 1, "empty distance matrix");
  auto header = detail::split_csv(lines[0].text);
  if (header.size() > 1 && header[0].text.empty()) header.erase(header.begin());
  DistanceDocument doc;
  std::vector<std::size_t> header_columns;
  for (const auto& c : header) {
    if (c.text.empty()) throw ParseError(ErrorKind::syntax, lines[0].number, c.column, "empty label");
    doc.labels.emplace_back(c.text);
    header_columns.push_back(c.column);
  }
  detail::require_distinct(doc.labels, lines[0].number, header_columns);
  const std::size_t n = doc.labels.size();
  if (lines.size() != n + 1) {
    const std::size_t at = lines.size() > n + 1 ? lines[n + 1].number : lines.back().number;
    throw ParseError(ErrorKind::syntax, at, 1,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  doc.distances.assign(n * n, 0.0);
  std::vector<std::vector<detail::Cell>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    auto cells = detail::split_csv(line.text);
    if (cells.size() != n + 1) {
      throw ParseError(ErrorKind::syntax, line.number, 1,
                       "expected a label and " + std::to_string(n) + " entries, found " + std::to_string(cells.size()) + " cells");
    }
    if (cells[0].text != doc.labels[i]) {
      throw ParseError(ErrorKind::unknown_label, line.number, cells[0].column,
                       "row label '" + std::string(cells[0].text) + "' does not match column label '" + doc.labels[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = detail::parse_decimal(cells[j + 1], line.number);
      if (v < 0.0) throw ParseError(ErrorKind::negative_distance, line.number, cells[j + 1].column, "negative distance");
      doc.distances[i * n + j] = v;
    }
    rows.push_back(std::move(cells));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.distances[i * n + i] != 0.0) {
      throw ParseError(ErrorKind::nonzero_diagonal, lines[i + 1].number, rows[i][i + 1].column,
                       "nonzero diagonal: d(" + doc.labels[i] + ", " + doc.labels[i] + ") = " +
                           std::string(rows[i][i + 1].text));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (doc.distances[i * n + j] != doc.distances[j * n + i]) {
        throw ParseError(ErrorKind::asymmetric_matrix, lines[i + 1].number, rows[i][j + 1].column,
                         "asymmetric matrix: d(" + doc.labels[i] + ", " + doc.labels[j] + ") != d(" + doc.labels[j] +
                             ", " + doc.labels[i] + ")");
      }
    }
  }
  return doc;
}

/// Edge list: whitespace-separated label pairs, `#` comments, `a -> b` for
/// directed edges, and single labels for isolated points. Labels are indexed in
/// order of first appearance. Mixing directed and undirected lines is an error.
inline GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  std::optional<bool> directed;
  auto index_of = [&](std::string_view label) {
    for (std::size_t i = 0; i < doc.labels.size(); ++i)
      if (doc.labels[i] == label) return i;
    doc.labels.emplace_back(label);
    return doc.labels.size() - 1;
  };
  for (const auto& line : detail::content_lines(text)) {
    std::vector<detail::Cell> tokens;
    std::size_t pos = 0;
    while (pos < line.text.size()) {
      while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
      const std::size_t start = pos;
      while (pos < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
      if (pos > start) tokens.push_back({line.text.substr(start, pos - start), start + 1});
    }
    bool arrow = false;
    if (tokens.size() == 3 && tokens[1].text == "->") {
      arrow = true;
      tokens.erase(tokens.begin() + 1);
    }
    for (const auto& t : tokens) {
      if (t.text == "->") throw ParseError(ErrorKind::syntax, line.number, t.column, "misplaced '->'");
    }
    if (tokens.size() == 1) {
      index_of(tokens[0].text);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(ErrorKind::syntax, line.number, tokens.empty() ? 1 : tokens[0].column,
                       "expected 'a b', 'a -> b', or a single label");
    }
    if (directed && *directed != arrow) {
      throw ParseError(ErrorKind::syntax, line.number, tokens[0].column, "mixes directed and undirected edges");
    }
    directed = arrow;
    const std::size_t a = index_of(tokens[0].text);
    const std::size_t b = index_of(tokens[1].text);
    doc.edges.emplace_back(a, b);
  }
  doc.directed = directed.value_or(false);
  if (doc.labels.empty()) throw ParseError(ErrorKind::syntax, 1, 1, "edge list names no points");
  return doc;
}

namespace detail {

[[noreturn]] inline void json_error(ErrorKind kind, const std::string& pointer, const std::string& message) {
  // JSON values carry no source positions; the JSON pointer locates the value.
  throw ParseError(kind, 0, 0, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

inline std::vector<std::string> json_labels(const Json& j) {
  if (!j.contains("labels") || !j["labels"].is_array()) json_error(ErrorKind::syntax, "/labels", "missing label array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j["labels"].size(); ++i) {
    const auto& v = j["labels"][i];
    if (!v.is_string()) json_error(ErrorKind::syntax, "/labels/" + std::to_string(i), "labels must be strings");
    const std::string s = v.get<std::string>();
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == s) json_error(ErrorKind::duplicate_label, "/labels/" + std::to_string(i), "label '" + s + "' appears twice");
    labels.push_back(s);
  }
  if (labels.empty()) json_error(ErrorKind::syntax, "/labels", "a space needs at least one point");
  return labels;
}

inline Index json_point(const Json& v, const std::vector<std::string>& labels, const std::string& pointer) {
  if (v.is_string()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == v.get<std::string>()) return i;
    json_error(ErrorKind::unknown_label, pointer, "unknown label '" + v.get<std::string>() + "'");
  }
  if (v.is_number_unsigned()) {
    const auto i = v.get<std::size_t>();
    if (i >= labels.size()) json_error(ErrorKind::index_out_of_range, pointer, "index " + std::to_string(i) + " out of range");
    return i;
  }
  json_error(ErrorKind::syntax, pointer, "expected a label or a point index");
}

inline IndexSet json_point_set(const Json& v, const std::vector<std::string>& labels, const std::string& pointer) {
  if (!v.is_array()) json_error(ErrorKind::syntax, pointer, "expected an array of points");
  IndexSet out;
  for (std::size_t i = 0; i < v.size(); ++i) out.insert(json_point(v[i], labels, pointer + "/" + std::to_string(i)));
  return out;
}

inline Json json_labelled(const std::vector<std::string>& labels, const IndexSet& s) {
  Json out = Json::array();
  for (Index i : s) out.push_back(labels.at(i));
  return out;
}

}  // namespace detail

/// Cover list from a JSON array of label arrays.
inline std::vector<IndexSet> parse_cover_json(const Json& j, const std::vector<std::string>& labels,
                                              const std::string& pointer = "") {
  if (!j.is_array()) detail::json_error(ErrorKind::syntax, pointer, "a cover is an array of point arrays");
  std::vector<IndexSet> sets;
  for (std::size_t i = 0; i < j.size(); ++i) sets.push_back(detail::json_point_set(j[i], labels, pointer + "/" + std::to_string(i)));
  return sets;
}

inline SpaceDocument parse_space_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(ErrorKind::syntax, line, column, e.what());
  }
  if (!j.is_object()) detail::json_error(ErrorKind::syntax, "", "expected a JSON object");
  if (j.contains("schema_version") && j["schema_version"] != std::string(kSchemaVersion)) {
    detail::json_error(ErrorKind::syntax, "/schema_version", "unsupported schema version");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) detail::json_error(ErrorKind::syntax, "/kind", "missing document kind");
  const std::string kind = j["kind"].get<std::string>();
  const auto labels = detail::json_labels(j);
  const std::size_t n = labels.size();

  if (kind == "distance") {
    DistanceDocument doc{labels, std::vector<double>(n * n, 0.0)};
    const auto& rows = j.value("distances", Json());
    if (!rows.is_array() || rows.size() != n) detail::json_error(ErrorKind::syntax, "/distances", "expected an n×n array");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_ptr = "/distances/" + std::to_string(i);
      if (!rows[i].is_array() || rows[i].size() != n) detail::json_error(ErrorKind::syntax, row_ptr, "expected n entries");
      for (std::size_t k = 0; k < n; ++k) {
        const auto& v = rows[i][k];
        const std::string ptr = row_ptr + "/" + std::to_string(k);
        double value = 0.0;
        if (v.is_number()) {
          value = v.get<double>();
        } else if (v.is_string()) {
          const auto s = v.get<std::string>();
          value = detail::parse_decimal({s, 1}, 1);
        } else {
          detail::json_error(ErrorKind::syntax, ptr, "expected a number");
        }
        if (value < 0.0) detail::json_error(ErrorKind::negative_distance, ptr, "negative distance");
        doc.distances[i * n + k] = value;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (doc.distances[i * n + i] != 0.0) {
        detail::json_error(ErrorKind::nonzero_diagonal, "/distances/" + std::to_string(i) + "/" + std::to_string(i), "nonzero diagonal");
      }
      for (std::size_t k = 0; k < i; ++k)
        if (doc.distances[i * n + k] != doc.distances[k * n + i]) {
          detail::json_error(ErrorKind::asymmetric_matrix, "/distances/" + std::to_string(i) + "/" + std::to_string(k), "asymmetric matrix");
        }
    }
    return doc;
  }
  if (kind == "graph") {
    GraphDocument doc{labels, {}, j.value("directed", false)};
    const auto& edges = j.value("edges", Json::array());
    if (!edges.is_array()) detail::json_error(ErrorKind::syntax, "/edges", "expected an array of pairs");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string ptr = "/edges/" + std::to_string(e);
      if (!edges[e].is_array() || edges[e].size() != 2) detail::json_error(ErrorKind::syntax, ptr, "an edge is a pair");
      doc.edges.emplace_back(detail::json_point(edges[e][0], labels, ptr + "/0"), detail::json_point(edges[e][1], labels, ptr + "/1"));
    }
    return doc;
  }
  if (kind == "closure") {
    ClosureDocument doc{labels, std::vector<IndexSet>(n), {}};
    const auto& nb = j.value("neighborhoods", Json());
    if (!nb.is_array() || nb.size() != n) detail::json_error(ErrorKind::syntax, "/neighborhoods", "one neighborhood per point required");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string ptr = "/neighborhoods/" + std::to_string(i);
      doc.neighborhoods[i] = detail::json_point_set(nb[i], labels, ptr);
      if (!doc.neighborhoods[i].contains(i)) {
        detail::json_error(ErrorKind::invalid_argument, ptr, "neighborhood of '" + labels[i] + "' must contain the point");
      }
    }
    if (j.contains("covers")) {
      const auto& covers = j["covers"];
      if (!covers.is_array()) detail::json_error(ErrorKind::syntax, "/covers", "expected an array of covers");
      for (std::size_t c = 0; c < covers.size(); ++c)
        doc.covers.push_back(parse_cover_json(covers[c], labels, "/covers/" + std::to_string(c)));
    }
    return doc;
  }
  if (kind == "complex") {
    ComplexDocument doc{labels, {}};
    const auto& maximal = j.value("maximal_simplices", Json());
    if (!maximal.is_array()) detail::json_error(ErrorKind::syntax, "/maximal_simplices", "expected an array of simplices");
    for (std::size_t s = 0; s < maximal.size(); ++s) {
      const std::string ptr = "/maximal_simplices/" + std::to_string(s);
      auto points = detail::json_point_set(maximal[s], labels, ptr);
      if (points.empty()) detail::json_error(ErrorKind::syntax, ptr, "empty simplex");
      doc.maximal.emplace_back(std::vector<Index>(points.begin(), points.end()));
    }
    return doc;
  }
  detail::json_error(ErrorKind::syntax, "/kind", "unknown kind '" + kind + "'");
}

inline SpaceDocument parse_space(std::string_view text, SpaceFormat format) {
  switch (format) {
    case SpaceFormat::csv_dist: return parse_distance_csv(text);
    case SpaceFormat::edge_list: return parse_edge_list(text);
    case SpaceFormat::json: return parse_space_json(text);
  }
  throw Error(ErrorKind::invalid_argument, "unknown format");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpaceDocument parse_space_file(const std::string& path, SpaceFormat format) {
  return parse_space(read_file(path), format);
}

// ---- serialization --------------------------------------------------------

inline std::string serialize_distance_csv(const DistanceDocument& doc) {
  std::string out;
  const std::size_t n = doc.labels.size();
  for (std::size_t i = 0; i < n; ++i) out += (i ? "," : "") + doc.labels[i];
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out += doc.labels[i];
    for (std::size_t j = 0; j < n; ++j) out += "," + detail::format_decimal(doc.distances[i * n + j]);
    out += "\n";
  }
  return out;
}

/// Isolated points are listed on their own lines so that label order survives.
inline std::string serialize_edge_list(const GraphDocument& doc) {
  std::string out;
  for (const auto& label : doc.labels) out += label + "\n";
  for (auto [a, b] : doc.edges) out += doc.labels.at(a) + (doc.directed ? " -> " : " ") + doc.labels.at(b) + "\n";
  return out;
}

inline Json to_json(const SpaceDocument& document) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  std::visit(
      [&](const auto& doc) {
        using T = std::decay_t<decltype(doc)>;
        if constexpr (std::is_same_v<T, DistanceDocument>) {
          j["kind"] = "distance";
          j["labels"] = doc.labels;
          Json rows = Json::array();
          const std::size_t n = doc.labels.size();
          for (std::size_t i = 0; i < n; ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(doc.distances[i * n + k]);
            rows.push_back(std::move(row));
          }
          j["distances"] = std::move(rows);
        } else if constexpr (std::is_same_v<T, GraphDocument>) {
          j["kind"] = "graph";
          j["labels"] = doc.labels;
          j["directed"] = doc.directed;
          Json edges = Json::array();
          for (auto [a, b] : doc.edges) edges.push_back(Json::array({doc.labels.at(a), doc.labels.at(b)}));
          j["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<T, ClosureDocument>) {
          j["kind"] = "closure";
          j["labels"] = doc.labels;
          Json nb = Json::array();
          for (const auto& s : doc.neighborhoods) nb.push_back(detail::json_labelled(doc.labels, s));
          j["neighborhoods"] = std::move(nb);
          Json covers = Json::array();
          for (const auto& cover : doc.covers) {
            Json c = Json::array();
            for (const auto& s : cover) c.push_back(detail::json_labelled(doc.labels, s));
            covers.push_back(std::move(c));
          }
          j["covers"] = std::move(covers);
        } else {
          j["kind"] = "complex";
          j["labels"] = doc.labels;
          Json maximal = Json::array();
          for (const auto& s : doc.maximal) maximal.push_back(detail::json_labelled(doc.labels, IndexSet(s.vertices().begin(), s.vertices().end())));
          j["maximal_simplices"] = std::move(maximal);
        }
      },
      document);
  return j;
}

inline std::string serialize_space(const SpaceDocument& doc, SpaceFormat format) {
  switch (format) {
    case SpaceFormat::csv_dist: return serialize_distance_csv(std::get<DistanceDocument>(doc));
    case SpaceFormat::edge_list: return serialize_edge_list(std::get<GraphDocument>(doc));
    case SpaceFormat::json: return to_json(doc).dump(2) + "\n";
  }
  throw Error(ErrorKind::invalid_argument, "unknown format");
}

// ---- documents to library values --------------------------------------------

inline SemiPseudometric to_metric(const DistanceDocument& doc) {
  return SemiPseudometric(make_space(doc.labels), doc.distances);
}

inline Relation to_relation(const GraphDocument& doc) {
  return graph_relation(doc.edges, make_space(doc.labels), doc.directed);
}

inline AdditiveClosure to_closure(const ClosureDocument& doc) {
  return AdditiveClosure(make_space(doc.labels), doc.neighborhoods);
}

inline SimplicialComplex to_complex(const ComplexDocument& doc, std::optional<std::size_t> max_dim = std::nullopt) {
  return SimplicialComplex::from_maximal(make_space(doc.labels), doc.maximal, max_dim);
}

// ---- results -----------------------------------------------------------------

inline Json chain_json(const Chain& c, const FiniteSpace& space) {
  Json out = Json::array();
  for (const auto& term : c) {
    Json vertices = Json::array();
    for (Index v : term.simplex.vertices()) vertices.push_back(space.label(v));
    out.push_back(Json{{"simplex", std::move(vertices)}, {"coefficient", term.coefficient.str()}});
  }
  return out;
}

/// Betti numbers, torsion and (optional) generators for dimensions < dims.
inline Json to_json(const HomologyResult& h, std::size_t dims, const FiniteSpace* space = nullptr) {
  Json j;
  j["coefficients"] = h.coefficients.to_string();
  j["reduced"] = h.reduced;
  Json betti = Json::array(), torsion = Json::array();
  const std::size_t n = std::min(dims, h.groups.size());
  bool any_generators = false;
  for (std::size_t k = 0; k < n; ++k) {
    betti.push_back(h.groups[k].betti);
    Json t = Json::array();
    for (const auto& v : h.groups[k].torsion) t.push_back(v.str());
    torsion.push_back(std::move(t));
    any_generators = any_generators || !h.groups[k].generators.empty();
  }
  j["betti"] = std::move(betti);
  j["torsion"] = std::move(torsion);
  if (any_generators && space) {
    Json gens = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      Json layer = Json::array();
      for (const auto& c : h.groups[k].generators) layer.push_back(chain_json(c, *space));
      gens.push_back(std::move(layer));
    }
    j["generators"] = std::move(gens);
  }
  return j;
}

inline Json to_json(const AxiomVerdict& v) {
  return Json{{"axiom", v.axiom}, {"instance", v.instance}, {"pass", v.pass}, {"witness", v.witness}, {"notes", v.notes}};
}

/// Envelope shared by every CLI result.
inline Json result_document(const std::string& command, Json request) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "vrhom";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["request"] = std::move(request);
  return j;
}

}  // namespace vrhom
