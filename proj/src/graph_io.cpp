#include "dichro/graph_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dichro/errors.hpp"

namespace dichro {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidArgument(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Edge> pairs_of(const json& list, const std::string& key) {
  if (!list.is_array()) throw InvalidArgument("\"" + key + "\" must be an array");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& p = list[i];
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) throw InvalidArgument(where + ": expected a pair [u, v]");
    out.emplace_back(as_index(p[0], where), as_index(p[1], where));
  }
  return out;
}

void add_checked(Graph& g, Vertex u, Vertex v, const std::string& where) {
  try {
    g.add_edge(u, v);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(where + " (" + std::to_string(u) + "," + std::to_string(v) + "): " + e.what());
  }
}

GraphInput parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
  if (!doc.contains("n")) throw InvalidArgument("missing \"n\"");
  const std::size_t n = as_index(doc["n"], "n");
  GraphInput in{Graph(n), std::nullopt, std::nullopt};

  const bool has_arcs = doc.contains("arcs");
  if (has_arcs && doc.contains("edges")) throw InvalidArgument("give either \"edges\" or \"arcs\", not both");
  if (has_arcs) {
    const auto arcs = pairs_of(doc["arcs"], "arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i)
      add_checked(in.graph, arcs[i].first, arcs[i].second, "arc " + std::to_string(i));
    std::vector<Arc> list(arcs.begin(), arcs.end());
    in.digraph = Digraph::from_arcs(n, list);
  } else if (doc.contains("edges")) {
    const auto edges = pairs_of(doc["edges"], "edges");
    for (std::size_t i = 0; i < edges.size(); ++i)
      add_checked(in.graph, edges[i].first, edges[i].second, "edge " + std::to_string(i));
  }

  if (doc.contains("weights")) {
    const auto& w = doc["weights"];
    if (!w.is_array() || w.size() != n) throw InvalidArgument("\"weights\" must list one value per vertex");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i].is_string() && !w[i].is_number_integer())
        throw InvalidArgument("weight " + std::to_string(i) + ": expected a \"p/q\" string");
      const std::string s = w[i].is_string() ? w[i].get<std::string>() : std::to_string(w[i].get<long long>());
      try {
        values.push_back(parse_rational(s));
      } catch (const ParseError& e) {
        throw ParseError("weight " + std::to_string(i) + " \"" + s + "\": " + e.what());
      }
      if (sgn(values.back()) < 0) throw InvalidArgument("weight " + std::to_string(i) + " is negative");
    }
    in.weights = Weighting(std::move(values));
  }

  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) throw InvalidArgument("\"labels\" must list one string per vertex");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) throw InvalidArgument("label " + std::to_string(i) + " must be a string");
      in.graph.set_label(i, l[i].get<std::string>());
    }
  }
  return in;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  // Next non-blank line; false at end of text.
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      out = text.substr(pos, end - pos);
      pos = end + 1;
      ++line;
      if (out.find_first_not_of(" \t\r") != std::string_view::npos) return true;
    }
    return false;
  }
};

std::vector<std::size_t> integers(std::string_view s, std::size_t line, std::size_t expected) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::size_t value = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      value = value * 10 + static_cast<std::size_t>(s[i] - '0');
      ++i;
    }
    if (i == start || (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r'))
      throw ParseError("expected a non-negative integer", line, i + 1);
    out.push_back(value);
  }
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " integers, found " + std::to_string(out.size()), line, 1);
  return out;
}

GraphInput parse_edge_list(std::string_view text) {
  LineReader r{text};
  std::string_view line;
  if (!r.next(line)) throw ParseError("empty input", 1, 1);
  const auto header = integers(line, r.line, 2);
  GraphInput in{Graph(header[0]), std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < header[1]; ++i) {
    if (!r.next(line)) throw ParseError("expected " + std::to_string(header[1]) + " edges, found " + std::to_string(i), r.line + 1, 1);
    const auto uv = integers(line, r.line, 2);
    add_checked(in.graph, uv[0], uv[1], "line " + std::to_string(r.line) + ": edge");
  }
  if (r.next(line)) throw ParseError("unexpected content after the edge list", r.line, 1);
  return in;
}

}  // namespace

GraphInput parse_graph(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_edge_list(text);
}

GraphInput read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str());
}

std::string to_json(const Graph& g, const std::optional<Weighting>& weights) {
  json doc;
  doc["n"] = g.order();
  doc["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  if (weights) {
    doc["weights"] = json::array();
    for (const auto& w : weights->values()) doc["weights"].push_back(to_string(w));
  }
  if (g.has_labels()) {
    doc["labels"] = json::array();
    for (Vertex v = 0; v < g.order(); ++v) doc["labels"].push_back(g.label(v));
  }
  return doc.dump();
}

std::string to_json(const Digraph& d) {
  json doc;
  doc["n"] = d.order();
  doc["arcs"] = json::array();
  for (const auto& [a, b] : d.arcs()) doc["arcs"].push_back({a, b});
  return doc.dump();
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace dichro
