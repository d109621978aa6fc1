#include "toppling/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace toppling {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what, line);
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

PointedGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::Parse, "graph JSON needs \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  const int q = j.value("q", 1);
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error(ErrorKind::Parse, "edge must be [u, v] or [u, v, mult]");
    Edge ed{e[0].get<int>() - 1, e[1].get<int>() - 1, e.size() == 3 ? e[2].get<int>() : 1};
    edges.push_back(ed);
  }
  return build_graph(n, edges, q - 1);
}

PointedGraph parse_graph_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, q = 1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) parse_error(lineno, "expected 'v <n>'");
      if (n >= 0) parse_error(lineno, "duplicate 'v' line");
      n = parse_int(tok[1], lineno);
    } else if (tok[0] == "q") {
      if (tok.size() != 2) parse_error(lineno, "expected 'q <vertex>'");
      q = parse_int(tok[1], lineno);
    } else if (tok[0] == "e") {
      if (tok.size() != 3 && tok.size() != 4) parse_error(lineno, "expected 'e <u> <v> [mult]'");
      Edge e{parse_int(tok[1], lineno) - 1, parse_int(tok[2], lineno) - 1,
             tok.size() == 4 ? parse_int(tok[3], lineno) : 1};
      edges.push_back(e);
      edge_lines.push_back(lineno);
    } else {
      parse_error(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (n < 0) throw Error(ErrorKind::Parse, "missing 'v <n>' line");
  // Report per-edge problems against their own line.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorKind::BadVertex, "line " + std::to_string(edge_lines[i]) + ": vertex out of range",
                  edge_lines[i]);
    if (e.u == e.v)
      throw Error(ErrorKind::LoopEdge, "line " + std::to_string(edge_lines[i]) + ": loop edge", edge_lines[i]);
    if (e.mult < 1)
      throw Error(ErrorKind::BadMultiplicity, "line " + std::to_string(edge_lines[i]) + ": multiplicity < 1",
                  edge_lines[i]);
  }
  return build_graph(n, edges, q - 1);
}

}  // namespace

PointedGraph parse_graph(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_lines(text);
  }
  throw Error(ErrorKind::Parse, "empty graph description");
}

PointedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const PointedGraph& g) {
  std::string out = "v " + std::to_string(g.n()) + "\nq " + std::to_string(g.q() + 1) + "\n";
  for (auto [u, v] : g.adjacent_pairs()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1);
    if (g.mult(u, v) != 1) out += " " + std::to_string(g.mult(u, v));
    out += "\n";
  }
  return out;
}

std::string format_graph_json(const PointedGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["q"] = g.q() + 1;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.adjacent_pairs()) j["edges"].push_back({u + 1, v + 1, g.mult(u, v)});
  return j.dump();
}

ConnectedFlag parse_flag_literal(const PointedGraph& g, const std::string& text) {
  std::vector<VertexSet> chain;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::Parse, "flag literal, column " + std::to_string(i + 1) + ": " + what,
                static_cast<int>(i) + 1);
  };
  skip();
  while (true) {
    if (i >= text.size() || text[i] != '{') fail("expected '{'");
    ++i;
    VertexSet s = 0;
    skip();
    if (i < text.size() && text[i] == '}') fail("empty set");
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a vertex number");
      const int v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > g.n()) throw Error(ErrorKind::BadVertex, "vertex " + std::to_string(v) + " out of range");
      s |= singleton(v - 1);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      fail("expected ',' or '}'");
    }
    chain.push_back(s);
    skip();
    if (i == text.size()) break;
    if (text[i] != '<') fail("expected '<'");
    ++i;
    skip();
  }
  return validate_flag(g, chain);
}

std::string format_flag(const ConnectedFlag& f) {
  std::string out;
  for (std::size_t l = 0; l < f.chain.size(); ++l) {
    if (l) out += " < ";
    out += "{";
    bool first = true;
    for (int v : members(f.chain[l])) {
      if (!first) out += ",";
      out += std::to_string(v + 1);
      first = false;
    }
    out += "}";
  }
  return out;
}

Divisor parse_divisor(const std::string& text, int n) {
  std::istringstream in(text);
  Divisor d;
  for (std::string t; in >> t;) d.push_back(parse_int(t, 1));
  if (static_cast<int>(d.size()) != n)
    throw Error(ErrorKind::Parse, "divisor needs " + std::to_string(n) + " entries, got " + std::to_string(d.size()));
  return d;
}

std::string format_divisor(const Divisor& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(d[i]);
  }
  return out;
}

std::string betti_tsv(const BettiTable& t, Grading grading) {
  std::string out;
  if (grading == Grading::Z) {
    for (const auto& [key, count] : t.z)
      out += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" + std::to_string(count) + "\n";
  } else {
    for (const auto& [key, count] : t.pic)
      out += std::to_string(key.first) + "\t" + format_divisor(key.second) + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::string betti_json(const BettiTable& t, Grading grading) {
  nlohmann::json j = nlohmann::json::array();
  if (grading == Grading::Z) {
    for (const auto& [key, count] : t.z) j.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
  } else {
    for (const auto& [key, count] : t.pic) j.push_back({{"i", key.first}, {"class", key.second}, {"count", count}});
  }
  return j.dump(2) + "\n";
}

std::string orientation_dot(const PointedGraph& g, const PartialOrientation& o, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int v = 0; v < g.n(); ++v) {
    out += "  " + std::to_string(v + 1);
    if (v == g.q()) out += " [shape=doublecircle]";
    out += ";\n";
  }
  const auto& pairs = g.adjacent_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    const EdgeState s = o.state[i];
    const int a = s == EdgeState::Backward ? v : u;
    const int b = s == EdgeState::Backward ? u : v;
    for (int r = 0; r < g.mult(u, v); ++r)
      out += "  " + std::to_string(a + 1) + " -> " + std::to_string(b + 1) +
             (s == EdgeState::Unoriented ? " [dir=none]" : "") + ";\n";
  }
  return out + "}\n";
}

}  // namespace toppling
