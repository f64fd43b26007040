#include "matchpow/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace matchpow {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ParsedIdeal parse_ideal_text(const std::string& text) {
  std::vector<std::string> var_order;
  std::map<std::string, int> var_index;
  bool fixed_vars = false;
  auto var_id = [&](const std::string& name, int line_no) -> int {
    auto it = var_index.find(name);
    if (it != var_index.end()) return it->second;
    if (fixed_vars)
      throw ParseError("line " + std::to_string(line_no) + ": unknown variable '" + name +
                       "' (not in the # vars: header)");
    int id = static_cast<int>(var_order.size());
    var_order.push_back(name);
    var_index[name] = id;
    return id;
  };

  struct RawGen {
    std::vector<std::pair<int, int>> factors;  // (var, exp)
    bool unit = false;
  };
  std::vector<RawGen> raw;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string rest = trim(t.substr(1));
      if (rest.rfind("vars:", 0) == 0) {
        std::istringstream vs(rest.substr(5));
        std::string name;
        while (vs >> name) var_id(name, line_no);
        fixed_vars = true;
      }
      continue;
    }
    RawGen g;
    if (t == "1") {
      g.unit = true;
      raw.push_back(g);
      continue;
    }
    for (const std::string& tok_raw : split(t, '*')) {
      std::string tok = trim(tok_raw);
      if (tok.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty factor");
      auto caret = tok.find('^');
      std::string name = trim(caret == std::string::npos ? tok : tok.substr(0, caret));
      int exp = 1;
      if (caret != std::string::npos) {
        std::string es = trim(tok.substr(caret + 1));
        try {
          size_t used = 0;
          exp = std::stoi(es, &used);
          if (used != es.size()) throw std::invalid_argument(es);
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(line_no) + ": bad exponent '" + es + "'");
        }
        if (exp < 0)
          throw ParseError("line " + std::to_string(line_no) + ": negative exponent");
      }
      if (name.empty())
        throw ParseError("line " + std::to_string(line_no) + ": missing variable name");
      g.factors.push_back({var_id(name, line_no), exp});
    }
    raw.push_back(std::move(g));
  }

  if (var_order.empty()) var_order.push_back("x1");  // zero ideal placeholder ambient
  auto amb = make_ambient(var_order);
  std::vector<Monomial> gens;
  for (const auto& g : raw) {
    std::vector<int> e(var_order.size(), 0);
    for (auto [v, x] : g.factors) e[static_cast<size_t>(v)] += x;
    gens.push_back(Monomial(std::move(e)));
  }
  bool changed = false;
  MonomialIdeal I = minimize_generators(amb, std::move(gens), &changed);
  return {std::move(I), changed};
}

ParsedIdeal parse_ideal_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw ParseError("ideal JSON needs fields 'vars' and 'gens'");
  std::vector<std::string> vars;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) throw ParseError("'vars' entries must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (vars.empty()) throw ParseError("'vars' must be nonempty");
  auto amb = make_ambient(vars);
  std::vector<Monomial> gens;
  int row = 0;
  for (const auto& g : j.at("gens")) {
    ++row;
    if (!g.is_array() || g.size() != vars.size())
      throw ParseError("gens[" + std::to_string(row - 1) + "] must list " +
                       std::to_string(vars.size()) + " exponents");
    std::vector<int> e;
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<long>() < 0)
        throw ParseError("gens[" + std::to_string(row - 1) + "]: exponents are nonnegative integers");
      e.push_back(x.get<int>());
    }
    gens.push_back(Monomial(std::move(e)));
  }
  bool changed = false;
  MonomialIdeal I = minimize_generators(amb, std::move(gens), &changed);
  return {std::move(I), changed};
}

ParsedIdeal parse_ideal_auto(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return parse_ideal_json(j);
  }
  return parse_ideal_text(text);
}

std::string ideal_to_text(const MonomialIdeal& I) {
  std::string out = "# vars:";
  for (const auto& v : I.ambient()->names()) out += " " + v;
  out += "\n";
  for (const auto& g : I.gens()) out += to_string(g, *I.ambient()) + "\n";
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& I) {
  nlohmann::json j;
  j["vars"] = I.ambient()->names();
  auto gens = nlohmann::json::array();
  for (const auto& g : I.gens()) gens.push_back(g.exps);
  j["gens"] = gens;
  return j;
}

namespace {

int resolve_vertex(const nlohmann::json& v, const std::map<std::string, int>& index, int n) {
  if (v.is_string()) {
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw ParseError("unknown vertex '" + v.get<std::string>() + "'");
    return it->second;
  }
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= n) throw ParseError("vertex index out of range: " + std::to_string(i));
    return i;
  }
  throw ParseError("edge endpoints must be vertex names or indices");
}

}  // namespace

ParsedGraph parse_graph_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs fields 'vertices' and 'edges'");
  std::vector<std::string> names;
  for (const auto& v : j.at("vertices"))
    names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  int n = static_cast<int>(names.size());

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs");
    edges.push_back({resolve_vertex(e[0], index, n), resolve_vertex(e[1], index, n)});
  }

  bool directed = j.value("directed", false);
  ParsedGraph out{ParsedGraph::Kind::simple, std::nullopt, std::nullopt, std::nullopt};

  if (directed) {
    std::vector<long> w(static_cast<size_t>(n), 1);
    if (j.contains("weights"))
      for (auto it = j.at("weights").begin(); it != j.at("weights").end(); ++it) {
        auto f = index.find(it.key());
        if (f == index.end()) throw ParseError("weights: unknown vertex '" + it.key() + "'");
        if (!it.value().is_number_integer() || it.value().get<long>() < 1)
          throw ParseError("weights must be integers >= 1");
        w[static_cast<size_t>(f->second)] = it.value().get<long>();
      }
    out.kind = ParsedGraph::Kind::weighted_oriented;
    out.oriented = WeightedOrientedGraph(names, edges, w);
    return out;
  }

  if (j.contains("edge_weights")) {
    SimpleGraph G(names, edges);
    std::vector<long> ew(G.edges().size(), 1);
    for (auto it = j.at("edge_weights").begin(); it != j.at("edge_weights").end(); ++it) {
      auto dash = it.key().find('-');
      if (dash == std::string::npos)
        throw ParseError("edge_weights keys look like 'u-v': " + it.key());
      auto fu = index.find(it.key().substr(0, dash));
      auto fv = index.find(it.key().substr(dash + 1));
      if (fu == index.end() || fv == index.end())
        throw ParseError("edge_weights: unknown endpoint in '" + it.key() + "'");
      int u = std::min(fu->second, fv->second), v = std::max(fu->second, fv->second);
      auto pos = std::lower_bound(G.edges().begin(), G.edges().end(), std::make_pair(u, v));
      if (pos == G.edges().end() || *pos != std::make_pair(u, v))
        throw ParseError("edge_weights: no such edge '" + it.key() + "'");
      if (!it.value().is_number_integer() || it.value().get<long>() < 1)
        throw ParseError("edge weights must be integers >= 1");
      ew[static_cast<size_t>(pos - G.edges().begin())] = it.value().get<long>();
    }
    out.kind = ParsedGraph::Kind::edge_weighted;
    out.edge_weighted = EdgeWeightedGraph(std::move(G), std::move(ew));
    return out;
  }

  out.kind = ParsedGraph::Kind::simple;
  out.simple = SimpleGraph(names, edges);
  return out;
}

ParsedGraph parse_graph_auto(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  return parse_graph_json(j);
}

MonomialIdeal ParsedGraph::ideal() const {
  switch (kind) {
    case Kind::simple:
      return edge_ideal(*simple);
    case Kind::weighted_oriented:
      return oriented_edge_ideal(*oriented);
    case Kind::edge_weighted:
      return edge_weighted_ideal(*edge_weighted);
  }
  throw Error("unreachable");
}

nlohmann::json graph_to_json(const SimpleGraph& G) {
  nlohmann::json j;
  j["vertices"] = G.vertex_names();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : G.edges())
    edges.push_back({G.vertex_names()[static_cast<size_t>(u)],
                     G.vertex_names()[static_cast<size_t>(v)]});
  j["edges"] = edges;
  j["directed"] = false;
  return j;
}

nlohmann::json graph_to_json(const WeightedOrientedGraph& D) {
  nlohmann::json j;
  j["vertices"] = D.vertex_names();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : D.arcs())
    edges.push_back({D.vertex_names()[static_cast<size_t>(u)],
                     D.vertex_names()[static_cast<size_t>(v)]});
  j["edges"] = edges;
  j["directed"] = true;
  nlohmann::json w = nlohmann::json::object();
  for (int v = 0; v < D.n(); ++v) w[D.vertex_names()[static_cast<size_t>(v)]] = D.weight(v);
  j["weights"] = w;
  return j;
}

std::string betti_diagram(const BettiTable& t) {
  int pd = t.pd_ideal();
  // rows are the "slopes" r = j - i, as in Macaulay2's betti display
  int rmin = INT32_MAX, rmax = 0;
  for (const auto& [key, dim] : t.graded) {
    if (dim <= 0) continue;
    rmin = std::min(rmin, key.second - key.first);
    rmax = std::max(rmax, key.second - key.first);
  }
  if (t.graded.empty()) return "(empty table)\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (int i = 0; i <= pd; ++i) head.push_back(std::to_string(i));
  cells.push_back(head);
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= pd; ++i) totals.push_back(std::to_string(t.total(i)));
  cells.push_back(totals);
  for (int r = rmin; r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pd; ++i) {
      long v = t.graded_entry(i, r + i);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    cells.push_back(row);
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      out += std::string(width[c] - row[c].size(), ' ') + row[c];
      out += c + 1 == row.size() ? "" : "  ";
    }
    out += "\n";
  }
  return out;
}

std::string betti_csv(const BettiTable& t) {
  std::string out = "# field: " + t.field.label() + "\n";
  int pd = t.pd_ideal();
  int jmax = t.max_total_degree();
  int jmin = jmax;
  for (const auto& [key, dim] : t.graded)
    if (dim > 0) jmin = std::min(jmin, key.second);
  out += "i\\j";
  for (int j = jmin; j <= jmax; ++j) out += "," + std::to_string(j);
  out += "\n";
  for (int i = 0; i <= pd; ++i) {
    out += std::to_string(i);
    for (int j = jmin; j <= jmax; ++j) out += "," + std::to_string(t.graded_entry(i, j));
    out += "\n";
  }
  return out;
}

nlohmann::json betti_to_json(const BettiTable& t, bool include_multigraded) {
  nlohmann::json j;
  j["schema"] = 1;
  j["field"] = t.field.label();
  auto graded = nlohmann::json::array();
  for (const auto& [key, dim] : t.graded)
    graded.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
  j["graded"] = graded;
  if (include_multigraded) {
    auto mg = nlohmann::json::array();
    for (const auto& [key, dim] : t.multigraded)
      mg.push_back({{"i", key.first}, {"multidegree", key.second}, {"dim", dim}});
    j["multigraded"] = mg;
  }
  j["pd_ideal"] = t.pd_ideal();
  j["regularity"] = t.regularity();
  return j;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace matchpow
