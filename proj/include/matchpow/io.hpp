#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "vendor_json.hpp"

#include "matchpow/betti.hpp"
#include "matchpow/graphs.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

struct ParsedIdeal {
  MonomialIdeal ideal;
  bool changed_by_minimization = false;
};

/// Text format: one generator per line as a product of var^exp tokens
/// ("x1^2*x3"). Lines starting with '#' are comments; an optional
/// "# vars: a b c" header fixes the ambient, otherwise variables enter in
/// order of first appearance. Empty input parses to the zero ideal.
ParsedIdeal parse_ideal_text(const std::string& text);

/// JSON format: { "vars": [names], "gens": [[e1,...,en], ...] }.
ParsedIdeal parse_ideal_json(const nlohmann::json& j);

/// Dispatches on a leading '{'.
ParsedIdeal parse_ideal_auto(const std::string& text);

std::string ideal_to_text(const MonomialIdeal& I);
nlohmann::json ideal_to_json(const MonomialIdeal& I);

/// Graph JSON: { "vertices": [names], "edges": [[u,v],...],
///   "directed": bool, "weights": {name: w}, "edge_weights": {"u-v": w} }.
/// Edge endpoints may be vertex names or 0-based indices. Weights default
/// to 1 when omitted.
struct ParsedGraph {
  enum class Kind { simple, weighted_oriented, edge_weighted } kind;
  std::optional<SimpleGraph> simple;
  std::optional<WeightedOrientedGraph> oriented;
  std::optional<EdgeWeightedGraph> edge_weighted;

  /// The edge ideal of whichever graph was parsed.
  MonomialIdeal ideal() const;
};

ParsedGraph parse_graph_json(const nlohmann::json& j);
ParsedGraph parse_graph_auto(const std::string& text);

nlohmann::json graph_to_json(const SimpleGraph& G);
nlohmann::json graph_to_json(const WeightedOrientedGraph& D);

/// Macaulay-style Betti diagram (rows j - i, columns i) as aligned text.
std::string betti_diagram(const BettiTable& t);

/// CSV: rows = homological index, columns = total degree; a comment records
/// the coefficient field.
std::string betti_csv(const BettiTable& t);

nlohmann::json betti_to_json(const BettiTable& t, bool include_multigraded);

/// Reads a whole file, or stdin when path is "-".
std::string read_input(const std::string& path);

}  // namespace matchpow
