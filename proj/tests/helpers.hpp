#pragma once

#include <string>

#include "matchpow/io.hpp"

namespace matchpow::testing {

/// Build an ideal from the text format (handy in tests).
inline MonomialIdeal mk(const std::string& text) { return parse_ideal_text(text).ideal; }

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

/// The five-generator ideal (x1^2, x2^2, x3^2, x3x4, x5^5).
inline MonomialIdeal five_gen_ideal() {
  return mk("x1^2\nx2^2\nx3^2\nx3*x4\nx5^5\n");
}

/// The cubic counterexample (x1x2^2, x2x3^2, x3x4^2, x4x1^2).
inline MonomialIdeal cubic_cycle() {
  return mk("x1*x2^2\nx2*x3^2\nx3*x4^2\nx4*x1^2\n");
}

/// The oriented 4-cycle with all weights 2, arcs (a,b),(b,c),(c,d),(d,a).
inline WeightedOrientedGraph four_cycle_w2() {
  return WeightedOrientedGraph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                               {2, 2, 2, 2});
}

}  // namespace matchpow::testing
