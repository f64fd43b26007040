#pragma once

#include <string>

#include "matchpow/errors.hpp"

namespace matchpow {

/// Coefficient field for homology ranks: exact rationals (default) or a
/// prime field F_p (default p = 32003, for speed).
struct CoefficientField {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  long p = 0;

  static CoefficientField rationals() { return {Kind::rationals, 0}; }
  static CoefficientField prime(long p);

  /// "q" or "fp:P".
  static CoefficientField parse(const std::string& spec);
  std::string label() const;

  bool operator==(const CoefficientField& o) const {
    return kind == o.kind && p == o.p;
  }
};

}  // namespace matchpow
