#include "matchpow/field.hpp"

namespace matchpow {

static bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(long p) {
  if (!is_prime_long(p) || p >= (1L << 31))
    throw InvalidArgumentError("prime field needs a prime p < 2^31");
  return {Kind::prime, p};
}

CoefficientField CoefficientField::parse(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "QQ") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stol(spec.substr(3)));
    } catch (const std::invalid_argument&) {
      throw InvalidArgumentError("bad field spec: " + spec);
    }
  }
  if (spec == "fp") return prime(32003);
  throw InvalidArgumentError("bad field spec (want q or fp:P): " + spec);
}

std::string CoefficientField::label() const {
  return kind == Kind::rationals ? "QQ" : "F" + std::to_string(p);
}

}  // namespace matchpow
