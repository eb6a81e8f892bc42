#include "tetrachain/rational.hpp"

#include <stdexcept>

namespace tetrachain {

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_fraction(const std::string& s) {
  using boost::multiprecision::cpp_int;
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(cpp_int(s));
    }
    const cpp_int den(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    return Rational(cpp_int(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction: '" + s + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace tetrachain
