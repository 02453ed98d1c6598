#ifndef IMMACULATA_INTEGER_HPP
#define IMMACULATA_INTEGER_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace immaculata {

// Arbitrary precision coefficients. Every public NSym/QSym result is integral;
// rationals only appear inside the power-sum conversion of the sym module.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const integer &n) { return n.str(); }

inline integer parse_integer(const std::string &s) { return integer(s); }

inline int sign_of_parity(bool odd) { return odd ? -1 : 1; }

} // namespace immaculata

#endif
