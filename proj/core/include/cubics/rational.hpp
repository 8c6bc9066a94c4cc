#ifndef CUBICS_RATIONAL_HPP
#define CUBICS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cubics/errors.hpp"

namespace cubics {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "7", "-3/4" or "0". Rejects zero denominators and garbage.
Rat parse_rational(const std::string& text);

// Canonical form: "n" for integers, "n/d" otherwise, d > 0.
std::string format_rational(const Rat& value);

}  // namespace cubics

#endif
