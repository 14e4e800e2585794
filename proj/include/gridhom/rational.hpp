#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gridhom {

// Exact arithmetic everywhere: integer lattice/K-theory data uses Int,
// linear algebra over the ground field uses Rat.  No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gridhom
