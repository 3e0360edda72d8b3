#ifndef JMULT_BIGINT_HPP
#define JMULT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace jmult {

// All lengths, table entries and polynomial coefficients are exact integers;
// the interpolation and Newton-polyhedron feasibility steps work over exact
// rationals. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace jmult

#endif
