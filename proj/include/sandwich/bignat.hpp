#ifndef SANDWICH_BIGNAT_HPP_
#define SANDWICH_BIGNAT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace sandwich {

// Exact arbitrary-precision arithmetic for the counting formulas, which
// overflow 64 bits long before the enumeration guard is reached.
using bignat = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

}  // namespace sandwich

#endif  // SANDWICH_BIGNAT_HPP_
