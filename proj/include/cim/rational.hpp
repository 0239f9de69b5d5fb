#ifndef CIM_RATIONAL_HPP
#define CIM_RATIONAL_HPP

#include <gmpxx.h>

namespace cim {

using Rational = mpq_class;
using Integer = mpz_class;

} // namespace cim

#endif
