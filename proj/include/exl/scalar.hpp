#ifndef EXL_SCALAR_HPP
#define EXL_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exl {

/// Exact rational number. mpq_class keeps numerator/denominator coprime with a
/// positive denominator as long as every value goes through canonicalize().
using Scalar = mpq_class;

/// Parses "p" or "p/q" with optional sign. Floats, exponents and q = 0 are
/// rejected with exl::Error.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Scalar& value);

} // namespace exl

#endif
