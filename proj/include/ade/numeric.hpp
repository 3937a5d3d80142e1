#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ade {

using Integer = mpz_class;
using Rational = mpq_class;
using json = nlohmann::ordered_json;

inline json to_json_value(const Integer& z)
{
  if (z.fits_slong_p())
    return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

inline json to_json_value(const Rational& q)
{
  if (q.get_den() == 1)
    return to_json_value(q.get_num());
  return json(q.get_str());
}

inline int to_int(const Integer& z)
{
  if (!z.fits_sint_p())
    throw std::overflow_error("coefficient " + z.get_str() + " does not fit a machine int");
  return static_cast<int>(z.get_si());
}

} // namespace ade
