#pragma once

#include <gmpxx.h>

#include <string>

namespace lnd {

/// Exact coefficient field. All arithmetic is over Q with unbounded integers.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace lnd
