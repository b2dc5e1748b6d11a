#pragma once

#include <gmpxx.h>

#include <string>

namespace hc {

using Int = mpz_class;
using Rat = mpq_class;

// Parses an exact rational literal: an optional sign, digits, and optionally
// "/digits" with a positive denominator. Anything else (decimals, exponents,
// whitespace) throws std::invalid_argument.
Rat rat_parse(const std::string& text);

// Canonical form: "p/q" in lowest terms with q > 0, or just "p" when q == 1.
std::string rat_str(const Rat& r);
std::string int_str(const Int& z);

double rat_d(const Rat& r);

// %.12g, the float format used in all emitted output.
std::string double_str(double x);

Rat rat_pow(const Rat& base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

// Exact conversion of a finite double (binary expansion, no rounding).
Rat rat_from_double(double x);

}  // namespace hc
