#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "folsurf/errors.hpp"

namespace folsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical "p/q" (or just "p" for integers).
std::string rat_to_string(const Rat& r);

// Parses "p", "-p", "p/q". Throws InputError on malformed text.
Rat rat_from_string(const std::string& s);

int rat_sign(const Rat& r);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// Exact integer square root test: returns true and sets root when n is a
// perfect square (n >= 0).
bool is_perfect_square(const Int& n, Int& root);

// n > 0 decomposed as r^2 * d with d squarefree. Small primes are removed by
// trial division; the remaining cofactor is checked for squareness only, so a
// huge square-full cofactor could leave d non-squarefree. Fine for the
// discriminants this library meets.
std::pair<Int, Int> squarefree_decompose(Int n);

// True iff r is the square of a rational; sets root >= 0.
bool rat_is_square(const Rat& r, Rat& root);

}  // namespace folsurf
