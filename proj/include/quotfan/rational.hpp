#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace quotfan {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Error type for all computational failures (rank defects, unbounded
/// polyhedra, indeterminate map evaluation, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const IntVec& v);

/// v / gcd(v). Throws on the zero vector.
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);

/// Scale a rational vector by the positive lcm of denominators to a
/// primitive integer vector. Throws on the zero vector.
IntVec rat_to_primitive(const RatVec& v);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& c);

std::string to_string(const Rat& q);
std::string to_string(const IntVec& v);

/// Parse "p/q" or "p".
Rat parse_rational(const std::string& s);

} // namespace quotfan
