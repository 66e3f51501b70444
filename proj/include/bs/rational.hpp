#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bs {

// Arbitrary-precision integers and exact rationals. All arithmetic in the
// library is exact; doubles appear only in the circle-rotation layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input text (words, rationals, JSON).
struct ParseError : Error {
  using Error::Error;
};
// A configured resource cap was hit; results would be incomplete.
struct LimitError : Error {
  using Error::Error;
};
// An enumeration or stabilization loop ran out of budget before settling.
struct InconclusiveError : Error {
  using Error::Error;
};
// Precondition violation on arguments.
struct UsageError : Error {
  using Error::Error;
};

// Floor division, b > 0.
Int floor_div(const Int& a, const Int& b);

Int floor_rat(const Rat& x);

// base^e, e may be negative (base nonzero in that case).
Rat pow_rat(const Rat& base, long long e);

// Accepts "p/q" or "p"; q must be nonzero.
Rat parse_rat(const std::string& text);

// Wire form "p/q" with q > 0, always including the denominator.
std::string to_wire(const Rat& x);

// "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

}  // namespace bs
