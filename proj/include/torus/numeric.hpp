#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

// Exact scalars. Rat is always normalized: lowest terms, positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInputError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct SingularMatrixError : Error {
  using Error::Error;
};
struct UnboundedError : Error {
  using Error::Error;
};
struct SpanError : Error {
  using Error::Error;
};
struct EmptySetError : Error {
  using Error::Error;
};

// Floor division: largest q with q*b <= a (b > 0), i.e. rounding toward -inf;
// the remainder a - q*b carries the sign of b. cpp_int's operator/ truncates
// toward zero, which is wrong for negative quotients.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DimensionError("floor_div: zero divisor");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Int ceil_rat(const Rat& r) {
  return -floor_rat(-r);
}

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

// "p/q" with q >= 1, lowest terms; whole numbers keep the "/1" so the JSON
// grammar stays uniform.
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s);

}  // namespace torus
