#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace permgen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(uint64_t n);
BigInt binomial(uint64_t n, uint64_t k);
BigInt ipow(const BigInt& base, uint64_t exponent);

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace permgen
