#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dotbinom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& v);

BigInt pow_big(std::uint64_t base, unsigned exponent);

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

/// Quotient of an exact division. Throws ExactDivisionFailed on a remainder
/// or a zero divisor; `context` names the formula being evaluated.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* context);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
};

/// Factor q as p^e. Throws InvalidQ unless q is an odd prime power.
PrimePower odd_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Gaussian binomial: number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(std::uint64_t q, int n, int k);

}  // namespace dotbinom
