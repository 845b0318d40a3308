#include "dotbinom/numbers.hpp"

#include "dotbinom/error.hpp"

namespace dotbinom {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotALine: return "NotALine";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnsupportedFlavor: return "UnsupportedFlavor";
    case Errc::InvalidQ: return "InvalidQ";
    case Errc::ExactDivisionFailed: return "ExactDivisionFailed";
    case Errc::UndefinedForParameters: return "UndefinedForParameters";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NeitherSign: return "NeitherSign";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt pow_big(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0) {
    throw Error(Errc::ExactDivisionFailed, std::string(context) + ": division by zero");
  }
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    throw Error(Errc::ExactDivisionFailed,
                std::string(context) + ": " + num.str() + " / " + den.str() + " leaves remainder " +
                    rem.str());
  }
  return quot;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) {
    throw Error(Errc::InvalidQ, "q=" + std::to_string(q) + " is not an odd prime power");
  }
  std::uint64_t p = 0;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw Error(Errc::InvalidQ, "q=" + std::to_string(q) + " is not an odd prime power");
  }
  return {p, e};
}

BigInt gaussian_binomial(std::uint64_t q, int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow_big(q, static_cast<unsigned>(n - i)) - 1;
    den *= pow_big(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return exact_div(num, den, "gaussian binomial");
}

}  // namespace dotbinom
