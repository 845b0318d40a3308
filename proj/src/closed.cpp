#include "dotbinom/closed.hpp"

#include <algorithm>
#include <cctype>

#include "dotbinom/error.hpp"

namespace dotbinom::closed {

namespace {

void require_q(std::uint64_t q) { (void)odd_prime_power(q); }

void require_range(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(Errc::InvalidArgument,
                "need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

BigInt qpow(std::uint64_t q, int e) { return pow_big(q, static_cast<unsigned>(e)); }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::SpacelikeInDot: return "SpacelikeInDot";
    case Flavor::TimelikeInDot: return "TimelikeInDot";
    case Flavor::SpacelikeInLambdaDot: return "SpacelikeInLambdaDot";
    case Flavor::TimelikeInLambdaDot: return "TimelikeInLambdaDot";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::DD: return "DD";
    case Variant::LD: return "LD";
    case Variant::DL: return "DL";
    case Variant::LL: return "LL";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  for (Flavor f : {Flavor::SpacelikeInDot, Flavor::TimelikeInDot, Flavor::SpacelikeInLambdaDot,
                   Flavor::TimelikeInLambdaDot}) {
    if (lower(s) == lower(to_string(f))) return f;
  }
  throw Error(Errc::UnsupportedFlavor, "unknown bracket flavor '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s) {
  for (Variant v : {Variant::DD, Variant::LD, Variant::DL, Variant::LL}) {
    if (lower(s) == lower(to_string(v))) return v;
  }
  throw Error(Errc::InvalidArgument, "unknown binomial variant '" + std::string(s) + "'");
}

LineCountParams line_count_params(std::uint64_t q, int n) {
  const int r = ((n % 4) + 4) % 4;
  const int eps = (q % 4 == 1 || r == 1 || r == 2) ? 1 : -1;
  const bool even = n % 2 == 0;
  return {eps, even ? 1 : 0, even ? 1 : -1};
}

LineCountParams reconciled_line_count_params(std::uint64_t q, int n) {
  const int r = ((n % 4) + 4) % 4;
  const int eps = (q % 4 == 1 || r == 0 || r == 1) ? 1 : -1;
  const bool even = n % 2 == 0;
  return {eps, even ? 1 : 0, even ? 1 : -1};
}

BigInt line_count_expression(std::uint64_t q, int n, Flavor flavor, const LineCountParams& params) {
  require_q(q);
  if (n < 1) throw Error(Errc::InvalidArgument, "line counts need n >= 1");
  const BigInt lead = qpow(q, n - 1);
  const BigInt tail = qpow(q, (n - params.delta - 1) / 2);
  const int sign_delta = params.delta == 1 ? -1 : 1;
  int sign = 0;
  switch (flavor) {
    case Flavor::SpacelikeInDot: sign = sign_delta * params.epsilon; break;
    case Flavor::TimelikeInDot: sign = sign_delta * params.eta * params.epsilon; break;
    case Flavor::SpacelikeInLambdaDot: sign = -sign_delta * params.epsilon; break;
    case Flavor::TimelikeInLambdaDot: sign = -sign_delta * params.eta * params.epsilon; break;
  }
  return exact_div(sign > 0 ? BigInt(lead + tail) : BigInt(lead - tail), 2, "line count");
}

BigInt verbatim_line_count(std::uint64_t q, int n, Flavor flavor) {
  return line_count_expression(q, n, flavor, line_count_params(q, n));
}

BigInt bracket(std::uint64_t q, int n, Flavor flavor) {
  require_q(q);
  if (n < 0) throw Error(Errc::InvalidArgument, "bracket needs n >= 0");
  if (flavor != Flavor::SpacelikeInDot) {
    if (n == 0) {
      throw Error(Errc::UnsupportedFlavor,
                  std::string(to_string(flavor)) + " is undefined in dimension 0");
    }
    return line_count_expression(q, n, flavor, reconciled_line_count_params(q, n));
  }
  if (n == 0) return 1;
  // k = 1 column of the polynomial tables.
  const BigInt lead = qpow(q, n - 1);
  const bool odd = n % 2 == 1;
  const BigInt tail = odd ? qpow(q, (n - 1) / 2) : qpow(q, (n - 2) / 2);
  bool plus = false;
  if (q % 4 == 1) {
    plus = odd;
  } else {
    plus = (n % 4 == 1) || (n % 4 == 2);
  }
  return exact_div(plus ? BigInt(lead + tail) : BigInt(lead - tail), 2, "bracket");
}

BracketTable bracket_table(std::uint64_t q, int max_n) {
  BracketTable t;
  t.q = q;
  t.q_mod4 = static_cast<int>(q % 4);
  for (int n = 0; n <= max_n; ++n) {
    t.entries[{n, Flavor::SpacelikeInDot}] = bracket(q, n);
    if (n == 0) continue;
    for (Flavor f : {Flavor::TimelikeInDot, Flavor::SpacelikeInLambdaDot, Flavor::TimelikeInLambdaDot}) {
      t.entries[{n, f}] = bracket(q, n, f);
    }
  }
  return t;
}

BigInt bracket_factorial(std::uint64_t q, int n) {
  require_q(q);
  if (n < 0) throw Error(Errc::InvalidArgument, "factorial needs n >= 0");
  BigInt r = 1;
  for (int i = 1; i <= n; ++i) r *= bracket(q, i);
  return r;
}

BigInt dot_binom(std::uint64_t q, int n, int k) {
  require_q(q);
  require_range(n, k);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= bracket(q, n - i);
    den *= bracket(q, i + 1);
  }
  return exact_div(num, den, "dot-binomial product");
}

namespace {

BigInt divide_by_bracket(const BigInt& num, std::uint64_t q, int k, Flavor f, const char* what) {
  const BigInt den = bracket(q, k, f);
  if (den == 0) {
    throw Error(Errc::UndefinedForParameters,
                std::string(what) + ": zero divisor " + std::string(to_string(f)) + "[" + std::to_string(k) + "]");
  }
  return exact_div(num, den, what);
}

}  // namespace

BigInt dot_binom_variant(std::uint64_t q, int n, int k, Variant variant) {
  require_q(q);
  require_range(n, k);
  switch (variant) {
    case Variant::DD: return dot_binom(q, n, k);
    case Variant::LD: {
      BigInt num = 1;
      for (int i = 0; i < k; ++i) num *= bracket(q, n - i, Flavor::SpacelikeInLambdaDot);
      return exact_div(num, bracket_factorial(q, k), "lambda-ambient dot-binomial");
    }
    case Variant::DL: {
      // The zero subspace counts as dot type.
      if (k == 0) return 0;
      const BigInt num = bracket(q, n, Flavor::TimelikeInDot) * dot_binom_variant(q, n - 1, k - 1, Variant::LD);
      return divide_by_bracket(num, q, k, Flavor::TimelikeInLambdaDot, "lambda-subspace dot-binomial");
    }
    case Variant::LL: {
      if (k == 0) return 0;
      const BigInt num = bracket(q, n, Flavor::TimelikeInLambdaDot) * dot_binom(q, n - 1, k - 1);
      return divide_by_bracket(num, q, k, Flavor::TimelikeInLambdaDot, "lambda/lambda dot-binomial");
    }
  }
  return 0;
}

std::vector<BigInt> pascal_row(std::uint64_t q, int n) {
  require_q(q);
  if (n < 0) throw Error(Errc::InvalidArgument, "row index must be >= 0");
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) row.push_back(dot_binom(q, n, k));
  return row;
}

void pascal_check(std::uint64_t q, int n) {
  require_q(q);
  if (n < 1) throw Error(Errc::InvalidArgument, "Pascal identities need n >= 1");
  const BigInt bn = bracket(q, n);
  for (int k = 1; k < n; ++k) {
    const Rational lhs(dot_binom(q, n, k));
    const Rational up_left(dot_binom(q, n - 1, k - 1));
    const Rational up_right(dot_binom(q, n - 1, k));
    const Rational first = up_left + Rational(bn - bracket(q, k), bracket(q, n - k)) * up_right;
    if (lhs != first) throw IdentityViolated("Pascal identity (k-1 route)", q, n, k);
    const Rational second = up_right + Rational(bn - bracket(q, n - k), bracket(q, k)) * up_left;
    if (lhs != second) throw IdentityViolated("Pascal identity (n-k route)", q, n, k);
  }
}

RowShape row_shape(const std::vector<BigInt>& row, int first_rank, int n) {
  RowShape s;
  const std::size_t len = row.size();
  s.symmetric = std::equal(row.begin(), row.end(), row.rbegin());
  s.log_concave = true;
  for (std::size_t i = 1; i + 1 < len; ++i) {
    if (row[i] * row[i] < row[i - 1] * row[i + 1]) s.log_concave = false;
  }
  if (len == 0) {
    s.unimodal = true;
    return s;
  }
  auto unimodal_at = [&](int peak_rank) {
    const long long j = peak_rank - first_rank;
    if (j < 0 || j >= static_cast<long long>(len)) return false;
    for (long long i = 0; i < j; ++i) {
      if (row[i] > row[i + 1]) return false;
    }
    for (long long i = j; i + 1 < static_cast<long long>(len); ++i) {
      if (row[i] < row[i + 1]) return false;
    }
    return true;
  };
  s.unimodal = unimodal_at(n / 2) || unimodal_at((n + 1) / 2);
  return s;
}

std::vector<BigInt> lorentzian_row(std::uint64_t q, int n) {
  std::vector<BigInt> row;
  for (int k = 1; k < n; ++k) row.push_back(dot_binom_variant(q, n, k, Variant::DL));
  return row;
}

ShapeReport shape_checks(std::uint64_t q, int n) {
  require_q(q);
  if (n < 1) throw Error(Errc::InvalidArgument, "shape checks need n >= 1");
  ShapeReport r;
  r.euclidean = row_shape(pascal_row(q, n), 0, n);
  r.lorentzian = row_shape(lorentzian_row(q, n), 1, n);
  return r;
}

BigInt group_order(std::uint64_t q, int n) {
  require_q(q);
  if (n < 0) throw Error(Errc::InvalidArgument, "group order needs n >= 0");
  return pow_big(2, static_cast<unsigned>(n)) * bracket_factorial(q, n);
}

std::optional<BigInt> printed_group_order(std::uint64_t q, int n) {
  require_q(q);
  if (n < 1) return std::nullopt;
  const int m = n / 2;
  if (n % 2 == 1) {
    // 2 q^((m-1)/2) prod_{k=0}^{(m-3)/2} (q^{2m} - q^{2k})
    if (m % 2 == 0) return std::nullopt;
    BigInt r = 2 * qpow(q, (m - 1) / 2);
    for (int k = 0; k <= (m - 3) / 2 && m >= 3; ++k) r *= qpow(q, 2 * m) - qpow(q, 2 * k);
    return r;
  }
  // 2 (q^(m/2) + s) prod_{k=1}^{(m-2)/2} (q^m - q^{2k}),
  // s = -1 for q = 1 mod 4 and (-1)^((m+2)/2) for q = 3 mod 4.
  if (m % 2 == 1) return std::nullopt;
  int s = -1;
  if (q % 4 == 3) s = ((m + 2) / 2) % 2 == 0 ? 1 : -1;
  BigInt r = 2 * (qpow(q, m / 2) + s);
  for (int k = 1; k <= (m - 2) / 2; ++k) r *= qpow(q, m) - qpow(q, 2 * k);
  return r;
}

bool quotient_identity_check(std::uint64_t q, int n, int k) {
  require_q(q);
  require_range(n, k);
  if (group_order(q, n) != dot_binom(q, n, k) * group_order(q, k) * group_order(q, n - k)) {
    throw IdentityViolated("orthogonal group quotient identity", q, n, k);
  }
  return true;
}

MobiusSequence mobius_sequence(std::uint64_t q, int n) {
  require_q(q);
  if (n < 0) throw Error(Errc::InvalidArgument, "Mobius sequence needs n >= 0");
  MobiusSequence s;
  s.q = q;
  s.b.push_back(1);
  for (int m = 1; m <= n; ++m) {
    BigInt partial = 0;
    for (int k = 0; k < m; ++k) {
      const BigInt term = s.b[k] * dot_binom(q, m, k);
      partial += (k % 2 == 0) ? term : BigInt(-term);
    }
    // sum_{k<=m} (-1)^k b_k C(m,k)_d = 0 and C(m,m)_d = 1.
    s.b.push_back(m % 2 == 0 ? BigInt(-partial) : partial);
  }
  for (int k = 0; k <= n; ++k) s.mu.push_back(k % 2 == 0 ? s.b[k] : BigInt(-s.b[k]));
  return s;
}

BigInt limit_value(int n, int k) {
  if (k <= 0 || k >= n) throw Error(Errc::InvalidArgument, "limit values need 0 < k < n");
  const bool n_odd = n % 2 == 1;
  const bool k_odd = k % 2 == 1;
  if (n_odd && k_odd) return binomial((n - 1) / 2, (k - 1) / 2);
  if (n_odd) return binomial((n - 1) / 2, k / 2);
  if (!k_odd) return binomial(n / 2, k / 2);
  return 0;
}

}  // namespace dotbinom::closed
