#include "dotbinom/polyq.hpp"

#include <algorithm>

#include "dotbinom/closed.hpp"
#include "dotbinom/error.hpp"

namespace dotbinom::polyq {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const Rational& constant) : coeffs_{constant} { normalize(); }

RatPoly RatPoly::monomial(unsigned e, const Rational& c) {
  std::vector<Rational> v(e + 1, Rational(0));
  v[e] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::binomial_term(unsigned e, int c) { return monomial(e) + RatPoly(Rational(c)); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int RatPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& den) const {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = den.degree();
  if (degree() < dd) return {RatPoly(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lead = den.leading();
  for (int i = degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coeffs_[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& den, const char* context) const {
  if (den.is_zero()) throw Error(Errc::ExactDivisionFailed, std::string(context) + ": division by zero");
  auto [quot, rem] = divmod(den);
  if (!rem.is_zero()) {
    throw Error(Errc::ExactDivisionFailed, std::string(context) + ": (" + to_string() + ") / (" +
                                               den.to_string() + ") leaves remainder " + rem.to_string());
  }
  return quot;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i == 1) mono = "q";
    if (i > 1) mono = "q^" + std::to_string(i);
    if (mono.empty()) {
      out += dotbinom::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += dotbinom::to_string(c) + "*" + mono;
    }
  }
  return out;
}

RatPoly gaussian_binom_poly(int n, int k, bool squared) {
  if (n < 0 || k < 0 || k > n) throw Error(Errc::InvalidArgument, "gaussian binomial needs 0 <= k <= n");
  const unsigned step = squared ? 2 : 1;
  RatPoly num(Rational(1));
  RatPoly den(Rational(1));
  for (int i = 0; i < k; ++i) {
    num = num * RatPoly::binomial_term(step * static_cast<unsigned>(n - i), -1);
    den = den * RatPoly::binomial_term(step * static_cast<unsigned>(i + 1), -1);
  }
  return num.exact_div(den, "gaussian binomial polynomial");
}

void validate(const PolyFamilyKey& key) {
  if (key.q_class != 1 && key.q_class != 3) {
    throw Error(Errc::InvalidArgument, "q class must be 1 or 3, got " + std::to_string(key.q_class));
  }
  if (key.n < 0 || key.k < 0 || key.k > key.n) {
    throw Error(Errc::InvalidArgument,
                "need 0 <= k <= n, got n=" + std::to_string(key.n) + " k=" + std::to_string(key.k));
  }
}

namespace {

void require_interior(const PolyFamilyKey& key) {
  validate(key);
  if (key.k == 0 || key.k == key.n) throw Error(Errc::InvalidArgument, "need 0 < k < n");
}

RatPoly pm(int e, int sign) { return RatPoly::binomial_term(static_cast<unsigned>(e), sign); }

}  // namespace

RatPoly dot_binom_poly(const PolyFamilyKey& key) {
  validate(key);
  const int n = key.n;
  const int k = key.k;
  if (k == 0 || k == n) return RatPoly(Rational(1));
  const int big_n = k * (n - k);
  const bool n_odd = n % 2 == 1;
  const bool k_odd = k % 2 == 1;
  const bool c1 = key.q_class == 1;
  const int nm = key.n_mod4();
  const int km = key.k_mod4();
  const Rational half(1, 2);

  if (n_odd && k_odd) {
    int s = 1;
    if (!c1) s = ((nm == 1 && km == 1) || (nm == 3 && km == 3)) ? 1 : -1;
    return RatPoly::monomial(static_cast<unsigned>(big_n / 2), half) * pm((n - k) / 2, s) *
           gaussian_binom_poly((n - 1) / 2, (k - 1) / 2, true);
  }
  if (n_odd) {
    int s = 1;
    if (!c1) s = km == 2 ? -1 : 1;
    return RatPoly::monomial(static_cast<unsigned>(big_n / 2), half) * pm(k / 2, s) *
           gaussian_binom_poly((n - 1) / 2, k / 2, true);
  }
  if (k_odd) {
    int s = -1;
    if (!c1) s = nm == 2 ? 1 : -1;
    return RatPoly::monomial(static_cast<unsigned>((big_n - 1) / 2), half) * pm(n / 2, s) *
           gaussian_binom_poly((n - 2) / 2, (k - 1) / 2, true);
  }
  int a = 1;
  int b = 1;
  int c = 1;
  if (!c1) {
    if (nm == 2 && km == 2) {
      a = 1, b = -1, c = -1;
    } else if (nm == 0 && km == 2) {
      a = -1, b = -1, c = 1;
    } else if (nm == 2 && km == 0) {
      a = -1, b = 1, c = -1;
    }
  }
  const RatPoly num = RatPoly::monomial(static_cast<unsigned>(big_n / 2), half) * pm((n - k) / 2, a) *
                      pm(k / 2, b) * gaussian_binom_poly(n / 2, k / 2, true);
  return num.exact_div(pm(n / 2, c), "dot-binomial polynomial");
}

bool eval_consistency(const PolyFamilyKey& key, std::uint64_t q_value) {
  validate(key);
  (void)odd_prime_power(q_value);
  if (static_cast<int>(q_value % 4) != key.q_class) {
    throw Error(Errc::InvalidQ, std::to_string(q_value) + " is not " + std::to_string(key.q_class) + " mod 4");
  }
  const Rational value = dot_binom_poly(key).eval(Rational(q_value));
  const BigInt expected = closed::dot_binom(q_value, key.n, key.k);
  if (value != Rational(expected)) {
    throw MismatchError("polynomial evaluation at q=" + std::to_string(q_value) + " n=" + std::to_string(key.n) +
                            " k=" + std::to_string(key.k),
                        dotbinom::to_string(expected), dotbinom::to_string(value));
  }
  return true;
}

bool degree_check(const PolyFamilyKey& key) { return dot_binom_poly(key).degree() == key.k * (key.n - key.k); }

std::string_view to_string(Sign s) { return s == Sign::Plus ? "Plus" : "Minus"; }

bool is_a_form(const PolyFamilyKey& key) { return (key.k * (key.n - key.k)) % 2 == 1; }

Depressed depress(const PolyFamilyKey& key) {
  const RatPoly p = dot_binom_poly(key);
  const int big_n = key.k * (key.n - key.k);
  Depressed d;
  d.a_form = is_a_form(key);
  d.shift = d.a_form ? (big_n - 1) / 2 : big_n / 2;
  if (p.valuation() < d.shift) {
    throw MismatchError("valuation of p_{" + std::to_string(key.n) + "," + std::to_string(key.k) + "}",
                        std::to_string(d.shift), std::to_string(p.valuation()));
  }
  d.coeffs.assign(p.coeffs().begin() + d.shift, p.coeffs().end());
  return d;
}

namespace {

Sign reversal_sign(const Depressed& d, const PolyFamilyKey& key) {
  const RatPoly s(d.coeffs);
  const RatPoly r(std::vector<Rational>(d.coeffs.rbegin(), d.coeffs.rend()));
  if (r == s) return Sign::Plus;
  if (r == -s) return Sign::Minus;
  throw Error(Errc::NeitherSign, "p_{" + std::to_string(key.n) + "," + std::to_string(key.k) +
                                     "} is neither palindromic nor anti-palindromic: " + s.to_string());
}

}  // namespace

Sign functional_equation_check(const PolyFamilyKey& key) {
  require_interior(key);
  return reversal_sign(depress(key), key);
}

Sign printed_functional_sign(const PolyFamilyKey& key, bool cases_for_both_classes) {
  require_interior(key);
  const bool c1 = key.q_class == 1;
  const bool c3 = !c1;
  const int nm = key.n_mod4();
  const int km = key.k_mod4();
  const bool k_even = key.k % 2 == 0;
  const bool open = c3 || cases_for_both_classes;
  bool minus = false;
  minus = minus || (c1 && key.n % 2 == 0 && key.k % 2 == 1);
  minus = minus || (c3 && nm == 3 && (km == 1 || km == 2));
  minus = minus || (open && nm == 1 && (km == 3 || km == 2));
  minus = minus || (open && nm == 2 && k_even);
  minus = minus || (open && nm == 0 && k_even);
  minus = minus || (open && nm == 0 && km == 3);
  return minus ? Sign::Minus : Sign::Plus;
}

FunctionalSignReport functional_sign_report(const PolyFamilyKey& key) {
  FunctionalSignReport r;
  r.key = key;
  r.computed = functional_equation_check(key);
  r.printed_a = printed_functional_sign(key, false);
  r.printed_b = printed_functional_sign(key, true);
  return r;
}

SymmetryReport coefficient_symmetry_report(const PolyFamilyKey& key) {
  require_interior(key);
  SymmetryReport r;
  r.key = key;
  r.depressed = depress(key);
  r.computed = reversal_sign(r.depressed, key);
  const int big_n = key.k * (key.n - key.k);
  const int nm = key.n_mod4();
  const int km = key.k_mod4();
  const bool n_even = key.n % 2 == 0;
  const bool k_odd = key.k % 2 == 1;
  Rational bound;
  if (key.q_class == 1) {
    if (n_even && k_odd) {
      r.printed = Sign::Minus;
      bound = Rational(big_n, 2);
    } else {
      r.printed = Sign::Plus;
      bound = Rational(big_n, 2);
    }
  } else {
    if ((nm == 2 && k_odd) || (nm == 0 && km == 1)) {
      r.printed = Sign::Plus;
      bound = Rational(big_n + 1, 2);
    } else if (nm == 0 && km == 3) {
      r.printed = Sign::Minus;
      bound = Rational(big_n + 1, 2);
    } else if ((nm == 3 && (km == 3 || km == 0)) || (nm == 1 && (km == 1 || km == 0))) {
      r.printed = Sign::Plus;
      bound = Rational(big_n, 2);
    } else if ((nm == 3 && (km == 1 || km == 2)) || (nm == 1 && (km == 3 || km == 2)) || !k_odd) {
      r.printed = Sign::Minus;
      bound = Rational(big_n, 2);
    }
  }
  if (r.printed) {
    r.printed_bound = dotbinom::to_string(bound);
    r.index_conflict = bound != Rational(r.depressed.depressed_degree());
  }
  return r;
}

bool limit_check(const PolyFamilyKey& key) {
  require_interior(key);
  const Rational at = key.q_class == 1 ? Rational(1) : Rational(-1);
  const Rational value = dot_binom_poly(key).eval(at);
  const BigInt expected = closed::limit_value(key.n, key.k);
  if (value != Rational(expected)) {
    throw MismatchError("limit of p_{" + std::to_string(key.n) + "," + std::to_string(key.k) + "} at q=" +
                            dotbinom::to_string(at),
                        dotbinom::to_string(expected), dotbinom::to_string(value));
  }
  return true;
}

}  // namespace dotbinom::polyq
