#pragma once

// Polynomials in the indeterminate q with exact rational coefficients and the
// dot-binomial families p_{n,k}(q), one per congruence class of q mod 4.

#include <optional>
#include <string>
#include <vector>

#include "dotbinom/numbers.hpp"

namespace dotbinom::polyq {

/// Dense polynomial, lowest degree first. The zero polynomial has no
/// coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// q^e.
  static RatPoly monomial(unsigned e, const Rational& c = 1);
  /// q^e + c.
  static RatPoly binomial_term(unsigned e, int c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const;
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  Rational eval(const Rational& x) const;

  /// Coefficients in reverse order (q^deg p(1/q)).
  RatPoly reversed() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// Quotient of an exact division; throws ExactDivisionFailed on a nonzero
  /// remainder or a zero divisor.
  RatPoly exact_div(const RatPoly& den, const char* context) const;
  /// Quotient and remainder.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& den) const;

  /// "1/2*q^4 + q^3 + 1/2*q^2", descending degree.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Gaussian binomial C(n, k) in q, or in q^2 when `squared`.
RatPoly gaussian_binom_poly(int n, int k, bool squared);

/// One cell of the polynomial tables: q mod 4 (1 or 3) and (n, k).
struct PolyFamilyKey {
  int q_class = 1;
  int n = 0;
  int k = 0;

  int n_mod4() const { return n % 4; }
  int k_mod4() const { return k % 4; }
};

/// Throws InvalidArgument for a bad class or range.
void validate(const PolyFamilyKey& key);

/// p_{n,k}(q). Each table expression is expanded with exact polynomial
/// division; a remainder raises ExactDivisionFailed.
RatPoly dot_binom_poly(const PolyFamilyKey& key);

/// p_{n,k}(q_value) == closed::dot_binom(q_value, n, k). q_value must be an
/// odd prime power in the key's class (InvalidQ). Throws MismatchError.
bool eval_consistency(const PolyFamilyKey& key, std::uint64_t q_value);

bool degree_check(const PolyFamilyKey& key);

enum class Sign { Plus, Minus };
std::string_view to_string(Sign s);

/// p = q^m s(q), m = (k(n-k)-1)/2 in the "a" cells and k(n-k)/2 otherwise.
struct Depressed {
  bool a_form = false;  // odd k(n-k)
  int shift = 0;        // m
  std::vector<Rational> coeffs;  // a_i or b_i (s without the shift)
  int depressed_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// True in the cells whose expansion starts at q^((k(n-k)-1)/2).
bool is_a_form(const PolyFamilyKey& key);

/// Splits off q^m; throws MismatchError if p has a lower-order term.
Depressed depress(const PolyFamilyKey& key);

/// Sign of reverse(s) = +-s. Requires 0 < k < n. Throws NeitherSign.
Sign functional_equation_check(const PolyFamilyKey& key);

/// Sign predicted by the printed case list. In reading A the unqualified
/// cases apply only to q = 3 mod 4; in reading B they apply to both classes.
Sign printed_functional_sign(const PolyFamilyKey& key, bool cases_for_both_classes);

struct FunctionalSignReport {
  PolyFamilyKey key;
  Sign computed = Sign::Plus;
  Sign printed_a = Sign::Plus;
  Sign printed_b = Sign::Plus;
  bool agrees_a() const { return computed == printed_a; }
  bool agrees_b() const { return computed == printed_b; }
};

FunctionalSignReport functional_sign_report(const PolyFamilyKey& key);

struct SymmetryReport {
  PolyFamilyKey key;
  Depressed depressed;
  Sign computed = Sign::Plus;
  /// Sign from the printed case table, when some case covers the cell.
  std::optional<Sign> printed;
  /// Printed reflection index, as a string ("k(n-k)/2" may be fractional).
  std::string printed_bound;
  /// The printed bound differs from the actual depressed degree.
  bool index_conflict = false;
};

SymmetryReport coefficient_symmetry_report(const PolyFamilyKey& key);

/// p_{n,k} at q = 1 (class 1) or q = -1 (class 3) equals limit_value(n, k).
/// Requires 0 < k < n. Throws MismatchError.
bool limit_check(const PolyFamilyKey& key);

}  // namespace dotbinom::polyq
