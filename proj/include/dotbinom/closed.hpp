#pragma once

// Closed-form dot-analogues as exact integers. Every function validates q as
// an odd prime power (InvalidQ) and performs divisions exactly, raising
// ExactDivisionFailed on any remainder.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dotbinom/numbers.hpp"

namespace dotbinom::closed {

/// Which line count a bracket measures: line type x ambient form.
enum class Flavor { SpacelikeInDot, TimelikeInDot, SpacelikeInLambdaDot, TimelikeInLambdaDot };

/// Ambient form x subspace form: DD = dot_k in dot_n, LD = dot_k in
/// lambda dot_n, DL = lambda dot_k in dot_n, LL = lambda dot_k in lambda dot_n.
enum class Variant { DD, LD, DL, LL };

std::string_view to_string(Flavor f);
std::string_view to_string(Variant v);
/// Accepts the enumerator names, case-insensitively. Throws UnsupportedFlavor.
Flavor parse_flavor(std::string_view s);
/// Throws InvalidArgument.
Variant parse_variant(std::string_view s);

/// Sign parameters of the published line-count expressions.
struct LineCountParams {
  int epsilon;  // +-1
  int delta;    // 1 iff n even
  int eta;      // 1 iff n even, else -1
};

/// Parameters with epsilon taken verbatim from the published rule
/// (1 iff q = 1 mod 4 or n = 1, 2 mod 4).
LineCountParams line_count_params(std::uint64_t q, int n);

/// Parameters with the epsilon that reproduces enumeration
/// (1 iff q = 1 mod 4 or n = 0, 1 mod 4).
LineCountParams reconciled_line_count_params(std::uint64_t q, int n);

/// The four line-count expressions evaluated with the given parameters.
/// Throws ExactDivisionFailed if a numerator is odd.
BigInt line_count_expression(std::uint64_t q, int n, Flavor flavor, const LineCountParams& params);

/// Published line counts evaluated exactly as printed (n >= 1).
BigInt verbatim_line_count(std::uint64_t q, int n, Flavor flavor);

/// Normative bracket. SpacelikeInDot comes from the k = 1 column of the
/// polynomial tables ([0]_d = 1); the other flavors use the line-count
/// expressions with reconciled epsilon and require n >= 1 (UnsupportedFlavor
/// otherwise).
BigInt bracket(std::uint64_t q, int n, Flavor flavor = Flavor::SpacelikeInDot);

struct BracketTable {
  std::uint64_t q = 0;
  int q_mod4 = 0;
  std::map<std::pair<int, Flavor>, BigInt> entries;

  const BigInt& entry(int n, Flavor f) const { return entries.at({n, f}); }
};

/// Brackets for n = 0..max_n (lambda flavors from n = 1).
BracketTable bracket_table(std::uint64_t q, int max_n);

BigInt bracket_factorial(std::uint64_t q, int n);

/// C(n, k)_d as the telescoped product of brackets, divided exactly.
BigInt dot_binom(std::uint64_t q, int n, int k);

/// All four variants. DD delegates to dot_binom.
BigInt dot_binom_variant(std::uint64_t q, int n, int k, Variant variant);

/// Row C(n, 0)_d .. C(n, n)_d.
std::vector<BigInt> pascal_row(std::uint64_t q, int n);

/// Checks both Pascal-type recurrences for every 0 < k < n in exact rational
/// arithmetic; throws IdentityViolated with the offending (q, n, k).
void pascal_check(std::uint64_t q, int n);

struct RowShape {
  bool symmetric = false;
  bool unimodal = false;  // peak at floor(n/2) or ceil(n/2)
  bool log_concave = false;
};

/// Shape of a rank-size row whose first entry sits at rank `first_rank` of
/// a poset of rank n; the unimodal peak must be at floor(n/2) or ceil(n/2).
RowShape row_shape(const std::vector<BigInt>& row, int first_rank, int n);

struct ShapeReport {
  RowShape euclidean;   // C(n, k)_d, k = 0..n
  RowShape lorentzian;  // C(n, lambda k)_d, k = 1..n-1
  bool all() const {
    return euclidean.symmetric && euclidean.unimodal && euclidean.log_concave && lorentzian.symmetric &&
           lorentzian.unimodal;
  }
};

ShapeReport shape_checks(std::uint64_t q, int n);

/// Lorentzian rank sizes C(n, lambda k)_d for k = 1..n-1.
std::vector<BigInt> lorentzian_row(std::uint64_t q, int n);

/// |O(n, q)| = 2^n [n]_d!, with |O(0, q)| = 1.
BigInt group_order(std::uint64_t q, int n);

/// The published closed forms for |O(2m+1, q)| and |O(2m, q)| read literally.
/// Empty when an exponent or product bound is not an integer for this n.
std::optional<BigInt> printed_group_order(std::uint64_t q, int n);

/// |O(n)| == C(n,k)_d |O(k)| |O(n-k)|; throws IdentityViolated otherwise.
bool quotient_identity_check(std::uint64_t q, int n, int k);

struct MobiusSequence {
  std::uint64_t q = 0;
  std::vector<BigInt> b;   // b_0 .. b_n
  std::vector<BigInt> mu;  // mu(0, dot_k) = (-1)^k b_k
};

MobiusSequence mobius_sequence(std::uint64_t q, int n);

/// Limit of C(n, k)_d at q -> 1 (q = 1 mod 4) or q -> -1 (q = 3 mod 4).
/// Requires 0 < k < n.
BigInt limit_value(int n, int k);

}  // namespace dotbinom::closed
