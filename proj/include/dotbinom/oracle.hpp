#pragma once

// Brute-force ground truth. Nothing here consults the closed forms: every
// count is produced by enumerating subspaces, vectors or matrices over the
// finite field.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dotbinom/quadspace.hpp"

namespace dotbinom::oracle {

using quad::AmbientForm;
using quad::FieldElement;
using quad::Subspace;
using quad::SubspaceClass;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Options {
  /// Hard cap on enumerated objects (subspaces, matrices, containment
  /// tests). Exceeding it throws BudgetExceeded; nothing is truncated.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads for subspace enumeration. Results do not depend on it.
  unsigned jobs = 1;
};

/// Calls `visit(rows)` once per k-dimensional subspace, where `rows` is the
/// k x n RREF basis in row-major order. Order: pivot patterns in
/// lexicographic order, then free entries as a base-q counter. Throws
/// BudgetExceeded when the Gaussian binomial exceeds the budget.
void for_each_subspace(const AmbientForm& ambient, int k, const Options& opts,
                       const std::function<void(std::span<const FieldElement>)>& visit);

std::vector<Subspace> enumerate_subspaces(const AmbientForm& ambient, int k, const Options& opts = {});

struct LineCounts {
  std::uint64_t spacelike = 0;
  std::uint64_t timelike = 0;
  std::uint64_t lightlike = 0;

  std::uint64_t total() const { return spacelike + timelike + lightlike; }
  friend bool operator==(const LineCounts&, const LineCounts&) = default;
};

LineCounts count_lines(const AmbientForm& ambient, const Options& opts = {});

struct ClassTally {
  std::uint64_t dot_type = 0;
  std::uint64_t lambda_dot_type = 0;
  std::uint64_t degenerate = 0;

  std::uint64_t total() const { return dot_type + lambda_dot_type + degenerate; }
  std::uint64_t of(SubspaceClass c) const;
  ClassTally& operator+=(const ClassTally& o) {
    dot_type += o.dot_type;
    lambda_dot_type += o.lambda_dot_type;
    degenerate += o.degenerate;
    return *this;
  }
  friend bool operator==(const ClassTally&, const ClassTally&) = default;
};

/// Exhaustive classification of all k-subspaces; parallel over opts.jobs.
ClassTally count_subspaces_by_class(const AmbientForm& ambient, int k, const Options& opts = {});

enum class PosetKind { Euclidean, Lorentzian };

struct PosetNode {
  Subspace sub;
  int rank;
};

/// E_n(q) or LO_n(q) with bottom (zero space, index 0) and top (whole space,
/// last index). Nodes are sorted by rank; Hasse edges join consecutive ranks.
struct PosetSnapshot {
  AmbientForm ambient;
  PosetKind kind;
  std::vector<PosetNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // (lower, upper)

  std::vector<std::size_t> rank_sizes() const;
  std::size_t top() const { return nodes.size() - 1; }
};

PosetSnapshot build_poset(const AmbientForm& ambient, PosetKind kind, const Options& opts = {});

/// Maximal bottom-to-top chains, counted by dynamic programming over ranks.
BigInt count_flags(const PosetSnapshot& snapshot);

/// mu(bottom, top) from the defining recursion mu(x, y) = -sum_{x <= z < y} mu(x, z),
/// with the order relation recomputed by subspace containment.
BigInt mobius_bottom(const PosetSnapshot& snapshot, const Options& opts = {});

/// Hasse diagram as a Graphviz digraph, one edge per line.
std::string hasse_to_dot(const PosetSnapshot& snapshot);

/// Number of n x n matrices M with M^T G M = G for the ambient Gram matrix G.
/// Requires q^(n^2) <= budget.
std::uint64_t enumerate_orthogonal_group(const AmbientForm& ambient, const Options& opts = {});

/// Subsets A of Z/(n+1)Z with A = -A, 0 not in A and |A| = k, by scanning all
/// subsets of {1..n}. Requires n <= 24.
std::uint64_t count_symmetric_ksets(int n, int k);

struct CountReport {
  std::string ambient;
  std::vector<ClassTally> by_dim;  // index k = 0..n
  LineCounts lines;
  std::optional<BigInt> flag_count;            // Euclidean poset, when within budget
  std::optional<BigInt> mobius_bottom_to_top;  // same poset
  std::chrono::duration<double> elapsed{};
};

CountReport count_report(const AmbientForm& ambient, const Options& opts = {}, bool with_poset = true);

/// "key=value" lines; the elapsed time only when asked for.
std::string to_key_value(const CountReport& report, bool include_elapsed = false);

}  // namespace dotbinom::oracle
