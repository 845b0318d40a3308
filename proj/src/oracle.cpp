#include "dotbinom/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

#include "dotbinom/error.hpp"

namespace dotbinom::oracle {

namespace {

// One pivot-column pattern of a k x n RREF matrix and its free positions.
struct Pattern {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free;  // (row, col)
  std::uint64_t count = 1;                // q^free.size()
};

std::vector<Pattern> rref_patterns(int n, int k, std::uint64_t q) {
  std::vector<Pattern> out;
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    Pattern p;
    p.pivots = piv;
    for (int i = 0; i < k; ++i) {
      for (int j = piv[i] + 1; j < n; ++j) {
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) {
          p.free.emplace_back(i, j);
          p.count *= q;
        }
      }
    }
    out.push_back(std::move(p));
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

struct Unit {
  std::size_t pattern;
  std::uint64_t begin;
  std::uint64_t end;
};

constexpr std::uint64_t kChunk = 1U << 14;

std::vector<Unit> split_units(const std::vector<Pattern>& patterns) {
  std::vector<Unit> units;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (std::uint64_t b = 0; b < patterns[p].count; b += kChunk) {
      units.push_back({p, b, std::min(patterns[p].count, b + kChunk)});
    }
  }
  return units;
}

// Visits assignments [begin, end) of one pattern, reusing `rows`.
template <class Visit>
void run_unit(const Pattern& pat, std::uint64_t begin, std::uint64_t end, int n, std::uint32_t q,
              std::vector<FieldElement>& rows, Visit&& visit) {
  const int k = static_cast<int>(pat.pivots.size());
  rows.assign(std::size_t(k) * n, FieldElement{});
  for (int i = 0; i < k; ++i) rows[std::size_t(i) * n + pat.pivots[i]] = FieldElement{1};
  const std::size_t f = pat.free.size();
  std::vector<std::uint32_t> digits(f, 0);
  std::uint64_t idx = begin;
  for (std::size_t d = 0; d < f; ++d) {
    digits[d] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  auto slot = [&](std::size_t d) -> FieldElement& {
    return rows[std::size_t(pat.free[d].first) * n + pat.free[d].second];
  };
  for (std::size_t d = 0; d < f; ++d) slot(d) = FieldElement{digits[d]};
  for (std::uint64_t a = begin; a < end; ++a) {
    visit(std::span<const FieldElement>(rows));
    for (std::size_t d = 0; d < f; ++d) {
      if (++digits[d] < q) {
        slot(d) = FieldElement{digits[d]};
        break;
      }
      digits[d] = 0;
      slot(d) = FieldElement{0};
    }
  }
}

void check_budget(const BigInt& needed, const Options& opts, const std::string& what) {
  if (needed > opts.budget) {
    throw Error(Errc::BudgetExceeded, what + " needs " + needed.str() + " > budget " +
                                          std::to_string(opts.budget));
  }
}

void check_dim(const AmbientForm& ambient, int k) {
  if (k < 0 || k > ambient.n()) {
    throw Error(Errc::DimensionMismatch,
                "subspace dimension " + std::to_string(k) + " outside 0.." + std::to_string(ambient.n()));
  }
}

// Sums per-thread tallies; Visit is void(std::span<const FieldElement>, Tally&).
template <class Tally, class Visit>
Tally parallel_tally(const AmbientForm& ambient, int k, const Options& opts, Visit visit) {
  check_dim(ambient, k);
  const std::uint32_t q = ambient.field().q();
  check_budget(gaussian_binomial(q, ambient.n(), k), opts, "subspace enumeration");
  const auto patterns = rref_patterns(ambient.n(), k, q);
  const auto units = split_units(patterns);
  const unsigned workers =
      std::max(1U, std::min<unsigned>(opts.jobs, static_cast<unsigned>(units.size())));
  std::vector<Tally> partial(workers);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    std::vector<FieldElement> rows;
    Tally& t = partial[w];
    for (std::size_t u = next.fetch_add(1); u < units.size(); u = next.fetch_add(1)) {
      const Unit& unit = units[u];
      run_unit(patterns[unit.pattern], unit.begin, unit.end, ambient.n(), q, rows,
               [&](std::span<const FieldElement> r) { visit(r, t); });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  Tally total{};
  for (const auto& t : partial) total += t;
  return total;
}

}  // namespace

void for_each_subspace(const AmbientForm& ambient, int k, const Options& opts,
                       const std::function<void(std::span<const FieldElement>)>& visit) {
  check_dim(ambient, k);
  const std::uint32_t q = ambient.field().q();
  check_budget(gaussian_binomial(q, ambient.n(), k), opts, "subspace enumeration");
  std::vector<FieldElement> rows;
  for (const auto& pat : rref_patterns(ambient.n(), k, q)) {
    run_unit(pat, 0, pat.count, ambient.n(), q, rows, visit);
  }
}

std::vector<Subspace> enumerate_subspaces(const AmbientForm& ambient, int k, const Options& opts) {
  std::vector<Subspace> out;
  for_each_subspace(ambient, k, opts, [&](std::span<const FieldElement> rows) {
    out.push_back(Subspace::from_rref(
        ambient, quad::Matrix(k, ambient.n(), std::vector<FieldElement>(rows.begin(), rows.end()))));
  });
  return out;
}

std::uint64_t ClassTally::of(SubspaceClass c) const {
  switch (c) {
    case SubspaceClass::DotType: return dot_type;
    case SubspaceClass::LambdaDotType: return lambda_dot_type;
    case SubspaceClass::Degenerate: return degenerate;
  }
  return 0;
}

namespace {

struct LineTally {
  LineCounts c;
  LineTally& operator+=(const LineTally& o) {
    c.spacelike += o.c.spacelike;
    c.timelike += o.c.timelike;
    c.lightlike += o.c.lightlike;
    return *this;
  }
};

}  // namespace

LineCounts count_lines(const AmbientForm& ambient, const Options& opts) {
  const gf::Field& f = ambient.field();
  const auto t = parallel_tally<LineTally>(
      ambient, 1, opts, [&](std::span<const FieldElement> row, LineTally& acc) {
        switch (f.square_class(ambient.eval(row))) {
          case gf::SquareClass::Square: ++acc.c.spacelike; break;
          case gf::SquareClass::NonSquare: ++acc.c.timelike; break;
          case gf::SquareClass::Zero: ++acc.c.lightlike; break;
        }
      });
  return t.c;
}

ClassTally count_subspaces_by_class(const AmbientForm& ambient, int k, const Options& opts) {
  return parallel_tally<ClassTally>(ambient, k, opts,
                                    [&](std::span<const FieldElement> rows, ClassTally& acc) {
                                      switch (quad::classify_basis(ambient, rows, k)) {
                                        case SubspaceClass::DotType: ++acc.dot_type; break;
                                        case SubspaceClass::LambdaDotType: ++acc.lambda_dot_type; break;
                                        case SubspaceClass::Degenerate: ++acc.degenerate; break;
                                      }
                                    });
}

std::vector<std::size_t> PosetSnapshot::rank_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(ambient.n()) + 1, 0);
  for (const auto& node : nodes) ++sizes[static_cast<std::size_t>(node.rank)];
  return sizes;
}

PosetSnapshot build_poset(const AmbientForm& ambient, PosetKind kind, const Options& opts) {
  const int n = ambient.n();
  const std::uint32_t q = ambient.field().q();
  BigInt subspaces = 0;
  for (int k = 1; k < n; ++k) subspaces += gaussian_binomial(q, n, k);
  check_budget(subspaces, opts, "poset node enumeration");

  const SubspaceClass wanted =
      kind == PosetKind::Euclidean ? SubspaceClass::DotType : SubspaceClass::LambdaDotType;
  PosetSnapshot snap{ambient, kind, {}, {}};
  snap.nodes.push_back({Subspace::zero(ambient), 0});
  Options unbounded = opts;
  unbounded.budget = std::numeric_limits<std::uint64_t>::max();
  for (int k = 1; k < n; ++k) {
    for_each_subspace(ambient, k, unbounded, [&](std::span<const FieldElement> rows) {
      if (quad::classify_basis(ambient, rows, k) != wanted) return;
      snap.nodes.push_back({Subspace::from_rref(ambient, quad::Matrix(k, n, {rows.begin(), rows.end()})), k});
    });
  }
  snap.nodes.push_back({Subspace::full(ambient), n});

  // Group node indices by rank; edges join consecutive non-empty ranks.
  std::vector<std::vector<std::size_t>> by_rank(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < snap.nodes.size(); ++i) by_rank[snap.nodes[i].rank].push_back(i);
  std::vector<int> ranks;
  for (int r = 0; r <= n; ++r) {
    if (!by_rank[r].empty()) ranks.push_back(r);
  }
  BigInt work = 0;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    work += BigInt(by_rank[ranks[i]].size()) * by_rank[ranks[i + 1]].size();
  }
  check_budget(work, opts, "Hasse diagram containment tests");
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    for (std::size_t lo : by_rank[ranks[i]]) {
      for (std::size_t hi : by_rank[ranks[i + 1]]) {
        if (quad::contains(snap.nodes[hi].sub, snap.nodes[lo].sub)) snap.hasse_edges.emplace_back(lo, hi);
      }
    }
  }
  return snap;
}

BigInt count_flags(const PosetSnapshot& snapshot) {
  std::vector<BigInt> paths(snapshot.nodes.size(), 0);
  paths[0] = 1;
  // Edges were emitted rank by rank, so each lower end is final when used.
  for (const auto& [lo, hi] : snapshot.hasse_edges) paths[hi] += paths[lo];
  return paths[snapshot.top()];
}

BigInt mobius_bottom(const PosetSnapshot& snapshot, const Options& opts) {
  const auto& nodes = snapshot.nodes;
  BigInt work = 0;
  const auto sizes = snapshot.rank_sizes();
  std::size_t below = 0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    work += BigInt(sizes[r]) * below;
    below += sizes[r];
  }
  check_budget(work, opts, "Mobius containment tests");

  std::vector<BigInt> mu(nodes.size(), 0);
  mu[0] = 1;
  for (std::size_t y = 1; y < nodes.size(); ++y) {
    BigInt sum = 0;
    for (std::size_t z = 0; z < y; ++z) {
      if (nodes[z].rank >= nodes[y].rank) continue;
      if (quad::contains(nodes[y].sub, nodes[z].sub)) sum += mu[z];
    }
    mu[y] = -sum;
  }
  return mu[snapshot.top()];
}

std::string hasse_to_dot(const PosetSnapshot& snapshot) {
  std::ostringstream os;
  os << "digraph " << (snapshot.kind == PosetKind::Euclidean ? "E" : "LO") << '_'
     << snapshot.ambient.n() << "_GF" << snapshot.ambient.field().q() << " {\n";
  for (const auto& [lo, hi] : snapshot.hasse_edges) {
    os << "  \"" << quad::label(snapshot.nodes[lo].sub) << "\" -> \"" << quad::label(snapshot.nodes[hi].sub)
       << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::uint64_t enumerate_orthogonal_group(const AmbientForm& ambient, const Options& opts) {
  const int n = ambient.n();
  const gf::Field& f = ambient.field();
  const std::uint32_t q = f.q();
  check_budget(pow_big(q, static_cast<unsigned>(n * n)), opts, "orthogonal group enumeration");

  // Column j of M must have Q = G_jj and be B-orthogonal to columns < j;
  // together these are exactly the entries of M^T G M = G.
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= q;
  std::vector<std::vector<std::vector<FieldElement>>> candidates(static_cast<std::size_t>(n));
  std::vector<FieldElement> v(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < vectors; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = FieldElement{static_cast<std::uint32_t>(c % q)};
      c /= q;
    }
    const FieldElement norm = ambient.eval(v);
    for (int j = 0; j < n; ++j) {
      if (norm == ambient.gram_diag()[j]) candidates[j].push_back(v);
    }
  }
  std::vector<const std::vector<FieldElement>*> chosen(static_cast<std::size_t>(n), nullptr);
  std::uint64_t count = 0;
  std::function<void(int)> extend = [&](int j) {
    if (j == n) {
      ++count;
      return;
    }
    for (const auto& cand : candidates[j]) {
      bool orthogonal = true;
      for (int i = 0; i < j && orthogonal; ++i) orthogonal = ambient.bilinear(*chosen[i], cand).is_zero();
      if (!orthogonal) continue;
      chosen[j] = &cand;
      extend(j + 1);
    }
  };
  extend(0);
  return count;
}

std::uint64_t count_symmetric_ksets(int n, int k) {
  if (n < 0 || n > 24) throw Error(Errc::InvalidArgument, "symmetric k-set scan supports 0 <= n <= 24");
  if (k < 0 || k > n) return 0;
  // Bit i-1 stands for residue i in {1..n}; -i = n+1-i.
  std::uint64_t count = 0;
  const std::uint32_t limit = n == 0 ? 1U : (1U << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != k) continue;
    bool symmetric = true;
    for (int i = 1; i <= n && symmetric; ++i) {
      const bool has = (mask >> (i - 1)) & 1U;
      const bool has_neg = (mask >> (n - i)) & 1U;
      symmetric = has == has_neg;
    }
    if (symmetric) ++count;
  }
  return count;
}

CountReport count_report(const AmbientForm& ambient, const Options& opts, bool with_poset) {
  const auto start = std::chrono::steady_clock::now();
  CountReport r;
  r.ambient = ambient.describe();
  for (int k = 0; k <= ambient.n(); ++k) r.by_dim.push_back(count_subspaces_by_class(ambient, k, opts));
  r.lines = count_lines(ambient, opts);
  if (with_poset) {
    try {
      const auto snap = build_poset(ambient, PosetKind::Euclidean, opts);
      r.flag_count = count_flags(snap);
      r.mobius_bottom_to_top = mobius_bottom(snap, opts);
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
    }
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

std::string to_key_value(const CountReport& report, bool include_elapsed) {
  std::ostringstream os;
  os << "ambient=" << report.ambient << '\n';
  for (std::size_t k = 0; k < report.by_dim.size(); ++k) {
    const auto& t = report.by_dim[k];
    os << "k" << k << ".dot_type=" << t.dot_type << '\n'
       << "k" << k << ".lambda_dot_type=" << t.lambda_dot_type << '\n'
       << "k" << k << ".degenerate=" << t.degenerate << '\n'
       << "k" << k << ".total=" << t.total() << '\n';
  }
  os << "lines.spacelike=" << report.lines.spacelike << '\n'
     << "lines.timelike=" << report.lines.timelike << '\n'
     << "lines.lightlike=" << report.lines.lightlike << '\n';
  os << "flag_count=" << (report.flag_count ? report.flag_count->str() : "skipped") << '\n';
  os << "mobius_bottom_to_top="
     << (report.mobius_bottom_to_top ? report.mobius_bottom_to_top->str() : "skipped") << '\n';
  if (include_elapsed) os << "elapsed_seconds=" << report.elapsed.count() << '\n';
  return os.str();
}

}  // namespace dotbinom::oracle
