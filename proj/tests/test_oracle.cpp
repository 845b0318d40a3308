#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "dotbinom/error.hpp"
#include "dotbinom/oracle.hpp"

using namespace dotbinom;
using namespace dotbinom::oracle;
using quad::SubspaceClass;

namespace {

AmbientForm dot(std::uint64_t q, int n) { return AmbientForm::dot(gf::make_field_of_order(q), n); }
AmbientForm ldot(std::uint64_t q, int n) { return AmbientForm::lambda_dot(gf::make_field_of_order(q), n); }

// Enumerated tallies (k = 0..n) frozen from the exhaustive oracle.
struct Frozen {
  std::uint64_t q;
  int n;
  std::vector<std::uint64_t> dd, dl, ld, ll;
};

const Frozen kFrozen[] = {
    {3, 2, {1, 2, 1}, {0, 2, 0}, {1, 1, 0}, {0, 1, 1}},
    {3, 3, {1, 3, 3, 1}, {0, 6, 6, 0}, {1, 6, 3, 0}, {0, 3, 6, 1}},
    {3, 4, {1, 12, 18, 12, 1}, {0, 12, 72, 12, 0}, {1, 15, 45, 15, 0}, {0, 15, 45, 15, 1}},
    {5, 2, {1, 2, 1}, {0, 2, 0}, {1, 3, 0}, {0, 3, 1}},
    {5, 3, {1, 15, 15, 1}, {0, 10, 10, 0}, {1, 10, 15, 0}, {0, 15, 10, 1}},
    {5, 4, {1, 60, 450, 60, 1}, {0, 60, 200, 60, 0}, {1, 65, 325, 65, 0}, {0, 65, 325, 65, 1}},
    {7, 2, {1, 4, 1}, {0, 4, 0}, {1, 3, 0}, {0, 3, 1}},
    {7, 3, {1, 21, 21, 1}, {0, 28, 28, 0}, {1, 28, 21, 0}, {0, 21, 28, 1}},
};

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_subspaces(dot(3, 2), 1).size(), 4u);
  EXPECT_EQ(enumerate_subspaces(dot(5, 3), 1).size(), 31u);
  EXPECT_EQ(enumerate_subspaces(dot(3, 4), 2).size(), 130u);
  EXPECT_EQ(enumerate_subspaces(dot(9, 3), 2).size(), 91u);
}

TEST(Enumerate, DistinctAndRref) {
  auto subs = enumerate_subspaces(dot(3, 4), 2);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    EXPECT_TRUE(quad::is_rref(subs[i].basis()));
    for (std::size_t j = i + 1; j < subs.size(); ++j) EXPECT_FALSE(subs[i] == subs[j]);
  }
}

TEST(Enumerate, Budget) {
  Options o;
  o.budget = 100;
  EXPECT_EQ(code_of([&] { enumerate_subspaces(dot(3, 4), 2, o); }), Errc::BudgetExceeded);
}

TEST(CountLines, Examples) {
  EXPECT_EQ(count_lines(dot(5, 2)), (LineCounts{2, 2, 2}));
  EXPECT_EQ(count_lines(dot(3, 2)), (LineCounts{2, 2, 0}));
  EXPECT_EQ(count_lines(dot(3, 3)), (LineCounts{3, 6, 4}));
  EXPECT_EQ(count_lines(ldot(3, 2)), (LineCounts{1, 1, 2}));
}

TEST(ClassTally, Examples) {
  EXPECT_EQ(count_subspaces_by_class(dot(3, 3), 2).dot_type, 3u);
  EXPECT_EQ(count_subspaces_by_class(dot(3, 4), 2).dot_type, 18u);
  EXPECT_EQ(count_subspaces_by_class(dot(7, 3), 0).dot_type, 1u);
}

TEST(ClassTally, FrozenTables) {
  for (const auto& f : kFrozen) {
    for (int k = 0; k <= f.n; ++k) {
      const auto td = count_subspaces_by_class(dot(f.q, f.n), k);
      const auto tl = count_subspaces_by_class(ldot(f.q, f.n), k);
      EXPECT_EQ(td.dot_type, f.dd[k]) << f.q << ' ' << f.n << ' ' << k;
      EXPECT_EQ(td.lambda_dot_type, f.dl[k]) << f.q << ' ' << f.n << ' ' << k;
      EXPECT_EQ(tl.dot_type, f.ld[k]) << f.q << ' ' << f.n << ' ' << k;
      EXPECT_EQ(tl.lambda_dot_type, f.ll[k]) << f.q << ' ' << f.n << ' ' << k;
      EXPECT_EQ(BigInt(td.total()), gaussian_binomial(f.q, f.n, k));
      EXPECT_EQ(BigInt(tl.total()), gaussian_binomial(f.q, f.n, k));
    }
  }
}

TEST(ClassTally, ThreadCountDoesNotMatter) {
  Options one;
  Options four;
  four.jobs = 4;
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(count_subspaces_by_class(dot(5, 4), k, one), count_subspaces_by_class(dot(5, 4), k, four));
  }
}

TEST(ClassTally, RankSymmetry) {
  for (std::uint64_t q : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      if (q == 7 && n == 4) continue;
      for (auto a : {dot(q, n), ldot(q, n)}) {
        for (int k = 0; k <= n; ++k) {
          const auto lo = count_subspaces_by_class(a, k);
          const auto hi = count_subspaces_by_class(a, n - k);
          if (a.kind() == quad::FormKind::Dot) {
            EXPECT_EQ(lo.dot_type, hi.dot_type);
            if (k > 0 && k < n) EXPECT_EQ(lo.lambda_dot_type, hi.lambda_dot_type);
          }
          if (k > 0 && k < n) EXPECT_LT(BigInt(lo.dot_type), gaussian_binomial(q, n, k));
        }
      }
    }
  }
}

TEST(ClassTally, PerpBijectsDotTypes) {
  const auto a = dot(5, 4);
  for (int k = 0; k <= 4; ++k) {
    std::size_t dot_type = 0;
    for (const auto& w : enumerate_subspaces(a, k)) {
      if (quad::classify(w) != SubspaceClass::DotType) continue;
      ++dot_type;
      EXPECT_EQ(quad::classify(quad::perp(w)), SubspaceClass::DotType);
    }
    EXPECT_EQ(dot_type, count_subspaces_by_class(a, 4 - k).dot_type);
  }
}

TEST(ClassTally, FlagDoubleCount) {
  for (std::uint64_t q : {3, 5, 7}) {
    for (int n = 2; n <= 4; ++n) {
      if (q == 7 && n == 4) continue;
      for (int k = 1; k <= n; ++k) {
        const auto lines_in_k = count_subspaces_by_class(dot(q, k), 1).dot_type;
        const auto k_in_n = count_subspaces_by_class(dot(q, n), k).dot_type;
        const auto lines_in_n = count_subspaces_by_class(dot(q, n), 1).dot_type;
        const auto rest = count_subspaces_by_class(dot(q, n - 1), k - 1).dot_type;
        EXPECT_EQ(lines_in_k * k_in_n, lines_in_n * rest) << q << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(ClassTally, ContainingASpacelikeLineIsUniform) {
  for (std::uint64_t q : {3, 5}) {
    for (int n = 2; n <= 4; ++n) {
      const auto a = dot(q, n);
      std::vector<quad::Subspace> lines;
      for (const auto& l : enumerate_subspaces(a, 1)) {
        if (quad::classify(l) == SubspaceClass::DotType) lines.push_back(l);
      }
      for (int k = 1; k <= n; ++k) {
        std::vector<quad::Subspace> ks;
        for (const auto& w : enumerate_subspaces(a, k)) {
          if (quad::classify(w) == SubspaceClass::DotType) ks.push_back(w);
        }
        std::set<std::size_t> seen;
        for (const auto& l : lines) {
          std::size_t c = 0;
          for (const auto& w : ks) c += quad::contains(w, l) ? 1 : 0;
          seen.insert(c);
        }
        EXPECT_EQ(seen.size(), 1u) << q << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(ClassTally, LambdaChoiceInvariant) {
  for (std::uint64_t q : {3, 5, 7}) {
    auto f = gf::make_field_of_order(q);
    std::vector<gf::FieldElement> non_squares;
    for (auto x : f->elements()) {
      if (f->square_class(x) == gf::SquareClass::NonSquare) non_squares.push_back(x);
    }
    ASSERT_GE(non_squares.size(), 1u);
    const auto other = non_squares.back();
    for (int n = 1; n <= 3; ++n) {
      const auto a = AmbientForm::lambda_dot(f, n);
      const auto b = AmbientForm::lambda_dot(f, n, other);
      EXPECT_EQ(count_lines(a), count_lines(b));
      for (int k = 0; k <= n; ++k) EXPECT_EQ(count_subspaces_by_class(a, k), count_subspaces_by_class(b, k));
    }
    if (q > 3) EXPECT_NE(other, f->lambda());
  }
}

TEST(Poset, RankSizes) {
  EXPECT_EQ(build_poset(dot(5, 2), PosetKind::Euclidean).rank_sizes(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(build_poset(dot(3, 3), PosetKind::Euclidean).rank_sizes(), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(build_poset(dot(3, 2), PosetKind::Lorentzian).rank_sizes(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Poset, EdgesJoinConsecutiveRanks) {
  const auto s = build_poset(dot(3, 4), PosetKind::Euclidean);
  for (const auto& [lo, hi] : s.hasse_edges) {
    EXPECT_EQ(s.nodes[hi].rank, s.nodes[lo].rank + 1);
    EXPECT_TRUE(quad::contains(s.nodes[hi].sub, s.nodes[lo].sub));
  }
}

TEST(Flags, Examples) {
  EXPECT_EQ(count_flags(build_poset(dot(5, 2), PosetKind::Euclidean)), 2);
  EXPECT_EQ(count_flags(build_poset(dot(3, 3), PosetKind::Euclidean)), 6);
  EXPECT_EQ(count_flags(build_poset(dot(7, 1), PosetKind::Euclidean)), 1);
}

TEST(Flags, DynamicProgramMatchesChainEnumeration) {
  for (auto a : {dot(5, 2), dot(3, 3), dot(5, 3)}) {
    const auto s = build_poset(a, PosetKind::Euclidean);
    std::map<std::size_t, std::vector<std::size_t>> up;
    for (const auto& [lo, hi] : s.hasse_edges) up[lo].push_back(hi);
    std::uint64_t chains = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      if (v == s.top()) {
        ++chains;
        return;
      }
      for (auto w : up[v]) walk(w);
    };
    walk(0);
    EXPECT_EQ(count_flags(s), chains);
  }
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius_bottom(build_poset(dot(5, 1), PosetKind::Euclidean)), -1);
  EXPECT_EQ(mobius_bottom(build_poset(dot(5, 2), PosetKind::Euclidean)), 1);
  EXPECT_EQ(mobius_bottom(build_poset(dot(3, 3), PosetKind::Euclidean)), -1);
}

TEST(OrthogonalGroup, Examples) {
  EXPECT_EQ(enumerate_orthogonal_group(dot(5, 2)), 8u);
  EXPECT_EQ(enumerate_orthogonal_group(dot(3, 2)), 8u);
  EXPECT_EQ(enumerate_orthogonal_group(dot(3, 3)), 48u);
  EXPECT_EQ(enumerate_orthogonal_group(dot(7, 1)), 2u);
  Options o;
  o.budget = 1000;
  EXPECT_EQ(code_of([&] { enumerate_orthogonal_group(dot(3, 3), o); }), Errc::BudgetExceeded);
}

TEST(SymmetricKSets, Examples) {
  EXPECT_EQ(count_symmetric_ksets(5, 3), 2u);
  EXPECT_EQ(count_symmetric_ksets(4, 1), 0u);
  EXPECT_EQ(count_symmetric_ksets(6, 2), 3u);
}

TEST(Hasse, DotExport) {
  const auto text = hasse_to_dot(build_poset(dot(5, 2), PosetKind::Euclidean));
  EXPECT_EQ(text,
            "digraph E_2_GF5 {\n"
            "  \"0\" -> \"10\";\n"
            "  \"0\" -> \"01\";\n"
            "  \"10\" -> \"10,01\";\n"
            "  \"01\" -> \"10,01\";\n"
            "}\n");
}

TEST(CountReport, KeyValueIsStable) {
  const auto r = count_report(dot(3, 2));
  EXPECT_EQ(to_key_value(r),
            "ambient=dot_2/GF(3)\n"
            "k0.dot_type=1\nk0.lambda_dot_type=0\nk0.degenerate=0\nk0.total=1\n"
            "k1.dot_type=2\nk1.lambda_dot_type=2\nk1.degenerate=0\nk1.total=4\n"
            "k2.dot_type=1\nk2.lambda_dot_type=0\nk2.degenerate=0\nk2.total=1\n"
            "lines.spacelike=2\nlines.timelike=2\nlines.lightlike=0\n"
            "flag_count=2\nmobius_bottom_to_top=1\n");
}
