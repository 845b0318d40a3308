#include <gtest/gtest.h>

#include <set>

#include "dotbinom/error.hpp"
#include "dotbinom/gf.hpp"

using namespace dotbinom;
using gf::FieldElement;
using gf::SquareClass;

namespace {

const std::uint64_t kOrdersUpTo49[] = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Field, PrimeFieldLambda) {
  EXPECT_EQ(gf::make_field(5, 1)->lambda(), FieldElement(2));
  EXPECT_EQ(gf::make_field(3, 1)->lambda(), FieldElement(2));
  EXPECT_EQ(gf::make_field(7, 1)->lambda(), FieldElement(3));
  EXPECT_EQ(gf::make_field(5, 1)->q(), 5u);
}

TEST(Field, Gf9Modulus) {
  auto f = gf::make_field(3, 2);
  EXPECT_EQ(f->q(), 9u);
  EXPECT_EQ(f->q_mod4(), 1);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  const FieldElement t = f->from_coeffs(std::vector<std::uint32_t>{0, 1});
  EXPECT_EQ(f->mul(t, t), f->from_int(2));
}

TEST(Field, SmallArithmetic) {
  auto f = gf::make_field(7, 1);
  EXPECT_EQ(f->mul(FieldElement(3), FieldElement(5)), FieldElement(1));
  EXPECT_EQ(f->inv(FieldElement(3)), FieldElement(5));
  EXPECT_EQ(f->from_int(-1), FieldElement(6));
  EXPECT_EQ(code_of([&] { f->inv(FieldElement(0)); }), Errc::DivisionByZero);
}

TEST(Field, SquareClassExamples) {
  auto f = gf::make_field(7, 1);
  EXPECT_EQ(f->square_class(FieldElement(2)), SquareClass::Square);
  EXPECT_EQ(f->square_class(FieldElement(3)), SquareClass::NonSquare);
  EXPECT_EQ(f->square_class(FieldElement(0)), SquareClass::Zero);
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { gf::make_field(2, 1); }), Errc::EvenCharacteristic);
  EXPECT_EQ(code_of([] { gf::make_field(9, 1); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { gf::make_field(3, 5); }), Errc::DegreeOutOfRange);
  EXPECT_EQ(code_of([] { gf::make_field(3, 0); }), Errc::DegreeOutOfRange);
  EXPECT_EQ(code_of([] { gf::make_field(37, 2); }), Errc::OrderOutOfRange);
}

TEST(Field, ModulusIsSmallestIrreducible) {
  for (auto [p, e] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {3u, 4u}, {7u, 2u}}) {
    auto f = gf::make_field(p, e);
    const auto& m = f->modulus();
    ASSERT_TRUE(gf::is_irreducible(m, p));
    // Every monic polynomial with a smaller code is reducible.
    std::uint64_t code = 0;
    for (unsigned i = e; i-- > 0;) code = code * p + m[i];
    for (std::uint64_t c = 0; c < code; ++c) {
      std::vector<std::uint32_t> cand(e + 1, 0);
      std::uint64_t rest = c;
      for (unsigned i = 0; i < e; ++i) {
        cand[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      cand[e] = 1;
      EXPECT_FALSE(gf::is_irreducible(cand, p)) << "p=" << p << " e=" << e << " c=" << c;
    }
  }
}

class FieldSweep : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FieldSweep, Axioms) {
  auto f = gf::make_field_of_order(GetParam());
  const auto els = f->elements();
  ASSERT_EQ(els.size(), GetParam());
  for (auto a : els) {
    EXPECT_EQ(f->add(a, f->neg(a)), f->zero());
    if (!a.is_zero()) EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
    for (auto b : els) {
      EXPECT_EQ(f->mul(a, b), f->mul(b, a));
      EXPECT_EQ(f->add(a, b), f->add(b, a));
    }
  }
  // Distributivity on a sample triple grid.
  for (std::size_t i = 0; i < els.size(); i += 3) {
    for (std::size_t j = 0; j < els.size(); j += 5) {
      for (std::size_t k = 0; k < els.size(); k += 7) {
        EXPECT_EQ(f->mul(els[i], f->add(els[j], els[k])),
                  f->add(f->mul(els[i], els[j]), f->mul(els[i], els[k])));
      }
    }
  }
}

TEST_P(FieldSweep, SquareClassesByExhaustiveSquaring) {
  auto f = gf::make_field_of_order(GetParam());
  const std::uint64_t q = GetParam();
  std::set<FieldElement> squares;
  for (auto x : f->elements()) {
    if (!x.is_zero()) squares.insert(f->mul(x, x));
  }
  EXPECT_EQ(squares.size(), (q - 1) / 2);
  std::size_t non_squares = 0;
  for (auto a : f->elements()) {
    const auto c = f->square_class(a);
    if (a.is_zero()) {
      EXPECT_EQ(c, SquareClass::Zero);
      continue;
    }
    EXPECT_EQ(c == SquareClass::Square, squares.count(a) == 1);
    EXPECT_EQ(c == SquareClass::Square, f->pow(a, (q - 1) / 2) == f->one());
    if (c == SquareClass::NonSquare) ++non_squares;
  }
  EXPECT_EQ(non_squares, (q - 1) / 2);
  EXPECT_EQ(f->square_class(f->lambda()), SquareClass::NonSquare);
  for (std::uint32_t c = 1; c < f->lambda().code(); ++c) {
    EXPECT_EQ(f->square_class(FieldElement(c)), SquareClass::Square);
  }
}

TEST_P(FieldSweep, SquareClassIsMultiplicative) {
  auto f = gf::make_field_of_order(GetParam());
  for (auto a : f->elements()) {
    for (auto b : f->elements()) {
      if (a.is_zero() || b.is_zero()) continue;
      const int ca = static_cast<int>(f->square_class(a));
      const int cb = static_cast<int>(f->square_class(b));
      EXPECT_EQ(static_cast<int>(f->square_class(f->mul(a, b))), ca * cb);
    }
  }
}

TEST_P(FieldSweep, MinusOneMatchesQMod4) {
  auto f = gf::make_field_of_order(GetParam());
  const auto expected = GetParam() % 4 == 1 ? SquareClass::Square : SquareClass::NonSquare;
  EXPECT_EQ(f->square_class(f->from_int(-1)), expected);
}

INSTANTIATE_TEST_SUITE_P(OrdersUpTo49, FieldSweep, ::testing::ValuesIn(kOrdersUpTo49));
