#include "dotbinom/gf.hpp"

#include <algorithm>
#include <sstream>

#include "dotbinom/error.hpp"

namespace dotbinom::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, lowest first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly unpack(std::uint32_t code, std::uint32_t p, unsigned len) {
  Poly c(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t pack(const Poly& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = unpack(low, p, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr make_field(std::uint32_t p, unsigned e) {
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1 || e > kMaxDegree) {
    throw Error(Errc::DegreeOutOfRange,
                "degree " + std::to_string(e) + " outside 1.." + std::to_string(kMaxDegree));
  }
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > kMaxOrder) {
      throw Error(Errc::OrderOutOfRange,
                  "field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  const auto q = static_cast<std::uint32_t>(q64);

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = q;

  // Smallest monic irreducible by code of its lower coefficients.
  for (std::uint32_t low = 0; low < q; ++low) {
    Poly m = unpack(low, p, e);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      f->modulus_ = m;
      break;
    }
  }

  f->add_.resize(std::size_t{q} * q);
  f->mul_.resize(std::size_t{q} * q);
  f->neg_.resize(q);
  f->inv_.assign(q, 0);
  f->square_class_.assign(q, 0);

  std::vector<Poly> elems(q);
  for (std::uint32_t a = 0; a < q; ++a) elems[a] = unpack(a, p, e);

  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(e);
    for (unsigned i = 0; i < e; ++i) n[i] = (p - elems[a][i]) % p;
    f->neg_[a] = static_cast<std::uint16_t>(pack(n, p));
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      f->add_[std::size_t{a} * q + b] = static_cast<std::uint16_t>(pack(s, p));
      Poly prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i) {
        if (elems[a][i] == 0) continue;
        for (unsigned j = 0; j < e; ++j) {
          prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
        }
      }
      Poly r = poly_mod(prod, f->modulus_, p);
      r.resize(e, 0);
      f->mul_[std::size_t{a} * q + b] = static_cast<std::uint16_t>(pack(r, p));
    }
  }

  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (f->mul_[std::size_t{a} * q + b] == 1) {
        f->inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }

  // Euler's criterion: a^((q-1)/2) = 1 for squares, -1 otherwise.
  bool have_lambda = false;
  for (std::uint32_t a = 1; a < q; ++a) {
    const FieldElement h = f->pow(FieldElement{a}, (q - 1) / 2);
    f->square_class_[a] = h == f->one() ? 1 : -1;
    if (!have_lambda && h != f->one()) {
      f->lambda_ = FieldElement{a};
      have_lambda = true;
    }
  }
  return f;
}

FieldPtr make_field_of_order(std::uint64_t q) {
  const PrimePower pp = odd_prime_power(q);
  if (pp.p > kMaxOrder) {
    throw Error(Errc::OrderOutOfRange, "field order exceeds " + std::to_string(kMaxOrder));
  }
  return make_field(static_cast<std::uint32_t>(pp.p), pp.e);
}

FieldElement Field::from_int(long long v) const {
  const long long r = ((v % static_cast<long long>(p_)) + p_) % p_;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) {
    throw Error(Errc::InvalidArgument, "coefficient list longer than the extension degree");
  }
  Poly c(coeffs.begin(), coeffs.end());
  for (auto v : c) {
    if (v >= p_) throw Error(Errc::InvalidArgument, "coefficient not reduced mod p");
  }
  c.resize(e_, 0);
  return FieldElement{pack(c, p_)};
}

FieldElement Field::from_code(std::uint32_t code) const {
  if (code >= q_) throw Error(Errc::InvalidArgument, "element code out of range");
  return FieldElement{code};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const { return unpack(a.code(), p_, e_); }

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return FieldElement{inv_[a.code()]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t exponent) const {
  FieldElement result = one();
  FieldElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t a = 0; a < q_; ++a) out.emplace_back(a);
  return out;
}

std::string Field::to_string(FieldElement a) const {
  if (e_ == 1) return std::to_string(a.code());
  const Poly c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace dotbinom::gf
