#include "dotbinom/quadspace.hpp"

#include <array>
#include <sstream>

#include "dotbinom/error.hpp"

namespace dotbinom::quad {

AmbientForm AmbientForm::dot(FieldPtr field, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "ambient dimension must be >= 1");
  std::vector<FieldElement> diag(static_cast<std::size_t>(n), field->one());
  return AmbientForm(std::move(field), FormKind::Dot, std::move(diag));
}

AmbientForm AmbientForm::lambda_dot(FieldPtr field, int n) {
  const FieldElement lambda = field->lambda();
  return lambda_dot(std::move(field), n, lambda);
}

AmbientForm AmbientForm::lambda_dot(FieldPtr field, int n, FieldElement lambda) {
  if (n < 1) throw Error(Errc::InvalidArgument, "ambient dimension must be >= 1");
  if (lambda.code() >= field->q() || field->square_class(lambda) != gf::SquareClass::NonSquare) {
    throw Error(Errc::InvalidArgument, "lambda must be a non-square");
  }
  std::vector<FieldElement> diag(static_cast<std::size_t>(n), field->one());
  diag.back() = lambda;
  return AmbientForm(std::move(field), FormKind::LambdaDot, std::move(diag));
}

FieldElement AmbientForm::eval(std::span<const FieldElement> v) const {
  if (v.size() != diag_.size()) {
    throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                             " vs ambient dimension " + std::to_string(n()));
  }
  const gf::Field& f = *field_;
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(diag_[i], f.mul(v[i], v[i])));
  return acc;
}

FieldElement AmbientForm::bilinear(std::span<const FieldElement> u,
                                   std::span<const FieldElement> v) const {
  if (u.size() != diag_.size() || v.size() != diag_.size()) {
    throw Error(Errc::DimensionMismatch, "vector length vs ambient dimension");
  }
  const gf::Field& f = *field_;
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(diag_[i], f.mul(u[i], v[i])));
  return acc;
}

std::string AmbientForm::describe() const {
  std::ostringstream os;
  os << (kind_ == FormKind::Dot ? "dot_" : "lambdadot_") << n() << "/GF(" << field_->q() << ")";
  if (kind_ == FormKind::LambdaDot) os << "[lambda=" << field_->to_string(diag_.back()) << "]";
  return os.str();
}

Matrix::Matrix(int rows, int cols, std::vector<FieldElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != std::size_t(rows) * cols) {
    throw Error(Errc::DimensionMismatch, "matrix data size does not match its shape");
  }
}

Matrix rref(const gf::Field& f, Matrix m) {
  int lead_row = 0;
  for (int c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    int pivot = -1;
    for (int r = lead_row; r < m.rows(); ++r) {
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead_row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead_row, j));
    }
    const FieldElement s = f.inv(m.at(lead_row, c));
    for (int j = 0; j < m.cols(); ++j) m.at(lead_row, j) = f.mul(m.at(lead_row, j), s);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, c).is_zero()) continue;
      const FieldElement factor = m.at(r, c);
      for (int j = 0; j < m.cols(); ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(lead_row, j)));
      }
    }
    ++lead_row;
  }
  std::vector<FieldElement> kept(m.data().begin(),
                                 m.data().begin() + std::ptrdiff_t(lead_row) * m.cols());
  return Matrix(lead_row, m.cols(), std::move(kept));
}

bool is_rref(const Matrix& m) {
  int last_pivot = -1;
  for (int i = 0; i < m.rows(); ++i) {
    int pivot = -1;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot <= last_pivot || m.at(i, pivot).code() != 1) return false;
    for (int r = 0; r < m.rows(); ++r) {
      if (r != i && !m.at(r, pivot).is_zero()) return false;
    }
    last_pivot = pivot;
  }
  return true;
}

FieldElement determinant(const gf::Field& f, Matrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  FieldElement det = f.one();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!m.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return f.zero();
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const FieldElement s = f.inv(m.at(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      const FieldElement factor = f.mul(m.at(r, c), s);
      for (int j = c; j < n; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

namespace {

// Determinant of a k x k matrix of codes, destroyed in place.
std::uint16_t det_in_place(const gf::Field& f, std::uint16_t* g, int k) {
  const std::uint32_t q = f.q();
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* mul = f.mul_table();
  const std::uint16_t* neg = f.neg_table();
  const std::uint16_t* inv = f.inv_table();
  std::uint16_t det = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = -1;
    for (int r = c; r < k; ++r) {
      if (g[r * k + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < k; ++j) std::swap(g[pivot * k + j], g[c * k + j]);
      det = neg[det];
    }
    const std::uint16_t pv = g[c * k + c];
    det = mul[det * q + pv];
    const std::uint16_t s = inv[pv];
    for (int r = c + 1; r < k; ++r) {
      const std::uint16_t entry = g[r * k + c];
      if (entry == 0) continue;
      const std::uint16_t factor = neg[mul[entry * q + s]];
      for (int j = c; j < k; ++j) {
        g[r * k + j] = add[g[r * k + j] * q + mul[factor * q + g[c * k + j]]];
      }
    }
  }
  return det;
}

}  // namespace

FieldElement gram_determinant(const AmbientForm& ambient, std::span<const FieldElement> rows, int k) {
  const int n = ambient.n();
  if (k < 0 || rows.size() != std::size_t(k) * n) {
    throw Error(Errc::DimensionMismatch, "basis rows do not match ambient dimension");
  }
  if (k == 0) return ambient.field().one();
  const gf::Field& f = ambient.field();
  const std::uint32_t q = f.q();
  const std::uint16_t* add = f.add_table();
  const std::uint16_t* mul = f.mul_table();
  const auto diag = ambient.gram_diag();

  constexpr int kStack = 16;
  std::array<std::uint16_t, kStack * kStack> stack_buf{};
  std::vector<std::uint16_t> heap_buf;
  std::uint16_t* g = stack_buf.data();
  if (k > kStack) {
    heap_buf.resize(std::size_t(k) * k);
    g = heap_buf.data();
  }
  for (int i = 0; i < k; ++i) {
    const FieldElement* ri = rows.data() + std::size_t(i) * n;
    for (int j = i; j < k; ++j) {
      const FieldElement* rj = rows.data() + std::size_t(j) * n;
      std::uint16_t acc = 0;
      for (int l = 0; l < n; ++l) {
        if (ri[l].is_zero() || rj[l].is_zero()) continue;
        const std::uint16_t w = mul[diag[l].code() * q + ri[l].code()];
        acc = add[acc * q + mul[w * q + rj[l].code()]];
      }
      g[i * k + j] = acc;
      g[j * k + i] = acc;
    }
  }
  return FieldElement{det_in_place(f, g, k)};
}

std::string_view to_string(SubspaceClass c) {
  switch (c) {
    case SubspaceClass::DotType: return "DotType";
    case SubspaceClass::LambdaDotType: return "LambdaDotType";
    case SubspaceClass::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(LineType t) {
  switch (t) {
    case LineType::Spacelike: return "Spacelike";
    case LineType::Timelike: return "Timelike";
    case LineType::Lightlike: return "Lightlike";
  }
  return "?";
}

SubspaceClass classify_basis(const AmbientForm& ambient, std::span<const FieldElement> rows, int k) {
  if (k == 0) return SubspaceClass::DotType;
  const FieldElement det = gram_determinant(ambient, rows, k);
  switch (ambient.field().square_class(det)) {
    case gf::SquareClass::Zero: return SubspaceClass::Degenerate;
    case gf::SquareClass::Square: return SubspaceClass::DotType;
    case gf::SquareClass::NonSquare: return SubspaceClass::LambdaDotType;
  }
  return SubspaceClass::Degenerate;
}

Subspace Subspace::span(const AmbientForm& ambient, Matrix rows) {
  if (rows.cols() != ambient.n()) {
    throw Error(Errc::DimensionMismatch, "spanning rows do not match ambient dimension");
  }
  return Subspace(ambient, rref(ambient.field(), std::move(rows)));
}

Subspace Subspace::from_rref(const AmbientForm& ambient, Matrix basis) {
  if (basis.cols() != ambient.n()) {
    throw Error(Errc::DimensionMismatch, "basis does not match ambient dimension");
  }
  if (!is_rref(basis)) throw Error(Errc::InvalidArgument, "basis is not in reduced row echelon form");
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::zero(const AmbientForm& ambient) { return Subspace(ambient, Matrix(0, ambient.n())); }

Subspace Subspace::full(const AmbientForm& ambient) {
  const int n = ambient.n();
  Matrix id(n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = ambient.field().one();
  return Subspace(ambient, std::move(id));
}

Matrix gram_of(const Subspace& sub) {
  const int k = sub.dim();
  Matrix g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g.at(i, j) = sub.ambient().bilinear(sub.basis().row(i), sub.basis().row(j));
  }
  return g;
}

SubspaceClass classify(const Subspace& sub) {
  return classify_basis(sub.ambient(), sub.basis().data(), sub.dim());
}

LineType line_type_of_value(const gf::Field& field, FieldElement norm) {
  switch (field.square_class(norm)) {
    case gf::SquareClass::Square: return LineType::Spacelike;
    case gf::SquareClass::NonSquare: return LineType::Timelike;
    case gf::SquareClass::Zero: return LineType::Lightlike;
  }
  return LineType::Lightlike;
}

LineType line_type(const Subspace& sub) {
  if (sub.dim() != 1) throw Error(Errc::NotALine, "subspace has dimension " + std::to_string(sub.dim()));
  return line_type_of_value(sub.ambient().field(), sub.ambient().eval(sub.basis().row(0)));
}

Subspace perp(const Subspace& sub) {
  const AmbientForm& amb = sub.ambient();
  const gf::Field& f = amb.field();
  const int n = amb.n();
  const int k = sub.dim();
  // Rows of basis * diag(gram); the complement is their null space.
  Matrix m(k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = f.mul(sub.basis().at(i, j), amb.gram_diag()[j]);
  }
  const Matrix r = rref(f, std::move(m));
  std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (!r.at(i, j).is_zero()) {
        pivot_of_col[j] = i;
        break;
      }
    }
  }
  Matrix null(n - r.rows(), n);
  int out = 0;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    null.at(out, free_col) = f.one();
    for (int j = 0; j < n; ++j) {
      const int i = pivot_of_col[j];
      if (i >= 0) null.at(out, j) = f.neg(r.at(i, free_col));
    }
    ++out;
  }
  return Subspace::span(amb, std::move(null));
}

bool contains(const Subspace& big, const Subspace& small) {
  if (!(big.ambient() == small.ambient())) {
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
  }
  const gf::Field& f = big.ambient().field();
  const int n = big.ambient().n();
  std::vector<int> pivots;
  for (int i = 0; i < big.dim(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (!big.basis().at(i, j).is_zero()) {
        pivots.push_back(j);
        break;
      }
    }
  }
  std::vector<FieldElement> v(static_cast<std::size_t>(n));
  for (int s = 0; s < small.dim(); ++s) {
    const auto row = small.basis().row(s);
    std::copy(row.begin(), row.end(), v.begin());
    for (int i = 0; i < big.dim(); ++i) {
      const FieldElement c = v[pivots[i]];
      if (c.is_zero()) continue;
      for (int j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(c, big.basis().at(i, j)));
    }
    for (const auto& x : v) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

std::string label(const Subspace& sub) {
  if (sub.dim() == 0) return "0";
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  const bool compact = sub.ambient().field().q() <= 36;
  std::string out;
  for (int i = 0; i < sub.dim(); ++i) {
    if (i > 0) out += ',';
    for (int j = 0; j < sub.ambient().n(); ++j) {
      const std::uint32_t code = sub.basis().at(i, j).code();
      if (compact) {
        out += kDigits[code];
      } else {
        if (j > 0) out += '.';
        out += std::to_string(code);
      }
    }
  }
  return out;
}

}  // namespace dotbinom::quad
