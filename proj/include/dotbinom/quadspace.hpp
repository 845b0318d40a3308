#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dotbinom/gf.hpp"

namespace dotbinom::quad {

using gf::FieldElement;
using gf::FieldPtr;

enum class FormKind { Dot, LambdaDot };

/// Diagonal quadratic space (F_q^n, dot_n) or (F_q^n, lambda dot_n).
class AmbientForm {
 public:
  static AmbientForm dot(FieldPtr field, int n);
  /// Uses the field's canonical non-square.
  static AmbientForm lambda_dot(FieldPtr field, int n);
  /// Throws InvalidArgument unless `lambda` is a non-square.
  static AmbientForm lambda_dot(FieldPtr field, int n, FieldElement lambda);

  const gf::Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return static_cast<int>(diag_.size()); }
  FormKind kind() const { return kind_; }
  std::span<const FieldElement> gram_diag() const { return diag_; }

  /// Q(v) = sum diag[i] * v[i]^2. Throws DimensionMismatch.
  FieldElement eval(std::span<const FieldElement> v) const;
  /// B(u, v) = sum diag[i] * u[i] * v[i].
  FieldElement bilinear(std::span<const FieldElement> u, std::span<const FieldElement> v) const;

  std::string describe() const;

  friend bool operator==(const AmbientForm& a, const AmbientForm& b) {
    return a.field_ == b.field_ && a.kind_ == b.kind_ && a.diag_ == b.diag_;
  }

 private:
  AmbientForm(FieldPtr field, FormKind kind, std::vector<FieldElement> diag)
      : field_(std::move(field)), kind_(kind), diag_(std::move(diag)) {}

  FieldPtr field_;
  FormKind kind_;
  std::vector<FieldElement> diag_;
};

inline FieldElement eval_form(const AmbientForm& ambient, std::span<const FieldElement> v) {
  return ambient.eval(v);
}

/// Dense row-major matrix over a field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<FieldElement> data);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldElement& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  FieldElement at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  std::span<const FieldElement> row(int i) const {
    return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)};
  }
  std::span<FieldElement> row(int i) { return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)}; }
  const std::vector<FieldElement>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form with zero rows removed.
Matrix rref(const gf::Field& field, Matrix m);
bool is_rref(const Matrix& m);
FieldElement determinant(const gf::Field& field, Matrix m);

/// Determinant of the Gram matrix of `k` basis rows (row-major, each of
/// length ambient.n()). Allocation free for k <= 16.
FieldElement gram_determinant(const AmbientForm& ambient, std::span<const FieldElement> rows, int k);

enum class SubspaceClass { DotType, LambdaDotType, Degenerate };
enum class LineType { Spacelike, Timelike, Lightlike };

std::string_view to_string(SubspaceClass c);
std::string_view to_string(LineType t);

/// Class of the span of `k` independent rows: Degenerate when the Gram
/// determinant vanishes, otherwise by its square class. k = 0 is DotType.
SubspaceClass classify_basis(const AmbientForm& ambient, std::span<const FieldElement> rows, int k);

/// A subspace of an ambient quadratic space, stored as its canonical RREF
/// basis so that equal subspaces have identical bases.
class Subspace {
 public:
  /// Span of arbitrary rows (dependent or zero rows allowed).
  static Subspace span(const AmbientForm& ambient, Matrix rows);
  /// Basis must already be in RREF with no zero rows; throws InvalidArgument.
  static Subspace from_rref(const AmbientForm& ambient, Matrix basis);
  static Subspace zero(const AmbientForm& ambient);
  static Subspace full(const AmbientForm& ambient);

  const AmbientForm& ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  int dim() const { return basis_.rows(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(AmbientForm ambient, Matrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {}

  AmbientForm ambient_;
  Matrix basis_;
};

/// k x k matrix G[i][j] = B(b_i, b_j).
Matrix gram_of(const Subspace& sub);
SubspaceClass classify(const Subspace& sub);
/// Throws NotALine unless dim == 1.
LineType line_type(const Subspace& sub);
LineType line_type_of_value(const gf::Field& field, FieldElement norm);
Subspace perp(const Subspace& sub);
/// Throws AmbientMismatch when the ambients differ.
bool contains(const Subspace& big, const Subspace& small);

/// Basis rows as digit strings joined by ','; the zero subspace is "0".
/// Digits are base 36 for q <= 36, dot-separated element codes otherwise.
std::string label(const Subspace& sub);

}  // namespace dotbinom::quad
